//! Batch front end: parse one matrix, certify it, compute both K-group
//! presentations and render a text or JSON report.

pub mod input;
mod render;

use cuntz_li_core::exterior::checked_binomial;
use cuntz_li_core::ktheory::{reports_agree, CertifiedDilation, DEFAULT_LEVEL_CAP};
use cuntz_li_core::{certify_dilation, Error, IntMatrix, KTheoryReport};

pub use input::{parse_input, InputError, InputSource};
pub use render::{JsonReport, KGroupJson, PerDegreeJson};

/// Default cap on `binomial(d, d/2)`, the largest per-degree matrix size.
pub const DEFAULT_MAX_SIZE: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: InputSource,
    pub format: Format,
    pub cross_check: bool,
    pub emit_matrices: bool,
    pub max_size: usize,
    /// Level cap for colimit membership queries.
    pub level_cap: usize,
}

impl RunConfig {
    pub fn new(source: InputSource) -> Self {
        Self {
            source,
            format: Format::Text,
            cross_check: true,
            emit_matrices: false,
            max_size: DEFAULT_MAX_SIZE,
            level_cap: DEFAULT_LEVEL_CAP,
        }
    }
}

/// Process exit statuses. Each run ends in exactly one of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Ok = 0,
    /// Usage or internal failure.
    Failure = 1,
    NotDilation = 2,
    InputError = 3,
    SizeGuard = 4,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: Exit,
}

impl Outcome {
    fn fail(exit: Exit, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        stderr.push('\n');
        Self {
            stdout: String::new(),
            stderr,
            exit,
        }
    }
}

fn load(cfg: &RunConfig) -> Result<IntMatrix, Outcome> {
    cfg.source
        .read()
        .and_then(|s| parse_input(&s))
        .map_err(|e| Outcome::fail(Exit::InputError, format!("error: {e}")))
}

fn size_guard(a: &IntMatrix, max_size: usize) -> Result<(), Outcome> {
    let d = a.rows();
    match checked_binomial(d, d / 2) {
        Some(s) if s <= max_size => Ok(()),
        s => Err(Outcome::fail(
            Exit::SizeGuard,
            format!(
                "error: dimension {d} needs per-degree matrices of size {} (limit {max_size})",
                s.map_or_else(|| "beyond usize".to_string(), |s| s.to_string())
            ),
        )),
    }
}

fn internal(e: Error) -> Outcome {
    Outcome::fail(Exit::Failure, format!("error: {e}"))
}

/// Certification, both K-group pipelines and the cross-check, rendered.
pub fn run_report(cfg: &RunConfig) -> Outcome {
    match compute(cfg) {
        Ok(o) | Err(o) => o,
    }
}

fn compute(cfg: &RunConfig) -> Result<Outcome, Outcome> {
    let a = load(cfg)?;
    size_guard(&a, cfg.max_size)?;
    let certified = match CertifiedDilation::new(a) {
        Ok(c) => c,
        Err(Error::NotDilation(report)) => {
            return Ok(render::rejected(&report, cfg.format));
        }
        Err(e) => return Err(internal(e)),
    };
    let a_form = certified.k_groups().map_err(internal)?;
    let b_form: Option<KTheoryReport> = if cfg.cross_check {
        Some(certified.k_groups_via_b().map_err(internal)?)
    } else {
        None
    };
    let agreed = b_form.as_ref().map(|b| reports_agree(&a_form, b));
    let mut out = render::accepted(&certified, &a_form, agreed, cfg);
    if agreed == Some(false) {
        out.stderr
            .push_str("error: A-form and B-form K-groups disagree\n");
        out.exit = Exit::Failure;
    }
    Ok(out)
}

/// Certification only.
pub fn run_check(cfg: &RunConfig) -> Outcome {
    let a = match load(cfg) {
        Ok(a) => a,
        Err(o) => return o,
    };
    match certify_dilation(&a) {
        Ok(report) if report.is_dilation => render::certified_only(&report, cfg.format),
        Ok(report) => render::rejected(&report, cfg.format),
        Err(e) => internal(e),
    }
}
