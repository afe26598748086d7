use std::fmt::Write as _;

use cuntz_li_core::ktheory::CertifiedDilation;
use cuntz_li_core::{DilationReport, FinAbGroup, IntMatrix, KTheoryReport};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::{Exit, Format, Outcome, RunConfig};

/// Machine-readable report. Big integers are decimal strings throughout.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub dimension: usize,
    pub det: String,
    pub det_sign: Option<i32>,
    pub is_dilation: bool,
    pub rejection_reason: Option<String>,
    /// `[re, im]` pairs; informational only.
    pub approx_eigenvalues: Option<Vec<[f64; 2]>>,
    pub per_degree: Vec<PerDegreeJson>,
    pub k0: Option<KGroupJson>,
    pub k1: Option<KGroupJson>,
    pub cross_check: CrossCheckJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerDegreeJson {
    pub n: usize,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    pub invariant_factors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KGroupJson {
    pub rank: usize,
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckJson {
    pub performed: bool,
    pub passed: Option<bool>,
}

fn strings(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn matrix_strings(m: &IntMatrix) -> Vec<Vec<String>> {
    m.iter_rows().map(strings).collect()
}

impl From<&FinAbGroup> for KGroupJson {
    fn from(g: &FinAbGroup) -> Self {
        Self {
            rank: g.free_rank(),
            torsion: strings(g.torsion()),
        }
    }
}

impl JsonReport {
    fn from_certification(r: &DilationReport, dimension: usize) -> Self {
        Self {
            dimension,
            det: r.det.to_string(),
            det_sign: r.det_sign.map(|s| s.value()),
            is_dilation: r.is_dilation,
            rejection_reason: r.rejection_reason.map(|x| x.as_str().to_string()),
            approx_eigenvalues: r
                .approx_eigenvalues
                .as_ref()
                .map(|ev| ev.iter().map(|z| [z.re, z.im]).collect()),
            per_degree: Vec::new(),
            k0: None,
            k1: None,
            cross_check: CrossCheckJson {
                performed: false,
                passed: None,
            },
        }
    }
}

fn to_json(report: &JsonReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn eigen_line(r: &DilationReport) -> String {
    match &r.approx_eigenvalues {
        Some(ev) if !ev.is_empty() => ev
            .iter()
            .map(|z| {
                if z.im.abs() < 1e-12 {
                    format!("{:.6}", z.re)
                } else {
                    format!("{:.6}{:+.6}i", z.re, z.im)
                }
            })
            .collect::<Vec<_>>()
            .join(", "),
        _ => "unavailable".into(),
    }
}

fn certification_text(r: &DilationReport, dimension: usize, out: &mut String) {
    let _ = writeln!(out, "dimension: {dimension}");
    match r.det_sign {
        Some(s) => {
            let _ = writeln!(out, "det: {} (sign {s})", r.det);
        }
        None => {
            let _ = writeln!(out, "det: {}", r.det);
        }
    }
    let _ = writeln!(out, "characteristic polynomial: {}", r.char_poly);
    let _ = writeln!(
        out,
        "approximate eigenvalues (informational): {}",
        eigen_line(r)
    );
    match r.rejection_reason {
        None => out.push_str("dilation: yes\n"),
        Some(reason) => {
            let _ = writeln!(out, "dilation: no ({reason})");
        }
    }
}

pub(crate) fn rejected(r: &DilationReport, format: Format) -> Outcome {
    let dimension = r.char_poly.degree().unwrap_or(0);
    let stdout = match format {
        Format::Json => to_json(&JsonReport::from_certification(r, dimension)),
        Format::Text => {
            let mut s = String::new();
            certification_text(r, dimension, &mut s);
            s
        }
    };
    Outcome {
        stdout,
        stderr: format!(
            "not an integer dilation matrix: {}\n",
            r.rejection_reason.map_or("unknown", |x| x.as_str())
        ),
        exit: Exit::NotDilation,
    }
}

pub(crate) fn certified_only(r: &DilationReport, format: Format) -> Outcome {
    let dimension = r.char_poly.degree().unwrap_or(0);
    let stdout = match format {
        Format::Json => to_json(&JsonReport::from_certification(r, dimension)),
        Format::Text => {
            let mut s = String::new();
            certification_text(r, dimension, &mut s);
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        exit: Exit::Ok,
    }
}

pub(crate) fn accepted(
    c: &CertifiedDilation,
    report: &KTheoryReport,
    agreed: Option<bool>,
    cfg: &RunConfig,
) -> Outcome {
    let stdout = match cfg.format {
        Format::Json => {
            let mut j = JsonReport::from_certification(c.report(), c.dimension());
            j.per_degree = report
                .per_degree
                .iter()
                .map(|t| PerDegreeJson {
                    n: t.n,
                    size: t.matrix.rows(),
                    matrix: cfg.emit_matrices.then(|| matrix_strings(&t.matrix)),
                    invariant_factors: strings(&t.invariant_factors),
                })
                .collect();
            j.k0 = Some((&report.k0).into());
            j.k1 = Some((&report.k1).into());
            j.cross_check = CrossCheckJson {
                performed: agreed.is_some(),
                passed: agreed,
            };
            to_json(&j)
        }
        Format::Text => {
            let mut s = String::new();
            certification_text(c.report(), c.dimension(), &mut s);
            let eps = report.det_sign;
            let _ = writeln!(s, "per-degree cokernels of 1 - ({eps})*A_n:");
            for t in &report.per_degree {
                let _ = writeln!(
                    s,
                    "  n = {}  size {}  invariant factors [{}]  coker {}",
                    t.n,
                    t.matrix.rows(),
                    strings(&t.invariant_factors).join(", "),
                    t.cokernel
                );
                if cfg.emit_matrices {
                    let _ = writeln!(s, "    matrix {}", t.matrix);
                }
            }
            let _ = writeln!(s, "K0 = {}", report.k0);
            let _ = writeln!(s, "K1 = {}", report.k1);
            if let Some(slot) = report.extra_free_summand {
                let _ = writeln!(s, "explicit extra Z summand in {slot}");
            }
            match agreed {
                None => s.push_str("cross-check: skipped\n"),
                Some(true) => s.push_str("cross-check (B-form): passed\n"),
                Some(false) => s.push_str("cross-check (B-form): FAILED\n"),
            }
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        exit: Exit::Ok,
    }
}
