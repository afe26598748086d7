use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cuntz_li_cli::{run_check, run_report, Exit, Format, InputSource, RunConfig, DEFAULT_MAX_SIZE};
use cuntz_li_core::ktheory::DEFAULT_LEVEL_CAP;

/// K-groups of the Cuntz-Li algebra of an integer dilation matrix.
#[derive(Parser)]
#[command(name = "cuntz-li", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the matrix and compute K0 and K1.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Skip the independent B-form computation.
        #[arg(long)]
        no_cross_check: bool,
        /// Include every per-degree relation matrix in the report.
        #[arg(long)]
        emit_matrices: bool,
        /// Largest allowed per-degree matrix size, binomial(d, d/2).
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
        /// Level cap for colimit membership queries.
        #[arg(long, value_name = "R", default_value_t = DEFAULT_LEVEL_CAP)]
        level_cap: usize,
    },
    /// Only decide whether the matrix is an integer dilation matrix.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Input file (JSON or text), or `-` for standard input.
    #[arg(value_name = "FILE|-")]
    file: Option<String>,
    /// Inline matrix in either input format, e.g. '{"matrix": [[2,0],[0,2]]}'.
    #[arg(long, value_name = "MATRIX")]
    matrix: Option<String>,
}

impl InputArgs {
    fn source(self) -> InputSource {
        match (self.file, self.matrix) {
            (_, Some(m)) => InputSource::Inline(m),
            (Some(f), None) => InputSource::from_arg(&f),
            (None, None) => unreachable!("clap enforces one input"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Exit::Failure as u8
            } else {
                0
            });
        }
    };
    let outcome = match cli.command {
        Command::Compute {
            input,
            format,
            no_cross_check,
            emit_matrices,
            max_size,
            level_cap,
        } => {
            let mut cfg = RunConfig::new(input.source());
            cfg.format = format.into();
            cfg.cross_check = !no_cross_check;
            cfg.emit_matrices = emit_matrices;
            cfg.max_size = max_size;
            cfg.level_cap = level_cap;
            run_report(&cfg)
        }
        Command::Check { input, format } => {
            let mut cfg = RunConfig::new(input.source());
            cfg.format = format.into();
            run_check(&cfg)
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.exit as u8)
}
