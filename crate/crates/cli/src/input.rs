use std::io::Read;
use std::path::PathBuf;

use cuntz_li_core::IntMatrix;
use num_bigint::BigInt;
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Syntax(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// Where the matrix comes from. Exactly one source per run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    File(PathBuf),
    Stdin,
    Inline(String),
}

impl InputSource {
    /// `-` means standard input.
    pub fn from_arg(arg: &str) -> Self {
        if arg == "-" {
            Self::Stdin
        } else {
            Self::File(PathBuf::from(arg))
        }
    }

    pub fn read(&self) -> Result<String, InputError> {
        match self {
            Self::File(p) => std::fs::read_to_string(p).map_err(|source| InputError::Io {
                path: p.display().to_string(),
                source,
            }),
            Self::Stdin => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|source| InputError::Io {
                        path: "<stdin>".into(),
                        source,
                    })?;
                Ok(s)
            }
            Self::Inline(s) => Ok(s.clone()),
        }
    }
}

/// Parses a square integer matrix.
///
/// Two formats are accepted:
/// * JSON: `{"matrix": [[2, 0], [0, 2]]}`; entries are integers or decimal
///   strings (for values beyond 64 bits).
/// * Text: the dimension `d` on the first line, then `d` lines of `d`
///   whitespace-separated integers.
pub fn parse_input(src: &str) -> Result<IntMatrix, InputError> {
    let rows = if src.trim_start().starts_with('{') {
        parse_json(src)?
    } else {
        parse_text(src)?
    };
    let n = rows.len();
    if n == 0 {
        return Err(InputError::Syntax("empty matrix".into()));
    }
    if let Some(bad) = rows.iter().find(|r| r.len() != rows[0].len()) {
        return Err(InputError::Syntax(format!(
            "ragged rows: lengths {} and {}",
            rows[0].len(),
            bad.len()
        )));
    }
    if rows[0].len() != n {
        return Err(InputError::NotSquare {
            rows: n,
            cols: rows[0].len(),
        });
    }
    IntMatrix::from_rows(rows).map_err(|e| InputError::Syntax(e.to_string()))
}

fn parse_int(tok: &str) -> Result<BigInt, InputError> {
    tok.parse()
        .map_err(|_| InputError::Syntax(format!("not an integer: {tok:?}")))
}

fn parse_json(src: &str) -> Result<Vec<Vec<BigInt>>, InputError> {
    let v: Value = serde_json::from_str(src).map_err(|e| InputError::Syntax(e.to_string()))?;
    let rows = v
        .get("matrix")
        .and_then(Value::as_array)
        .ok_or_else(|| InputError::Syntax("expected an object with a \"matrix\" array".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| InputError::Syntax("matrix rows must be arrays".into()))?
                .iter()
                .map(|x| match x {
                    Value::Number(n) if n.is_i64() || n.is_u64() => parse_int(&n.to_string()),
                    Value::String(s) => parse_int(s.trim()),
                    other => Err(InputError::Syntax(format!("not an integer: {other}"))),
                })
                .collect()
        })
        .collect()
}

fn parse_text(src: &str) -> Result<Vec<Vec<BigInt>>, InputError> {
    let mut lines = src.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| InputError::Syntax("empty input".into()))?;
    let d: usize = header.parse().map_err(|_| {
        InputError::Syntax(format!("first line must be the dimension, got {header:?}"))
    })?;
    let rows = lines
        .map(|l| {
            l.split_whitespace()
                .map(parse_int)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.len() != d {
        return Err(InputError::Syntax(format!(
            "dimension {d} declared but {} rows given",
            rows.len()
        )));
    }
    if let Some(r) = rows.iter().find(|r| r.len() != d) {
        return Err(InputError::Syntax(format!(
            "row of length {} in a {d}x{d} matrix",
            r.len()
        )));
    }
    Ok(rows)
}
