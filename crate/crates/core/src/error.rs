use crate::spectral::DilationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degree {n} out of range for dimension {d}")]
    DegreeOutOfRange { n: usize, d: usize },

    #[error("invalid subset {subset:?} of {{0..{d}}}: {reason}")]
    InvalidSubset {
        subset: Vec<usize>,
        d: usize,
        reason: &'static str,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("not an integer dilation matrix: {}", .0.rejection_reason.map_or("unknown", |r| r.as_str()))]
    NotDilation(Box<DilationReport>),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
