//! Characteristic polynomials and exact certification of expansiveness.

mod dilation;
mod poly;

pub use dilation::{certify_dilation, det_sign, DetSign, DilationReport, RejectionReason};
pub use poly::{char_poly, IntPolynomial};
