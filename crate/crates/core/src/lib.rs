//! Exact computation of the K-groups `K0`, `K1` of the Cuntz-Li algebra
//! attached to an integer dilation matrix `A`.
//!
//! The pipeline certifies that `A` is expansive, builds the exterior powers
//! `A_n` and the signed complement matrices `B_n`, and reads both K-groups
//! off Smith normal forms. All arithmetic is arbitrary precision.
//!
//! ```
//! use cuntz_li_core::{k_groups, IntMatrix};
//!
//! let report = k_groups(&IntMatrix::diagonal([2, 2])).unwrap();
//! assert_eq!(report.k0.to_string(), "Z (+) Z/3");
//! assert_eq!(report.k1.to_string(), "Z");
//! ```

pub mod error;
pub mod exterior;
pub mod ktheory;
pub mod linalg;
pub mod spectral;

pub use error::{Error, Result};
pub use ktheory::{cross_check, k_groups, k_groups_via_b, CertifiedDilation, KTheoryReport};
pub use linalg::{FinAbGroup, IntMatrix};
pub use spectral::{certify_dilation, DetSign, DilationReport, RejectionReason};
