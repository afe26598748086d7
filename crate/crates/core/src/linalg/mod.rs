//! Exact integer linear algebra: matrices, Bareiss determinants, Smith
//! normal form with certificates and finitely generated abelian groups.

mod det;
mod group;
mod matrix;
mod rational;
mod smith;

pub(crate) use det::bareiss_in_place;
pub use det::{det, is_unimodular};
pub use group::{groups_isomorphic, FinAbGroup};
pub use matrix::IntMatrix;
pub use rational::RatMatrix;
pub use smith::{cokernel, invariant_factors, smith_normal_form, SmithDecomposition};
