//! K-groups of the Cuntz-Li algebra attached to an integer dilation matrix.
//!
//! Two independent presentations are assembled: one from the cokernels of
//! `1 - ε A_n` over the exterior powers, one from the cokernels of `1 - B_n`
//! over signed complementary minors. [`cross_check`] compares them.

mod colimit;
mod report;

pub use colimit::{
    bezout_witness, gamma_group, gamma_membership, group_algebra_k, stabilization_check,
    tau_action, ColimitGroup, DEFAULT_LEVEL_CAP,
};
pub use report::{
    cokernel_table, cross_check, k_groups, k_groups_via_b, reports_agree, DegreeTerm, KSlot,
    KTheoryReport, Presentation,
};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::spectral::{certify_dilation, DetSign, DilationReport};

/// A matrix that passed [`certify_dilation`].
#[derive(Clone, Debug)]
pub struct CertifiedDilation {
    matrix: IntMatrix,
    report: DilationReport,
}

impl CertifiedDilation {
    /// Certifies `a`, returning [`Error::NotDilation`] with the full report
    /// when it is not expansive.
    pub fn new(a: IntMatrix) -> Result<Self> {
        let report = certify_dilation(&a)?;
        if !report.is_dilation {
            return Err(Error::NotDilation(Box::new(report)));
        }
        Ok(Self { matrix: a, report })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn report(&self) -> &DilationReport {
        &self.report
    }

    pub fn dimension(&self) -> usize {
        self.matrix.rows()
    }

    pub fn det_sign(&self) -> DetSign {
        self.report
            .det_sign
            .expect("a certified dilation is nonsingular")
    }
}
