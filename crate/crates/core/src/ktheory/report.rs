use std::fmt;

use num_bigint::BigInt;

use super::CertifiedDilation;
use crate::error::Result;
use crate::exterior::{b_matrix, exterior_power};
use crate::linalg::{invariant_factors, FinAbGroup, IntMatrix};
use crate::spectral::DetSign;

/// Which family of matrices the per-degree cokernels come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// `coker(1 - ε A_n)` over exterior powers.
    AForm,
    /// `coker(1 - B_n)` over signed complementary minors.
    BForm,
}

impl Presentation {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::AForm => "A-form",
            Self::BForm => "B-form",
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KSlot {
    K0,
    K1,
}

impl fmt::Display for KSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::K0 => "K0",
            Self::K1 => "K1",
        })
    }
}

/// One degree of the computation: the relation matrix and its cokernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTerm {
    pub n: usize,
    pub matrix: IntMatrix,
    pub invariant_factors: Vec<BigInt>,
    pub cokernel: FinAbGroup,
}

impl DegreeTerm {
    fn from_matrix(n: usize, matrix: IntMatrix) -> Self {
        let invariant_factors = invariant_factors(&matrix);
        let cokernel = FinAbGroup::from_cyclic_orders(invariant_factors.iter().cloned());
        Self {
            n,
            matrix,
            invariant_factors,
            cokernel,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTheoryReport {
    pub dimension: usize,
    pub det: BigInt,
    pub det_sign: DetSign,
    /// Exactly `n = 0..=dimension`, in order.
    pub per_degree: Vec<DegreeTerm>,
    pub k0: FinAbGroup,
    pub k1: FinAbGroup,
    pub presentation: Presentation,
    /// The K-group that received the explicit extra `Z` summand, if any.
    pub extra_free_summand: Option<KSlot>,
}

impl KTheoryReport {
    /// Sums the per-degree cokernels of parity `k0_parity` into `K0` and the
    /// rest into `K1`, then adds the explicit `Z`.
    fn assemble(
        a: &CertifiedDilation,
        per_degree: Vec<DegreeTerm>,
        presentation: Presentation,
        k0_parity: usize,
        extra_free_summand: Option<KSlot>,
    ) -> Self {
        let pick = |parity: usize| {
            FinAbGroup::sum_all(
                per_degree
                    .iter()
                    .filter(|t| t.n % 2 == parity)
                    .map(|t| &t.cokernel),
            )
        };
        let mut k0 = pick(k0_parity);
        let mut k1 = pick(1 - k0_parity);
        match extra_free_summand {
            Some(KSlot::K0) => k0 = k0.direct_sum(&FinAbGroup::free(1)),
            Some(KSlot::K1) => k1 = k1.direct_sum(&FinAbGroup::free(1)),
            None => {}
        }
        Self {
            dimension: a.dimension(),
            det: a.report().det.clone(),
            det_sign: a.det_sign(),
            per_degree,
            k0,
            k1,
            presentation,
            extra_free_summand,
        }
    }
}

/// `coker(1 - eps · A_n)` for `n = 0..=d`. Any `eps` is accepted here for
/// diagnostics; the K-groups always use `eps = sign(det A)`.
pub fn cokernel_table(a: &CertifiedDilation, eps: DetSign) -> Result<Vec<(usize, FinAbGroup)>> {
    Ok(a_form_terms(a, eps)?
        .into_iter()
        .map(|t| (t.n, t.cokernel))
        .collect())
}

fn a_form_terms(a: &CertifiedDilation, eps: DetSign) -> Result<Vec<DegreeTerm>> {
    let e = eps.to_bigint();
    (0..=a.dimension())
        .map(|n| {
            let m = exterior_power(a.matrix(), n)?.one_minus_scaled(&e)?;
            Ok(DegreeTerm::from_matrix(n, m))
        })
        .collect()
}

fn b_form_terms(a: &CertifiedDilation) -> Result<Vec<DegreeTerm>> {
    let one = BigInt::from(1);
    (0..=a.dimension())
        .map(|n| {
            let m = b_matrix(a.matrix(), n)?.one_minus_scaled(&one)?;
            Ok(DegreeTerm::from_matrix(n, m))
        })
        .collect()
}

impl CertifiedDilation {
    /// K-groups from the exterior powers `A_n`, with `ε = sign(det A)`:
    ///
    /// | d    | ε  | K0                        | K1                        |
    /// |------|----|---------------------------|---------------------------|
    /// | even | +1 | ⊕_even coker(1 - A_n)     | ⊕_odd coker(1 - A_n) ⊕ Z  |
    /// | even | -1 | ⊕_even coker(1 + A_n)     | ⊕_odd coker(1 + A_n)      |
    /// | odd  | +1 | ⊕_odd coker(1 - A_n) ⊕ Z  | ⊕_even coker(1 - A_n)     |
    /// | odd  | -1 | ⊕_odd coker(1 + A_n)      | ⊕_even coker(1 + A_n)     |
    pub fn k_groups(&self) -> Result<KTheoryReport> {
        let eps = self.det_sign();
        let d_even = self.dimension().is_multiple_of(2);
        let k0_parity = if d_even { 0 } else { 1 };
        let extra = match (eps, d_even) {
            (DetSign::Positive, true) => Some(KSlot::K1),
            (DetSign::Positive, false) => Some(KSlot::K0),
            (DetSign::Negative, _) => None,
        };
        Ok(KTheoryReport::assemble(
            self,
            a_form_terms(self, eps)?,
            Presentation::AForm,
            k0_parity,
            extra,
        ))
    }

    /// K-groups from `B_n = sign(det A) · B̃_n`: even degrees always feed
    /// `K0`; when `det A > 0` an extra `Z` goes to `K1` (d even) or `K0`
    /// (d odd).
    pub fn k_groups_via_b(&self) -> Result<KTheoryReport> {
        let extra = match (self.det_sign(), self.dimension().is_multiple_of(2)) {
            (DetSign::Positive, true) => Some(KSlot::K1),
            (DetSign::Positive, false) => Some(KSlot::K0),
            (DetSign::Negative, _) => None,
        };
        Ok(KTheoryReport::assemble(
            self,
            b_form_terms(self)?,
            Presentation::BForm,
            0,
            extra,
        ))
    }
}

/// Certifies `a` and computes its K-groups from the exterior powers.
pub fn k_groups(a: &IntMatrix) -> Result<KTheoryReport> {
    CertifiedDilation::new(a.clone())?.k_groups()
}

/// Certifies `a` and computes its K-groups from the matrices `B_n`.
pub fn k_groups_via_b(a: &IntMatrix) -> Result<KTheoryReport> {
    CertifiedDilation::new(a.clone())?.k_groups_via_b()
}

/// Agreement of an A-form and a B-form report: isomorphic `K0` and `K1`,
/// and for every `n` the invariant factors of `1 - B_n` equal those of
/// `1 - ε A_{d-n}`.
pub fn reports_agree(a_form: &KTheoryReport, b_form: &KTheoryReport) -> bool {
    let d = a_form.dimension;
    a_form.presentation == Presentation::AForm
        && b_form.presentation == Presentation::BForm
        && b_form.dimension == d
        && a_form.per_degree.len() == d + 1
        && b_form.per_degree.len() == d + 1
        && a_form.k0 == b_form.k0
        && a_form.k1 == b_form.k1
        && b_form
            .per_degree
            .iter()
            .all(|t| t.invariant_factors == a_form.per_degree[d - t.n].invariant_factors)
}

/// Computes both presentations of the K-groups and checks they agree.
pub fn cross_check(a: &IntMatrix) -> Result<bool> {
    let c = CertifiedDilation::new(a.clone())?;
    Ok(reports_agree(&c.k_groups()?, &c.k_groups_via_b()?))
}
