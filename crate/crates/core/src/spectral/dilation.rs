use std::fmt;

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::poly::{char_poly, IntPolynomial};
use crate::error::{Error, Result};
use crate::linalg::{bareiss_in_place, det, IntMatrix};

/// `ε = sign(det A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DetSign {
    Positive,
    Negative,
}

impl DetSign {
    pub fn of(x: &BigInt) -> Option<Self> {
        match x.sign() {
            num_bigint::Sign::Plus => Some(Self::Positive),
            num_bigint::Sign::Minus => Some(Self::Negative),
            num_bigint::Sign::NoSign => None,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Self::Positive => 1,
            Self::Negative => -1,
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.value())
    }

    pub fn flip(self) -> Self {
        match self {
            Self::Positive => Self::Negative,
            Self::Negative => Self::Positive,
        }
    }
}

impl fmt::Display for DetSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Positive => "+1",
            Self::Negative => "-1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RejectionReason {
    Singular,
    UnitCircleOrReciprocalPair,
    EigenvalueInsideDisk,
}

impl RejectionReason {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Singular => "singular",
            Self::UnitCircleOrReciprocalPair => "eigenvalue on unit circle or reciprocal pair",
            Self::EigenvalueInsideDisk => "eigenvalue inside disk",
        }
    }
}

impl fmt::Display for RejectionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of the exact expansiveness test.
#[derive(Clone, Debug, PartialEq)]
pub struct DilationReport {
    pub is_dilation: bool,
    pub det: BigInt,
    /// `None` exactly when `det == 0`.
    pub det_sign: Option<DetSign>,
    pub char_poly: IntPolynomial,
    pub rejection_reason: Option<RejectionReason>,
    /// Floating approximations of the eigenvalues. Informational only; the
    /// verdict never depends on them.
    pub approx_eigenvalues: Option<Vec<Complex<f64>>>,
}

/// Decides exactly whether every eigenvalue of `a` has modulus `> 1`.
///
/// With `p` the characteristic polynomial and `p*` its reversal:
/// 1. `det a = 0` rejects.
/// 2. A nonconstant `gcd(p, p*)` means a root pair `μ, 1/μ` (or a root on
///    the circle), so some root has modulus `<= 1`.
/// 3. Otherwise `p*` must have every root strictly inside the unit disk. The
///    map `z = (w+1)/(w-1)` sends the open disk to the open left half-plane,
///    and the transformed integer polynomial is tested with the Hurwitz
///    determinant criterion.
pub fn certify_dilation(a: &IntMatrix) -> Result<DilationReport> {
    let d = a.ensure_square()?;
    if d == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    let p = char_poly(a)?;
    let det_a = det(a)?;
    // det(zI - A) at z = 0 is (-1)^d det A
    let from_poly = if d % 2 == 0 {
        p.coefficient(0)
    } else {
        -p.coefficient(0)
    };
    if from_poly != det_a {
        return Err(Error::Internal(format!(
            "determinant {det_a} disagrees with characteristic polynomial {p}"
        )));
    }

    let reason = if det_a.is_zero() {
        Some(RejectionReason::Singular)
    } else if p.gcd(&p.reversed()).degree() != Some(0) {
        Some(RejectionReason::UnitCircleOrReciprocalPair)
    } else if !is_hurwitz_stable(&mobius_to_half_plane(&p.reversed())) {
        Some(RejectionReason::EigenvalueInsideDisk)
    } else {
        None
    };

    Ok(DilationReport {
        is_dilation: reason.is_none(),
        det_sign: DetSign::of(&det_a),
        det: det_a,
        approx_eigenvalues: approx_roots(&p),
        char_poly: p,
        rejection_reason: reason,
    })
}

/// `ε = sign(det a)`; singular input is an error.
pub fn det_sign(a: &IntMatrix) -> Result<DetSign> {
    DetSign::of(&det(a)?).ok_or(Error::Singular)
}

/// `(w - 1)^deg · f((w + 1)/(w - 1))`.
fn mobius_to_half_plane(f: &IntPolynomial) -> IntPolynomial {
    let Some(deg) = f.degree() else {
        return IntPolynomial::zero();
    };
    let plus = IntPolynomial::linear(1, 1);
    let minus = IntPolynomial::linear(-1, 1);
    f.coefficients()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(IntPolynomial::zero(), |acc, (k, c)| {
            acc.add(&plus.pow(k).mul(&minus.pow(deg - k)).scale(c))
        })
}

/// Hurwitz criterion: with positive leading coefficient, every root lies in
/// the open left half-plane iff all leading principal minors of the Hurwitz
/// matrix are positive.
pub(crate) fn is_hurwitz_stable(q: &IntPolynomial) -> bool {
    let Some(deg) = q.degree() else {
        return false;
    };
    let q = if q.leading().is_some_and(Signed::is_negative) {
        q.scale(&BigInt::from(-1))
    } else {
        q.clone()
    };
    // a_i is the coefficient of w^(deg - i)
    let a = |i: isize| -> BigInt {
        if i < 0 || i as usize > deg {
            BigInt::zero()
        } else {
            q.coefficient(deg - i as usize)
        }
    };
    let mut h = IntMatrix::zeros(deg, deg);
    for i in 0..deg {
        for j in 0..deg {
            h[(i, j)] = a(2 * j as isize - i as isize + 1);
        }
    }
    (1..=deg).all(|k| {
        let idx: Vec<usize> = (0..k).collect();
        bareiss_in_place(h.submatrix(&idx, &idx), k).is_positive()
    })
}

/// Roots of a monic polynomial as eigenvalues of its companion matrix.
fn approx_roots(p: &IntPolynomial) -> Option<Vec<Complex<f64>>> {
    let d = p.degree()?;
    if d == 0 || !p.is_monic() {
        return Some(Vec::new());
    }
    let mut comp = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        let c = p.coefficient(i).to_f64()?;
        if !c.is_finite() {
            return None;
        }
        comp[(i, d - 1)] = -c;
    }
    let schur = nalgebra::Schur::try_new(comp, f64::EPSILON, 100_000)?;
    let mut roots: Vec<Complex<f64>> = schur.complex_eigenvalues().iter().copied().collect();
    roots.sort_by(|x, y| {
        y.norm()
            .total_cmp(&x.norm())
            .then(x.re.total_cmp(&y.re))
            .then(x.im.total_cmp(&y.im))
    });
    Some(roots)
}
