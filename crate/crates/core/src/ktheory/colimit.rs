use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::CertifiedDilation;
use crate::error::{Error, Result};
use crate::exterior::exterior_power;
use crate::linalg::{smith_normal_form, IntMatrix, RatMatrix};
use crate::spectral::{DetSign, IntPolynomial};

/// Default number of levels searched by [`gamma_membership`].
pub const DEFAULT_LEVEL_CAP: usize = 64;

/// Stationary inductive limit `Z^m -> Z^m -> ...` with a fixed transition
/// matrix. For degree `n` this is `Γ_n = ∪_r A_n^{-r} Λⁿ(Z^d)`; it is never
/// materialized, only queried through the transition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColimitGroup {
    degree: usize,
    transition: IntMatrix,
}

impl ColimitGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.transition.rows()
    }

    pub fn transition(&self) -> &IntMatrix {
        &self.transition
    }
}

pub fn gamma_group(a: &CertifiedDilation, n: usize) -> Result<ColimitGroup> {
    Ok(ColimitGroup {
        degree: n,
        transition: exterior_power(a.matrix(), n)?,
    })
}

/// Finds the least level `r <= level_cap` with `T^r v` integral, returning
/// `(r, T^r v)`. `None` means `v` was not reached within the cap.
pub fn gamma_membership(
    g: &ColimitGroup,
    v: &[BigRational],
    level_cap: usize,
) -> Result<Option<(usize, Vec<BigInt>)>> {
    if v.len() != g.rank() {
        return Err(Error::Dimension(format!(
            "vector of length {} in a group of rank {}",
            v.len(),
            g.rank()
        )));
    }
    let t = g.transition();
    let mut current = v.to_vec();
    for r in 0..=level_cap {
        if current.iter().all(BigRational::is_integer) {
            return Ok(Some((
                r,
                current.iter().map(BigRational::to_integer).collect(),
            )));
        }
        if r == level_cap {
            break;
        }
        current = t
            .iter_rows()
            .map(|row| {
                row.iter()
                    .zip(&current)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, x)| x * BigRational::from_integer(a.clone()))
                    .sum()
            })
            .collect();
    }
    Ok(None)
}

/// `Γ_n` for `0 <= n <= d`, split by the parity of `n`: `(even, odd)`.
pub fn group_algebra_k(a: &CertifiedDilation) -> Result<(Vec<ColimitGroup>, Vec<ColimitGroup>)> {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for n in 0..=a.dimension() {
        let g = gamma_group(a, n)?;
        if n % 2 == 0 {
            even.push(g);
        } else {
            odd.push(g);
        }
    }
    Ok((even, odd))
}

/// The automorphism induced on `Γ_n`: the exact inverse of `A_n`.
pub fn tau_action(a: &CertifiedDilation, n: usize) -> Result<RatMatrix> {
    RatMatrix::inverse_of(&exterior_power(a.matrix(), n)?)
}

/// `p_r(x) = 1 + x + ... + x^(r-1)`, after checking
/// `p_r(A_n)(1 - A_n) + A_n^r = 1` exactly.
pub fn bezout_witness(a: &CertifiedDilation, n: usize, r: u32) -> Result<IntPolynomial> {
    let an = exterior_power(a.matrix(), n)?;
    let p = IntPolynomial::new(vec![BigInt::from(1); r as usize]);
    let size = an.rows();
    let one_minus = an.one_minus_scaled(&BigInt::from(1))?;
    let lhs = p.eval_matrix(&an)?.mul(&one_minus)?.add(&an.pow(r)?)?;
    if lhs != IntMatrix::identity(size) {
        return Err(Error::Internal(format!(
            "Bezout identity fails for n = {n}, r = {r}"
        )));
    }
    Ok(p)
}

/// Checks that `A_n` acts as `ε` on `coker(1 - ε A_n)`: for every standard
/// generator `g`, `A_n g - ε g` must lie in the image of `1 - ε A_n`.
pub fn stabilization_check(a: &CertifiedDilation, n: usize, eps: DetSign) -> Result<bool> {
    let an = exterior_power(a.matrix(), n)?;
    let e = eps.to_bigint();
    let relations = an.one_minus_scaled(&e)?;
    let snf = smith_normal_form(&relations);
    for i in 0..an.cols() {
        let mut y: Vec<BigInt> = (0..an.rows()).map(|r| an[(r, i)].clone()).collect();
        y[i] -= &e;
        if !snf.in_image(&y)? {
            return Ok(false);
        }
    }
    Ok(true)
}
