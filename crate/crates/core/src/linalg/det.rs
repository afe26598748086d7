use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::Result;

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is itself a minor of the input, so coefficient
/// growth stays polynomial and each division is exact.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    let n = m.ensure_square()?;
    Ok(bareiss_in_place(m.clone(), n))
}

pub(crate) fn bareiss_in_place(mut a: IntMatrix, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, p);
            sign_flip = !sign_flip;
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let v = &pivot * &a[(i, j)] - &lead * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = a[(n - 1, n - 1)].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

/// True iff `|det(m)| = 1`.
pub fn is_unimodular(m: &IntMatrix) -> Result<bool> {
    Ok(det(m)?.abs().is_one())
}
