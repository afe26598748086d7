use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{FinAbGroup, IntMatrix};
use crate::error::Result;

/// `u * m * v = s` with `u`, `v` unimodular and `s` diagonal in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of `s`: nonnegative, each nonzero entry divides the next,
    /// zeros last. Length is `min(rows, cols)`.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    /// Rank of the decomposed matrix.
    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .take_while(|d| !d.is_zero())
            .count()
    }

    /// Finds an integer `x` with `m * x = y`, if one exists.
    pub fn solve(&self, y: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        let z = self.u.mul_vec(y)?;
        let rank = self.rank();
        let mut x_prime = vec![BigInt::zero(); self.v.rows()];
        for (i, zi) in z.iter().enumerate() {
            if i < rank {
                let (q, r) = zi.div_rem(&self.invariant_factors[i]);
                if !r.is_zero() {
                    return Ok(None);
                }
                x_prime[i] = q;
            } else if !zi.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(self.v.mul_vec(&x_prime)?))
    }

    /// True iff `y` lies in the column lattice of the decomposed matrix.
    pub fn in_image(&self, y: &[BigInt]) -> Result<bool> {
        Ok(self.solve(y)?.is_some())
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots on the nonzero entry of least absolute value in the active block
/// (row-major scan, first minimum wins), so the output is a deterministic
/// function of the input.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let invariant_factors = reduce(&mut s, Some(&mut u), Some(&mut v));
    SmithDecomposition {
        u,
        s,
        v,
        invariant_factors,
    }
}

/// Invariant factors only; skips the transform bookkeeping.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    reduce(&mut m.clone(), None, None)
}

/// `Z^k / image(m)` for a square `m`, in canonical form.
pub fn cokernel(m: &IntMatrix) -> Result<FinAbGroup> {
    m.ensure_square()?;
    Ok(FinAbGroup::from_cyclic_orders(invariant_factors(m)))
}

/// Nearest-integer quotient, so the remainder is at most half the pivot.
fn round_div(a: &BigInt, p: &BigInt) -> BigInt {
    let two_p: BigInt = p * 2;
    let num: BigInt = a * 2 + p;
    num.div_floor(&two_p)
}

fn find_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = &s[(i, j)];
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => x.magnitude() < s[b].magnitude(),
            };
            if better {
                best = Some((i, j));
                if x.magnitude() == &num_bigint::BigUint::from(1u8) {
                    return best;
                }
            }
        }
    }
    best
}

fn reduce(
    s: &mut IntMatrix,
    mut u: Option<&mut IntMatrix>,
    mut v: Option<&mut IntMatrix>,
) -> Vec<BigInt> {
    let (rows, cols) = (s.rows(), s.cols());
    let diag = rows.min(cols);
    for t in 0..diag {
        loop {
            let Some((pi, pj)) = find_pivot(s, t) else {
                return (0..diag).map(|i| s[(i, i)].clone()).collect();
            };
            s.swap_rows(t, pi);
            if let Some(u) = u.as_deref_mut() {
                u.swap_rows(t, pi);
            }
            s.swap_cols(t, pj);
            if let Some(v) = v.as_deref_mut() {
                v.swap_cols(t, pj);
            }
            let p = s[(t, t)].clone();

            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -round_div(&s[(i, t)], &p);
                s.add_row_multiple(i, t, &q);
                if let Some(u) = u.as_deref_mut() {
                    u.add_row_multiple(i, t, &q);
                }
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -round_div(&s[(t, j)], &p);
                s.add_col_multiple(j, t, &q);
                if let Some(v) = v.as_deref_mut() {
                    v.add_col_multiple(j, t, &q);
                }
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // Pivot must divide the whole remaining block; otherwise fold an
            // offending row in and reduce again with a smaller remainder.
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&s[(i, j)] % &p).is_zero()));
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(t, i, &one);
                    if let Some(u) = u.as_deref_mut() {
                        u.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(t);
            }
        }
    }
    (0..diag).map(|i| s[(i, i)].clone()).collect()
}
