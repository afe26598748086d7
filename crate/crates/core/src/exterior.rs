//! Subset bases of `Λⁿ(Z^d)` and the matrices built over them.
//!
//! Subsets are 0-based, strictly increasing, and every basis is listed in
//! lexicographic order. All matrices below share that order, so conjugation
//! identities between them hold entry by entry.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{bareiss_in_place, det, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetBasis {
    d: usize,
    n: usize,
    subsets: Vec<Vec<usize>>,
}

impl SubsetBasis {
    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Position of `subset` in the basis.
    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        // lex order on equal-length increasing vectors is Vec's Ord
        self.subsets
            .binary_search_by(|s| s.as_slice().cmp(subset))
            .ok()
    }

    /// The complementary subsets, in basis order.
    pub fn complements(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.subsets.iter().map(|s| complement(s, self.d))
    }
}

fn check_degree(d: usize, n: usize) -> Result<()> {
    if n > d {
        Err(Error::DegreeOutOfRange { n, d })
    } else {
        Ok(())
    }
}

/// All `n`-element subsets of `{0, …, d-1}` in lexicographic order.
pub fn subset_basis(d: usize, n: usize) -> Result<SubsetBasis> {
    check_degree(d, n)?;
    let mut subsets = Vec::with_capacity(binomial(d, n));
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        subsets.push(current.clone());
        // advance to the next combination in lex order
        let Some(i) = (0..n).rev().find(|&i| current[i] < d - n + i) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..n {
            current[j] = current[j - 1] + 1;
        }
    }
    Ok(SubsetBasis { d, n, subsets })
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Binomial coefficient that reports overflow instead of wrapping.
pub fn checked_binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    (0..k).try_fold(1usize, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}

pub fn complement(subset: &[usize], d: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(d.saturating_sub(subset.len()));
    let mut it = subset.iter().peekable();
    for i in 0..d {
        if it.peek() == Some(&&i) {
            it.next();
        } else {
            out.push(i);
        }
    }
    out
}

/// Sign of the permutation listing `subset` in increasing order followed by
/// its increasing complement. The empty subset has sign `+1`.
pub fn subset_sign(subset: &[usize], d: usize) -> Result<i32> {
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSubset {
            subset: subset.to_vec(),
            d,
            reason: "not strictly increasing",
        });
    }
    if subset.last().is_some_and(|&k| k >= d) {
        return Err(Error::InvalidSubset {
            subset: subset.to_vec(),
            d,
            reason: "element out of range",
        });
    }
    // every inversion pairs a subset element with a smaller complement element
    let rest = complement(subset, d);
    let inversions: usize = subset
        .iter()
        .map(|&k| rest.iter().take_while(|&&c| c < k).count())
        .sum();
    Ok(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

fn minor(a: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
    bareiss_in_place(a.submatrix(rows, cols), rows.len())
}

fn minors_matrix(a: &IntMatrix, row_sets: &[Vec<usize>], col_sets: &[Vec<usize>]) -> IntMatrix {
    let data = row_sets
        .iter()
        .flat_map(|r| col_sets.iter().map(move |c| minor(a, r, c)))
        .collect();
    IntMatrix::new(row_sets.len(), col_sets.len(), data).expect("sizes agree")
}

/// `n`-th compound matrix: the `(J, K)` entry is `det(a[J, K])`.
pub fn exterior_power(a: &IntMatrix, n: usize) -> Result<IntMatrix> {
    let d = a.ensure_square()?;
    let basis = subset_basis(d, n)?;
    Ok(minors_matrix(a, basis.subsets(), basis.subsets()))
}

/// `C_n`: the `(K, L)` entry is `det(a[K', L'])`, complements taken in `{0..d}`.
pub fn complement_matrix(a: &IntMatrix, n: usize) -> Result<IntMatrix> {
    let d = a.ensure_square()?;
    let basis = subset_basis(d, n)?;
    let comps: Vec<Vec<usize>> = basis.complements().collect();
    Ok(minors_matrix(a, &comps, &comps))
}

/// `diag(subset_sign(K))` over the degree-`n` basis.
pub fn sign_diagonal(d: usize, n: usize) -> Result<IntMatrix> {
    let basis = subset_basis(d, n)?;
    let signs = basis
        .subsets()
        .iter()
        .map(|k| subset_sign(k, d).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::diagonal(signs))
}

/// `B̃_n`: the complement matrix with entries twisted by `sign(τ_K)·sign(τ_L)`.
pub fn b_tilde_matrix(a: &IntMatrix, n: usize) -> Result<IntMatrix> {
    let d = a.ensure_square()?;
    let signs = sign_diagonal(d, n)?;
    let mut c = complement_matrix(a, n)?;
    for i in 0..c.rows() {
        for j in 0..c.cols() {
            if signs[(i, i)] != signs[(j, j)] {
                let x = std::mem::take(&mut c[(i, j)]);
                c[(i, j)] = -x;
            }
        }
    }
    Ok(c)
}

/// `B_n = sign(det a) · B̃_n`.
pub fn b_matrix(a: &IntMatrix, n: usize) -> Result<IntMatrix> {
    let det_a = det(a)?;
    if det_a.is_zero() {
        return Err(Error::Singular);
    }
    let bt = b_tilde_matrix(a, n)?;
    Ok(if det_a.is_negative() {
        bt.scale(&BigInt::from(-1))
    } else {
        bt
    })
}

/// `U_n`: the 0/1 matrix sending the basis vector `e_I` of `Λⁿ` to `e_{I'}`
/// of `Λ^{d-n}`. Rows index `(d-n)`-subsets, columns index `n`-subsets.
pub fn hodge_matrix(d: usize, n: usize) -> Result<IntMatrix> {
    let source = subset_basis(d, n)?;
    let target = subset_basis(d, d - n)?;
    let mut u = IntMatrix::zeros(target.len(), source.len());
    for (col, comp) in source.complements().enumerate() {
        let row = target
            .index_of(&comp)
            .expect("complement is a basis element");
        u[(row, col)] = BigInt::from(1);
    }
    Ok(u)
}
