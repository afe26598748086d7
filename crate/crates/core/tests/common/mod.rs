#![allow(dead_code)]

use cuntz_li_core::{CertifiedDilation, IntMatrix};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_rows((0..rows).map(|_| {
        (0..cols)
            .map(|_| rng.gen_range(-bound..=bound))
            .collect::<Vec<_>>()
    }))
    .unwrap()
}

/// Product of random elementary operations; determinant is +-1 by construction.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            rows[0][0] = -1;
        }
        return IntMatrix::from_rows(rows).unwrap();
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => rows.swap(i, j),
            1 => {
                let k = rng.gen_range(-2..=2);
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(src) {
                    *x += k * y;
                }
            }
            _ => rows[i].iter_mut().for_each(|x| *x = -*x),
        }
    }
    IntMatrix::from_rows(rows).unwrap()
}

/// Integer inverse of a unimodular matrix via the adjugate.
pub fn unimodular_inverse(p: &IntMatrix) -> IntMatrix {
    let n = p.rows();
    let det = cofactor_det(p);
    assert!(det == BigInt::from(1) || det == BigInt::from(-1));
    let mut inv = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = cofactor_det(&p.submatrix(&rows, &cols));
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[(i, j)] = minor * sign * &det;
        }
    }
    inv
}

/// Laplace expansion along the first row. Test oracle only.
pub fn cofactor_det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return BigInt::from(1);
    }
    let rest: Vec<usize> = (1..n).collect();
    (0..n)
        .map(|j| {
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let term = &m[(0, j)] * cofactor_det(&m.submatrix(&rest, &cols));
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `k·I + perturbation` (each diagonal sign drawn independently so both
/// determinant signs occur in every dimension), kept only if it certifies.
pub fn random_dilation(rng: &mut impl Rng, max_d: usize) -> CertifiedDilation {
    loop {
        let d = rng.gen_range(1..=max_d);
        let k = rng.gen_range(2..=3);
        let mut m = random_matrix(rng, d, d, 1);
        for i in 0..d {
            m[(i, i)] += if rng.gen_bool(0.3) { -k } else { k };
        }
        if let Ok(c) = CertifiedDilation::new(m) {
            return c;
        }
    }
}
