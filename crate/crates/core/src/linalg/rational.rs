use std::ops::Index;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .entries()
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    /// Exact inverse by Gauss-Jordan elimination over Q.
    pub fn inverse_of(m: &IntMatrix) -> Result<Self> {
        let n = m.ensure_square()?;
        let mut a = Self::from_int(m);
        let mut inv = Self::from_int(&IntMatrix::identity(n));
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].clone();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                a.sub_row_multiple(r, col, &f);
                inv.sub_row_multiple(r, col, &f);
            }
        }
        Ok(inv)
    }

    /// Integer matrix if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        let data: Option<Vec<BigInt>> = self
            .data
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect();
        IntMatrix::new(self.rows, self.cols, data?).ok()
    }

    pub fn mul_int(&self, rhs: &IntMatrix) -> Result<Self> {
        if self.cols != rhs.rows() {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                rhs.rows(),
                rhs.cols()
            )));
        }
        let mut data = vec![BigRational::zero(); self.rows * rhs.cols()];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols() {
                    data[i * rhs.cols() + j] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: rhs.cols(),
            data,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, divisor: &BigRational) {
        let inv = BigRational::one() / divisor;
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x *= &inv;
        }
    }

    fn sub_row_multiple(&mut self, dst: usize, src: usize, f: &BigRational) {
        for j in 0..self.cols {
            let delta = &self.data[src * self.cols + j] * f;
            self.data[dst * self.cols + j] -= delta;
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}
