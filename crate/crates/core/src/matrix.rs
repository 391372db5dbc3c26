//! Dense integer matrices with checked arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i64::from(i == j))
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![1; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(IntMatrix { data, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(IntMatrix { data, ..*self })
    }

    /// `self + lambda·I` for square `self`.
    pub fn shift(&self, lambda: i64) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: (self.rows, self.rows),
                found: (self.rows, self.cols),
            });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.get(i, i).checked_add(lambda).ok_or(Error::Overflow)?;
            out.set(i, i, v);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.cols, other.cols),
                found: (other.rows, other.cols),
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a
                        .checked_mul(other.get(l, j))
                        .and_then(|p| p.checked_add(out.get(i, j)))
                        .ok_or(Error::Overflow)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row `dst` of `self` += row `src` of `other`.
    pub(crate) fn add_row_from(&mut self, dst: usize, other: &Self, src: usize) -> Result<()> {
        let cols = self.cols;
        let (d, s) = (
            &mut self.data[dst * cols..(dst + 1) * cols],
            &other.data[src * cols..(src + 1) * cols],
        );
        for (x, y) in d.iter_mut().zip(s) {
            *x = x.checked_add(*y).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    pub fn trace(&self) -> Result<i64> {
        (0..self.rows.min(self.cols)).try_fold(0i64, |acc, i| {
            acc.checked_add(self.get(i, i)).ok_or(Error::Overflow)
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
