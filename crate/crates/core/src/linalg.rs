//! Small dense exact linear algebra, generic over any field scalar that
//! implements the `num-traits` arithmetic traits. Instantiated with
//! [`crate::Rat`] everywhere the verification chain needs rank or
//! determinant computations; no floating point is involved.

use std::ops::{Div, Mul, Sub};

use num::traits::{One, Zero};

/// Row-major dense matrix over an exact field scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

impl<T> Matrix<T>
where
    T: Clone
        + Zero
        + One
        + PartialEq
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>,
{
    /// Rank by Gaussian elimination with exact division.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) =
                (rank..rows).find(|&r| m[r * cols + col] != T::zero())
            else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    m.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = T::one() / m[rank * cols + col].clone();
            for r in rank + 1..rows {
                if m[r * cols + col] == T::zero() {
                    continue;
                }
                let factor = m[r * cols + col].clone() * inv.clone();
                for c in col..cols {
                    let delta = factor.clone() * m[rank * cols + c].clone();
                    m[r * cols + c] = m[r * cols + c].clone() - delta;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Determinant of a square matrix by exact Gaussian elimination.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != T::zero()) else {
                return T::zero();
            };
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                }
                det = T::zero() - det;
            }
            let pv = m[col * n + col].clone();
            det = det * pv.clone();
            for r in col + 1..n {
                if m[r * n + col] == T::zero() {
                    continue;
                }
                let factor = m[r * n + col].clone() / pv.clone();
                for c in col..n {
                    let delta = factor.clone() * m[col * n + c].clone();
                    m[r * n + c] = m[r * n + c].clone() - delta;
                }
            }
        }
        det
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }
}
