//! Dense matrices over a tagged scalar field.
//!
//! `Mat` is the universal carrier for Gram matrices, bases and incidence
//! structures. Entries are always stored as complex pairs; a `FieldTag::Real`
//! matrix must have zero imaginary parts everywhere.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{modulus, C64, ONE, ZERO};
use crate::{Error, Result};

/// The underlying scalar field of a matrix or vector system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Real,
    Complex,
}

impl FieldTag {
    pub fn symbol(self) -> &'static str {
        match self {
            FieldTag::Real => "R",
            FieldTag::Complex => "C",
        }
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub field: FieldTag,
    rows: usize,
    cols: usize,
    entries: Vec<C64>,
}

impl Mat {
    pub fn zeros(field: FieldTag, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            entries: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(field: FieldTag, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, ONE);
        }
        m
    }

    /// The all-ones matrix.
    pub fn ones(field: FieldTag, n: usize) -> Self {
        Mat {
            field,
            rows: n,
            cols: n,
            entries: vec![ONE; n * n],
        }
    }

    pub fn from_fn(
        field: FieldTag,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> C64,
    ) -> Self {
        let mut m = Mat::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_real_rows(rows: usize, cols: usize, data: &[f64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat {
            field: FieldTag::Real,
            rows,
            cols,
            entries: data.iter().map(|&x| C64::new(x, 0.0)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let field = if self.field == FieldTag::Complex || other.field == FieldTag::Complex {
            FieldTag::Complex
        } else {
            FieldTag::Real
        };
        let mut out = Mat::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(l, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| e * s).collect(),
        }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let field = if self.field == FieldTag::Complex || other.field == FieldTag::Complex {
            FieldTag::Complex
        } else {
            FieldTag::Real
        };
        Mat {
            field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let field = if self.field == FieldTag::Complex || other.field == FieldTag::Complex {
            FieldTag::Complex
        } else {
            FieldTag::Real
        };
        let mut out = Mat::zeros(field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == ZERO {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(i * other.rows + p, j * other.cols + q, a * other.get(p, q));
                    }
                }
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        let s: f64 = self.entries.iter().map(|e| e.norm_sqr()).sum();
        crate::scalar::sqrt(s)
    }

    /// Max deviation from `A = A*`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = modulus(self.get(i, j) - self.get(j, i).conj());
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermitian_defect() <= tol
    }

    /// Column `j` as a vector of length `rows`.
    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// `<col_i, col_j>` with conjugation on the first argument.
    pub fn col_inner(&self, i: usize, j: usize) -> C64 {
        let mut acc = ZERO;
        for r in 0..self.rows {
            acc += self.get(r, i).conj() * self.get(r, j);
        }
        acc
    }

    pub fn col_norm(&self, j: usize) -> f64 {
        crate::scalar::sqrt(self.col_inner(j, j).re)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let field = if self.field == FieldTag::Complex || other.field == FieldTag::Complex {
            FieldTag::Complex
        } else {
            FieldTag::Real
        };
        Mat::from_fn(field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let field = if self.field == FieldTag::Complex || other.field == FieldTag::Complex {
            FieldTag::Complex
        } else {
            FieldTag::Real
        };
        Mat::from_fn(
            field,
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| {
                if i < self.rows && j < self.cols {
                    self.get(i, j)
                } else if i >= self.rows && j >= self.cols {
                    other.get(i - self.rows, j - self.cols)
                } else {
                    ZERO
                }
            },
        )
    }

    /// Largest imaginary part in absolute value; a Real-tagged matrix should
    /// report (numerically) zero here.
    pub fn max_imag(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| crate::scalar::abs(e.im))
            .fold(0.0, f64::max)
    }
}

/// Maximum modulus over off-diagonal entries; 0 for a 1x1 matrix.
pub fn coherence(a: &Mat) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let mut worst = 0.0_f64;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if i != j {
                let m = modulus(a.get(i, j));
                if m > worst {
                    worst = m;
                }
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    #[test]
    fn coherence_identity_is_zero() {
        assert_eq!(coherence(&Mat::identity(FieldTag::Real, 3)).unwrap(), 0.0);
    }

    #[test]
    fn coherence_simplex_gram_r4() {
        // 5x5 Gram with off-diagonal -1/4
        let n = 5;
        let g = Mat::from_fn(FieldTag::Real, n, n, |i, j| {
            if i == j {
                re(1.0)
            } else {
                re(-0.25)
            }
        });
        assert_eq!(coherence(&g).unwrap(), 0.25);
    }

    #[test]
    fn coherence_complex_modulus() {
        let mut m = Mat::identity(FieldTag::Complex, 3);
        m.set(0, 1, C64::new(0.3, 0.4));
        assert!((coherence(&m).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn coherence_rejects_non_square() {
        let m = Mat::zeros(FieldTag::Real, 2, 3);
        assert_eq!(coherence(&m), Err(Error::NotSquare));
    }

    #[test]
    fn kron_with_ones_tiles_entries() {
        let a = Mat::from_real_rows(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let j2 = Mat::ones(FieldTag::Real, 2);
        let k = a.kron(&j2);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(0, 1).re, 1.0);
        assert_eq!(k.get(3, 3).re, 4.0);
        assert_eq!(k.get(2, 0).re, 3.0);
    }
}
