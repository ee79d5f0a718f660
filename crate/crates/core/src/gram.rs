//! Gram systems: unit-diagonal Hermitian PSD matrices with declared (d, k)
//! and their factorization back into unit vectors.

use alloc::vec::Vec;

use crate::eig::{hermitian_eig, RANK_TOL};
use crate::mat::{coherence, FieldTag, Mat};
use crate::scalar::{re, sqrt, C64};
use crate::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-10;
pub const DIAG_TOL: f64 = 1e-10;
pub const PSD_TOL: f64 = 1e-8;

/// A `(d+k) x (d+k)` unit-diagonal Hermitian PSD Gram matrix of rank at most
/// `d`, together with its measured coherence.
#[derive(Debug, Clone)]
pub struct GramSystem {
    pub field: FieldTag,
    pub d: usize,
    pub k: usize,
    pub gram: Mat,
    pub coherence: f64,
}

impl GramSystem {
    /// Validates all invariants and measures the coherence.
    pub fn new(field: FieldTag, d: usize, k: usize, gram: Mat) -> Result<Self> {
        let n = d + k;
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: gram.rows(),
            });
        }
        if !gram.is_hermitian(HERMITIAN_TOL * gram.frobenius_norm().max(1.0)) {
            return Err(Error::NotHermitian);
        }
        for i in 0..n {
            if (gram.get(i, i).re - 1.0).abs() > DIAG_TOL || gram.get(i, i).im.abs() > DIAG_TOL {
                return Err(Error::NotHermitian);
            }
        }
        // one decomposition serves both the PSD and the rank check
        let dec = hermitian_eig(&gram)?;
        if dec.lambda_min() < -PSD_TOL {
            return Err(Error::NotPsd);
        }
        let max_abs = dec
            .eigenvalues
            .iter()
            .map(|l| l.abs())
            .fold(0.0_f64, f64::max);
        let rank = dec
            .eigenvalues
            .iter()
            .filter(|l| l.abs() > RANK_TOL * max_abs)
            .count();
        if rank > d {
            return Err(Error::RankExceedsD { rank, d });
        }
        let coherence = coherence(&gram)?;
        Ok(GramSystem {
            field,
            d,
            k,
            gram,
            coherence,
        })
    }

    pub fn size(&self) -> usize {
        self.d + self.k
    }
}

/// Factor a Gram system into `d+k` unit columns in `H^d`.
///
/// Eigendecomposes, keeps the (at most `d`) eigenpairs above the rank
/// threshold and forms `diag(sqrt(lambda)) * basis^*`. Eigenvalues below
/// `-PSD_TOL` are rejected; small negative eigenvalues are clamped to zero.
pub fn factor_to_vectors(g: &GramSystem) -> Result<Mat> {
    let dec = hermitian_eig(&g.gram)?;
    let max_abs = dec
        .eigenvalues
        .iter()
        .map(|l| l.abs())
        .fold(0.0_f64, f64::max);
    if dec.lambda_min() < -PSD_TOL * max_abs.max(1.0) {
        return Err(Error::NotPsd);
    }
    let kept: Vec<usize> = (0..dec.eigenvalues.len())
        .filter(|&i| dec.eigenvalues[i].abs() > RANK_TOL * max_abs)
        .collect();
    if kept.len() > g.d {
        return Err(Error::RankExceedsD {
            rank: kept.len(),
            d: g.d,
        });
    }
    let n = g.size();
    // row m of the output is sqrt(lambda_m) times the conjugated eigenvector;
    // unused rows (rank < d) stay zero so the ambient dimension is d exactly.
    let mut out = Mat::zeros(g.field, g.d, n);
    for (row, &idx) in kept.iter().enumerate() {
        let s = sqrt(dec.eigenvalues[idx].max(0.0));
        for i in 0..n {
            out.set(row, i, re(s) * dec.basis.get(i, idx).conj());
        }
    }
    Ok(out)
}

/// Gram matrix of the columns of `v` (conjugate-linear in the first slot).
pub fn gram_of_columns(v: &Mat) -> Mat {
    let n = v.cols();
    let mut g = Mat::zeros(v.field, n, n);
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, v.col_inner(i, j));
        }
    }
    g
}

/// Coherence of a set of unit columns: max |<v_i, v_j>| over i != j.
pub fn column_coherence(v: &Mat) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..v.cols() {
        for j in (i + 1)..v.cols() {
            let m = crate::scalar::modulus(v.col_inner(i, j));
            if m > worst {
                worst = m;
            }
        }
    }
    worst
}

#[allow(unused)]
fn _c64_assert(_: C64) {}
