//! Hermitian eigendecomposition by cyclic Jacobi rotations.
//!
//! Works for both fields: for a real symmetric input the rotations stay real,
//! so the eigenvector basis is real as well. Sweeps continue until the largest
//! off-diagonal modulus drops below `1e-12 * ||A||_F`, capped at 100 sweeps.

use alloc::vec::Vec;

use crate::mat::Mat;
use crate::scalar::{modulus, sqrt, C64};
use crate::{Error, Result};

const SWEEP_CAP: usize = 100;

/// Result of a Hermitian eigendecomposition.
///
/// Eigenvalues are ascending; `basis` is unitary with eigenvectors as columns,
/// so `input = basis * diag(eigenvalues) * basis^*`.
#[derive(Debug, Clone)]
pub struct EigenDecomp {
    pub eigenvalues: Vec<f64>,
    pub basis: Mat,
}

impl EigenDecomp {
    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// Number of eigenvalues within `tol` of the largest one.
    pub fn top_multiplicity(&self, tol: f64) -> usize {
        let top = self.lambda_max();
        self.eigenvalues
            .iter()
            .filter(|&&l| (top - l).abs() <= tol)
            .count()
    }
}

fn require_hermitian(a: &Mat) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let scale = a.frobenius_norm().max(1.0);
    if a.hermitian_defect() > 1e-10 * scale {
        return Err(Error::NotHermitian);
    }
    Ok(())
}

/// Eigendecomposition of a Hermitian matrix.
pub fn hermitian_eig(a: &Mat) -> Result<EigenDecomp> {
    require_hermitian(a)?;
    let n = a.rows();
    // symmetrize to remove the sub-tolerance defect before iterating
    let mut m = Mat::from_fn(a.field, n, n, |i, j| {
        (a.get(i, j) + a.get(j, i).conj()) * C64::new(0.5, 0.0)
    });
    let mut v = Mat::identity(a.field, n);
    let frob = m.frobenius_norm();
    let stop = 1e-12 * frob.max(f64::MIN_POSITIVE);

    for _ in 0..SWEEP_CAP {
        let mut worst = 0.0_f64;
        for p in 0..n {
            for q in (p + 1)..n {
                let z = m.get(p, q);
                let r = modulus(z);
                if r > worst {
                    worst = r;
                }
                if r <= stop {
                    continue;
                }
                // unimodular phase of the pivot entry
                let u = z / C64::new(r, 0.0);
                let app = m.get(p, p).re;
                let aqq = m.get(q, q).re;
                let tau = (aqq - app) / (2.0 * r);
                // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
                let t = if tau >= 0.0 {
                    -1.0 / (tau + sqrt(1.0 + tau * tau))
                } else {
                    1.0 / (-tau + sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / sqrt(1.0 + t * t);
                let s = t * c;
                rotate(&mut m, &mut v, p, q, c, s, u);
            }
        }
        if worst <= stop {
            break;
        }
    }

    // sort ascending, permuting the basis columns to match
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).re.partial_cmp(&m.get(j, j).re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m.get(i, i).re).collect();
    let basis = Mat::from_fn(a.field, n, n, |i, j| v.get(i, order[j]));
    Ok(EigenDecomp { eigenvalues, basis })
}

/// Apply the unitary Jacobi rotation on the (p, q) plane to `m` (two-sided)
/// and to the accumulated basis `v` (right side only).
fn rotate(m: &mut Mat, v: &mut Mat, p: usize, q: usize, c: f64, s: f64, u: C64) {
    let n = m.rows();
    let cc = C64::new(c, 0.0);
    let su = C64::new(s, 0.0) * u;
    let suc = su.conj();
    // columns: [col_p col_q] <- [col_p col_q] * [[c, -s u], [s conj(u), c]]
    for i in 0..n {
        let mip = m.get(i, p);
        let miq = m.get(i, q);
        m.set(i, p, mip * cc + miq * suc);
        m.set(i, q, miq * cc - mip * su);
    }
    // rows: conjugate-transposed action from the left
    for j in 0..n {
        let mpj = m.get(p, j);
        let mqj = m.get(q, j);
        m.set(p, j, mpj * cc + mqj * su);
        m.set(q, j, mqj * cc - mpj * suc);
    }
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * cc + viq * suc);
        v.set(i, q, viq * cc - vip * su);
    }
}

/// Count of eigenvalues with `|lambda| > tol_rel * max|lambda|`; 0 for the
/// zero matrix. Default threshold used across the crate is 1e-9.
pub fn numeric_rank(a: &Mat, tol_rel: f64) -> Result<usize> {
    let dec = hermitian_eig(a)?;
    let max_abs = dec
        .eigenvalues
        .iter()
        .map(|l| l.abs())
        .fold(0.0_f64, f64::max);
    if max_abs == 0.0 {
        return Ok(0);
    }
    Ok(dec
        .eigenvalues
        .iter()
        .filter(|l| l.abs() > tol_rel * max_abs)
        .count())
}

/// Default relative rank threshold.
pub const RANK_TOL: f64 = 1e-9;
