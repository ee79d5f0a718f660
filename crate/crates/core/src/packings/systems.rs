//! Base vector systems: simplices, maximal equiangular line systems and SICs.

use core::f64::consts::PI;

use crate::gram::{factor_to_vectors, gram_of_columns, GramSystem};
use crate::mat::{FieldTag, Mat};
use crate::scalar::{cis, re, sqrt};
use crate::{Error, Result};

const UNIT_TOL: f64 = 1e-10;

/// A collection of unit column vectors in `H^ambient_dim`.
#[derive(Debug, Clone)]
pub struct VectorSystem {
    pub field: FieldTag,
    pub ambient_dim: usize,
    pub vectors: Mat,
}

impl VectorSystem {
    pub fn new(field: FieldTag, vectors: Mat) -> Result<Self> {
        for j in 0..vectors.cols() {
            if (vectors.col_norm(j) - 1.0).abs() > UNIT_TOL {
                return Err(Error::InvalidMeasure("column is not a unit vector"));
            }
        }
        Ok(VectorSystem {
            field,
            ambient_dim: vectors.rows(),
            vectors,
        })
    }

    pub fn count(&self) -> usize {
        self.vectors.cols()
    }

    pub fn gram(&self) -> Mat {
        gram_of_columns(&self.vectors)
    }

    /// Frame operator `sum_i x_i x_i^*` (an `ambient_dim`-square matrix).
    pub fn frame_operator(&self) -> Mat {
        let d = self.ambient_dim;
        let mut f = Mat::zeros(self.field, d, d);
        for c in 0..self.count() {
            for i in 0..d {
                for j in 0..d {
                    let v = f.get(i, j) + self.vectors.get(i, c) * self.vectors.get(j, c).conj();
                    f.set(i, j, v);
                }
            }
        }
        f
    }
}

/// The `d+1` vertices of a unit regular simplex in `R^d`: pairwise inner
/// products all `-1/d`.
pub fn simplex_system(d: usize) -> VectorSystem {
    let n = d + 1;
    let gram = Mat::from_fn(FieldTag::Real, n, n, |i, j| {
        if i == j {
            re(1.0)
        } else {
            re(-1.0 / d as f64)
        }
    });
    let g = GramSystem::new(FieldTag::Real, d, 1, gram).expect("simplex gram is exact");
    let v = factor_to_vectors(&g).expect("simplex gram factors");
    VectorSystem::new(FieldTag::Real, v).expect("simplex columns are unit")
}

/// A maximal system of `k(k+1)/2` equiangular lines in `R^k` at common angle
/// `1/sqrt(k+2)`, for the `k` where such systems exist and are shipped here.
pub fn equiangular_system(k: usize) -> Result<VectorSystem> {
    match k {
        2 => {
            // three lines at 60 degrees in the plane
            let mut m = Mat::zeros(FieldTag::Real, 2, 3);
            for (j, theta) in [0.0, PI / 3.0, 2.0 * PI / 3.0].iter().enumerate() {
                m.set(0, j, re(libm::cos(*theta)));
                m.set(1, j, re(libm::sin(*theta)));
            }
            VectorSystem::new(FieldTag::Real, m)
        }
        3 => {
            // the six icosahedron diagonals, cyclic (0, +-1, phi)
            let phi = (1.0 + sqrt(5.0)) / 2.0;
            let s = 1.0 / sqrt(1.0 + phi * phi);
            let coords: [[f64; 3]; 6] = [
                [0.0, 1.0, phi],
                [0.0, -1.0, phi],
                [1.0, phi, 0.0],
                [-1.0, phi, 0.0],
                [phi, 0.0, 1.0],
                [phi, 0.0, -1.0],
            ];
            let m = Mat::from_fn(FieldTag::Real, 3, 6, |i, j| re(coords[j][i] * s));
            VectorSystem::new(FieldTag::Real, m)
        }
        7 => {
            // 28 vectors (e_i + e_j - (1/4) 1) / sqrt(3/2) in the sum-zero
            // hyperplane of R^8, re-expressed in 7 dimensions by factoring
            // their rank-7 Gram
            let norm = sqrt(1.5);
            let mut amb = Mat::zeros(FieldTag::Real, 8, 28);
            let mut c = 0;
            for i in 0..8 {
                for j in (i + 1)..8 {
                    for t in 0..8 {
                        let mut v = -0.25;
                        if t == i || t == j {
                            v += 1.0;
                        }
                        amb.set(t, c, re(v / norm));
                    }
                    c += 1;
                }
            }
            let gram = gram_of_columns(&amb);
            let g = GramSystem::new(FieldTag::Real, 7, 21, gram)?;
            VectorSystem::new(FieldTag::Real, factor_to_vectors(&g)?)
        }
        #[cfg(feature = "k23")]
        23 => {
            let s = crate::designs::seidel_276()?;
            let gram = Mat::identity(FieldTag::Real, 276).add(&s.mat.scale(re(0.2)));
            let g = GramSystem::new(FieldTag::Real, 23, 253, gram)?;
            VectorSystem::new(FieldTag::Real, factor_to_vectors(&g)?)
        }
        #[cfg(not(feature = "k23"))]
        23 => Err(Error::FeatureDisabled("k23")),
        other => Err(Error::UnsupportedK(other)),
    }
}

/// A SIC system: `k^2` equiangular lines in `C^k` at angle `1/sqrt(k+1)`.
pub fn sic_system(k: usize) -> Result<VectorSystem> {
    match k {
        2 => {
            // Bloch tetrahedron states
            let mut m = Mat::zeros(FieldTag::Complex, 2, 4);
            m.set(0, 0, re(1.0));
            let a = 1.0 / sqrt(3.0);
            let b = sqrt(2.0 / 3.0);
            for j in 0..3 {
                let w = cis(2.0 * PI * j as f64 / 3.0);
                m.set(0, j + 1, re(a));
                m.set(1, j + 1, re(b) * w);
            }
            VectorSystem::new(FieldTag::Complex, m)
        }
        3 => {
            // Weyl-Heisenberg orbit of the fiducial (0, 1, -1)/sqrt(2)
            let f = [re(0.0), re(1.0 / sqrt(2.0)), re(-1.0 / sqrt(2.0))];
            let omega = cis(2.0 * PI / 3.0);
            let mut m = Mat::zeros(FieldTag::Complex, 3, 9);
            for a in 0..3usize {
                for b in 0..3usize {
                    let col = 3 * a + b;
                    for t in 0..3usize {
                        // (X^a Z^b f)_t = omega^{b (t - a)} f_{t - a}
                        let src = (t + 3 - a) % 3;
                        let phase = omega.powu((b * src) as u32);
                        m.set(t, col, phase * f[src]);
                    }
                }
            }
            VectorSystem::new(FieldTag::Complex, m)
        }
        other => Err(Error::UnsupportedK(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::column_coherence;
    use crate::scalar::modulus;

    fn check_equiangular(v: &VectorSystem, beta: f64, tol: f64) {
        for i in 0..v.count() {
            for j in (i + 1)..v.count() {
                let m = modulus(v.vectors.col_inner(i, j));
                assert!((m - beta).abs() < tol, "pair ({i},{j}): {m} vs {beta}");
            }
        }
    }

    fn check_frame(v: &VectorSystem, constant: f64, tol: f64) {
        let f = v.frame_operator();
        let target = Mat::identity(v.field, v.ambient_dim).scale(re(constant));
        assert!(f.sub(&target).frobenius_norm() < tol);
    }

    #[test]
    fn simplex_d1() {
        let v = simplex_system(1);
        assert_eq!(v.count(), 2);
        assert!((v.vectors.col_inner(0, 1).re + 1.0).abs() < 1e-10);
    }

    #[test]
    fn simplex_d2_and_d40() {
        let v = simplex_system(2);
        check_equiangular(&v, 0.5, 1e-9);
        let v = simplex_system(40);
        assert!((column_coherence(&v.vectors) - 0.025).abs() < 1e-9);
    }

    #[test]
    fn lines_k2() {
        let v = equiangular_system(2).unwrap();
        check_equiangular(&v, 0.5, 1e-10);
        check_frame(&v, 1.5, 1e-10);
    }

    #[test]
    fn lines_k3() {
        let v = equiangular_system(3).unwrap();
        check_equiangular(&v, 1.0 / sqrt(5.0), 1e-10);
        check_frame(&v, 2.0, 1e-9);
    }

    #[test]
    fn lines_k7() {
        let v = equiangular_system(7).unwrap();
        assert_eq!(v.ambient_dim, 7);
        assert_eq!(v.count(), 28);
        check_equiangular(&v, 1.0 / 3.0, 1e-8);
        check_frame(&v, 4.0, 1e-8);
    }

    #[cfg(not(feature = "k23"))]
    #[test]
    fn lines_k23_needs_feature() {
        assert_eq!(equiangular_system(23).err(), Some(Error::FeatureDisabled("k23")));
    }

    #[cfg(feature = "k23")]
    #[test]
    fn lines_k23() {
        let v = equiangular_system(23).unwrap();
        assert_eq!(v.ambient_dim, 23);
        assert_eq!(v.count(), 276);
        check_equiangular(&v, 0.2, 1e-7);
        check_frame(&v, 12.0, 1e-6);
    }

    #[test]
    fn lines_unsupported() {
        assert_eq!(equiangular_system(5).err(), Some(Error::UnsupportedK(5)));
    }

    #[test]
    fn sic_k2() {
        let v = sic_system(2).unwrap();
        assert_eq!(v.count(), 4);
        check_equiangular(&v, 1.0 / sqrt(3.0), 1e-10);
        check_frame(&v, 2.0, 1e-9);
    }

    #[test]
    fn sic_k3() {
        let v = sic_system(3).unwrap();
        assert_eq!(v.count(), 9);
        check_equiangular(&v, 0.5, 1e-10);
        check_frame(&v, 3.0, 1e-9);
    }

    #[test]
    fn sic_unsupported() {
        assert_eq!(sic_system(5).err(), Some(Error::UnsupportedK(5)));
    }
}
