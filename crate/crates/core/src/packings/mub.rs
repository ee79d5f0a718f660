//! Mutually unbiased basis batteries.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::bounds::is_prime;
use crate::mat::{FieldTag, Mat};
use crate::scalar::{cis, modulus, re, sqrt};
use crate::{Error, Result};

/// `ell` orthonormal bases of `H^k` whose cross inner products all have
/// modulus `1/sqrt(k)`.
#[derive(Debug, Clone)]
pub struct MubBattery {
    pub field: FieldTag,
    pub k: usize,
    pub bases: Vec<Mat>,
}

impl MubBattery {
    /// Checks orthonormality of each basis and unbiasedness of every pair.
    pub fn validated(field: FieldTag, k: usize, bases: Vec<Mat>) -> Result<Self> {
        let target = 1.0 / sqrt(k as f64);
        for b in &bases {
            let defect = b
                .adjoint()
                .matmul(b)
                .sub(&Mat::identity(field, k))
                .frobenius_norm();
            if defect > 1e-9 {
                return Err(Error::InvalidBattery);
            }
        }
        for i in 0..bases.len() {
            for j in 0..bases.len() {
                if i == j {
                    continue;
                }
                let cross = bases[i].adjoint().matmul(&bases[j]);
                for a in 0..k {
                    for b in 0..k {
                        if (modulus(cross.get(a, b)) - target).abs() > 1e-9 {
                            return Err(Error::InvalidBattery);
                        }
                    }
                }
            }
        }
        Ok(MubBattery { field, k, bases })
    }

    pub fn ell(&self) -> usize {
        self.bases.len()
    }

    /// The concatenation `[B_1 | B_2 | ... | B_ell]`.
    pub fn concat(&self) -> Mat {
        let mut m = self.bases[0].clone();
        for b in &self.bases[1..] {
            m = m.hcat(b);
        }
        m
    }

    /// Battery restricted to its first `ell` bases.
    pub fn prefix(&self, ell: usize) -> MubBattery {
        MubBattery {
            field: self.field,
            k: self.k,
            bases: self.bases[..ell].to_vec(),
        }
    }
}

/// The full basis battery for this field and dimension: `p + 1` bases of
/// `C^p` for prime `p`, or the three known bases of `R^4`.
pub fn mub_battery(field: FieldTag, k: usize) -> Result<MubBattery> {
    match field {
        FieldTag::Complex => {
            if !is_prime(k as u64) {
                return Err(Error::UnsupportedDimension(k));
            }
            let mut bases = Vec::with_capacity(k + 1);
            bases.push(Mat::identity(FieldTag::Complex, k));
            if k == 2 {
                let s = 1.0 / sqrt(2.0);
                bases.push(Mat::from_fn(FieldTag::Complex, 2, 2, |i, j| {
                    re(if i == 1 && j == 1 { -s } else { s })
                }));
                // eigenbasis of Pauli Y
                let mut y = Mat::zeros(FieldTag::Complex, 2, 2);
                y.set(0, 0, re(s));
                y.set(0, 1, re(s));
                y.set(1, 0, crate::scalar::C64::new(0.0, s));
                y.set(1, 1, crate::scalar::C64::new(0.0, -s));
                bases.push(y);
            } else {
                // B_t entries omega^{t j^2 + j l} / sqrt(p) for odd prime p
                let s = 1.0 / sqrt(k as f64);
                for t in 0..k {
                    bases.push(Mat::from_fn(FieldTag::Complex, k, k, |j, l| {
                        let e = (t * j * j + j * l) % k;
                        cis(2.0 * PI * e as f64 / k as f64) * re(s)
                    }));
                }
            }
            MubBattery::validated(FieldTag::Complex, k, bases)
        }
        FieldTag::Real => {
            if k != 4 {
                return Err(Error::UnsupportedDimension(k));
            }
            let h4 = crate::designs::sylvester_hadamard(2).mat.scale(re(0.5));
            let third = third_real_basis(&h4);
            MubBattery::validated(
                FieldTag::Real,
                4,
                alloc::vec![Mat::identity(FieldTag::Real, 4), h4, third],
            )
        }
    }
}

/// Exhaustive search over 4x4 sign patterns for a third basis unbiased to
/// both the identity and `H_4/2`; the first hit in lexicographic order is
/// fixed forever.
fn third_real_basis(h4: &Mat) -> Mat {
    for bits in 0u32..(1 << 16) {
        let cand = Mat::from_fn(FieldTag::Real, 4, 4, |i, j| {
            re(if bits & (1 << (i * 4 + j)) != 0 { -0.5 } else { 0.5 })
        });
        // orthogonal columns
        let defect = cand
            .adjoint()
            .matmul(&cand)
            .sub(&Mat::identity(FieldTag::Real, 4))
            .frobenius_norm();
        if defect > 1e-12 {
            continue;
        }
        // unbiased to H_4/2: all cross entries of magnitude 1/2
        let cross = h4.adjoint().matmul(&cand);
        let ok = (0..4).all(|a| (0..4).all(|b| (modulus(cross.get(a, b)) - 0.5).abs() < 1e-12));
        if ok {
            return cand;
        }
    }
    unreachable!("a third real basis exists for k = 4");
}
