//! The Kronecker lift: turns a small seed matrix with a high-multiplicity top
//! eigenvalue into a Gram system of rank at most `d` for any admissible `d`.

use crate::eig::hermitian_eig;
use crate::gram::GramSystem;
use crate::mat::{FieldTag, Mat};
use crate::packings::mub::MubBattery;
use crate::packings::systems::VectorSystem;
use crate::scalar::{modulus, re, sqrt};
use crate::{Error, Result};

const LAMBDA_TOL: f64 = 1e-7;
const MULT_TOL: f64 = 1e-6;

/// An `n x n` Hermitian seed: unit diagonal, off-diagonal modulus at most 1,
/// top eigenvalue `lambda` of multiplicity `mult`.
#[derive(Debug, Clone)]
pub struct LiftSeed {
    pub field: FieldTag,
    pub c: Mat,
    pub lambda: f64,
    pub mult: usize,
}

impl LiftSeed {
    pub fn size(&self) -> usize {
        self.c.rows()
    }

    fn certified(field: FieldTag, c: Mat, lambda_expected: f64) -> Result<Self> {
        let dec = hermitian_eig(&c)?;
        let lambda = dec.lambda_max();
        if (lambda - lambda_expected).abs() > LAMBDA_TOL * lambda_expected.max(1.0) {
            return Err(Error::EigenFailed);
        }
        let mult = dec.top_multiplicity(MULT_TOL * lambda.max(1.0));
        Ok(LiftSeed {
            field,
            c,
            lambda,
            mult,
        })
    }
}

/// Seed from a system of equiangular lines (real lines or a SIC): if the
/// common angle is `beta`, the seed is `(1/beta)(A^* A - I) + I`.
pub fn lift_seed_from_lines(v: &VectorSystem) -> Result<LiftSeed> {
    let n = v.count();
    if n < 2 {
        return Err(Error::NotEquiangular);
    }
    let gram = v.gram();
    let beta = modulus(gram.get(0, 1));
    if beta < 1e-12 {
        return Err(Error::NotEquiangular);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (modulus(gram.get(i, j)) - beta).abs() > 1e-8 {
                return Err(Error::NotEquiangular);
            }
        }
    }
    let eye = Mat::identity(v.field, n);
    let c = gram.sub(&eye).scale(re(1.0 / beta)).add(&eye);
    // tight frames of N lines in H^k give lambda = (1/beta)(N/k - 1) + 1
    let expected = (n as f64 / v.ambient_dim as f64 - 1.0) / beta + 1.0;
    LiftSeed::certified(v.field, c, expected)
}

/// Seed from a battery of `ell` mutually unbiased bases of `H^k`:
/// `sqrt(k)(A^* A - I) + I` for the concatenation `A`.
pub fn lift_seed_from_mubs(m: &MubBattery) -> Result<LiftSeed> {
    let a = m.concat();
    let n = a.cols();
    let s = sqrt(m.k as f64);
    let eye = Mat::identity(m.field, n);
    let c = a.adjoint().matmul(&a).sub(&eye).scale(re(s)).add(&eye);
    let expected = s * (m.ell() as f64 - 1.0) + 1.0;
    LiftSeed::certified(m.field, c, expected)
}

/// Seed from a Steiner ETF synthesis matrix `B` with `B^* B` of constant
/// diagonal `r`: the seed is `B^* B - (r - 1) I`.
pub fn lift_seed_from_steiner(b: &Mat, ell: usize, r: usize) -> Result<LiftSeed> {
    let gram = b.adjoint().matmul(b);
    let n = gram.rows();
    for i in 0..n {
        if (gram.get(i, i).re - r as f64).abs() > 1e-9 {
            return Err(Error::InvalidEtf);
        }
    }
    let c = gram.sub(&Mat::identity(b.field, n).scale(re(r as f64 - 1.0)));
    let expected = (ell * (r + 1)) as f64 - r as f64 + 1.0;
    LiftSeed::certified(b.field, c, expected)
}

/// Lift a seed to a `(d+k) x (d+k)` Gram system with coherence
/// `eps = 1/(b*lambda - 1)`, where `b = (d+k)/n`.
///
/// Requires `d = -k (mod n)` and `mult >= k`; the Gram matrix is
/// `(1+eps) I - eps (C (x) J_b)`.
pub fn kronecker_lift(seed: &LiftSeed, d: usize, k: usize) -> Result<GramSystem> {
    let n = seed.size();
    if !(d + k).is_multiple_of(n) {
        return Err(Error::CongruenceViolated { d, k, modulus: n });
    }
    let b = (d + k) / n;
    if seed.mult < k {
        return Err(Error::RankExceedsD {
            rank: d + k - seed.mult,
            d,
        });
    }
    let eps = 1.0 / (b as f64 * seed.lambda - 1.0);
    let ones = Mat::ones(seed.field, b);
    let gram = Mat::identity(seed.field, d + k)
        .scale(re(1.0 + eps))
        .sub(&seed.c.kron(&ones).scale(re(eps)));
    GramSystem::new(seed.field, d, k, gram)
}

/// The coherence the lift achieves for these parameters, without building it.
pub fn lift_coherence(lambda: f64, n: usize, d: usize, k: usize) -> Result<f64> {
    if !(d + k).is_multiple_of(n) {
        return Err(Error::CongruenceViolated { d, k, modulus: n });
    }
    let b = ((d + k) / n) as f64;
    Ok(1.0 / (b * lambda - 1.0))
}
