use core::f64::consts::PI;

use crate::bounds::is_prime;
use crate::mat::{FieldTag, Mat};
use crate::scalar::{cis, re};
use crate::{Error, Result};

/// A matrix with unimodular entries and `H^* H = n I_n`.
#[derive(Debug, Clone)]
pub struct HadamardMatrix {
    pub field: FieldTag,
    pub order: usize,
    pub mat: Mat,
}

impl HadamardMatrix {
    fn validated(field: FieldTag, mat: Mat) -> Result<Self> {
        let n = mat.rows();
        for i in 0..n {
            for j in 0..n {
                if (crate::scalar::modulus(mat.get(i, j)) - 1.0).abs() > 1e-12 {
                    return Err(Error::InvalidEtf);
                }
            }
        }
        let defect = mat
            .adjoint()
            .matmul(&mat)
            .sub(&Mat::identity(field, n).scale(re(n as f64)))
            .frobenius_norm();
        if defect > 1e-9 * (n as f64) {
            return Err(Error::InvalidEtf);
        }
        Ok(HadamardMatrix {
            field,
            order: n,
            mat,
        })
    }
}

/// Sylvester doubling: the real Hadamard matrix of order `2^m`.
pub fn sylvester_hadamard(m: u32) -> HadamardMatrix {
    let mut h = Mat::from_real_rows(1, 1, &[1.0]);
    let block = Mat::from_real_rows(2, 2, &[1.0, 1.0, 1.0, -1.0]);
    for _ in 0..m {
        h = block.kron(&h);
    }
    HadamardMatrix::validated(FieldTag::Real, h).expect("sylvester construction is exact")
}

/// Paley type-I Hadamard matrix of order `q + 1` for a prime `q = 3 (mod 4)`.
pub fn paley_hadamard(q: u64) -> Result<HadamardMatrix> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q % 4 != 3 {
        return Err(Error::WrongResidueClass {
            value: q,
            residue: 3,
            modulus: 4,
        });
    }
    let qu = q as usize;
    // quadratic residue character chi(0) = 0, chi(square) = 1, else -1
    let mut chi = alloc::vec![-1.0f64; qu];
    chi[0] = 0.0;
    for x in 1..q {
        chi[((x * x) % q) as usize] = 1.0;
    }
    let n = qu + 1;
    // H = I + S with S = [[0, 1^T], [-1, Q]]; rows/cols 1.. indexed by GF(q)
    let h = Mat::from_fn(FieldTag::Real, n, n, |i, j| {
        let v = if i == 0 {
            1.0
        } else if j == 0 {
            -1.0
        } else {
            let a = (i - 1) as i64;
            let b = (j - 1) as i64;
            let diff = (a - b).rem_euclid(q as i64) as usize;
            if i == j {
                1.0
            } else {
                chi[diff]
            }
        };
        re(v)
    });
    HadamardMatrix::validated(FieldTag::Real, h)
}

/// The complex (Fourier) Hadamard matrix of any order: entries `omega^{jk}`.
pub fn fourier_hadamard(n: usize) -> HadamardMatrix {
    let h = Mat::from_fn(FieldTag::Complex, n, n, |j, k| {
        cis(2.0 * PI * (j * k % n) as f64 / n as f64)
    });
    HadamardMatrix::validated(FieldTag::Complex, h).expect("fourier construction is exact")
}
