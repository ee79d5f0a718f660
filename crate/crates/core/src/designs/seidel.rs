use alloc::vec::Vec;

use super::golay::golay_heptads;
use crate::eig::hermitian_eig;
use crate::mat::{FieldTag, Mat};
use crate::scalar::re;
use crate::{Error, Result};

/// Real symmetric matrix with zero diagonal and unimodular off-diagonal
/// entries; carrier for large equiangular-line systems via `I + beta S`.
#[derive(Debug, Clone)]
pub struct SeidelMatrix {
    pub order: usize,
    pub mat: Mat,
}

/// The Seidel matrix of the regular two-graph on 276 vertices.
///
/// Vertices are the 23 points and 253 heptads of S(4, 7, 23). The sign rule
/// is not fixed a priori: the eight candidate rules (point-point constant,
/// point-block by membership, block-block by intersection size 1 or 3) are
/// searched, and the unique rule whose spectrum is {55 (x23), -5 (x253)}
/// within 1e-6 is selected. The spectrum is a complete certificate, so no
/// citation-specific adjacency convention is needed.
pub fn seidel_276() -> Result<SeidelMatrix> {
    let heptads = golay_heptads();
    let n = 276usize;
    // precompute membership bitmasks for the block-block intersection sizes
    let masks: Vec<u32> = heptads
        .blocks
        .iter()
        .map(|b| b.iter().fold(0u32, |m, &p| m | (1 << p)))
        .collect();

    for rule in 0..8u8 {
        let pp = if rule & 1 != 0 { 1.0 } else { -1.0 };
        let pb_member = if rule & 2 != 0 { 1.0 } else { -1.0 };
        let bb_meet3 = if rule & 4 != 0 { 1.0 } else { -1.0 };
        let s = Mat::from_fn(FieldTag::Real, n, n, |i, j| {
            if i == j {
                return re(0.0);
            }
            let v = match (i < 23, j < 23) {
                (true, true) => pp,
                (true, false) => {
                    if masks[j - 23] & (1 << i) != 0 {
                        pb_member
                    } else {
                        -pb_member
                    }
                }
                (false, true) => {
                    if masks[i - 23] & (1 << j) != 0 {
                        pb_member
                    } else {
                        -pb_member
                    }
                }
                (false, false) => {
                    let meet = (masks[i - 23] & masks[j - 23]).count_ones();
                    if meet == 3 {
                        bb_meet3
                    } else {
                        -bb_meet3
                    }
                }
            };
            re(v)
        });
        // cheap filter: the target spectrum satisfies (S - 55 I)(S + 5 I) = 0
        let quad = s
            .matmul(&s)
            .sub(&s.scale(re(50.0)))
            .sub(&Mat::identity(FieldTag::Real, n).scale(re(275.0)));
        if quad.frobenius_norm() > 1e-6 * (n as f64) {
            continue;
        }
        let dec = hermitian_eig(&s)?;
        let low = dec.eigenvalues.iter().filter(|&&l| (l + 5.0).abs() <= 1e-6).count();
        let high = dec.eigenvalues.iter().filter(|&&l| (l - 55.0).abs() <= 1e-6).count();
        if low == 253 && high == 23 {
            return Ok(SeidelMatrix { order: n, mat: s });
        }
    }
    Err(Error::NoValidRuleFound)
}
