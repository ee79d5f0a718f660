//! Steiner equiangular tight frames.

use crate::designs::{HadamardMatrix, SteinerSystem};
use crate::mat::Mat;
use crate::{Error, Result};

/// The Steiner ETF synthesis matrix: `n(r+1)` columns in `H^k` (one group of
/// `r+1` per point), built from a `(2, ell, n)` Steiner system and a Hadamard
/// matrix of order `r + 1`.
///
/// Point `j`'s columns are supported on its `r` incident blocks; the entry at
/// block `b` (the `s`-th block through `j`) in the `h`-th column of the group
/// is `H[s+1][h]`, skipping the first row of `H`. The result `B` satisfies
/// `B^* B = r I + off-diagonal of modulus <= 1` and `B B^* = ell(r+1) I_k`.
pub fn steiner_etf(sys: &SteinerSystem, had: &HadamardMatrix) -> Result<Mat> {
    if had.order != sys.r + 1 {
        return Err(Error::OrderMismatch {
            expected: sys.r + 1,
            got: had.order,
        });
    }
    let cols = sys.n * (sys.r + 1);
    let mut b = Mat::zeros(had.field, sys.k, cols);
    for point in 0..sys.n {
        let incident = sys.blocks_through(point);
        for (s, &block) in incident.iter().enumerate() {
            for h in 0..=sys.r {
                b.set(block, point * (sys.r + 1) + h, had.mat.get(s + 1, h));
            }
        }
    }
    Ok(b)
}
