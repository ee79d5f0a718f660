use alloc::vec::Vec;

use crate::{Error, Result};

/// A `(2, ell, n)` Steiner system: `ell`-subsets of `[n]` covering every pair
/// exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSystem {
    pub n: usize,
    pub ell: usize,
    pub blocks: Vec<Vec<usize>>,
    /// point degree `(n-1)/(ell-1)`
    pub r: usize,
    /// block count `n(n-1)/(ell(ell-1))`
    pub k: usize,
}

impl SteinerSystem {
    /// Builds the record and exhaustively checks pair coverage and degrees.
    pub fn validated(n: usize, ell: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let k = n * (n - 1) / (ell * (ell - 1));
        let r = (n - 1) / (ell - 1);
        if blocks.len() != k {
            return Err(Error::InconsistentDesignParameters);
        }
        let mut pair_count = alloc::vec![0usize; n * n];
        let mut degree = alloc::vec![0usize; n];
        for block in &blocks {
            if block.len() != ell {
                return Err(Error::InconsistentDesignParameters);
            }
            for (a, &p) in block.iter().enumerate() {
                degree[p] += 1;
                for &q in &block[a + 1..] {
                    pair_count[p * n + q] += 1;
                    pair_count[q * n + p] += 1;
                }
            }
        }
        for p in 0..n {
            if degree[p] != r {
                return Err(Error::InconsistentDesignParameters);
            }
            for q in 0..n {
                if p != q && pair_count[p * n + q] != 1 {
                    return Err(Error::InconsistentDesignParameters);
                }
            }
        }
        Ok(SteinerSystem {
            n,
            ell,
            blocks,
            r,
            k,
        })
    }

    /// Blocks incident to a point, in order.
    pub fn blocks_through(&self, point: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].contains(&point))
            .collect()
    }
}

/// The trivial `(2, 2, n)` system: all pairs.
pub fn steiner_pairs(n: usize) -> SteinerSystem {
    let mut blocks = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            blocks.push(alloc::vec![i, j]);
        }
    }
    SteinerSystem::validated(n, 2, blocks).expect("pair system is exact")
}

/// Bose construction of a `(2, 3, n)` Steiner triple system for `n = 3 (mod 6)`.
///
/// Points are `Z_m x {0, 1, 2}` with `m = n/3` odd; point `(i, c)` is encoded
/// as `i + c*m`.
pub fn bose_triples(n: usize) -> Result<SteinerSystem> {
    if n % 6 != 3 {
        return Err(Error::WrongResidueClass {
            value: n as u64,
            residue: 3,
            modulus: 6,
        });
    }
    let m = n / 3;
    // inverse of 2 mod m (m odd)
    let half = |x: usize| -> usize { (x * (m + 1) / 2) % m };
    let mut blocks = Vec::new();
    for i in 0..m {
        blocks.push(alloc::vec![i, i + m, i + 2 * m]);
    }
    for c in 0..3usize {
        let next = (c + 1) % 3;
        for i in 0..m {
            for j in (i + 1)..m {
                let mid = half(i + j);
                blocks.push(alloc::vec![i + c * m, j + c * m, mid + next * m]);
            }
        }
    }
    SteinerSystem::validated(n, 3, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_small() {
        let s3 = steiner_pairs(3);
        assert_eq!(s3.blocks.len(), 3);
        assert_eq!(s3.r, 2);
        let s4 = steiner_pairs(4);
        assert_eq!(s4.blocks.len(), 6);
        assert_eq!(s4.r, 3);
        // validated() runs the exhaustive pair-coverage check
        let s10 = steiner_pairs(10);
        assert_eq!(s10.blocks.len(), 45);
    }

    #[test]
    fn bose_small() {
        let s9 = bose_triples(9).unwrap();
        assert_eq!(s9.blocks.len(), 12);
        assert_eq!(s9.r, 4);
        let s15 = bose_triples(15).unwrap();
        assert_eq!(s15.blocks.len(), 35);
        assert_eq!(s15.r, 7);
        assert!(matches!(
            bose_triples(7),
            Err(Error::WrongResidueClass { .. })
        ));
    }

    #[test]
    fn blocks_through_degree() {
        let s = bose_triples(15).unwrap();
        for p in 0..15 {
            assert_eq!(s.blocks_through(p).len(), 7);
        }
    }
}
