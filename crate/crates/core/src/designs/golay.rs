use alloc::vec::Vec;

use super::steiner::SteinerSystem;

/// Generator polynomial of the cyclic [23, 12] binary Golay code,
/// `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1`, bit i = coefficient of `x^i`.
const GOLAY_GEN: u32 = 0b1100_0111_0101;

/// All 4096 codewords of the cyclic [23, 12] Golay code as 23-bit masks.
pub fn golay_codewords() -> Vec<u32> {
    let rows: Vec<u32> = (0..12).map(|i| GOLAY_GEN << i).collect();
    let mut words = Vec::with_capacity(1 << 12);
    for m in 0u32..(1 << 12) {
        let mut w = 0u32;
        for (i, row) in rows.iter().enumerate() {
            if m & (1 << i) != 0 {
                w ^= row;
            }
        }
        words.push(w);
    }
    words
}

/// The 253 heptads of the Steiner system S(4, 7, 23), presented as a 2-design
/// record on 23 points.
///
/// The heptads are the weight-7 codewords of the cyclic Golay code; these are
/// exactly the octads of the extended [24, 12, 8] code through the parity
/// coordinate, with that coordinate deleted. The returned record carries the
/// block list; pair/degree structure is *not* that of a 2-Steiner system
/// (every pair lies in 21 heptads), so validation happens here rather than
/// through `SteinerSystem::validated`.
pub fn golay_heptads() -> SteinerSystem {
    let blocks: Vec<Vec<usize>> = golay_codewords()
        .iter()
        .filter(|w| w.count_ones() == 7)
        .map(|w| (0..23).filter(|i| w & (1 << i) != 0).collect())
        .collect();
    assert_eq!(blocks.len(), 253, "heptad count");
    SteinerSystem {
        n: 23,
        ell: 7,
        blocks,
        r: 77,
        k: 253,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_enumerator() {
        // extended code: weights {0, 8, 12, 16, 24} with counts
        // {1, 759, 2576, 759, 1}; minimum weight of the cyclic code is 7
        let mut counts = [0usize; 25];
        for w in golay_codewords() {
            let parity = w.count_ones() % 2;
            counts[(w.count_ones() + parity) as usize] += 1;
        }
        assert_eq!(counts[0], 1);
        assert_eq!(counts[8], 759);
        assert_eq!(counts[12], 2576);
        assert_eq!(counts[16], 759);
        assert_eq!(counts[24], 1);
        let min_w = golay_codewords()
            .iter()
            .filter(|&&w| w != 0)
            .map(|w| w.count_ones())
            .min()
            .unwrap();
        assert_eq!(min_w, 7);
    }

    #[test]
    fn heptad_counts_and_degrees() {
        let h = golay_heptads();
        assert_eq!(h.blocks.len(), 253);
        for p in 0..23 {
            assert_eq!(h.blocks_through(p).len(), 77, "point {p}");
        }
    }

    #[test]
    fn four_subsets_covered_once() {
        let h = golay_heptads();
        // deterministic sample of 500 4-subsets via a simple LCG
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..500 {
            let mut pts = [0usize; 4];
            let mut filled = 0;
            while filled < 4 {
                let p = next() % 23;
                if !pts[..filled].contains(&p) {
                    pts[filled] = p;
                    filled += 1;
                }
            }
            let covering = h
                .blocks
                .iter()
                .filter(|b| pts.iter().all(|p| b.contains(p)))
                .count();
            assert_eq!(covering, 1, "4-subset {pts:?}");
        }
    }
}
