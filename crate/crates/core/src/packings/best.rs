//! Best available construction for a given `(field, d, k)`.

use alloc::format;
use alloc::string::String;

use crate::bounds::{
    exact_optimal_value, largest_feasible, seed_catalog, SeedInfo, SeedKind,
};
use crate::designs::{bose_triples, paley_hadamard, steiner_pairs, sylvester_hadamard};
use crate::gram::GramSystem;
use crate::mat::{FieldTag, Mat};
use crate::packings::etf::steiner_etf;
use crate::packings::lift::{
    kronecker_lift, lift_seed_from_lines, lift_seed_from_mubs, lift_seed_from_steiner, LiftSeed,
};
use crate::packings::mub::mub_battery;
use crate::packings::systems::{equiangular_system, sic_system};
use crate::{Error, Result};

/// A realized Gram system together with how it was obtained.
#[derive(Debug, Clone)]
pub struct Construction {
    pub system: GramSystem,
    pub construction_id: String,
    /// coherence equals the proven optimum for these parameters
    pub is_exact: bool,
    /// when set, the system was built at this smaller `d'` and padded with
    /// orthonormal vectors up to `d`
    pub fallback_from: Option<usize>,
}

/// Build the lowest-coherence system the seed catalog can reach for these
/// parameters. Ties break lexicographically on the construction id so the
/// choice is deterministic.
pub fn construct_best(field: FieldTag, d: usize, k: usize) -> Result<Construction> {
    let mut chosen: Option<(f64, SeedInfo, Option<usize>)> = None;
    for seed in seed_catalog(field, k) {
        let (dp, fallback) = if (d + k).is_multiple_of(seed.n) {
            (d, None)
        } else {
            match largest_feasible(seed.n, d, k) {
                Some(dp) => (dp, Some(dp)),
                None => continue,
            }
        };
        let b = ((dp + k) / seed.n) as f64;
        let value = 1.0 / (b * seed.lambda - 1.0);
        let better = match &chosen {
            None => true,
            Some((best, info, _)) => {
                value < best - 1e-12 || ((value - best).abs() <= 1e-12 && seed.id < info.id)
            }
        };
        if better {
            chosen = Some((value, seed, fallback));
        }
    }
    let (value, seed, fallback) = chosen.ok_or(Error::NoConstructionAvailable)?;
    let dp = fallback.unwrap_or(d);
    let lift = realize_seed(&seed)?;
    let built = kronecker_lift(&lift, dp, k)?;
    let mut gram = built.gram;
    if dp < d {
        gram = gram.direct_sum(&Mat::identity(gram.field, d - dp));
    }
    gram.field = field;
    let system = GramSystem::new(field, d, k, gram)?;
    let construction_id = match fallback {
        None => seed.id.clone(),
        Some(dp) => format!("{}:fallback-from-{dp}", seed.id),
    };
    let is_exact = match exact_optimal_value(field, d, k) {
        Some(opt) => fallback.is_none() && (value - opt).abs() <= 1e-12,
        None => false,
    };
    Ok(Construction {
        system,
        construction_id,
        is_exact,
        fallback_from: fallback,
    })
}

/// Build the actual seed matrix a catalog entry describes.
fn realize_seed(seed: &SeedInfo) -> Result<LiftSeed> {
    match seed.kind {
        SeedKind::Simplex => Ok(LiftSeed {
            field: FieldTag::Real,
            c: Mat::identity(FieldTag::Real, 1),
            lambda: 1.0,
            mult: 1,
        }),
        SeedKind::Lines => lift_seed_from_lines(&equiangular_system(seed.k)?),
        SeedKind::Sic => lift_seed_from_lines(&sic_system(seed.k)?),
        SeedKind::MubComplex { ell } => {
            lift_seed_from_mubs(&mub_battery(FieldTag::Complex, seed.k)?.prefix(ell))
        }
        SeedKind::MubReal { ell } => {
            lift_seed_from_mubs(&mub_battery(FieldTag::Real, 4)?.prefix(ell))
        }
        SeedKind::Steiner { ell, n, r } => {
            let sys = match ell {
                2 => steiner_pairs(n),
                3 => bose_triples(n)?,
                _ => return Err(Error::InconsistentDesignParameters),
            };
            let had = if (r + 1).is_power_of_two() {
                sylvester_hadamard((r + 1).trailing_zeros())
            } else {
                paley_hadamard(r as u64)?
            };
            lift_seed_from_steiner(&steiner_etf(&sys, &had)?, ell, r)
        }
    }
}
