//! Vector systems and their lifts: base systems (simplex, equiangular lines,
//! SICs, MUBs, Steiner ETFs) and the Kronecker lift that turns each seed into
//! a low-coherence Gram matrix of rank at most `d`.

mod best;
mod etf;
mod lift;
mod mub;
mod systems;

pub use best::{construct_best, Construction};
pub use etf::steiner_etf;
pub use lift::{
    kronecker_lift, lift_coherence, lift_seed_from_lines, lift_seed_from_mubs,
    lift_seed_from_steiner, LiftSeed,
};
pub use mub::{mub_battery, MubBattery};
pub use systems::{equiangular_system, sic_system, simplex_system, VectorSystem};
