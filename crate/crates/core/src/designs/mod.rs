//! Combinatorial raw material: Hadamard matrices, Steiner systems, the binary
//! Golay code and the Seidel matrix of the 276-line two-graph.

mod golay;
mod hadamard;
#[cfg(feature = "k23")]
mod seidel;
mod steiner;

pub use golay::{golay_codewords, golay_heptads};
pub use hadamard::{fourier_hadamard, paley_hadamard, sylvester_hadamard, HadamardMatrix};
#[cfg(feature = "k23")]
pub use seidel::{seidel_276, SeidelMatrix};
pub use steiner::{bose_triples, steiner_pairs, SteinerSystem};
