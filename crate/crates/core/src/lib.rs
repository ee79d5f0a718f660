//! Near-orthogonal systems of `d+k` unit vectors in `R^d` and `C^d`.
//!
//! The crate constructs vector systems whose pairwise inner products are as
//! small as possible, evaluates the known closed-form lower bounds on the
//! achievable coherence, and exposes everything a verifier needs to check a
//! Gram matrix against those bounds.
//!
//! The crate is `no_std` (alloc required); all IO, file formats and the CLI
//! live in the companion `coherence-forge` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod designs;
pub mod eig;
pub mod error;
pub mod gram;
pub mod mat;
pub mod measures;
pub mod packings;
pub mod scalar;

pub use error::Error;
pub use mat::{FieldTag, Mat};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
