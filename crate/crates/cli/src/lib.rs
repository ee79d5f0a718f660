//! Command-line companion to `coherence-core`: file formats, certificates,
//! coherence tables, and the `coherence-forge` binary surface.

pub mod certificate;
pub mod cli;
pub mod format;
pub mod table;
