//! Lattices in the oscillator group: exact classification, invariants,
//! standard forms and the decomposition of the associated right regular
//! representations, together with brute-force cross-checks.

pub mod group;
pub mod lattice;
pub mod numeric;
pub mod oracle;
pub mod spectrum;
pub mod verify;
