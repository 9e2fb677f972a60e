//! Lattices: presentation, classification, invariants and standard forms.

pub mod classify;
pub mod invariants;
pub mod moves;
pub mod spec;
pub mod standard;

pub use classify::{abelianization_presentation, abelianization_type, classify_presentation, TypeTag};
pub use invariants::{invariants, InvariantBundle};
pub use moves::Move;
pub use spec::{kappa_of_lambda, order_of_lambda, GeneratorData, LatticeError, LatticeSpec};
pub use standard::{analyze, fd_reduce, standardize, Analysis, ChainStep, StandardDescriptor};
