//! Brute-force counterparts of the closed-form results: explicit generator
//! matrices, ladder operators, direct Gauss sums, Smith normal forms and
//! direct power computations.

pub mod gamma4;
pub mod gauss;
pub mod ladder;
pub mod matrix;
pub mod snf;
pub mod z0;

pub use gamma4::{gamma4_fixed_dim, gamma4_matrix, Gamma4Case};
pub use gauss::{gauss_sum, reciprocity_rhs, GaussSum};
pub use ladder::{ladder_casimir, LadderCasimir, LadderRep};
pub use matrix::{fixed_dim, DenseMatrix, FiniteOperator, GenPermMatrix, OracleError};
pub use snf::{smith_normal_form, IntMatrix, SmithNormalForm};
pub use z0::z0_solve;
