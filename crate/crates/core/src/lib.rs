//! Exact fixed-point spaces and linear preservers on `M_n`.
//!
//! All arithmetic is over the Gaussian rationals, so ranks, kernels and
//! fixed-space dimensions are decided exactly. The crate covers:
//!
//! * dense exact linear algebra ([`Matrix`], [`rref`], [`kernel_basis`],
//!   [`inverse`], [`kron`], [`commutation_matrix`], [`Subspace`]);
//! * fixed-point spaces `F(A) = ker(A − I)` ([`fixed_space`], [`dim_fixed`]);
//! * rank-one operators `x⊗f` and the idempotent completion of a pair
//!   `x, Ax` ([`completion_idempotent`]);
//! * superoperators on `M_n` with realignment-based structure recovery
//!   ([`SuperOp`], [`preserver::classify`]);
//! * falsifiers for the fixed-space and fixed-dimension preserving
//!   conditions ([`preserver`]).

pub mod elim;
pub mod error;
pub mod fixed;
pub mod io;
pub mod matrix;
pub mod preserver;
pub mod rank_one;
pub mod sample;
pub mod scalar;
pub mod subspace;
pub mod superop;

pub use elim::{inverse, kernel_basis, rank, rref, RowEchelon};
pub use error::{Error, Result};
pub use fixed::{dim_fixed, fixed_report, fixed_space, kernel_via_fixed, FixedReport};
pub use matrix::{commutation_matrix, kron, Matrix};
pub use rank_one::{
    are_orthogonal, completion_functional, completion_idempotent, is_idempotent,
    is_rank_one_idempotent, outer, rank_one, RankOneSpec,
};
pub use sample::Sampler;
pub use scalar::{parse_scalar, GaussianRational, ScalarParseError};
pub use subspace::{subspace_equal, Subspace};
pub use superop::{rank_one_factor, realign, unrealign, SuperOp};
