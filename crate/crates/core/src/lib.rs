//! Exact-arithmetic Lie-theoretic machinery for parabolic model geometries and
//! Hopf-manifold classification.
//!
//! The crate builds finite root systems with exact rational inner products,
//! Chevalley bases with integer structure constants, parabolic decompositions
//! with the δ-weight and Langlands dimension split, the affine action
//! normalizing parabolic torsion, and the contraction-spectrum / resonance
//! machinery that decides which Hopf manifolds carry holomorphic affine and
//! parabolic structures.
//!
//! All algebraic computations use arbitrary-precision rationals; identities
//! are checked as exact equalities, never within a tolerance. Floating point
//! enters only where eigenvalues are supplied as floats, in which case
//! resonance relations are compared in log form within `1e-9`.

pub mod chevalley;
pub mod hopf;
pub mod parabolic;
pub mod rat;
pub mod rootsys;
pub mod verify;

pub use rat::{CRat, Rat};
pub use rootsys::{DynkinSpec, Family, Root, RootSystem};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in a spec string; `pos` is a byte offset into the input.
    #[error("parse error at position {pos}: {msg} (offending token {token:?})")]
    Parse { pos: usize, token: String, msg: String },

    /// Family/rank combination outside the allowed range.
    #[error("invalid Dynkin component {component}: {msg}")]
    InvalidComponent { component: String, msg: String },

    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a root of this system: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("root string undefined for alpha = ±beta")]
    DegenerateRootString,

    #[error("operands belong to different algebras ({left} vs {right})")]
    MixedAlgebra { left: String, right: String },

    #[error("mismatched root systems ({left} vs {right})")]
    MismatchedRootSystem { left: String, right: String },

    #[error("crossed node {node} out of range 1..={rank}")]
    CrossedNodeOutOfRange { node: usize, rank: usize },

    #[error("basis sets do not partition the basis (index {index})")]
    NotAPartition { index: usize },

    #[error("subalgebra part not closed under bracket: [{left}, {right}] leaves it")]
    NotASubalgebra { left: String, right: String },

    #[error("split is not reductive: [{left}, {right}] leaves the complement")]
    NonReductiveSplit { left: String, right: String },

    #[error("torsion vector support does not match the noncompact negative roots")]
    BadTorsionSupport,

    #[error("parabolic has no noncompact positive roots")]
    DegenerateParabolic,

    #[error("parabolic is not effective: component {component} is entirely compact")]
    NotEffective { component: usize },

    #[error("eigenvalue {index} has modulus >= 1: not a strict contraction")]
    NotContracting { index: usize },

    #[error("eigenvalue {index} is zero: not invertible")]
    ZeroEigenvalue { index: usize },

    #[error("max_terms must be at least 2, got {0}")]
    MaxTermsTooSmall(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
