//! Finiteness of orbits on products of flag ind-varieties of `GL(∞)`,
//! `Sp(∞)` and `O(∞)`.
//!
//! Parabolic subgroups are described by block-dimension signatures. The
//! [`classifier`] decides finiteness; [`truncation`], [`orbit_combinatorics`]
//! and [`finite_field`] check the answer on finite-dimensional pieces.

pub mod classifier;
pub mod cli;
pub mod error;
pub mod finite_field;
pub mod flag_model;
pub mod orbit_combinatorics;
pub mod truncation;

pub use classifier::{classify, Reason, Verdict, Witness};
pub use error::Error;
pub use flag_model::{
    Block, GeneralizedFlagDescriptor, LambdaProfile, LieType, ParabolicSignature,
};
pub use truncation::{truncate, EmbeddingPlan, TruncatedFlagShape, TruncationPolicy};
