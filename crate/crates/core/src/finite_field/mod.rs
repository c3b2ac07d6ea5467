//! Brute-force orbit enumeration over small prime fields.

pub mod field;
pub mod flags;
pub mod form;
pub mod group;
pub mod lemma;
pub mod linalg;
pub mod orbits;
pub mod rank;

pub use field::PrimeField;
pub use flags::{enumerate_flags, expected_flag_count, FlagOverGF, FlagVariety};
pub use form::StandardForm;
pub use group::{alternate_generators, closure_order, group_generators};
pub use lemma::{embed_flag, lemma_key_check, Counterexample, LemmaOutcome};
pub use linalg::{Matrix, SubspaceRref};
pub use orbits::{
    count_orbits, enumerate_orbits, OrbitPartition, OrbitStrategy, OrbitSummary, ProductSpace,
    DEFAULT_BUDGET,
};
pub use rank::rank_matrix;
