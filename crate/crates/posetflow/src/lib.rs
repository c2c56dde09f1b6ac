//! Exact Sperner verification for graded weighted posets.
//!
//! The crate builds graded posets (Boolean lattices, symmetric groups under
//! refinement, partition lattices, products), solves vertex-capacitated
//! MaxFlow/MinCut and MinFlow/MaxAntichain problems exactly, checks the
//! normalized flow property rank pair by rank pair, verifies flow morphisms
//! between networks, and certifies Sperner verdicts with witness antichains.
//!
//! All arithmetic is exact. Core types are generic over an integer scalar
//! (see [`scalar::Scalar`]); the aliases below fix the default
//! arbitrary-precision instantiation used by the CLI and the file formats.

pub mod error;
pub mod families;
pub mod flownet;
pub mod gen;
pub mod morphism;
pub mod poset;
pub mod scalar;
pub mod serial;
pub mod sperner;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default exact weight scalar.
pub type Weight = num_bigint::BigInt;
/// Default exact flow value.
pub type Rational = num_rational::Ratio<Weight>;

/// Graded poset over the default scalar.
pub type Poset = poset::GradedPoset<Weight>;
/// Flow network over the default scalar.
pub type Net = flownet::Network<Weight>;
