//! Generalized Euler totient of finite groups: the number of elements whose
//! order equals the group exponent.
//!
//! Counting is generic over the [`count::Count`] trait; the crate-root
//! aliases fix it to arbitrary precision.

pub mod arith;
pub mod aut;
pub mod class_c;
pub mod closed_forms;
pub mod count;
mod error;
pub mod expr;
pub mod families;
pub mod group;
pub mod registry;
pub mod verify;

pub use error::{Error, Result};
pub use group::{AbelianType, Element, GroupSpec, MetacyclicParams, Spectrum};

/// Exact count type used by the concrete API.
pub type Natural = num_bigint::BigUint;

/// Order spectrum with arbitrary-precision counts.
pub type OrderSpectrum = Spectrum<Natural>;

/// Order spectrum with machine-word counts, for groups known to be small.
pub type SmallSpectrum = Spectrum<u64>;
