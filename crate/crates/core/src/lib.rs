//! Exact generalized Stirling, Lah, Whitney and Dowling numbers.
//!
//! Every family is computed by at least two independent routes (a recurrence,
//! a defining change-of-basis relation, an explicit formula, or brute-force
//! enumeration), and the [`verify`] registry checks them against each other.

pub mod basis;
pub mod catalog;
pub mod classic;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod oracle;
pub mod rnumbers;
pub mod tables;
pub mod triangle;
pub mod unified;
pub mod verify;
pub mod whitney;

pub use error::{Error, Result};
pub use triangle::{CoeffMatrix, Family, Params, Triangle};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Exact rational in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;
