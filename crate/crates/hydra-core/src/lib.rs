//! Recursive wheel-factorization sieve built on *hydras*: finite partitions of
//! the positive integers into arithmetic progressions (*snakes*) sharing one
//! wavelength `k = ∏ p` over a set of primes `P`.
//!
//! A snake is alive when its head is coprime to `k`; alive snakes are exactly
//! the residue classes that can still contain primes beyond `P`. Splitting a
//! hydra by a new prime refines the partition and kills one descendant of each
//! alive snake, which is wheel factorization viewed as a data structure.
//!
//! Modules:
//!
//! - [`primes`] — trial-division and sieve oracles, kept independent of the
//!   hydra code so the two sides can be cross-checked.
//! - [`hydra`] — the partition structure: splitting, recursion by the next
//!   prime, selection by recursive index, snake lookup.
//! - [`metrics`] — distances between alive snakes, gap vectors and matrices,
//!   pair counting at a given even distance, density diagnostics.
//! - [`counting`] — exact big-integer counts (`k`, `k1`, `k2`) and predicted
//!   counts after a split, usable beyond the materialization budget.
//! - [`construct`] — hydras guaranteed to contain a pair at any even distance
//!   or a consecutive pair at any even gap, together with a located witness.
//!
//! The crate is `no_std` (with `alloc`); all I/O lives in companion crates.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod construct;
pub mod counting;
pub mod error;
pub mod hydra;
pub mod metrics;
pub mod primes;

pub use error::{Error, Result};
pub use hydra::{Budget, Hydra, Selector, Snake};

// Arbitrary-precision types appearing in this crate's public API.
pub use num_bigint::BigUint;
pub use num_rational::BigRational;
