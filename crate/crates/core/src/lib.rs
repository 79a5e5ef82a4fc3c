//! Exact generating-function machinery for lecture hall partitions and
//! anti-lecture hall compositions.
//!
//! The crate is organised bottom-up:
//!
//! - [`qseries`]: sparse multivariate Laurent polynomials over arbitrary
//!   precision integers, truncated by a linear grading, plus the standard
//!   q-analogs (Pochhammer symbols, Gaussian binomials, q-multinomials).
//! - [`enumerate`]: brute-force generators for every combinatorial family,
//!   partition statistics and the `(mu, r)` decompositions. These are the
//!   ground-truth oracles.
//! - [`closedform`]: constructors for every closed-form generating function,
//!   with monomial argument substitution performed at construction time.
//! - [`bijections`]: the BME map and its truncated and anti-lecture hall
//!   variants, with exhaustive desk-scale verification.
//! - [`verify`]: named identity, recurrence and theorem checks comparing two
//!   independently built series coefficient by coefficient.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bijections;
pub mod closedform;
pub mod enumerate;
mod error;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
