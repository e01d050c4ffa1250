//! Exact-arithmetic verification of the finite algebraic data classifying
//! low-dimensional topological field theories with reflection structure and
//! spin-statistics: fermionic groups, skeletal 2-groups, superalgebras,
//! bimodules, stellar and Frobenius structures.
//!
//! All arithmetic is exact over ℚ(i); there is no floating point anywhere.
//! Validators return [`report::CheckReport`]s with stable clause identifiers,
//! and constructors are deterministic so outputs reproduce bit for bit.

pub mod error;
pub mod exactlin;
pub mod fgroup;
pub mod fixtures;
pub mod frob;
pub mod json;
pub mod presentation;
pub mod bimod;
pub mod salg;
pub mod stellar;
pub mod twogroup;
pub mod report;
pub mod repro;

pub use error::{FtftError, Result};
pub use exactlin::{ExactMatrix, GaussianScalar, Rational};
pub use report::CheckReport;
