//! Exact scalar field ℚ(i) and dense exact linear algebra.
//!
//! Every computation in this crate runs over the Gaussian rationals: structure
//! constants of the algebras in scope live in {0, ±1, ±i, ±1/2, ...} and sign
//! errors are the dominant failure mode, so there is no floating point anywhere.
//! Row reduction uses a fixed pivot rule (first nonzero entry in column order)
//! and canonical solution representatives (free variables set to zero) so that
//! all downstream outputs are reproducible bit for bit.

mod matrix;
mod scalar;

pub use matrix::ExactMatrix;
pub use scalar::{GaussianScalar, Rational};
