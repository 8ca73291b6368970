//! Exact linear algebra built on fraction-free Gauss-Jordan elimination.
//!
//! Every intermediate quantity of the elimination is a minor of the input
//! matrix, so every division performed along the way is provably exact and
//! every entry of the reduced row echelon form can be written down as a
//! ratio of two determinants of the original data. This crate computes the
//! reduction three independent ways (closed-form determinant ratios, the
//! fraction-free recursions, and a plain rational Gauss-Jordan oracle) and
//! can cross-check them against each other at any point.
//!
//! The main entry points:
//!
//! - [`scalar`]: arbitrary-precision integers ([`ExactInt`]) and normalized
//!   fractions ([`Rational`]) with an exactness-checked division.
//! - [`matrix`]: dense matrices, submatrix/bordered-minor assembly, and two
//!   independent determinant routines.
//! - [`bareiss`]: fraction-free elimination producing the per-level minor
//!   tables.
//! - [`gauss_jordan`]: the full reduction with per-step traces and the
//!   determinant-ratio closed form for every entry.
//! - [`solve`]: generalized Cramer solving and exact matrix inversion.
//! - [`format`]: the plain-text and JSON matrix file formats.

pub mod bareiss;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod format;
pub mod gauss_jordan;
pub mod matrix;
pub mod scalar;
pub mod solve;

pub use error::Error;
pub use matrix::Matrix;
pub use scalar::{ExactInt, Rational, Scalar};
