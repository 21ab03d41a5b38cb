//! Exact-arithmetic workbench for a Z3 simple-current extension of the
//! tensor product of the 3-state Potts and tricritical Potts VOAs.
//!
//! The crate is organised bottom-up: scalars in Q(√6), truncated series and
//! matrices first, then the representation-theoretic layers that use them.

pub mod affine;
pub mod checks;
pub mod cocycle;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod fusion;
pub mod griess;
pub mod matrix;
pub mod minimal;
pub mod modecalc;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use series::{BiSeries, Laurent};
