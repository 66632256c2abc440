//! Numerical laboratory for the hydrodynamic (A, kappa, phi, eta, n)
//! description of the Dirac field, the classical Dirac particle obtained by
//! dropping transversal derivatives, and the two-particle relativistic
//! rotator it is identified with.

// `!(x > 0.0)` is used on purpose so that NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod covariant;
pub mod error;
pub mod minkowski;
pub mod particle;
pub mod rotator;
pub mod verify;

pub use error::{Error, Result};
