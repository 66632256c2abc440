//! Dirac gamma matrices, spinors built from hydrodynamic parameters, and
//! their bilinear covariants.

pub mod bilinear;
pub mod gamma;
pub mod sample;
pub mod spinor;
#[cfg(test)]
pub(crate) mod testing;

pub use bilinear::{
    bilinears_closed_form, bilinears_matrix, n_from_xi, spin_from_xi, xi_from_bilinears, Bilinears,
};
pub use gamma::{build_gamma_basis, CMat4, GammaBasis};
pub use spinor::{spinor_from_params, spinor_matrix, Spinor, SpinorParams};
