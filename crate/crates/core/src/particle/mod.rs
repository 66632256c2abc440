//! Classical Dirac particle: worldline Lagrangian, momentum, the reduced
//! equations of motion and the helical solution.

pub mod dynamics;
pub mod helix;
pub mod state;

pub use dynamics::{lagrangian_dc, lagrangian_dc_covariant, momentum, relativize, xi_equation_check, xi_rate};
pub use helix::{
    energy_relation_residual, helix_solution, invariant_mass, observables, observables_from_beta,
    observables_from_zeta, reduced_residuals, HelixSolution, Observables, ReducedResiduals,
};
pub use state::{DcParams, WorldlineState};
