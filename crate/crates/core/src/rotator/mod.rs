//! Relativistic rotator: two equal masses at fixed separation in
//! established rotation, its rigidity function, and its identification with
//! the classical Dirac particle.

pub mod identify;
pub mod motion;
pub mod rigidity;

pub use identify::{dcr_to_rr, identify_dcr_rr, rr_to_dcr, Constants, DcrSide, Direction, Identification, RrSide};
pub use motion::{
    closed_form_rotator, integrate_rotator, ClosedFormRotator, RotatorParams, RotatorSample, RotatorState,
    RotatorTrajectory,
};
pub use rigidity::{mass_increase, rigidity, rigidity_bound, RigidityCurve};
