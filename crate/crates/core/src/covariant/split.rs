//! Longitudinal/transversal derivative split, the quasi-uniformity measure
//! and the effective-mass branch.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{dot, FourVec};

/// Splits a gradient (stored with upper indices) into its parts along and
/// orthogonal to the flux `j`.
pub fn split_derivative(j: &FourVec, grad: &FourVec) -> Result<(FourVec, FourVec)> {
    let jj = dot(j, j);
    if !(jj > 0.0) {
        return Err(Error::NonTimelikeFlux { jj });
    }
    let parallel = j * (dot(j, grad) / jj);
    Ok((parallel, grad - parallel))
}

/// `(hbar/m) |d_perp u| / |u|` in units with c = 1; small values mark a
/// quasi-uniform state.
pub fn quasi_uniformity(j: &FourVec, grad_u: &FourVec, u: f64, m: f64, hbar: f64) -> Result<f64> {
    let jj = dot(j, j);
    if !(jj > 0.0) {
        return Err(Error::NonTimelikeFlux { jj });
    }
    if u.abs() < 1e-300 {
        return Err(Error::Singular { factor: "u", value: u });
    }
    let (_, perp) = split_derivative(j, grad_u)?;
    // -(d_perp u).(d_perp u), nonnegative for timelike j
    let radicand = -dot(&perp, &perp);
    let scale = grad_u.norm_squared().max(1.0);
    if radicand < -1e-12 * scale {
        return Err(Error::NegativeRadicand {
            what: "transversal gradient norm",
            value: radicand,
        });
    }
    Ok(hbar / m * radicand.max(0.0).sqrt() / u.abs())
}

/// Stationarity of `m cos(kappa)` with respect to `kappa`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MassBranch {
    /// `cos kappa = +1` (minimum of the energy, stable) or `-1` (maximum).
    Stationary(f64),
    NonStationary { sin_kappa: f64 },
}

impl MassBranch {
    pub fn is_stable(&self) -> bool {
        matches!(self, MassBranch::Stationary(c) if *c > 0.0)
    }
}

/// The branch selected on the stable solution, `m_eff = +m`.
pub const STABLE_KAPPA: f64 = 0.0;

pub fn effective_mass_branch(kappa: f64) -> MassBranch {
    let s = kappa.sin();
    if s.abs() < 1e-9 {
        MassBranch::Stationary(kappa.cos().signum())
    } else {
        MassBranch::NonStationary { sin_kappa: s }
    }
}
