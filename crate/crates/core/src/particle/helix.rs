//! Closed-form helical solution with zero spatial momentum and its observables.

use serde::{Deserialize, Serialize};

use super::dynamics::{momentum, xi_rate};
use super::state::{DcParams, WorldlineState};
use crate::error::{Error, Result};
use crate::minkowski::{boost_matrix, dot, FourVec, Vec3};

/// Observable mass, helix radius, speed and angular frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Observables {
    pub m_dcr: f64,
    pub a_dcr: f64,
    pub v: f64,
    pub omega_dcr: f64,
    pub zeta: f64,
    pub beta: f64,
}

/// Observables from the integration constant `b = y^2`.
pub fn observables(b: f64, p: &DcParams) -> Result<Observables> {
    if !(b >= 0.0) {
        return Err(Error::domain("b", format!("b = {b} must be >= 0")));
    }
    let k = (b * (b + 2.0)).sqrt();
    let a_dcr = p.lambda() * (b + 1.0) * k / 2.0;
    Ok(Observables {
        m_dcr: p.m / (b + 1.0),
        a_dcr,
        v: p.c * k / (b + 1.0),
        omega_dcr: 2.0 * p.m * p.c * p.c / (p.hbar * (b + 1.0).powi(2)),
        zeta: 4.0 * a_dcr * p.m * p.c / p.hbar,
        beta: (b + 1.0).acosh(),
    })
}

/// Observables from the dimensionless radius `zeta = 4 a m c / hbar`.
pub fn observables_from_zeta(zeta: f64, p: &DcParams) -> Result<Observables> {
    if !(zeta >= 0.0) {
        return Err(Error::domain("zeta", format!("zeta = {zeta} must be >= 0")));
    }
    let r = (1.0 + zeta * zeta).sqrt() + 1.0;
    Ok(Observables {
        m_dcr: p.m * std::f64::consts::SQRT_2 / r.sqrt(),
        a_dcr: zeta * p.hbar / (4.0 * p.m * p.c),
        v: p.c * zeta / r,
        omega_dcr: 4.0 * p.m * p.c * p.c / (p.hbar * r),
        zeta,
        beta: 0.5 * zeta.asinh(),
    })
}

/// The same observables through the rapidity: `m/cosh`, `c tanh`, `2mc^2/(hbar cosh^2)`.
pub fn observables_from_beta(beta: f64, p: &DcParams) -> Observables {
    let ch = beta.cosh();
    Observables {
        m_dcr: p.m / ch,
        a_dcr: (2.0 * beta).sinh() * p.hbar / (4.0 * p.m * p.c),
        v: p.c * beta.tanh(),
        omega_dcr: 2.0 * p.m * p.c * p.c / (p.hbar * ch * ch),
        zeta: (2.0 * beta).sinh(),
        beta,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HelixSolution {
    pub b: f64,
    pub w0: f64,
    /// Angular frequency in proper time; negative for spin along +z.
    pub omega: f64,
    /// Angular frequency in coordinate time, `omega/(b+1)`.
    #[serde(rename = "Omega")]
    pub big_omega: f64,
    pub m_dcr: f64,
    pub a_dcr: f64,
    pub v: f64,
    pub omega_dcr: f64,
    pub zeta: f64,
    pub beta: f64,
    pub phase: f64,
    pub params: DcParams,
}

/// Residuals of the reduced first-order system at one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedResiduals {
    /// Vector equation for `y_dot x xi`.
    pub orbit: f64,
    /// Scalar equation for `y_dot.(y x xi)`.
    pub energy: f64,
    /// `xdot0 - (y^2 + 1)`.
    pub gauge: f64,
    /// `xi_dot` from the reduced spin equation.
    pub spin: f64,
}

impl ReducedResiduals {
    pub fn max(&self) -> f64 {
        self.orbit.max(self.energy).max(self.gauge).max(self.spin)
    }
}

/// Residuals of the reduced system for a state and energy constant `w0`.
pub fn reduced_residuals(s: &WorldlineState, w0: f64, lambda: f64) -> Result<ReducedResiduals> {
    let y = s.y;
    let yd = s.y_dot();
    let y2 = y.norm_squared();
    let g = (1.0 - w0) / (y2 + 2.0);
    let orbit = lambda * yd.cross(&(s.xi + y * (0.5 * y.dot(&s.xi)))) + y * (g - w0);
    let energy = lambda * yd.dot(&y.cross(&s.xi)) - 2.0 * (1.0 - g);
    let xi_dot = xi_rate(&s.xi, &s.xdot, &s.xddot)?;
    Ok(ReducedResiduals {
        orbit: orbit.amax(),
        energy: energy.abs(),
        gauge: (s.xdot[0] - (y2 + 1.0)).abs(),
        spin: (xi_dot - s.xi_dot).amax(),
    })
}

/// Residual of the consistency relation between `b` and `w0` obtained by
/// substituting the circular ansatz into the energy equation.
pub fn energy_relation_residual(b: f64, w0: f64) -> f64 {
    let g = (1.0 - w0) / (b + 2.0);
    -(w0 - g) * b - 2.0 * (1.0 - g)
}

pub fn helix_solution(b: f64, phase: f64, p: &DcParams) -> Result<HelixSolution> {
    p.validate()?;
    let obs = observables(b, p)?;
    let w0 = -1.0 / (b + 1.0);
    let lambda = p.lambda_natural();
    let omega = (w0 - (1.0 - w0) / (b + 2.0)) / lambda;
    Ok(HelixSolution {
        b,
        w0,
        omega,
        big_omega: omega / (b + 1.0),
        m_dcr: obs.m_dcr,
        a_dcr: obs.a_dcr,
        v: obs.v,
        omega_dcr: obs.omega_dcr,
        zeta: obs.zeta,
        beta: obs.beta,
        phase,
        params: *p,
    })
}

impl HelixSolution {
    pub fn observables(&self) -> Observables {
        Observables {
            m_dcr: self.m_dcr,
            a_dcr: self.a_dcr,
            v: self.v,
            omega_dcr: self.omega_dcr,
            zeta: self.zeta,
            beta: self.beta,
        }
    }

    /// Period in proper time (infinite for the static worldline).
    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.omega.abs()
    }

    pub fn xi(&self) -> Vec3 {
        Vec3::new(0.0, 0.0, 1.0)
    }

    /// Exact state at proper time `tau`, in units with c = 1.
    pub fn state(&self, tau: f64) -> WorldlineState {
        let k = (self.b * (self.b + 2.0)).sqrt();
        let w = self.omega;
        let th = w * tau + self.phase;
        let (s, c) = th.sin_cos();
        let x = FourVec::new((self.b + 1.0) * tau, k / w * s, -k / w * c, 0.0);
        let xdot = FourVec::new(self.b + 1.0, k * c, k * s, 0.0);
        let xddot = FourVec::new(0.0, -k * w * s, k * w * c, 0.0);
        WorldlineState::new(tau, x, xdot, xddot, self.xi(), Vec3::zeros()).expect("helix state is regular")
    }

    /// Coordinate time of proper time `tau`.
    pub fn time_of(&self, tau: f64) -> f64 {
        (self.b + 1.0) * tau / self.params.c
    }

    /// Spatial position at coordinate time `t`.
    pub fn position_at_time(&self, t: f64) -> Vec3 {
        let s = self.state(t * self.params.c / (self.b + 1.0));
        Vec3::new(s.x[1], s.x[2], s.x[3]) * self.params.lambda() / self.params.lambda_natural()
    }

    pub fn momentum_at(&self, tau: f64) -> Result<FourVec> {
        momentum(&self.state(tau), &self.params)
    }

    pub fn residuals_at(&self, tau: f64) -> Result<ReducedResiduals> {
        reduced_residuals(&self.state(tau), self.w0, self.params.lambda_natural())
    }

    /// Worldline points `x^i(tau)` seen from a frame moving with velocity `beta`.
    pub fn boosted_points(&self, taus: &[f64], beta: &Vec3) -> Result<Vec<FourVec>> {
        if !(beta.norm() < 1.0) {
            return Err(Error::domain("boost", format!("|beta| = {} must be < 1", beta.norm())));
        }
        let l = boost_matrix(beta);
        Ok(taus.iter().map(|&t| l * self.state(t).x).collect())
    }

    /// Momentum of the boosted solution: the covector `P_i` transformed with the boost.
    pub fn boosted_momentum(&self, beta: &Vec3) -> Result<FourVec> {
        if !(beta.norm() < 1.0) {
            return Err(Error::domain("boost", format!("|beta| = {} must be < 1", beta.norm())));
        }
        let p = self.momentum_at(0.0)?;
        let l = boost_matrix(beta);
        let g = nalgebra::Matrix4::from_diagonal(&FourVec::new(1.0, -1.0, -1.0, -1.0));
        Ok(g * l * g * p)
    }
}

/// Invariant mass of a momentum covector.
pub fn invariant_mass(p: &FourVec) -> f64 {
    dot(p, p).sqrt()
}
