//! Two equal masses in established rotation: closed-form worldlines and a
//! projected fourth-order integrator for the constrained equations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{dot, eps_free, FourVec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotatorParams {
    pub m0: f64,
    /// Half the separation of the particles.
    pub a: f64,
    /// Total energy in the centre-of-mass frame.
    pub p0: f64,
    pub phase: f64,
    pub c: f64,
    pub hbar: f64,
}

impl RotatorParams {
    pub fn new(m0: f64, a: f64, p0: f64) -> Result<Self> {
        let p = RotatorParams {
            m0,
            a,
            p0,
            phase: 0.0,
            c: 1.0,
            hbar: 1.0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (what, v) in [("m0", self.m0), ("a", self.a), ("c", self.c), ("hbar", self.hbar)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(what, format!("{v} must be positive")));
            }
        }
        if !(self.p0 >= 2.0 * self.m0) {
            return Err(Error::SubThreshold {
                p0: self.p0,
                threshold: 2.0 * self.m0,
            });
        }
        Ok(())
    }

    /// Angular frequency in the evolution parameter.
    pub fn omega(&self) -> f64 {
        (self.p0 * self.p0 - 4.0 * self.m0 * self.m0).sqrt() / (4.0 * self.m0 * self.a)
    }

    /// Angular frequency in coordinate time.
    pub fn omega0(&self) -> f64 {
        -(self.p0 * self.p0 - 4.0 * self.m0 * self.m0).sqrt() / (self.a * self.p0)
    }
}

/// Centre `X`, relative coordinate `x` (half the separation), relative
/// momentum `p` and total momentum `P`, all with upper indices; the gauge
/// variable `beta` and the multipliers `nu`, `mu_dot`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotatorState {
    pub tau: f64,
    #[serde(rename = "X")]
    pub big_x: FourVec,
    pub x: FourVec,
    pub p: FourVec,
    #[serde(rename = "P")]
    pub big_p: FourVec,
    pub beta: f64,
    pub nu: f64,
    pub mu_dot: f64,
}

impl RotatorState {
    pub fn particles(&self) -> (FourVec, FourVec) {
        (self.big_x + self.x, self.big_x - self.x)
    }

    /// Rate of the centre coordinate on the established branch.
    pub fn big_x_dot(&self, m0: f64) -> FourVec {
        -(self.big_p - self.x * self.nu) / (4.0 * m0)
    }

    /// Constraint monitors: `x.x + a^2`, `p.x`, `P.p`,
    /// `p.p + (P.P - 4 m0^2) + a^2 nu^2` and `Xdot.x`.
    pub fn monitors(&self, m0: f64, a: f64) -> [f64; 5] {
        let pp = dot(&self.big_p, &self.big_p);
        [
            dot(&self.x, &self.x) + a * a,
            dot(&self.p, &self.x),
            dot(&self.big_p, &self.p),
            dot(&self.p, &self.p) + (pp - 4.0 * m0 * m0) + a * a * self.nu * self.nu,
            dot(&self.big_x_dot(m0), &self.x),
        ]
    }

    /// Conserved vector `zeta_i = eps_{iklm} x^k p^l P^m`.
    pub fn zeta(&self) -> FourVec {
        eps_free(&self.x, &self.p, &self.big_p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormRotator {
    pub params: RotatorParams,
    pub omega: f64,
    pub omega0: f64,
}

pub fn closed_form_rotator(p: &RotatorParams) -> Result<ClosedFormRotator> {
    p.validate()?;
    Ok(ClosedFormRotator {
        params: *p,
        omega: p.omega(),
        omega0: p.omega0(),
    })
}

impl ClosedFormRotator {
    pub fn state(&self, tau: f64) -> RotatorState {
        let RotatorParams { m0, a, p0, phase, .. } = self.params;
        let th = self.omega * tau + phase;
        let (s, c) = th.sin_cos();
        let q = 4.0 * a * m0 * self.omega;
        RotatorState {
            tau,
            big_x: FourVec::new(-p0 * tau / (4.0 * m0), 0.0, 0.0, 0.0),
            x: FourVec::new(0.0, a * c, a * s, 0.0),
            p: FourVec::new(0.0, q * s, -q * c, 0.0),
            big_p: FourVec::new(p0, 0.0, 0.0, 0.0),
            beta: 0.0,
            nu: 0.0,
            mu_dot: 0.0,
        }
    }

    /// Coordinate time of the evolution parameter `tau`.
    pub fn time_of(&self, tau: f64) -> f64 {
        -self.params.p0 * tau / (4.0 * self.params.m0)
    }

    /// Spatial positions of both particles at coordinate time `t`.
    pub fn positions_at_time(&self, t: f64) -> (FourVec, FourVec) {
        self.state(-4.0 * self.params.m0 * t / self.params.p0).particles()
    }

    /// Period in the evolution parameter; infinite at threshold.
    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.omega
    }

    /// Speed of each particle, `a |omega0|`.
    pub fn particle_speed(&self) -> f64 {
        self.params.a * self.omega0.abs()
    }
}

/// One integrated sample with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotatorSample {
    pub state: RotatorState,
    pub monitors: [f64; 5],
    pub zeta: FourVec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RotatorTrajectory {
    pub samples: Vec<RotatorSample>,
    /// Largest constraint violation seen before any projection.
    pub max_pre_projection_drift: f64,
}

impl RotatorTrajectory {
    pub fn max_monitor(&self) -> f64 {
        self.samples
            .iter()
            .flat_map(|s| s.monitors)
            .fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn zeta_drift(&self) -> f64 {
        let z0 = self.samples[0].zeta;
        let scale = z0.amax().max(f64::MIN_POSITIVE);
        self.samples
            .iter()
            .map(|s| (s.zeta - z0).amax() / scale)
            .fold(0.0, f64::max)
    }

    pub fn max_multiplier(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.state.nu.abs().max(s.state.beta.abs()))
            .fold(0.0, f64::max)
    }
}

pub const STABILITY_LIMIT: f64 = 0.1;
pub const DRIFT_LIMIT: f64 = 1e-6;

type Phase = (FourVec, FourVec, FourVec);

fn rhs(y: &Phase, big_p: &FourVec, m0: f64, a: f64) -> Phase {
    let (_, x, p) = y;
    let nu = -dot(big_p, x) / (a * a);
    let pp = dot(big_p, big_p);
    let xd_big = -(big_p - x * nu) / (4.0 * m0);
    let xd = -p / (4.0 * m0);
    let pd = -x * ((4.0 * m0 * m0 - pp) / (4.0 * m0 * a * a)) - big_p * (nu / (4.0 * m0));
    (xd_big, xd, pd)
}

fn axpy(y: &Phase, h: f64, k: &Phase) -> Phase {
    (y.0 + k.0 * h, y.1 + k.1 * h, y.2 + k.2 * h)
}

fn violation(x: &FourVec, p: &FourVec, big_p: &FourVec, a: f64) -> f64 {
    let scale = a * a.max(p.amax()).max(big_p.amax());
    ((dot(x, x) + a * a).abs() / (a * a))
        .max(dot(p, x).abs() / scale)
        .max(dot(big_p, p).abs() / (big_p.amax() * p.amax()).max(f64::MIN_POSITIVE))
}

fn project(x: &mut FourVec, p: &mut FourVec, big_p: &FourVec, a: f64) {
    let pp = dot(big_p, big_p);
    *x -= big_p * (dot(big_p, x) / pp);
    *x *= a / (-dot(x, x)).sqrt();
    *p -= big_p * (dot(big_p, p) / pp);
    *p -= *x * (dot(p, x) / dot(x, x));
}

fn check_initial(s: &RotatorState, m0: f64, a: f64) -> Result<()> {
    let worst = s.monitors(m0, a).iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let scale = 1.0f64.max(dot(&s.big_p, &s.big_p));
    if worst > 1e-10 * scale || s.beta.abs() > 1e-10 {
        return Err(Error::Consistency {
            what: "initial rotator state constraints",
            residual: worst.max(s.beta.abs()),
        });
    }
    Ok(())
}

/// Integrates the established-motion equations (`beta = 0`, `nu` from the
/// constraint `P.x = 0`) with classical Runge-Kutta and a projection back
/// onto the constraint surface after every step.
pub fn integrate_rotator(
    params: &RotatorParams,
    initial: &RotatorState,
    steps: usize,
    dt: f64,
) -> Result<RotatorTrajectory> {
    params.validate()?;
    let (m0, a) = (params.m0, params.a);
    check_initial(initial, m0, a)?;
    let big_p = initial.big_p;
    let pp = dot(&big_p, &big_p);
    let omega = (pp - 4.0 * m0 * m0).max(0.0).sqrt() / (4.0 * m0 * a);
    if omega * dt.abs() >= STABILITY_LIMIT {
        return Err(Error::Stability {
            omega_dt: omega * dt.abs(),
            limit: STABILITY_LIMIT,
        });
    }

    let sample = |tau: f64, y: &Phase| {
        let state = RotatorState {
            tau,
            big_x: y.0,
            x: y.1,
            p: y.2,
            big_p,
            beta: 0.0,
            nu: -dot(&big_p, &y.1) / (a * a),
            mu_dot: 0.0,
        };
        RotatorSample {
            monitors: state.monitors(m0, a),
            zeta: state.zeta(),
            state,
        }
    };

    let mut y: Phase = (initial.big_x, initial.x, initial.p);
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(sample(initial.tau, &y));
    let mut max_drift = 0.0f64;
    for step in 1..=steps {
        let k1 = rhs(&y, &big_p, m0, a);
        let k2 = rhs(&axpy(&y, 0.5 * dt, &k1), &big_p, m0, a);
        let k3 = rhs(&axpy(&y, 0.5 * dt, &k2), &big_p, m0, a);
        let k4 = rhs(&axpy(&y, dt, &k3), &big_p, m0, a);
        let mut next = y;
        for (k, w) in [(&k1, 1.0), (&k2, 2.0), (&k3, 2.0), (&k4, 1.0)] {
            next = axpy(&next, dt * w / 6.0, k);
        }
        let drift = violation(&next.1, &next.2, &big_p, a);
        max_drift = max_drift.max(drift);
        if drift > DRIFT_LIMIT {
            return Err(Error::StepSize {
                drift,
                limit: DRIFT_LIMIT,
                step,
            });
        }
        project(&mut next.1, &mut next.2, &big_p, a);
        y = next;
        samples.push(sample(initial.tau + dt * step as f64, &y));
    }
    Ok(RotatorTrajectory {
        samples,
        max_pre_projection_drift: max_drift,
    })
}
