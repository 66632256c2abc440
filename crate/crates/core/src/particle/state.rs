use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{dot, spatial, FourVec, Vec3};

/// Physical constants of the classical Dirac particle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DcParams {
    pub m: f64,
    pub hbar: f64,
    pub c: f64,
    pub z: Vec3,
    pub f: FourVec,
}

impl Default for DcParams {
    fn default() -> Self {
        DcParams {
            m: 1.0,
            hbar: 1.0,
            c: 1.0,
            z: Vec3::new(0.0, 0.0, 1.0),
            f: FourVec::new(1.0, 0.0, 0.0, 0.0),
        }
    }
}

impl DcParams {
    pub fn new(m: f64, hbar: f64) -> Result<Self> {
        let p = DcParams {
            m,
            hbar,
            ..Default::default()
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (what, v) in [("m", self.m), ("hbar", self.hbar), ("c", self.c)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(what, format!("{v} must be positive")));
            }
        }
        let zn = self.z.norm();
        if (zn - 1.0).abs() > 1e-12 {
            return Err(Error::NonUnit { name: "z", norm: zn });
        }
        let ff = dot(&self.f, &self.f);
        if (ff - 1.0).abs() > 1e-12 || self.f[0] <= 0.0 {
            return Err(Error::domain("f", format!("f.f = {ff}, must be a future unit timelike vector")));
        }
        Ok(())
    }

    /// Compton length `hbar/(m c)`.
    pub fn lambda(&self) -> f64 {
        self.hbar / (self.m * self.c)
    }

    /// `hbar/m`, the length scale of the worldline equations written with c = 1.
    pub fn lambda_natural(&self) -> f64 {
        self.hbar / self.m
    }
}

/// Worldline jet: position, velocity and acceleration with respect to the
/// evolution parameter, plus the spin direction and its rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorldlineState {
    pub tau0: f64,
    pub x: FourVec,
    pub xdot: FourVec,
    pub xddot: FourVec,
    pub xi: Vec3,
    pub xi_dot: Vec3,
    pub y: Vec3,
}

impl WorldlineState {
    pub fn new(tau0: f64, x: FourVec, xdot: FourVec, xddot: FourVec, xi: Vec3, xi_dot: Vec3) -> Result<Self> {
        let xn = xi.norm();
        if (xn - 1.0).abs() > 1e-10 {
            return Err(Error::NonUnit { name: "xi", norm: xn });
        }
        if !(1.0 + xdot[0] > 0.0) {
            return Err(Error::Singular {
                factor: "1 + xdot0",
                value: 1.0 + xdot[0],
            });
        }
        Ok(WorldlineState {
            tau0,
            x,
            xdot,
            xddot,
            xi,
            xi_dot,
            y: spatial(&xdot) / (1.0 + xdot[0]).sqrt(),
        })
    }

    /// `d y / d tau0`.
    pub fn y_dot(&self) -> Vec3 {
        let w = 1.0 + self.xdot[0];
        spatial(&self.xddot) / w.sqrt() - spatial(&self.xdot) * (0.5 * self.xddot[0] / (w * w.sqrt()))
    }

    /// `sqrt(xdot.xdot)`, one in proper-time gauge.
    pub fn speed(&self) -> Result<f64> {
        let ss = dot(&self.xdot, &self.xdot);
        if !(ss > 0.0) {
            return Err(Error::domain("velocity", format!("xdot.xdot = {ss:e} is not timelike")));
        }
        Ok(ss.sqrt())
    }
}
