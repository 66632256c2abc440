use nalgebra::Vector4;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{CMat4, GammaBasis};
use crate::error::{Error, Result};
use crate::minkowski::Vec3;

const UNIT_TOL: f64 = 1e-12;

/// The eight real parameters that replace the four complex spinor
/// components, plus the constant unit vector `z` of the projector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinorParams {
    pub amplitude: f64,
    pub kappa: f64,
    pub phi: f64,
    /// Rapidity vector; its norm is the rapidity, its direction the boost axis.
    pub eta: Vec3,
    pub n: Vec3,
    pub z: Vec3,
}

impl SpinorParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.amplitude >= 0.0) {
            return Err(Error::domain("amplitude", format!("A = {} must be >= 0", self.amplitude)));
        }
        let nn = self.n.norm();
        if (nn - 1.0).abs() > UNIT_TOL {
            return Err(Error::NonUnit { name: "n", norm: nn });
        }
        let zn = self.z.norm();
        if (zn - 1.0).abs() > UNIT_TOL {
            return Err(Error::NonUnit { name: "z", norm: zn });
        }
        Ok(())
    }

    pub fn rapidity(&self) -> f64 {
        self.eta.norm()
    }

    /// Unit boost direction, `None` at zero rapidity.
    pub fn boost_direction(&self) -> Option<Vec3> {
        let e = self.eta.norm();
        (e > 0.0).then(|| self.eta / e)
    }

    /// Spin direction in the rest frame: `xi = 2 n (n.z) - z`.
    pub fn xi(&self) -> Vec3 {
        2.0 * self.n * self.n.dot(&self.z) - self.z
    }
}

/// Spinor stored as the single non-trivial column of its matrix form: the
/// matrix is `psi u^*`, where `u` spans the range of the projector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    pub components: Vector4<Complex64>,
}

impl Spinor {
    /// Rebuild the 4x4 matrix form `psi u^*`.
    pub fn matrix(&self, g: &GammaBasis) -> CMat4 {
        self.components * g.pi_column().adjoint()
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `A exp(i phi + gamma5 kappa / 2) exp(-(i/2) gamma5 sigma.eta) exp((i pi/2) sigma.n)`
/// as a 4x4 matrix, using the half-angle closed forms.
pub fn spinor_operator(p: &SpinorParams, g: &GammaBasis) -> CMat4 {
    let id = CMat4::identity();
    let i = Complex64::new(0.0, 1.0);
    let phase = Complex64::from_polar(1.0, p.phi);
    // gamma5^2 = -1
    let e1 = (id * re((0.5 * p.kappa).cos()) + g.gamma5 * re((0.5 * p.kappa).sin())) * phase;
    // (i gamma5 sigma.v)^2 = +1
    let e2 = match p.boost_direction() {
        Some(v) => {
            let h = 0.5 * p.rapidity();
            id * re(h.cosh()) - g.gamma5 * g.sigma_dot(&v) * (i * h.sinh())
        }
        None => id,
    };
    // exp(i pi/2 sigma.n) = i sigma.n, since (sigma.n)^2 = 1
    let e3 = g.sigma_dot(&p.n) * i;
    e1 * e2 * e3 * re(p.amplitude)
}

pub fn spinor_from_params(p: &SpinorParams, g: &GammaBasis) -> Result<Spinor> {
    p.validate()?;
    if (p.z - g.z).norm() > UNIT_TOL {
        return Err(Error::domain("z", "spinor parameters and gamma basis use different z"));
    }
    Ok(Spinor {
        components: spinor_operator(p, g) * g.pi_column(),
    })
}

/// Full matrix form `psi = M Pi`.
pub fn spinor_matrix(p: &SpinorParams, g: &GammaBasis) -> CMat4 {
    spinor_operator(p, g) * g.pi_projector
}
