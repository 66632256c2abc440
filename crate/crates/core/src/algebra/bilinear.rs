use serde::{Deserialize, Serialize};

use super::gamma::GammaBasis;
use super::spinor::{Spinor, SpinorParams};
use crate::error::{Error, Result};
use crate::minkowski::{dot, four, spatial, FourVec, Vec3};

/// Imaginary parts above this are treated as an inconsistent spinor/basis pair.
pub const IMAG_TOL: f64 = 1e-8;

/// Threshold on `1 + xi.z` below which the spin direction is antipodal to z.
pub const ANTIPODAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bilinears {
    pub scalar: f64,
    pub j: FourVec,
    pub s: FourVec,
    pub rho: f64,
}

impl Bilinears {
    /// `S.S + j.j`, zero for bilinears of a genuine spinor.
    pub fn norm_identity(&self) -> f64 {
        dot(&self.s, &self.s) + dot(&self.j, &self.j)
    }

    /// `j.S`, zero for bilinears of a genuine spinor.
    pub fn orthogonality(&self) -> f64 {
        dot(&self.j, &self.s)
    }
}

/// Bilinears by direct matrix algebra with `psibar = psi^* gamma^0`.
pub fn bilinears_matrix(s: &Spinor, g: &GammaBasis) -> Result<Bilinears> {
    let psi = s.components;
    let bar = psi.adjoint() * g.gamma[0];
    let i = num_complex::Complex64::new(0.0, 1.0);

    let mut worst = 0.0f64;
    let mut take = |z: num_complex::Complex64| {
        worst = worst.max(z.im.abs());
        z.re
    };
    let scalar = take((bar * psi)[(0, 0)]);
    let mut j = FourVec::zeros();
    let mut sv = FourVec::zeros();
    for l in 0..4 {
        j[l] = take((bar * g.gamma[l] * psi)[(0, 0)]);
        sv[l] = take((bar * g.gamma5 * g.gamma[l] * psi)[(0, 0)] * i);
    }
    if worst > IMAG_TOL {
        return Err(Error::Consistency {
            what: "imaginary part of bilinear",
            residual: worst,
        });
    }
    let jj = dot(&j, &j);
    Ok(Bilinears {
        scalar,
        j,
        s: sv,
        rho: jj.max(0.0).sqrt(),
    })
}

/// Bilinears from the hydrodynamic parameters in closed form.
pub fn bilinears_closed_form(p: &SpinorParams) -> Bilinears {
    let a2 = p.amplitude * p.amplitude;
    let xi = p.xi();
    let eta = p.rapidity();
    let (j, s) = match p.boost_direction() {
        Some(v) => {
            let vx = v.dot(&xi);
            let j = four(a2 * eta.cosh(), &(a2 * eta.sinh() * v));
            let s = four(a2 * eta.sinh() * vx, &(a2 * (xi + (eta.cosh() - 1.0) * vx * v)));
            (j, s)
        }
        None => (FourVec::new(a2, 0.0, 0.0, 0.0), four(0.0, &(a2 * xi))),
    };
    Bilinears {
        scalar: a2 * p.kappa.cos(),
        j,
        s,
        rho: a2,
    }
}

/// Rest-frame spin direction recovered from (j, S).
pub fn xi_from_bilinears(b: &Bilinears) -> Result<Vec3> {
    let jj = dot(&b.j, &b.j);
    let scale = b.j[0].abs().max(1.0);
    if !(jj > 1e-24 * scale * scale) || b.j[0] <= 0.0 {
        return Err(Error::NonTimelikeFlux { jj });
    }
    let rho = jj.sqrt();
    let jv = spatial(&b.j);
    let sv = spatial(&b.s);
    Ok((sv - jv * (b.s[0] / (b.j[0] + rho))) / rho)
}

/// Inverse of [`xi_from_bilinears`]: the spin pseudovector for flux `j` and direction `xi`.
pub fn spin_from_xi(j: &FourVec, xi: &Vec3) -> Result<FourVec> {
    let jj = dot(j, j);
    if !(jj > 0.0) || j[0] <= 0.0 {
        return Err(Error::NonTimelikeFlux { jj });
    }
    let rho = jj.sqrt();
    let jv = spatial(j);
    let jxi = jv.dot(xi);
    Ok(four(jxi, &(rho * xi + jv * (jxi / (rho + j[0])))))
}

/// `n = (xi + z) / sqrt(2 (1 + xi.z))`, the half-way rotation axis.
pub fn n_from_xi(xi: &Vec3, z: &Vec3) -> Result<Vec3> {
    let d = 1.0 + xi.dot(z);
    if d < ANTIPODAL_TOL {
        return Err(Error::AntipodalSpin { value: d });
    }
    Ok((xi + z) / (2.0 * d).sqrt())
}
