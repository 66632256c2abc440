//! Parameter map between the classical Dirac particle and the rotator.

use serde::{Deserialize, Serialize};

use super::rigidity::{mass_increase, rigidity};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    DcrToRr,
    RrToDcr,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub hbar: f64,
    pub c: f64,
    /// Charge of each constituent.
    pub e: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            hbar: 1.0,
            c: 1.0,
            e: 1.0,
        }
    }
}

/// Classical Dirac particle side of the map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DcrSide {
    /// Mass parameter of the Lagrangian.
    pub m: f64,
    pub m_dcr: f64,
    pub omega_dcr: f64,
    pub a: f64,
    pub zeta: f64,
}

/// Rotator side of the map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RrSide {
    pub m0: f64,
    /// Total mass of the pair.
    pub big_m: f64,
    pub v: f64,
    pub a: f64,
    pub angular_momentum: f64,
    pub magnetic_moment: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Identification {
    pub direction: Direction,
    pub dcr: DcrSide,
    pub rr: RrSide,
    /// Largest mismatch between the two sides, including the rigidity
    /// function against the relative mass increase.
    pub residual: f64,
}

fn rr_side(m0: f64, v: f64, k: &Constants) -> RrSide {
    let g = (1.0 - (v / k.c).powi(2)).sqrt();
    let a = v * k.hbar / (4.0 * m0 * k.c * k.c);
    RrSide {
        m0,
        big_m: 2.0 * m0 / g,
        v,
        a,
        angular_momentum: 2.0 * m0 * a * v / g,
        magnetic_moment: k.e * a * v / (2.0 * g),
    }
}

fn dcr_from_rr(m0: f64, v: f64, k: &Constants) -> DcrSide {
    let g2 = 1.0 - (v / k.c).powi(2);
    let a = v * k.hbar / (4.0 * m0 * k.c * k.c);
    let m = 2.0 * m0 / g2;
    DcrSide {
        m,
        m_dcr: 2.0 * m0 / g2.sqrt(),
        omega_dcr: 4.0 * m0 * k.c * k.c / k.hbar,
        a,
        zeta: 4.0 * a * m * k.c / k.hbar,
    }
}

fn consistency(dcr: &DcrSide, rr: &RrSide, k: &Constants) -> Result<f64> {
    let r = (1.0 + dcr.zeta * dcr.zeta).sqrt() + 1.0;
    let rel = |x: f64, y: f64| (x - y).abs() / x.abs().max(y.abs()).max(f64::MIN_POSITIVE);
    let gamma_rr = mass_increase(rr.v, k.c)?;
    let gamma_fr = rigidity(rr.a, rr.m0, k.hbar, k.c)?;
    Ok([
        rel(dcr.m_dcr, rr.big_m),
        rel(dcr.m / r, rr.m0),
        rel(k.c * dcr.zeta / r, rr.v).min((k.c * dcr.zeta / r - rr.v).abs()),
        (dcr.a - rr.a).abs() / rr.a.max(1.0),
        (gamma_rr - gamma_fr).abs(),
        (rr.big_m - 2.0 * rr.m0) / (2.0 * rr.m0) - gamma_rr,
    ]
    .iter()
    .fold(0.0, |m: f64, v| m.max(v.abs())))
}

/// Rotator parameters from the Dirac-particle mass `m` and dimensionless radius `zeta`.
pub fn dcr_to_rr(zeta: f64, m: f64, k: &Constants) -> Result<Identification> {
    if !(zeta >= 0.0) || !(m > 0.0) {
        return Err(Error::domain("dcr parameters", format!("need zeta >= 0 and m > 0, got {zeta}, {m}")));
    }
    let r = (1.0 + zeta * zeta).sqrt() + 1.0;
    let m0 = m / r;
    let v = k.c * zeta / r;
    let rr = rr_side(m0, v, k);
    let a = zeta * k.hbar / (4.0 * m * k.c);
    let dcr = DcrSide {
        m,
        m_dcr: m * std::f64::consts::SQRT_2 / r.sqrt(),
        omega_dcr: 4.0 * m * k.c * k.c / (k.hbar * r),
        a,
        zeta,
    };
    let residual = consistency(&dcr, &rr, k)?;
    Ok(Identification {
        direction: Direction::DcrToRr,
        dcr,
        rr,
        residual,
    })
}

/// Dirac-particle parameters from the constituent mass `m0` and speed `v`.
pub fn rr_to_dcr(v: f64, m0: f64, k: &Constants) -> Result<Identification> {
    if !(m0 > 0.0) {
        return Err(Error::domain("m0", format!("{m0} must be positive")));
    }
    if !(0.0..k.c).contains(&v) {
        return Err(Error::domain("speed", format!("need 0 <= v < c, got {v}")));
    }
    let rr = rr_side(m0, v, k);
    let dcr = dcr_from_rr(m0, v, k);
    let residual = consistency(&dcr, &rr, k)?;
    Ok(Identification {
        direction: Direction::RrToDcr,
        dcr,
        rr,
        residual,
    })
}

/// `value` is `zeta` for [`Direction::DcrToRr`] and `v` otherwise; `mass`
/// is `m` or `m0` respectively.
pub fn identify_dcr_rr(direction: Direction, value: f64, mass: f64, k: &Constants) -> Result<Identification> {
    match direction {
        Direction::DcrToRr => dcr_to_rr(value, mass, k),
        Direction::RrToDcr => rr_to_dcr(value, mass, k),
    }
}
