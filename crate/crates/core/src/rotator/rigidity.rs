//! Relative mass increase of a rotating pair and the rigidity function.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `1/sqrt(1 - v^2/c^2) - 1`.
pub fn mass_increase(v: f64, c: f64) -> Result<f64> {
    if !(c > 0.0) || !(0.0..c).contains(&v) {
        return Err(Error::domain("speed", format!("need 0 <= v < c, got v = {v}, c = {c}")));
    }
    let r = v / c;
    Ok(1.0 / (1.0 - r * r).sqrt() - 1.0)
}

/// Largest admissible radius `hbar/(4 m0 c)`.
pub fn rigidity_bound(m0: f64, hbar: f64, c: f64) -> f64 {
    hbar / (4.0 * m0 * c)
}

/// `hbar / sqrt(hbar^2 - (4 a m0 c)^2) - 1`.
pub fn rigidity(a: f64, m0: f64, hbar: f64, c: f64) -> Result<f64> {
    for (what, v) in [("m0", m0), ("hbar", hbar), ("c", c)] {
        if !(v > 0.0) {
            return Err(Error::domain(what, format!("{v} must be positive")));
        }
    }
    if !(a >= 0.0) {
        return Err(Error::domain("a", format!("radius {a} must be >= 0")));
    }
    let bound = rigidity_bound(m0, hbar, c);
    if a >= bound {
        return Err(Error::RigidityBound { a, bound });
    }
    let r = a / bound;
    Ok(1.0 / (1.0 - r * r).sqrt() - 1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RigidityCurve {
    pub m0: f64,
    pub hbar: f64,
    pub c: f64,
    pub a_max: f64,
    /// `(a, gamma)` pairs on an even grid.
    pub samples: Vec<(f64, f64)>,
}

impl RigidityCurve {
    /// `n` evenly spaced samples on `[a_min, a_end]`.
    pub fn sample(m0: f64, hbar: f64, c: f64, a_min: f64, a_end: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("n", "need at least two samples"));
        }
        if !(a_min >= 0.0 && a_min < a_end) {
            return Err(Error::domain("a range", format!("need 0 <= a_min < a_max, got [{a_min}, {a_end}]")));
        }
        let bound = rigidity_bound(m0, hbar, c);
        if a_end >= bound {
            return Err(Error::RigidityBound { a: a_end, bound });
        }
        let samples = (0..n)
            .map(|i| {
                let a = a_min + (a_end - a_min) * i as f64 / (n - 1) as f64;
                rigidity(a, m0, hbar, c).map(|g| (a, g))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RigidityCurve {
            m0,
            hbar,
            c,
            a_max: rigidity_bound(m0, hbar, c),
            samples,
        })
    }

    pub fn is_increasing(&self) -> bool {
        self.samples.windows(2).all(|w| w[1].1 > w[0].1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mass_increase_values() {
        assert_eq!(mass_increase(0.0, 1.0).unwrap(), 0.0);
        assert!((mass_increase(1.0 / 2f64.sqrt(), 1.0).unwrap() - (2f64.sqrt() - 1.0)).abs() < 1e-15);
        assert!((mass_increase(0.5, 1.0).unwrap() - (2.0 / 3f64.sqrt() - 1.0)).abs() < 1e-15);
        assert!(mass_increase(1.0, 1.0).is_err());
        assert!(mass_increase(-0.1, 1.0).is_err());
    }

    #[test]
    fn rigidity_values() {
        assert_eq!(rigidity(0.0, 1.0, 1.0, 1.0).unwrap(), 0.0);
        assert!((rigidity(0.15, 1.0, 1.0, 1.0).unwrap() - 0.25).abs() < 1e-15);
        assert!((rigidity(0.125, 1.0, 1.0, 1.0).unwrap() - mass_increase(0.5, 1.0).unwrap()).abs() < 1e-15);
        assert!(matches!(rigidity(0.25, 1.0, 1.0, 1.0), Err(Error::RigidityBound { .. })));
    }

    #[test]
    fn curve_is_monotone_and_blows_up() {
        let c = RigidityCurve::sample(1.0, 1.0, 1.0, 0.0, 0.2499, 200).unwrap();
        assert_eq!(c.samples[0], (0.0, 0.0));
        assert!(c.is_increasing());
        assert!(c.samples.last().unwrap().1 > 30.0);
        assert!(RigidityCurve::sample(1.0, 1.0, 1.0, 0.0, 0.25, 10).is_err());
    }
}
