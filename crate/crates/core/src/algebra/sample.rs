//! Seeded generators for random verification points.

use rand::Rng;

use super::spinor::SpinorParams;
use crate::minkowski::Vec3;

/// Uniformly distributed unit 3-vector.
pub fn random_unit<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    let cz: f64 = rng.gen_range(-1.0..=1.0);
    let az: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let s = (1.0 - cz * cz).max(0.0).sqrt();
    Vec3::new(s * az.cos(), s * az.sin(), cz)
}

pub fn random_params<R: Rng + ?Sized>(rng: &mut R) -> SpinorParams {
    let pi = std::f64::consts::PI;
    SpinorParams {
        amplitude: rng.gen_range(0.2..2.0),
        kappa: rng.gen_range(-pi..pi),
        phi: rng.gen_range(-pi..pi),
        eta: Vec3::new(
            rng.gen_range(-1.5..1.5),
            rng.gen_range(-1.5..1.5),
            rng.gen_range(-1.5..1.5),
        ),
        n: random_unit(rng),
        z: random_unit(rng),
    }
}
