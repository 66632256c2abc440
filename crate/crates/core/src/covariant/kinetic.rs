//! Kinetic term of the Dirac Lagrangian by direct matrix algebra and central
//! finite differences.

use nalgebra::Complex;

use super::field::ParamField;
use crate::algebra::{spinor_matrix, CMat4, GammaBasis};
use crate::error::{Error, Result};
use crate::minkowski::FourVec;

pub const MIN_STEP: f64 = 1e-6;
pub const MAX_STEP: f64 = 1e-3;

/// `(i/2) hbar (psibar gamma^l d_l psi - d_l psibar gamma^l psi)` at `x`,
/// returned as the coefficient of the projector.
pub fn kinetic_term_matrix(field: &ParamField, x: &FourVec, g: &GammaBasis, hbar: f64, h: f64) -> Result<f64> {
    if !(MIN_STEP..=MAX_STEP).contains(&h) {
        return Err(Error::domain(
            "finite-difference step",
            format!("h = {h:e} outside [{MIN_STEP:e}, {MAX_STEP:e}]"),
        ));
    }
    if (field.z - g.z).norm() > 1e-12 {
        return Err(Error::domain("gamma basis", "projector axis differs from the field's z"));
    }
    let psi_at = |y: &FourVec| spinor_matrix(&field.params(y), g);
    let psi = psi_at(x);
    let bar = psi.adjoint() * g.gamma[0];
    let mut k = CMat4::zeros();
    for l in 0..4 {
        let mut e = FourVec::zeros();
        e[l] = h;
        let dpsi = (psi_at(&(x + e)) - psi_at(&(x - e))) / Complex::new(2.0 * h, 0.0);
        let dbar = dpsi.adjoint() * g.gamma[0];
        k += bar * g.gamma[l] * dpsi - dbar * g.gamma[l] * psi;
    }
    k *= Complex::new(0.0, 0.5 * hbar);
    let coeff = k.trace();
    let off = (k - g.pi_projector * coeff).iter().map(|c| c.norm()).fold(0.0, f64::max);
    let scale = coeff.norm().max(1.0);
    if off > 1e-6 * scale {
        return Err(Error::Consistency {
            what: "kinetic term is not a multiple of the projector",
            residual: off,
        });
    }
    if coeff.im.abs() > 1e-8 * scale {
        return Err(Error::Consistency {
            what: "imaginary part of the kinetic term",
            residual: coeff.im.abs(),
        });
    }
    Ok(coeff.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_gamma_basis, SpinorParams};
    use crate::covariant::lagrangian_pieces;
    use crate::minkowski::Vec3;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn still(z: Vec3) -> SpinorParams {
        SpinorParams {
            amplitude: 1.2,
            kappa: 0.4,
            phi: 0.0,
            eta: Vec3::new(0.2, 0.5, -0.1),
            n: Vec3::new(0.0, 0.6, 0.8),
            z,
        }
    }

    #[test]
    fn constant_field_has_no_kinetic_term() {
        let z = Vec3::new(0.0, 0.0, 1.0);
        let field = ParamField::constant(&still(z)).unwrap();
        let g = build_gamma_basis(z).unwrap();
        assert!(kinetic_term_matrix(&field, &FourVec::zeros(), &g, 1.0, 1e-4).unwrap().abs() < 1e-12);
    }

    #[test]
    fn linear_phase_gives_minus_j_dot_k() {
        let z = Vec3::new(0.0, 0.0, 1.0);
        let p = still(z);
        let mut field = ParamField::constant(&p).unwrap();
        let k = FourVec::new(0.3, -0.2, 0.5, 0.1);
        field.phi.c1 = k;
        let g = build_gamma_basis(z).unwrap();
        let got = kinetic_term_matrix(&field, &FourVec::zeros(), &g, 1.0, 1e-4).unwrap();
        let j = crate::algebra::bilinears_closed_form(&p).j;
        assert!((got + j.dot(&k)).abs() < 1e-8);
    }

    #[test]
    fn step_outside_range_rejected() {
        let z = Vec3::new(0.0, 0.0, 1.0);
        let field = ParamField::constant(&still(z)).unwrap();
        let g = build_gamma_basis(z).unwrap();
        assert!(kinetic_term_matrix(&field, &FourVec::zeros(), &g, 1.0, 1e-2).is_err());
    }

    #[test]
    fn matches_sum_of_pieces() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let field = ParamField::random(&mut rng);
            let Some(x) = field.sample_point(&mut rng) else { continue };
            let g = build_gamma_basis(field.z).unwrap();
            let k = kinetic_term_matrix(&field, &x, &g, 0.9, 1e-4).unwrap();
            let lp = lagrangian_pieces(&field, &x, 1.0, 0.9).unwrap();
            assert!((k - lp.kinetic()).abs() < 1e-6, "{k} vs {}", lp.kinetic());
        }
    }
}
