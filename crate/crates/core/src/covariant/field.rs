//! Smooth test fields `x -> (A, kappa, phi, eta, n)` with exact first derivatives.

use nalgebra::{Matrix3x4, Matrix4};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::sample::random_unit;
use crate::algebra::SpinorParams;
use crate::error::{Error, Result};
use crate::minkowski::{FourVec, Vec3};

/// Quadratic polynomial `c0 + c1.x + x^T c2 x` in the four coordinates
/// (plain Euclidean sums, no metric).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quad {
    pub c0: f64,
    pub c1: FourVec,
    pub c2: Matrix4<f64>,
}

impl Quad {
    pub fn constant(c0: f64) -> Self {
        Self::linear(c0, FourVec::zeros())
    }

    pub fn linear(c0: f64, c1: FourVec) -> Self {
        Quad {
            c0,
            c1,
            c2: Matrix4::zeros(),
        }
    }

    pub fn value(&self, x: &FourVec) -> f64 {
        self.c0 + self.c1.dot(x) + x.dot(&(self.c2 * x))
    }

    /// Components `d/dx^l` for l = 0..3.
    pub fn gradient(&self, x: &FourVec) -> FourVec {
        self.c1 + (self.c2 + self.c2.transpose()) * x
    }

    fn random<R: Rng + ?Sized>(rng: &mut R, c0: f64, lin: f64, quad: f64) -> Self {
        let c1 = FourVec::from_fn(|_, _| rng.gen_range(-lin..lin));
        let mut c2 = Matrix4::zeros();
        for a in 0..4 {
            for b in a..4 {
                let v = rng.gen_range(-quad..quad);
                c2[(a, b)] = v;
                c2[(b, a)] = v;
            }
        }
        Quad { c0, c1, c2 }
    }
}

/// Parameter field: `A = exp(log_amp)`, quadratic `kappa`, `phi` and rapidity
/// components, and `n` the normalization of an affine field `n0 + N x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamField {
    pub log_amp: Quad,
    pub kappa: Quad,
    pub phi: Quad,
    pub eta: [Quad; 3],
    pub n0: Vec3,
    pub n_lin: Matrix3x4<f64>,
    pub z: Vec3,
}

/// Field values and first derivatives at one spacetime point.
///
/// Gradients are stored by coordinate: `d_phi[l] = d phi / d x^l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldJet {
    pub params: SpinorParams,
    pub d_amp: FourVec,
    pub d_kappa: FourVec,
    pub d_phi: FourVec,
    pub d_eta: [Vec3; 4],
    pub d_n: [Vec3; 4],
}

impl ParamField {
    /// Field that takes the value `p` everywhere.
    pub fn constant(p: &SpinorParams) -> Result<Self> {
        p.validate()?;
        if p.amplitude <= 0.0 {
            return Err(Error::domain("amplitude", "constant field needs A > 0"));
        }
        Ok(ParamField {
            log_amp: Quad::constant(p.amplitude.ln()),
            kappa: Quad::constant(p.kappa),
            phi: Quad::constant(p.phi),
            eta: [0, 1, 2].map(|a| Quad::constant(p.eta[a])),
            n0: p.n,
            n_lin: Matrix3x4::zeros(),
            z: p.z,
        })
    }

    /// Seeded random field of unit scale around the origin.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let pi = std::f64::consts::PI;
        let a0 = rng.gen_range(-0.3..0.3);
        let log_amp = Quad::random(rng, a0, 0.3, 0.1);
        let k0 = rng.gen_range(-pi..pi);
        let kappa = Quad::random(rng, k0, 0.5, 0.2);
        let p0 = rng.gen_range(-pi..pi);
        let phi = Quad::random(rng, p0, 0.5, 0.2);
        let axis = random_unit(rng) * rng.gen_range(0.8..1.2);
        let eta = [0, 1, 2].map(|a| Quad::random(rng, axis[a], 0.25, 0.08));
        let n0 = random_unit(rng);
        let n_lin = Matrix3x4::from_fn(|_, _| rng.gen_range(-0.3..0.3));
        ParamField {
            log_amp,
            kappa,
            phi,
            eta,
            n0,
            n_lin,
            z: random_unit(rng),
        }
    }

    fn n_raw(&self, x: &FourVec) -> Vec3 {
        self.n0 + self.n_lin * x
    }

    pub fn params(&self, x: &FourVec) -> SpinorParams {
        let raw = self.n_raw(x);
        SpinorParams {
            amplitude: self.log_amp.value(x).exp(),
            kappa: self.kappa.value(x),
            phi: self.phi.value(x),
            eta: Vec3::new(self.eta[0].value(x), self.eta[1].value(x), self.eta[2].value(x)),
            n: raw / raw.norm(),
            z: self.z,
        }
    }

    pub fn jet(&self, x: &FourVec) -> FieldJet {
        let params = self.params(x);
        let raw = self.n_raw(x);
        let rn = raw.norm();
        let n = params.n;
        let ge = self.eta.map(|q| q.gradient(x));
        let d_eta = [0, 1, 2, 3].map(|l| Vec3::new(ge[0][l], ge[1][l], ge[2][l]));
        let d_n = [0, 1, 2, 3].map(|l| {
            let dr: Vec3 = self.n_lin.column(l).into();
            (dr - n * n.dot(&dr)) / rn
        });
        FieldJet {
            params,
            d_amp: self.log_amp.gradient(x) * params.amplitude,
            d_kappa: self.kappa.gradient(x),
            d_phi: self.phi.gradient(x),
            d_eta,
            d_n,
        }
    }

    /// True where every closed form used downstream is comfortably regular.
    pub fn is_regular(&self, x: &FourVec) -> bool {
        let p = self.params(x);
        self.n_raw(x).norm() > 0.3 && p.rapidity() > 0.2 && 1.0 + p.xi().dot(&self.z) > 0.05
    }

    /// Seeded random point in `[-0.5, 0.5]^4` at which the field is regular.
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<FourVec> {
        (0..200)
            .map(|_| FourVec::from_fn(|_, _| rng.gen_range(-0.5..0.5)))
            .find(|x| self.is_regular(x))
    }
}
