//! The Lagrangian `L = L_cl + L_q1 + L_q2` and the four kinetic pieces,
//! with the spin terms evaluated both in 3D form and in covariant form.

use serde::{Deserialize, Serialize};

use super::field::{FieldJet, ParamField};
use crate::algebra::{bilinears_closed_form, SpinorParams};
use crate::error::{Error, Result};
use crate::minkowski::{dot, eps_contract, four, levi_civita3, FourVec, Vec3, METRIC};

/// Guard on `1 + xi.z` and `rho + f.j`.
pub const DENOM_TOL: f64 = 1e-9;

/// Auxiliary 4-vectors of the covariant form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovariantAux {
    /// Constant unit timelike vector.
    pub f: FourVec,
    pub z4: FourVec,
    /// Spin direction with its f-component removed; `nu.nu = -1`.
    pub nu: FourVec,
    pub mu: FourVec,
    /// Unit timelike vector halfway between `j/rho` and `f`.
    pub q: FourVec,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LagrangianPieces {
    pub l_cl: f64,
    pub l_q1: f64,
    pub l_q2: f64,
    pub f1: f64,
    pub f2: f64,
    /// Spin-rotation term, 3D form.
    pub f3: f64,
    pub f3_covariant: f64,
    /// Covariant F3 with the normalization of `mu` pulled out of the derivative.
    pub f3_factor_outside: f64,
    /// Boost-rotation term, 3D form.
    pub f4: f64,
    /// Covariant F4 written with `W = j + f rho`.
    pub f4_covariant: f64,
    /// Covariant F4 written with the unit vector `q`.
    pub f4_compact: f64,
    pub aux: CovariantAux,
}

impl LagrangianPieces {
    pub fn total(&self) -> f64 {
        self.l_cl + self.l_q1 + self.l_q2
    }

    pub fn kinetic(&self) -> f64 {
        self.f1 + self.f2 + self.f3 + self.f4
    }
}

fn basis(k: usize) -> FourVec {
    FourVec::from_fn(|r, _| if r == k { 1.0 } else { 0.0 })
}

/// Closed-form bilinear quantities and their derivatives along each coordinate.
struct Kinematics {
    rho: f64,
    j: FourVec,
    s: FourVec,
    xi: Vec3,
    eta: f64,
    v: Vec3,
    d_rho: FourVec,
    d_eta: FourVec,
    d_v: [Vec3; 4],
    d_j: [FourVec; 4],
    d_xi: [Vec3; 4],
}

fn kinematics(jet: &FieldJet) -> Result<Kinematics> {
    let p: &SpinorParams = &jet.params;
    let b = bilinears_closed_form(p);
    let a = p.amplitude;
    let rho = a * a;
    let eta = p.rapidity();
    let xi = p.xi();
    let z = p.z;
    let mut d_eta = FourVec::zeros();
    let mut d_v = [Vec3::zeros(); 4];
    let v = match p.boost_direction() {
        Some(v) if eta > 1e-9 => {
            for l in 0..4 {
                d_eta[l] = v.dot(&jet.d_eta[l]);
                d_v[l] = (jet.d_eta[l] - v * d_eta[l]) / eta;
            }
            v
        }
        _ => {
            if jet.d_eta.iter().any(|d| d.norm() > 0.0) {
                return Err(Error::Singular {
                    factor: "rapidity",
                    value: eta,
                });
            }
            Vec3::zeros()
        }
    };
    let (ch, sh) = (eta.cosh(), eta.sinh());
    let d_rho = jet.d_amp * (2.0 * a);
    let d_j = [0, 1, 2, 3].map(|l| {
        let dt = d_rho[l] * ch + rho * sh * d_eta[l];
        let ds = v * (d_rho[l] * sh + rho * ch * d_eta[l]) + d_v[l] * (rho * sh);
        four(dt, &ds)
    });
    let n = p.n;
    let d_xi = [0, 1, 2, 3].map(|l| {
        let dn = jet.d_n[l];
        2.0 * dn * n.dot(&z) + 2.0 * n * dn.dot(&z)
    });
    Ok(Kinematics {
        rho,
        j: b.j,
        s: b.s,
        xi,
        eta,
        v,
        d_rho,
        d_eta,
        d_v,
        d_j,
        d_xi,
    })
}

/// All Lagrangian pieces from a field jet, with `f = (1,0,0,0)`.
pub fn pieces_from_jet(jet: &FieldJet, m: f64, hbar: f64) -> Result<LagrangianPieces> {
    let f = FourVec::new(1.0, 0.0, 0.0, 0.0);
    let k = kinematics(jet)?;
    let p = &jet.params;
    let z = p.z;
    let d = 1.0 + k.xi.dot(&z);
    if d < DENOM_TOL {
        return Err(Error::AntipodalSpin { value: d });
    }
    let rjf = k.rho + dot(&f, &k.j);
    if rjf < DENOM_TOL {
        return Err(Error::Singular {
            factor: "rho + f.j",
            value: rjf,
        });
    }

    let f1 = -hbar * k.j.dot(&jet.d_phi);
    let f2 = -0.5 * hbar * k.s.dot(&jet.d_kappa);

    let f3 = -hbar
        * (0..4)
            .map(|l| k.j[l] * k.xi.cross(&k.d_xi[l]).dot(&z))
            .sum::<f64>()
        / (2.0 * d);

    let mut f4_sum = 0.0;
    let sh_half = (0.5 * k.eta).sinh();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let e = levi_civita3(a, b, c);
                if e == 0.0 {
                    continue;
                }
                let t = k.d_eta[a + 1] * k.v[b]
                    + k.eta.sinh() * k.d_v[a + 1][b]
                    + 2.0 * sh_half * sh_half * k.v[a] * k.d_v[0][b];
                f4_sum += e * k.xi[c] * t;
            }
        }
    }
    let f4 = -0.5 * hbar * k.rho * f4_sum;

    // covariant F3
    let z4 = four(0.0, &z);
    let xi4 = four(0.0, &k.xi);
    let nu = xi4 - f * dot(&xi4, &f);
    let norm = (2.0 * d).sqrt();
    let mu = nu / norm;
    let mut f3_cov = 0.0;
    let mut f3_out = 0.0;
    for s in 0..4 {
        let dxi4 = four(0.0, &k.d_xi[s]);
        let dnu = dxi4 - f * dot(&dxi4, &f);
        let dd = k.d_xi[s].dot(&z);
        let dmu = dnu / norm - nu * (dd / (norm * norm * norm));
        f3_cov += k.j[s] * eps_contract(&mu, &dmu, &z4, &f);
        f3_out += k.j[s] * eps_contract(&nu, &dnu, &z4, &f);
    }
    let f3_cov = hbar * f3_cov;
    let f3_out = hbar * f3_out / (2.0 * d);

    // covariant F4
    let w = k.j + f * k.rho;
    let ww = dot(&w, &w);
    let wn = ww.sqrt();
    let q = w / wn;
    let mut c9 = 0.0;
    let mut c11 = 0.0;
    for kk in 0..4 {
        let dw = k.d_j[kk] + f * k.d_rho[kk];
        let dq = dw / wn - w * (dot(&w, &dw) / (wn * ww));
        let ek = basis(kk);
        c9 += METRIC[kk] * eps_contract(&dw, &ek, &w, &nu);
        c11 += METRIC[kk] * eps_contract(&q, &ek, &dq, &nu);
    }
    let f4_cov = -hbar * c9 / (2.0 * rjf);
    let f4_compact = hbar * k.rho * c11;

    let mass = m * k.rho;
    let sk = (0.5 * p.kappa).sin();
    Ok(LagrangianPieces {
        l_cl: -mass + f1 + f3,
        l_q1: 2.0 * mass * sk * sk + f2,
        l_q2: f4,
        f1,
        f2,
        f3,
        f3_covariant: f3_cov,
        f3_factor_outside: f3_out,
        f4,
        f4_covariant: f4_cov,
        f4_compact,
        aux: CovariantAux { f, z4, nu, mu, q },
    })
}

/// Lagrangian pieces of `field` at the point `x`.
pub fn lagrangian_pieces(field: &ParamField, x: &FourVec, m: f64, hbar: f64) -> Result<LagrangianPieces> {
    pieces_from_jet(&field.jet(x), m, hbar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn constant_field() {
        let z = Vec3::new(0.0, 0.0, 1.0);
        let p = SpinorParams {
            amplitude: 1.3,
            kappa: 0.7,
            phi: 0.2,
            eta: Vec3::new(0.3, -0.1, 0.4),
            n: Vec3::new(0.6, 0.0, 0.8),
            z,
        };
        let field = ParamField::constant(&p).unwrap();
        let lp = lagrangian_pieces(&field, &FourVec::zeros(), 2.0, 1.0).unwrap();
        let rho = 1.3f64 * 1.3;
        for v in [lp.f1, lp.f2, lp.f3, lp.f4, lp.f3_covariant, lp.f4_covariant, lp.f4_compact] {
            assert!(v.abs() < 1e-15);
        }
        assert!((lp.l_cl + 2.0 * rho).abs() < 1e-14);
        assert!((lp.l_q1 - 4.0 * rho * (0.35f64).sin().powi(2)).abs() < 1e-14);
        assert_eq!(lp.l_q2, 0.0);
        assert!((lp.total() + 2.0 * rho * 0.7f64.cos()).abs() < 1e-14);
    }

    #[test]
    fn rest_frame_field_without_rapidity() {
        let z = Vec3::new(0.0, 0.0, 1.0);
        let p = SpinorParams {
            amplitude: 1.0,
            kappa: 0.0,
            phi: 0.0,
            eta: Vec3::zeros(),
            n: z,
            z,
        };
        let mut field = ParamField::constant(&p).unwrap();
        field.phi.c1 = FourVec::new(0.5, 0.1, 0.0, 0.0);
        let lp = lagrangian_pieces(&field, &FourVec::zeros(), 1.0, 1.0).unwrap();
        assert!((lp.f1 + 0.5).abs() < 1e-15);
        field.eta[0].c1 = FourVec::new(0.0, 1.0, 0.0, 0.0);
        assert!(matches!(
            lagrangian_pieces(&field, &FourVec::zeros(), 1.0, 1.0),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn covariant_forms_agree_with_3d_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut count = 0;
        while count < 300 {
            let field = ParamField::random(&mut rng);
            let Some(x) = field.sample_point(&mut rng) else { continue };
            let lp = lagrangian_pieces(&field, &x, 1.0, 0.7).unwrap();
            assert!(rel(lp.f3, lp.f3_covariant) < 1e-10, "{} {}", lp.f3, lp.f3_covariant);
            assert!(rel(lp.f3, lp.f3_factor_outside) < 1e-10);
            assert!(rel(lp.f4, lp.f4_covariant) < 1e-10, "{} {}", lp.f4, lp.f4_covariant);
            assert!(rel(lp.f4, lp.f4_compact) < 1e-10);
            assert!((dot(&lp.aux.nu, &lp.aux.nu) + 1.0).abs() < 1e-10);
            assert!((dot(&lp.aux.q, &lp.aux.q) - 1.0).abs() < 1e-10);
            count += 1;
        }
    }
}
