//! Worldline Lagrangian, conserved momentum and the spin-direction equation.

use super::state::{DcParams, WorldlineState};
use crate::error::{Error, Result};
use crate::minkowski::{dot, eps_contract, eps_free, four, lower, spatial, FourVec, Vec3};

const GUARD: f64 = 1e-9;

fn spin_denominator(xi: &Vec3, z: &Vec3) -> Result<f64> {
    let d = 1.0 + xi.dot(z);
    if d < GUARD {
        return Err(Error::AntipodalSpin { value: d });
    }
    Ok(d)
}

/// `Q = 1 / (s (s + xdot.f))` with `s = sqrt(xdot.xdot)`.
fn q_factor(s: f64, xdot: &FourVec, f: &FourVec) -> Result<f64> {
    let den = s + dot(xdot, f);
    if den < GUARD {
        return Err(Error::Singular {
            factor: "sqrt(xdot.xdot) + xdot.f",
            value: den,
        });
    }
    Ok(1.0 / (s * den))
}

/// Lagrangian in 3-vector form (rest frame `f = (1,0,0,0)`).
pub fn lagrangian_dc(s: &WorldlineState, p: &DcParams) -> Result<f64> {
    let sp = s.speed()?;
    let d = spin_denominator(&s.xi, &p.z)?;
    let q = q_factor(sp, &s.xdot, &FourVec::new(1.0, 0.0, 0.0, 0.0))?;
    let cross = spatial(&s.xdot).cross(&spatial(&s.xddot));
    Ok(-p.m * sp + p.hbar * s.xi_dot.cross(&s.xi).dot(&p.z) / (2.0 * d) + 0.5 * p.hbar * q * cross.dot(&s.xi))
}

/// The same Lagrangian written with Levi-Civita contractions and a general `f`.
pub fn lagrangian_dc_covariant(s: &WorldlineState, p: &DcParams) -> Result<f64> {
    let sp = s.speed()?;
    let xi4 = four(0.0, &s.xi);
    let z4 = four(0.0, &p.z);
    let den = 1.0 - dot(&xi4, &z4);
    if den < GUARD {
        return Err(Error::AntipodalSpin { value: den });
    }
    let q = q_factor(sp, &s.xdot, &p.f)?;
    let spin = eps_contract(&xi4, &four(0.0, &s.xi_dot), &p.f, &z4);
    let orbit = eps_contract(&s.xdot, &s.xddot, &p.f, &xi4);
    Ok(-p.m * sp - p.hbar * spin / (2.0 * den) + 0.5 * p.hbar * q * orbit)
}

/// Canonical 4-momentum `P_i` (lower index) conjugate to `x^i`; conserved
/// along solutions. For a particle at rest it is `(-m, 0, 0, 0)`.
pub fn momentum(s: &WorldlineState, p: &DcParams) -> Result<FourVec> {
    let sp = s.speed()?;
    spin_denominator(&s.xi, &p.z)?;
    let f = p.f;
    let q = q_factor(sp, &s.xdot, &f)?;
    let xd_low = lower(&s.xdot);
    let u = dot(&s.xdot, &f);
    let q_grad = -(xd_low * (u / sp + 2.0) + lower(&f) * sp) * (q * q);
    let q_dot = q_grad.dot(&s.xddot);
    let xi4 = four(0.0, &s.xi);
    let xi4_dot = four(0.0, &s.xi_dot);

    let t1 = eps_free(&s.xddot, &f, &xi4) * q;
    let t2 = eps_free(&(s.xdot * q_dot + s.xddot * q), &f, &xi4) + eps_free(&(s.xdot * q), &f, &xi4_dot);
    let t3 = q_grad * eps_contract(&s.xdot, &s.xddot, &f, &xi4);
    Ok(-xd_low * (p.m / sp) + (t1 + t2 + t3) * (0.5 * p.hbar))
}

/// Unit 4-velocity `u_i = -P_i/M` and mass `M = sqrt(P.P)` of a momentum.
pub fn relativize(momentum: &FourVec) -> Result<(FourVec, f64)> {
    let pp = dot(momentum, momentum);
    if !(pp > 0.0) {
        return Err(Error::domain("momentum", format!("P.P = {pp:e} is not timelike")));
    }
    let mass = pp.sqrt();
    Ok((-momentum / mass, mass))
}

/// Residuals of the spin-direction equation for given `(xi, xi_dot)`:
/// the full Euler-Lagrange form, which involves `z`, and its reduced
/// `z`-free form `xi_dot + Q (xdot x xddot) x xi`.
pub fn xi_equation_check(
    xi: &Vec3,
    xi_dot: &Vec3,
    xdot: &FourVec,
    xddot: &FourVec,
    z: &Vec3,
) -> Result<(f64, f64)> {
    let xn = xi.norm();
    if (xn - 1.0).abs() > 1e-10 {
        return Err(Error::NonUnit { name: "xi", norm: xn });
    }
    if xi.dot(xi_dot).abs() > 1e-10 * xi_dot.norm().max(1.0) {
        return Err(Error::domain("xi_dot", "must be orthogonal to xi"));
    }
    let d = spin_denominator(xi, z)?;
    let ss = dot(xdot, xdot);
    if !(ss > 0.0) {
        return Err(Error::domain("velocity", format!("xdot.xdot = {ss:e} is not timelike")));
    }
    let q = q_factor(ss.sqrt(), xdot, &FourVec::new(1.0, 0.0, 0.0, 0.0))?;
    let c = spatial(xdot).cross(&spatial(xddot));

    let inner = -xi_dot.cross(z)
        + xi.cross(z) * (z.dot(xi_dot) / (2.0 * d))
        + z * (xi.dot(&xi_dot.cross(z)) / (2.0 * d))
        + c * (0.5 * d * q);
    let full = xi.cross(&inner).norm();
    let reduced = (xi_dot + c.cross(xi) * q).norm();
    Ok((full, reduced))
}

/// `xi_dot` implied by the reduced spin equation.
pub fn xi_rate(xi: &Vec3, xdot: &FourVec, xddot: &FourVec) -> Result<Vec3> {
    let ss = dot(xdot, xdot);
    if !(ss > 0.0) {
        return Err(Error::domain("velocity", format!("xdot.xdot = {ss:e} is not timelike")));
    }
    let q = q_factor(ss.sqrt(), xdot, &FourVec::new(1.0, 0.0, 0.0, 0.0))?;
    Ok(-spatial(xdot).cross(&spatial(xddot)).cross(xi) * q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sample::random_unit;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rest() -> WorldlineState {
        WorldlineState::new(
            0.0,
            FourVec::zeros(),
            FourVec::new(1.0, 0.0, 0.0, 0.0),
            FourVec::zeros(),
            Vec3::new(0.0, 0.0, 1.0),
            Vec3::zeros(),
        )
        .unwrap()
    }

    #[test]
    fn rest_state() {
        let p = DcParams::new(1.7, 0.3).unwrap();
        assert_eq!(lagrangian_dc(&rest(), &p).unwrap(), -1.7);
        assert_eq!(momentum(&rest(), &p).unwrap(), FourVec::new(-1.7, 0.0, 0.0, 0.0));
        let (u, m) = relativize(&FourVec::new(-1.7, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!((u, m), (FourVec::new(1.0, 0.0, 0.0, 0.0), 1.7));
    }

    #[test]
    fn straight_worldline() {
        let p = DcParams::new(2.0, 1.0).unwrap();
        let xd = FourVec::new(1.5, 0.3, -0.2, 0.4);
        let s = WorldlineState::new(0.0, FourVec::zeros(), xd, FourVec::zeros(), Vec3::new(0.0, 1.0, 0.0), Vec3::zeros())
            .unwrap();
        let want = -2.0 * dot(&xd, &xd).sqrt();
        assert!((lagrangian_dc(&s, &p).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn covariant_lagrangian_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let p = DcParams::new(1.3, 0.7).unwrap();
        for _ in 0..100 {
            let xi = random_unit(&mut rng);
            let xi_dot = xi.cross(&random_unit(&mut rng));
            let sp = Vec3::from_fn(|_, _| rng.gen_range(-0.8..0.8));
            let xd = four((1.0 + sp.norm_squared()).sqrt() * rng.gen_range(1.0..2.0), &sp);
            let xdd = FourVec::from_fn(|_, _| rng.gen_range(-1.0..1.0));
            let mut pz = p;
            pz.z = random_unit(&mut rng);
            if 1.0 + xi.dot(&pz.z) < 1e-3 {
                continue;
            }
            let s = WorldlineState::new(0.0, FourVec::zeros(), xd, xdd, xi, xi_dot).unwrap();
            let a = lagrangian_dc(&s, &pz).unwrap();
            let b = lagrangian_dc_covariant(&s, &pz).unwrap();
            assert!((a - b).abs() < 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn xi_equation_is_z_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..200 {
            let xi = random_unit(&mut rng);
            let sp = Vec3::from_fn(|_, _| rng.gen_range(-0.8..0.8));
            let xd = four((1.0 + sp.norm_squared()).sqrt(), &sp);
            let xdd = FourVec::from_fn(|_, _| rng.gen_range(-1.0..1.0));
            let xi_dot = xi_rate(&xi, &xd, &xdd).unwrap();
            let z = random_unit(&mut rng);
            if 1.0 + xi.dot(&z) < 1e-3 {
                continue;
            }
            let (full, reduced) = xi_equation_check(&xi, &xi_dot, &xd, &xdd, &z).unwrap();
            assert!(full < 1e-12 && reduced < 1e-15, "{full} {reduced}");

            let dir = xi.cross(&random_unit(&mut rng)).normalize();
            let (r1, _) = xi_equation_check(&xi, &(xi_dot + dir * 1e-3), &xd, &xdd, &z).unwrap();
            let (r2, _) = xi_equation_check(&xi, &(xi_dot + dir * 2e-3), &xd, &xdd, &z).unwrap();
            assert!((r2 / r1 - 2.0).abs() < 1e-6);
        }
    }

    #[test]
    fn parallel_acceleration() {
        let xd = FourVec::new(1.2, 0.3, 0.0, 0.0);
        let xdd = FourVec::new(0.1, 0.6, 0.0, 0.0);
        let xi = Vec3::new(0.0, 0.6, 0.8);
        let (a, b) = xi_equation_check(&xi, &Vec3::zeros(), &xd, &xdd, &Vec3::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!((a, b), (0.0, 0.0));
    }

    #[test]
    fn guards() {
        let p = DcParams::new(1.0, 1.0).unwrap();
        let mut s = rest();
        s.xi = -p.z;
        assert!(matches!(lagrangian_dc(&s, &p), Err(Error::AntipodalSpin { .. })));
        assert!(relativize(&FourVec::new(1.0, 1.0, 0.0, 0.0)).is_err());
    }
}
