//! The verification suites. Every random point draws from its own ChaCha
//! stream derived from the run seed, so results do not depend on the
//! number of worker threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{Recorder, RunConfig, Suite, VerificationReport};
use crate::algebra::sample::{random_params, random_unit};
use crate::algebra::{
    bilinears_closed_form, bilinears_matrix, build_gamma_basis, n_from_xi, spin_from_xi, spinor_from_params,
    spinor_matrix, xi_from_bilinears, CMat4,
};
use crate::covariant::{kinetic_term_matrix, lagrangian_pieces, LagrangianPieces, ParamField};
use crate::error::Result;
use crate::minkowski::{dot, four, FourVec, Vec3};
use crate::particle::{
    energy_relation_residual, helix_solution, lagrangian_dc, lagrangian_dc_covariant, observables,
    observables_from_beta, observables_from_zeta, relativize, xi_equation_check, xi_rate, DcParams, HelixSolution,
};
use crate::rotator::{
    closed_form_rotator, dcr_to_rr, integrate_rotator, mass_increase, rigidity, rr_to_dcr, Constants, RotatorParams,
};

pub const THREADS_ENV: &str = "DIRAC_DISQUANT_THREADS";

pub const BILINEAR_POINTS: usize = 1000;
pub const TAYLOR_POINTS: usize = 100;
pub const APPENDIX_A_POINTS: usize = 100;
pub const APPENDIX_B_POINTS: usize = 500;
pub const APPENDIX_C_POINTS: usize = 100;
pub const HELIX_B: [f64; 3] = [0.1, 1.0, 10.0];
pub const FD_STEPS: [f64; 3] = [1e-3, 5e-4, 2.5e-4];
pub const FD_FINAL_STEP: f64 = 1e-4;

/// Runs `f` on `n` independent generators, in parallel, returning results in index order.
fn per_point<T, F>(seed: u64, stream: u64, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng) -> T + Sync,
{
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream((stream << 32) | i as u64);
            f(&mut rng)
        })
        .collect()
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    // NaN propagates as a failure
    it.into_iter().fold(0.0, |m, v| if v.is_nan() || m.is_nan() { f64::NAN } else { m.max(v) })
}

fn max_ok(it: impl IntoIterator<Item = Result<f64>>) -> f64 {
    max_of(it.into_iter().map(|r| r.unwrap_or(f64::INFINITY)))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

fn expm_series(m: &CMat4, terms: usize) -> CMat4 {
    let mut sum = CMat4::identity();
    let mut term = CMat4::identity();
    for k in 1..terms {
        term = term * m / num_complex::Complex64::new(k as f64, 0.0);
        sum += term;
    }
    sum
}

fn cmax(m: &CMat4) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn algebra(r: &mut Recorder) {
    let seed = r.cfg.seed;
    let gammas = per_point(seed, 1, 50, |rng| {
        build_gamma_basis(random_unit(rng)).map(|g| g.identity_residuals())
    });
    let z_axis = build_gamma_basis(Vec3::new(0.0, 0.0, 1.0)).map(|g| g.identity_residuals());
    let mut names: Vec<&'static str> = Vec::new();
    let mut worst: Vec<f64> = Vec::new();
    for res in std::iter::once(&z_axis).chain(gammas.iter()) {
        match res {
            Ok(list) => {
                for (name, v) in list {
                    match names.iter().position(|n| n == name) {
                        Some(i) => worst[i] = max_of([worst[i], *v]),
                        None => {
                            names.push(name);
                            worst.push(*v);
                        }
                    }
                }
            }
            Err(_) => {
                names.push("construction");
                worst.push(f64::INFINITY);
            }
        }
    }
    for (name, v) in names.iter().zip(worst) {
        r.check(&format!("gamma.{name}"), "Dirac algebra identity over random projector axes", v, 1e-12);
    }

    let bil = per_point(seed, 2, BILINEAR_POINTS, |rng| -> Result<[f64; 6]> {
        let p = random_params(rng);
        let g = build_gamma_basis(p.z)?;
        let m = bilinears_matrix(&spinor_from_params(&p, &g)?, &g)?;
        let c = bilinears_closed_form(&p);
        let a4 = p.amplitude.powi(4);
        let comp = (0..4)
            .map(|i| rel(m.j[i], c.j[i]).max(rel(m.s[i], c.s[i])))
            .fold(rel(m.scalar, c.scalar), f64::max);
        let xi = xi_from_bilinears(&m)?;
        let s_back = spin_from_xi(&m.j, &xi)?;
        let z = p.z;
        let n_err = if 1.0 + xi.dot(&z) > 1e-6 {
            let n = n_from_xi(&xi, &z)?;
            (2.0 * n * n.dot(&z) - z - xi).amax()
        } else {
            0.0
        };
        Ok([
            comp,
            m.norm_identity().abs() / a4,
            m.orthogonality().abs() / a4,
            (m.rho / p.amplitude.powi(2) - 1.0).abs(),
            (xi - p.xi()).amax().max((s_back - m.s).amax() / m.j[0]),
            n_err,
        ])
    });
    let col = |k: usize| max_of(bil.iter().map(|v| v.as_ref().map_or(f64::INFINITY, |a| a[k])));
    r.check("bilinear.matrix_vs_closed_form", "matrix and closed-form bilinears, relative", col(0), 1e-10);
    r.check("bilinear.spin_norm", "S.S + j.j = 0, relative to A^4", col(1), 1e-10);
    r.check("bilinear.orthogonality", "j.S = 0, relative to A^4", col(2), 1e-10);
    r.check("bilinear.density", "rho = A^2, relative", col(3), 1e-12);
    r.check("bilinear.xi_round_trip", "spin direction from (j, S) and back", col(4), 1e-10);
    r.check("bilinear.n_inversion", "half-way axis reproduces xi", col(5), 1e-10);

    let taylor = per_point(seed, 3, TAYLOR_POINTS, |rng| -> Result<f64> {
        let p = random_params(rng);
        let g = build_gamma_basis(p.z)?;
        let i = num_complex::Complex64::new(0.0, 1.0);
        let half = num_complex::Complex64::new(0.5, 0.0);
        let gen1 = CMat4::identity() * (i * p.phi) + g.gamma5 * (half * p.kappa);
        let gen2 = -(g.gamma5 * g.sigma_dot(&p.eta)) * (i * half);
        let gen3 = g.sigma_dot(&p.n) * (i * std::f64::consts::FRAC_PI_2);
        let series = expm_series(&gen1, 30) * expm_series(&gen2, 30) * expm_series(&gen3, 30)
            * g.pi_projector
            * num_complex::Complex64::new(p.amplitude, 0.0);
        let closed = spinor_matrix(&p, &g);
        Ok(cmax(&(series - closed)) / cmax(&closed).max(1.0))
    });
    r.check("spinor.taylor_oracle", "closed-form exponentials vs 30-term series", max_ok(taylor), 1e-10);
}

fn covariant_point(rng: &mut ChaCha8Rng) -> (ParamField, FourVec) {
    loop {
        let field = ParamField::random(rng);
        if let Some(x) = field.sample_point(rng) {
            return (field, x);
        }
    }
}

fn appendix_a(r: &mut Recorder) {
    let (m, hbar) = (r.cfg.m, r.cfg.hbar);
    let rows = per_point(r.cfg.seed, 4, APPENDIX_A_POINTS, |rng| -> Result<[f64; 4]> {
        let (field, x) = covariant_point(rng);
        let g = build_gamma_basis(field.z)?;
        let sum = lagrangian_pieces(&field, &x, m, hbar)?.kinetic();
        let mut out = [0.0; 4];
        for (k, h) in FD_STEPS.iter().chain([FD_FINAL_STEP].iter()).enumerate() {
            out[k] = (kinetic_term_matrix(&field, &x, &g, hbar, *h)? - sum).abs();
        }
        Ok(out)
    });
    let col = |k: usize| max_of(rows.iter().map(|v| v.as_ref().map_or(f64::INFINITY, |a| a[k])));
    let errs: Vec<f64> = (0..3).map(col).collect();
    let slope = (0..2).map(|i| (errs[i] / errs[i + 1]).log2()).fold(f64::INFINITY, f64::min);
    r.check(
        "appendixA.convergence_order",
        "2 - observed order of the finite-difference kinetic term",
        2.0 - slope,
        0.1,
    );
    r.check(
        "appendixA.kinetic_term",
        "finite-difference kinetic term vs F1+F2+F3+F4 at h = 1e-4",
        col(3),
        1e-6,
    );
}

fn pieces_sweep(cfg: &RunConfig, stream: u64, n: usize) -> Vec<Result<LagrangianPieces>> {
    per_point(cfg.seed, stream, n, |rng| {
        let (field, x) = covariant_point(rng);
        lagrangian_pieces(&field, &x, cfg.m, cfg.hbar)
    })
}

fn appendix_b(r: &mut Recorder) {
    let pts = pieces_sweep(r.cfg, 5, APPENDIX_B_POINTS);
    let col = |f: &dyn Fn(&LagrangianPieces) -> f64| max_of(pts.iter().map(|p| p.as_ref().map_or(f64::INFINITY, f)));
    r.check(
        "appendixB.f4_covariant",
        "boost-rotation term: 3D form vs covariant form with W = j + f rho",
        col(&|p| rel(p.f4, p.f4_covariant)),
        1e-10,
    );
    r.check(
        "appendixB.f4_compact",
        "boost-rotation term: 3D form vs unit-vector q form",
        col(&|p| rel(p.f4, p.f4_compact)),
        1e-10,
    );
    r.check(
        "appendixB.f3_covariant",
        "spin-rotation term: 3D form vs covariant form",
        col(&|p| rel(p.f3, p.f3_covariant)),
        1e-10,
    );
    r.check(
        "appendixB.f3_normalization",
        "normalization factor inside vs outside the derivative",
        col(&|p| rel(p.f3_covariant, p.f3_factor_outside)),
        1e-10,
    );
    r.check(
        "appendixB.aux_norms",
        "nu.nu = -1 and q.q = 1",
        col(&|p| (dot(&p.aux.nu, &p.aux.nu) + 1.0).abs().max((dot(&p.aux.q, &p.aux.q) - 1.0).abs())),
        1e-10,
    );
}

fn appendix_c(r: &mut Recorder) {
    let rows = per_point(r.cfg.seed, 6, APPENDIX_C_POINTS, |rng| -> Result<[f64; 3]> {
        use rand::Rng;
        let xi = random_unit(rng);
        let sp = Vec3::from_fn(|_, _| rng.gen_range(-1.0..1.0));
        let xd = four((1.0 + sp.norm_squared()).sqrt() * rng.gen_range(1.0..1.5), &sp);
        let xdd = FourVec::from_fn(|_, _| rng.gen_range(-1.0..1.0));
        let xi_dot = xi_rate(&xi, &xd, &xdd)?;
        let z = loop {
            let z = random_unit(rng);
            if 1.0 + xi.dot(&z) > 1e-3 {
                break z;
            }
        };
        let (full, reduced) = xi_equation_check(&xi, &xi_dot, &xd, &xdd, &z)?;
        let dir = xi.cross(&random_unit(rng)).normalize();
        let (r1, _) = xi_equation_check(&xi, &(xi_dot + dir * 1e-4), &xd, &xdd, &z)?;
        let (r2, _) = xi_equation_check(&xi, &(xi_dot + dir * 2e-4), &xd, &xdd, &z)?;
        Ok([full, reduced, (r2 / r1 - 2.0).abs()])
    });
    let col = |k: usize| max_of(rows.iter().map(|v| v.as_ref().map_or(f64::INFINITY, |a| a[k])));
    r.check(
        "appendixC.full_equation",
        "Euler-Lagrange spin equation with the reduced xi_dot, random z",
        col(0),
        1e-10,
    );
    r.check("appendixC.reduced_equation", "reduced z-free spin equation", col(1), 1e-12);
    r.check(
        "appendixC.linear_sensitivity",
        "residual doubles when the xi_dot perturbation doubles",
        col(2),
        1e-6,
    );
}

fn dc_params(cfg: &RunConfig) -> Result<DcParams> {
    let p = DcParams {
        m: cfg.m,
        hbar: cfg.hbar,
        c: cfg.c,
        ..Default::default()
    };
    p.validate()?;
    Ok(p)
}

/// Worst relative drift of the momentum and worst reduced-system residual
/// over one period sampled at `n` points.
fn helix_sweep(h: &HelixSolution, n: usize) -> Result<(f64, f64, f64)> {
    let p0 = h.momentum_at(0.0)?;
    let mut drift = 0.0f64;
    let mut resid = 0.0f64;
    for i in 0..=n {
        let tau = h.period() * i as f64 / n as f64;
        drift = drift.max((h.momentum_at(tau)? - p0).amax() / p0.amax());
        resid = resid.max(h.residuals_at(tau)?.max());
    }
    let w0_err = (p0[0] - h.params.m * h.w0).abs().max(p0.fixed_rows::<3>(1).amax()) / h.params.m;
    Ok((drift, resid, w0_err))
}

/// Integrates the reduced spin equation along the helix with RK4 and
/// reports how far xi wanders from its initial value.
fn xi_constancy(h: &HelixSolution, steps: usize) -> Result<f64> {
    let dt = h.period() / steps as f64;
    let mut xi = h.xi();
    let f = |tau: f64, xi: &Vec3| -> Result<Vec3> {
        let s = h.state(tau);
        xi_rate(xi, &s.xdot, &s.xddot)
    };
    for i in 0..steps {
        let t = dt * i as f64;
        let k1 = f(t, &xi)?;
        let k2 = f(t + dt / 2.0, &(xi + k1 * (dt / 2.0)))?;
        let k3 = f(t + dt / 2.0, &(xi + k2 * (dt / 2.0)))?;
        let k4 = f(t + dt, &(xi + k3 * dt))?;
        xi += (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (dt / 6.0);
    }
    Ok((xi - h.xi()).amax())
}

fn particle(r: &mut Recorder) {
    let p = match dc_params(r.cfg) {
        Ok(p) => p,
        Err(_) => {
            r.check("particle.params", "physical constants valid", f64::INFINITY, 0.0);
            return;
        }
    };
    let mut drift = 0.0f64;
    let mut resid = 0.0f64;
    let mut w0 = 0.0f64;
    let mut omega = 0.0f64;
    let mut dual = 0.0f64;
    let mut xi_c = 0.0f64;
    let mut rel_mass = 0.0f64;
    let mut constraints = 0.0f64;
    for b in HELIX_B {
        let h = match helix_solution(b, 0.0, &p) {
            Ok(h) => h,
            Err(_) => {
                drift = f64::INFINITY;
                continue;
            }
        };
        match helix_sweep(&h, 64) {
            Ok((d, rr, w)) => {
                drift = drift.max(d);
                resid = resid.max(rr);
                w0 = w0.max(w);
            }
            Err(_) => drift = f64::INFINITY,
        }
        w0 = w0.max((h.w0 * (b + 1.0) + 1.0).abs());
        let lam = p.lambda_natural();
        omega = omega.max((h.big_omega.abs() - 2.0 / (lam * (b + 1.0).powi(2))).abs() * lam);
        let s = h.state(0.0);
        dual = dual.max(match (lagrangian_dc(&s, &p), lagrangian_dc_covariant(&s, &p)) {
            (Ok(a), Ok(c)) => rel(a, c),
            _ => f64::INFINITY,
        });
        xi_c = xi_c.max(xi_constancy(&h, 2000).unwrap_or(f64::INFINITY));
        rel_mass = rel_mass.max(match h.momentum_at(0.0).and_then(|m| relativize(&m)) {
            Ok((_, mass)) => (mass - h.m_dcr).abs() / h.m_dcr,
            Err(_) => f64::INFINITY,
        });
        for i in 0..32 {
            let s = h.state(h.period() * i as f64 / 32.0);
            let yd = s.y_dot();
            constraints = constraints
                .max(s.y.dot(&yd).abs())
                .max(s.y.dot(&s.xi).abs())
                .max((s.y.norm_squared() - b).abs() / b.max(1.0))
                .max((dot(&s.xdot, &s.xdot) - 1.0).abs());
        }
    }
    r.check("particle.reduced_system", "helix satisfies the reduced first-order system", resid, 1e-9);
    r.check("particle.momentum_drift", "relative drift of the 4-momentum over one period", drift, 1e-8);
    r.check("particle.energy_constant", "w0 (b+1) = -1 and P = (m w0, 0, 0, 0)", w0, 1e-12);
    r.check("particle.coordinate_frequency", "|Omega| = 2/(lambda (b+1)^2)", omega, 1e-12);
    r.check("particle.lagrangian_forms", "3-vector and covariant worldline Lagrangians", dual, 1e-12);
    r.check("particle.xi_constancy", "integrated spin direction stays fixed on the helix", xi_c, 1e-9);
    r.check("particle.relativized_mass", "invariant mass of the momentum equals m_dcr", rel_mass, 1e-12);
    r.check("particle.constraints", "y.y_dot = 0, y.xi = 0, y^2 = b, proper-time gauge", constraints, 1e-10);

    let bs: Vec<f64> = std::iter::once(0.0)
        .chain((0..=60).map(|i| 10f64.powf(-3.0 + 5.0 * i as f64 / 60.0)))
        .collect();
    let rel_b = max_of(bs.iter().map(|&b| energy_relation_residual(b, -1.0 / (b + 1.0)).abs()));
    r.check("particle.energy_relation", "circular ansatz ties b and w0 for b in [0, 100]", rel_b, 1e-12);
    let obs = max_of(bs.iter().map(|&b| {
        let (Ok(o), Ok(z)) = (observables(b, &p), observables(b, &p).and_then(|o| observables_from_zeta(o.zeta, &p)))
        else {
            return f64::INFINITY;
        };
        let br = observables_from_beta(o.beta, &p);
        [
            rel(o.m_dcr, z.m_dcr),
            rel(o.v, z.v),
            rel(o.omega_dcr, z.omega_dcr),
            rel(o.m_dcr, br.m_dcr),
            rel(o.v, br.v),
            rel(o.omega_dcr, br.omega_dcr),
            rel(o.zeta, (2.0 * o.beta).sinh()),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }));
    r.check("particle.observable_forms", "b-form vs zeta-form vs beta-form observables", obs, 1e-12);
}

fn rotator(r: &mut Recorder) {
    let m0 = r.cfg.m0;
    let params = match RotatorParams::new(m0, 1.0, 2.0 * 2f64.sqrt() * m0) {
        Ok(p) => p,
        Err(_) => {
            r.check("rotator.params", "rotator parameters valid", f64::INFINITY, 0.0);
            return;
        }
    };
    let cf = closed_form_rotator(&params).expect("validated parameters");
    let dt = cf.period() / 2000.0;
    match integrate_rotator(&params, &cf.state(0.0), 2000, dt) {
        Ok(traj) => {
            let dev = max_of(traj.samples.iter().map(|s| {
                let (a1, a2) = s.state.particles();
                let (b1, b2) = cf.state(s.state.tau).particles();
                (a1 - b1).amax().max((a2 - b2).amax())
            }));
            r.check("rotator.integration", "integrated worldlines vs closed form over one period", dev, 1e-6);
            r.check("rotator.constraints", "five constraint monitors after projection", traj.max_monitor(), 1e-8);
            r.check("rotator.zeta_drift", "relative drift of the conserved spacelike vector", traj.zeta_drift(), 1e-8);
            r.check("rotator.multipliers", "nu = 0 and beta = 0 on established motion", traj.max_multiplier(), 1e-9);
        }
        Err(_) => r.check("rotator.integration", "integrated worldlines vs closed form", f64::INFINITY, 1e-6),
    }
    let mut cf_err = 0.0f64;
    let mut speed = 0.0f64;
    for p0 in [2.0, 2.2, 2.0 * 2f64.sqrt(), 5.0, 40.0] {
        let Ok(pp) = RotatorParams::new(m0, 0.8, p0 * m0) else {
            cf_err = f64::INFINITY;
            continue;
        };
        let c = closed_form_rotator(&pp).expect("validated parameters");
        for tau in [0.0, 0.7, 3.0, 11.0] {
            cf_err = cf_err.max(max_of(c.state(tau).monitors(m0, 0.8).map(f64::abs)));
        }
        if p0 > 2.0 {
            speed = speed.max(c.particle_speed() - 1.0);
        }
    }
    r.check("rotator.closed_form", "closed-form worldlines satisfy the steady-state constraints", cf_err, 1e-12);
    r.check("rotator.subluminal", "particle speed a |omega0| stays below c (value is speed - c)", speed, 0.0);
    let spot = closed_form_rotator(&params).map_or(f64::INFINITY, |c| {
        (c.omega - 0.5).abs().max((c.omega0 + 0.5f64.sqrt()).abs())
    });
    r.check("rotator.reference_frequencies", "omega = 1/2 and omega0 = -1/sqrt(2) at P0 = 2 sqrt(2) m0, a = 1", spot, 1e-12);

    let static_params = RotatorParams::new(m0, 1.0, 2.0 * m0).expect("threshold is admissible");
    let s0 = closed_form_rotator(&static_params).expect("validated").state(0.0);
    let stat = integrate_rotator(&static_params, &s0, 200, 0.01).map_or(f64::INFINITY, |t| {
        max_of(t.samples.iter().map(|s| (s.state.x - s0.x).amax().max((s.state.p - s0.p).amax())))
    });
    r.check("rotator.static", "threshold pair does not rotate", stat, 1e-12);
}

fn consistency(r: &mut Recorder) {
    let k = Constants {
        hbar: r.cfg.hbar,
        c: r.cfg.c,
        e: r.cfg.e,
    };
    let m0 = r.cfg.m0;
    let grand = max_of([0.1, 0.5, 0.9].map(|f| {
        let v = f * k.c;
        match rr_to_dcr(v, m0, &k) {
            Ok(id) => match (mass_increase(v, k.c), rigidity(id.dcr.a, m0, k.hbar, k.c)) {
                (Ok(a), Ok(b)) => (a - b).abs().max(id.residual),
                _ => f64::INFINITY,
            },
            Err(_) => f64::INFINITY,
        }
    }));
    r.check("consistency.rigidity_vs_mass_increase", "rigidity function equals relative mass increase", grand, 1e-12);

    let bound = k.hbar / (4.0 * m0 * k.c);
    let spot = rigidity(0.0, m0, k.hbar, k.c).map_or(f64::INFINITY, f64::abs).max(
        rigidity(0.6 * bound, m0, k.hbar, k.c).map_or(f64::INFINITY, |g| (g - 0.25).abs()),
    );
    r.check("consistency.rigidity_spot_values", "gamma(0) = 0 and gamma(0.6 bound) = 0.25", spot, 1e-12);

    let p = dc_params(r.cfg);
    let helix = max_of(HELIX_B.map(|b| {
        let Ok(p) = p else { return f64::INFINITY };
        let Ok(h) = helix_solution(b, 0.0, &p) else { return f64::INFINITY };
        let Ok(id) = dcr_to_rr(h.zeta, p.m, &k) else { return f64::INFINITY };
        let g_rigid = rigidity(h.a_dcr, id.rr.m0, k.hbar, k.c);
        let g_mass = mass_increase(h.v, k.c);
        let rot = RotatorParams {
            m0: id.rr.m0,
            a: h.a_dcr,
            p0: id.rr.big_m,
            phase: 0.0,
            c: k.c,
            hbar: k.hbar,
        };
        match (g_rigid, g_mass, closed_form_rotator(&rot)) {
            (Ok(a), Ok(b), Ok(c)) => [
                (a - b).abs(),
                id.residual,
                rel(h.m_dcr, id.rr.big_m),
                rel(c.particle_speed(), h.v / k.c),
                rel(id.rr.v, h.v),
            ]
            .into_iter()
            .fold(0.0, f64::max),
            _ => f64::INFINITY,
        }
    }));
    r.check("consistency.helix_to_rotator", "helix observables reproduce the identified rotator", helix, 1e-12);

    let trip = max_of([0.1, 1.0, 10.0].map(|zeta| {
        let Ok(fwd) = dcr_to_rr(zeta, r.cfg.m, &k) else { return f64::INFINITY };
        let Ok(back) = rr_to_dcr(fwd.rr.v, fwd.rr.m0, &k) else { return f64::INFINITY };
        rel(back.dcr.m, r.cfg.m).max(rel(back.dcr.zeta, zeta)).max(rel(back.dcr.m_dcr, fwd.dcr.m_dcr))
    }));
    r.check("consistency.identification_round_trip", "dcr -> rr -> dcr is the identity", trip, 1e-12);

    let ratio = rr_to_dcr(0.5 * k.c, m0, &k).map_or(f64::INFINITY, |id| {
        (id.rr.magnetic_moment / id.rr.angular_momentum - k.e / (4.0 * m0)).abs()
    });
    r.check("consistency.gyromagnetic_ratio", "magnetic moment over angular momentum is e/(4 m0)", ratio, 1e-12);
}

fn run_component(suite: Suite, cfg: &RunConfig) -> Vec<super::report::CheckRecord> {
    let mut r = Recorder::new(cfg);
    match suite {
        Suite::Algebra => algebra(&mut r),
        Suite::AppendixA => appendix_a(&mut r),
        Suite::AppendixB => appendix_b(&mut r),
        Suite::AppendixC => appendix_c(&mut r),
        Suite::Particle => particle(&mut r),
        Suite::Rotator => rotator(&mut r),
        Suite::Consistency => consistency(&mut r),
        Suite::All => unreachable!("expanded by the caller"),
    }
    r.records
}

/// Worker count from the environment, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|n| *n > 0)
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> VerificationReport {
    let run = || {
        let parts: Vec<Suite> = match suite {
            Suite::All => Suite::COMPONENTS.to_vec(),
            s => vec![s],
        };
        parts.into_iter().flat_map(|s| run_component(s, cfg)).collect()
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    let records = match builder.build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    VerificationReport::new(suite, cfg.seed, records)
}
