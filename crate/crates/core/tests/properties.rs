use approx::assert_relative_eq;
use disquant::algebra::{
    bilinears_closed_form, bilinears_matrix, build_gamma_basis, n_from_xi, spin_from_xi, spinor_from_params,
    xi_from_bilinears, SpinorParams,
};
use disquant::minkowski::{dot, Vec3};
use disquant::particle::{helix_solution, invariant_mass, DcParams};
use disquant::rotator::{
    closed_form_rotator, dcr_to_rr, integrate_rotator, mass_increase, rigidity, rr_to_dcr, Constants, RotatorParams,
};
use proptest::prelude::*;

fn unit() -> impl Strategy<Value = Vec3> {
    (0.0..std::f64::consts::TAU, -0.95f64..0.95).prop_map(|(phi, cz)| {
        let s = (1.0 - cz * cz).sqrt();
        Vec3::new(s * phi.cos(), s * phi.sin(), cz)
    })
}

fn params() -> impl Strategy<Value = SpinorParams> {
    (0.1f64..3.0, -3.0f64..3.0, -3.0f64..3.0, unit(), 0.0f64..2.0, unit()).prop_map(
        |(amplitude, kappa, phi, dir, eta, n)| SpinorParams {
            amplitude,
            kappa,
            phi,
            eta: dir * eta,
            n,
            z: Vec3::new(0.0, 0.0, 1.0),
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bilinears_agree_and_satisfy_fierz(p in params()) {
        let g = build_gamma_basis(p.z).unwrap();
        let psi = spinor_from_params(&p, &g).unwrap();
        let m = bilinears_matrix(&psi, &g).unwrap();
        let c = bilinears_closed_form(&p);
        let scale = p.amplitude * p.amplitude * (2.0 * p.rapidity()).cosh();
        prop_assert!((m.j - c.j).amax() < 1e-10 * scale);
        prop_assert!((m.s - c.s).amax() < 1e-10 * scale);
        prop_assert!(m.norm_identity().abs() < 1e-10 * scale * scale);
        prop_assert!(m.orthogonality().abs() < 1e-10 * scale * scale);
        prop_assert!(dot(&c.j, &c.j) > 0.0);
    }

    #[test]
    fn xi_round_trips_through_bilinears(p in params()) {
        let b = bilinears_closed_form(&p);
        let xi = xi_from_bilinears(&b).unwrap();
        prop_assert!((xi - p.xi()).amax() < 1e-9);
        let s = spin_from_xi(&b.j, &xi).unwrap();
        prop_assert!((s - b.s).amax() < 1e-9 * b.j[0].abs().max(1.0));
        // n is fixed up to sign
        let n = n_from_xi(&xi, &p.z).unwrap();
        prop_assert!((n.dot(&p.n).abs() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn helix_momentum_is_frame_independent(b in 0.05f64..4.0, bx in -0.6f64..0.6, by in -0.6f64..0.6) {
        let sol = helix_solution(b, 0.3, &DcParams::default()).unwrap();
        let rest = sol.momentum_at(0.7).unwrap();
        let moved = sol.boosted_momentum(&Vec3::new(bx, by, 0.2)).unwrap();
        prop_assert!((invariant_mass(&rest) - invariant_mass(&moved)).abs() < 1e-9);
        prop_assert!((invariant_mass(&rest) - sol.m_dcr).abs() < 1e-9);
    }

    #[test]
    fn identification_is_invertible(v in 0.0f64..0.95, m0 in 0.2f64..5.0) {
        let k = Constants::default();
        let fwd = rr_to_dcr(v, m0, &k).unwrap();
        let back = dcr_to_rr(fwd.dcr.zeta, fwd.dcr.m, &k).unwrap();
        prop_assert!(fwd.residual < 1e-12 && back.residual < 1e-12);
        prop_assert!((back.rr.m0 - m0).abs() < 1e-12 * m0.max(1.0));
        prop_assert!((back.rr.v - v).abs() < 1e-12);
    }

    #[test]
    fn rigidity_equals_relative_mass_increase(v in 0.0f64..0.99, m0 in 0.1f64..10.0, hbar in 0.1f64..10.0) {
        let a = v * hbar / (4.0 * m0);
        let lhs = rigidity(a, m0, hbar, 1.0).unwrap();
        let rhs = mass_increase(v, 1.0).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-10 * rhs.max(1.0));
    }
}

#[test]
fn helix_radius_and_frequency() {
    let p = DcParams::default();
    let sol = helix_solution(1.0, 0.0, &p).unwrap();
    assert_relative_eq!(sol.a_dcr, 3f64.sqrt(), max_relative = 1e-14);
    assert_relative_eq!(sol.omega, -1.0, max_relative = 1e-14);
    for t in [0.0, 0.4, 2.5, 11.0] {
        let r = sol.position_at_time(t);
        assert_relative_eq!(r.xy().norm(), 3f64.sqrt(), max_relative = 1e-12);
        assert_eq!(r.z, 0.0);
    }
    for tau in [0.0, 1.1, 7.3] {
        assert!(sol.residuals_at(tau).unwrap().max() < 1e-12);
    }
}

#[test]
fn rotator_integration_tracks_closed_form_over_several_periods() {
    let params = RotatorParams::new(1.0, 0.1, 2.0 * 2f64.sqrt()).unwrap();
    let exact = closed_form_rotator(&params).unwrap();
    let steps = 3 * 2000;
    let dt = 3.0 * exact.period() / steps as f64;
    let traj = integrate_rotator(&params, &exact.state(0.0), steps, dt).unwrap();
    assert!(traj.max_monitor() < 1e-10);
    assert!(traj.zeta_drift() < 1e-10);
    let last = traj.samples.last().unwrap().state;
    let want = exact.state(last.tau);
    assert!((last.x - want.x).amax() < 1e-6);
    assert!((last.p - want.p).amax() < 1e-6);
}

#[test]
fn static_rotator_at_threshold() {
    let params = RotatorParams::new(1.0, 0.1, 2.0).unwrap();
    let r = closed_form_rotator(&params).unwrap();
    assert_eq!(r.particle_speed(), 0.0);
    let (x1, x2) = r.positions_at_time(3.0);
    assert_relative_eq!(x1[1] - x2[1], 0.2, max_relative = 1e-14);
}
