//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::time::Instant;

use disquant::verify::{report_csv, report_json, run_suite, RunConfig, Suite, VerificationReport};

struct Criterion {
    name: &'static str,
    checks: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        name: "gamma algebra identities below 1e-12",
        checks: &["gamma.*"],
    },
    Criterion {
        name: "matrix vs closed-form bilinears over 1000 random parameter sets",
        checks: &[
            "bilinear.matrix_vs_closed_form",
            "bilinear.spin_norm",
            "bilinear.orthogonality",
            "bilinear.density",
            "bilinear.xi_round_trip",
        ],
    },
    Criterion {
        name: "finite-difference kinetic term equals F1+F2+F3+F4, order >= 1.9, 100 points",
        checks: &["appendixA.convergence_order", "appendixA.kinetic_term"],
    },
    Criterion {
        name: "3D and covariant boost-rotation term agree at 500 points",
        checks: &["appendixB.f4_covariant", "appendixB.f4_compact"],
    },
    Criterion {
        name: "spin equation is z-independent for 100 random z",
        checks: &["appendixC.full_equation", "appendixC.reduced_equation"],
    },
    Criterion {
        name: "helix solves the reduced system and conserves momentum, b in {0.1, 1, 10}",
        checks: &[
            "particle.reduced_system",
            "particle.momentum_drift",
            "particle.energy_constant",
            "particle.coordinate_frequency",
        ],
    },
    Criterion {
        name: "b-form and zeta/beta-form observables agree for b in [0, 100]",
        checks: &["particle.observable_forms"],
    },
    Criterion {
        name: "integrated rotator matches closed form, constraints and zeta conserved",
        checks: &["rotator.integration", "rotator.constraints", "rotator.zeta_drift"],
    },
    Criterion {
        name: "rigidity function equals relative mass increase under the identification",
        checks: &["consistency.rigidity_vs_mass_increase", "consistency.rigidity_spot_values"],
    },
];

fn matches(pattern: &str, id: &str) -> bool {
    match pattern.strip_suffix('*') {
        Some(prefix) => id.starts_with(prefix),
        None => id == pattern,
    }
}

fn evaluate(report: &VerificationReport, c: &Criterion) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for pat in c.checks {
        let hits: Vec<_> = report.records.iter().filter(|r| matches(pat, &r.id)).collect();
        if hits.is_empty() {
            ok = false;
            parts.push(format!("{pat}: missing"));
            continue;
        }
        let worst = hits
            .iter()
            .max_by(|a, b| (a.residual / a.tolerance).total_cmp(&(b.residual / b.tolerance)))
            .unwrap();
        ok &= hits.iter().all(|r| r.passed);
        parts.push(format!("{} = {:.2e} (tol {:.0e})", worst.id, worst.residual, worst.tolerance));
    }
    (ok, parts.join("; "))
}

fn serialized(report: &VerificationReport) -> (Vec<u8>, Vec<u8>) {
    let mut json = Vec::new();
    report_json(report, &mut json).expect("json");
    let mut csv = Vec::new();
    report_csv(report, &mut csv).expect("csv");
    (json, csv)
}

fn main() {
    let cfg = RunConfig {
        seed: 42,
        ..Default::default()
    };
    let start = Instant::now();
    let first = run_suite(Suite::All, &cfg);
    let elapsed = start.elapsed();
    let second = run_suite(Suite::All, &cfg);

    let mut failures = 0;
    println!("\nacceptance criteria (seed 42, {} checks, {:.1} s)", first.records.len(), elapsed.as_secs_f64());
    for c in CRITERIA {
        let (ok, detail) = evaluate(&first, c);
        failures += usize::from(!ok);
        println!("{} {}: {}", if ok { "PASS" } else { "FAIL" }, c.name, detail);
    }
    let (j1, c1) = serialized(&first);
    let (j2, c2) = serialized(&second);
    let same = j1 == j2 && c1 == c2;
    failures += usize::from(!same);
    println!(
        "{} verify all --seed 42 is byte-identical across runs: json {} bytes, csv {} bytes",
        if same { "PASS" } else { "FAIL" },
        j1.len(),
        c1.len()
    );
    for r in first.failures() {
        println!("  failing check {}: residual {:e} > tolerance {:e}", r.id, r.residual, r.tolerance);
    }
    println!("{} of {} criteria passed\n", CRITERIA.len() + 1 - failures, CRITERIA.len() + 1);
    if failures > 0 {
        std::process::exit(1);
    }
}
