use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use disquant::particle::{helix_solution, DcParams};
use disquant::rotator::{
    closed_form_rotator, identify_dcr_rr, integrate_rotator, Constants, Direction, RigidityCurve, RotatorParams,
};
use disquant::verify::{
    fmt_f64, json_document, report_csv, report_json, run_suite, write_json, RunConfig, Suite, Table,
};
use disquant::{Error, Result};

use crate::{Cli, Command, DirectionArg, Format, Global, RotatorMode, SuiteArg};

fn sink(g: &Global) -> Result<Box<dyn Write>> {
    Ok(match &g.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Error::domain("output", format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn finish(mut w: Box<dyn Write>) -> Result<()> {
    w.flush().map_err(|e| Error::domain("output", e.to_string()))
}

fn emit_table(g: &Global, kind: &str, meta: serde_json::Value, table: &Table) -> Result<()> {
    let mut w = sink(g)?;
    match g.format {
        Format::Csv => table.write_csv(&mut w)?,
        Format::Json => {
            let mut doc = json_document(kind, &meta)?;
            doc["samples"] = table.to_json();
            write_json(&mut w, &doc)?;
        }
    }
    finish(w)
}

/// Prints `key = value` metadata lines on stderr.
fn note<T: Serialize>(value: &T) {
    if let Ok(serde_json::Value::Object(map)) = serde_json::to_value(value) {
        for (k, v) in map {
            if !v.is_object() {
                eprintln!("{k} = {v}");
            }
        }
    }
}

pub fn run(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    if !(g.tol_scale > 0.0) {
        return Err(Error::domain("tol-scale", format!("{} must be positive", g.tol_scale)));
    }
    match cli.command {
        Command::Verify { suite, m, m0, hbar, c, e } => {
            let cfg = RunConfig {
                seed: g.seed,
                tol_scale: g.tol_scale,
                m,
                m0,
                hbar,
                c,
                e,
                ..Default::default()
            };
            verify(g, suite_of(suite), &cfg)
        }
        Command::Helix { b, m, hbar, c, phase, tmax, dt } => helix(g, b, m, hbar, c, phase, tmax, dt).map(|_| true),
        Command::Rotator {
            m0,
            a,
            p0,
            mode,
            steps,
            periods,
            phase,
        } => rotator(g, m0, a, p0, mode, steps, periods, phase),
        Command::Rigidity {
            m0,
            hbar,
            c,
            a_min,
            a_max,
            n,
        } => {
            let curve = RigidityCurve::sample(m0, hbar, c, a_min, a_max, n)?;
            let mut table = Table::new(&["a", "gamma", "a_bound"]);
            for (a, gamma) in &curve.samples {
                table.push(vec![*a, *gamma, curve.a_max]);
            }
            eprintln!("a_bound = {}", curve.a_max);
            let meta = json!({"m0": m0, "hbar": hbar, "c": c, "a_bound": curve.a_max, "increasing": curve.is_increasing()});
            emit_table(g, "rigidity", meta, &table).map(|_| true)
        }
        Command::Identify {
            direction,
            v,
            zeta,
            m0,
            m,
            hbar,
            c,
            e,
        } => {
            let k = Constants { hbar, c, e };
            let id = match direction {
                DirectionArg::DcrToRr => identify_dcr_rr(Direction::DcrToRr, zeta.unwrap_or(0.0), m, &k)?,
                DirectionArg::RrToDcr => identify_dcr_rr(Direction::RrToDcr, v.unwrap_or(0.0), m0, &k)?,
            };
            let mut w = sink(g)?;
            match g.format {
                Format::Json => {
                    let mut doc = json_document("identification", &id)?;
                    doc["units"] = json!({"hbar": hbar, "c": c, "e": e});
                    write_json(&mut w, &doc)?;
                }
                Format::Csv => {
                    let rows = [
                        ("m", id.dcr.m),
                        ("m_dcr", id.dcr.m_dcr),
                        ("omega_dcr", id.dcr.omega_dcr),
                        ("a", id.dcr.a),
                        ("zeta", id.dcr.zeta),
                        ("m0", id.rr.m0),
                        ("M", id.rr.big_m),
                        ("v", id.rr.v),
                        ("angular_momentum", id.rr.angular_momentum),
                        ("magnetic_moment", id.rr.magnetic_moment),
                        ("residual", id.residual),
                    ];
                    let mut s = String::from("quantity,value\n");
                    for (q, val) in rows {
                        s.push_str(&format!("{q},{}\n", fmt_f64(val)));
                    }
                    w.write_all(s.as_bytes()).map_err(|e| Error::domain("output", e.to_string()))?;
                }
            }
            finish(w)?;
            Ok(id.residual <= 1e-12 * g.tol_scale)
        }
    }
}

fn suite_of(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::All => Suite::All,
        SuiteArg::Algebra => Suite::Algebra,
        SuiteArg::AppendixA => Suite::AppendixA,
        SuiteArg::AppendixB => Suite::AppendixB,
        SuiteArg::AppendixC => Suite::AppendixC,
        SuiteArg::Particle => Suite::Particle,
        SuiteArg::Rotator => Suite::Rotator,
        SuiteArg::Consistency => Suite::Consistency,
    }
}

fn verify(g: &Global, suite: Suite, cfg: &RunConfig) -> Result<bool> {
    let start = Instant::now();
    let report = run_suite(suite, cfg);
    let mut w = sink(g)?;
    match g.format {
        Format::Csv => report_csv(&report, &mut w)?,
        Format::Json => report_json(&report, &mut w)?,
    }
    finish(w)?;
    for r in report.failures() {
        eprintln!("FAIL {}: residual {:e} > tolerance {:e} ({})", r.id, r.residual, r.tolerance, r.reference);
    }
    eprintln!(
        "suite {}: {} passed, {} failed in {:.2} s",
        report.suite,
        report.passed,
        report.failed,
        start.elapsed().as_secs_f64()
    );
    Ok(report.all_passed())
}

#[allow(clippy::too_many_arguments)]
fn helix(g: &Global, b: f64, m: f64, hbar: f64, c: f64, phase: f64, tmax: f64, dt: f64) -> Result<()> {
    if !(dt > 0.0) || !(tmax >= 0.0) {
        return Err(Error::domain("sampling", format!("need dt > 0 and tmax >= 0, got {dt}, {tmax}")));
    }
    let p = DcParams {
        m,
        hbar,
        c,
        ..Default::default()
    };
    let h = helix_solution(b, phase, &p)?;
    let n = (tmax / dt + 1e-9).floor() as usize;
    let mut table = Table::new(&["t", "x", "y_coord", "z_coord", "xi1", "xi2", "xi3"]);
    let xi = h.xi();
    for i in 0..=n {
        let t = dt * i as f64;
        let x = h.position_at_time(t);
        table.push(vec![t, x[0], x[1], x[2], xi[0], xi[1], xi[2]]);
    }
    note(&h);
    let meta = json!({"solution": h, "units": {"m": m, "hbar": hbar, "c": c}});
    emit_table(g, "helix", meta, &table)
}

#[allow(clippy::too_many_arguments)]
fn rotator(
    g: &Global,
    m0: f64,
    a: f64,
    p0: f64,
    mode: RotatorMode,
    steps: usize,
    periods: f64,
    phase: f64,
) -> Result<bool> {
    if steps == 0 || !(periods > 0.0) {
        return Err(Error::domain("sampling", "need steps >= 1 and periods > 0"));
    }
    let mut params = RotatorParams::new(m0, a, p0)?;
    params.phase = phase;
    let cf = closed_form_rotator(&params)?;
    let span = if cf.omega > 0.0 { cf.period() } else { std::f64::consts::TAU };
    let total = (periods * steps as f64).round().max(1.0) as usize;
    let dt = span / steps as f64;

    let states: Vec<_> = match mode {
        RotatorMode::Closed => (0..=total).map(|i| cf.state(dt * i as f64)).collect(),
        RotatorMode::Integrate => integrate_rotator(&params, &cf.state(0.0), total, dt)?
            .samples
            .into_iter()
            .map(|s| s.state)
            .collect(),
    };
    let cols = [
        "t", "x1_1", "x1_2", "x2_1", "x2_2", "r_xx", "r_px", "r_Pp", "r_pp", "r_Xx",
    ];
    let mut table = Table::new(&cols);
    let mut deviation = 0.0f64;
    let mut monitor = 0.0f64;
    let mut multiplier = 0.0f64;
    let z0 = states[0].zeta();
    let mut zeta_drift = 0.0f64;
    for s in &states {
        let (x1, x2) = s.particles();
        let mon = s.monitors(m0, a);
        let mut row = vec![x1[0], x1[1], x1[2], x2[1], x2[2]];
        row.extend(mon);
        table.push(row);
        let (e1, e2) = cf.state(s.tau).particles();
        deviation = deviation.max((x1 - e1).amax()).max((x2 - e2).amax());
        monitor = mon.iter().fold(monitor, |m, v| m.max(v.abs()));
        multiplier = multiplier.max(s.nu.abs()).max(s.beta.abs());
        zeta_drift = zeta_drift.max((s.zeta() - z0).amax() / z0.amax().max(f64::MIN_POSITIVE));
    }
    let summary = json!({
        "mode": match mode { RotatorMode::Closed => "closed", RotatorMode::Integrate => "integrate" },
        "omega": cf.omega,
        "omega0": cf.omega0,
        "particle_speed": cf.particle_speed(),
        "max_deviation_from_closed_form": deviation,
        "max_constraint_residual": monitor,
        "zeta_relative_drift": zeta_drift,
        "max_multiplier": multiplier,
    });
    note(&summary);
    let meta = json!({"params": params, "summary": summary});
    emit_table(g, "rotator", meta, &table)?;
    let s = g.tol_scale;
    Ok(deviation <= 1e-6 * s && monitor <= 1e-8 * s && zeta_drift <= 1e-8 * s)
}
