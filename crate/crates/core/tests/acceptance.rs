//! Acceptance criteria AC1–AC8, one line per criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use diatomic::cli::verify::{self, Status};
use diatomic::cli::{self, Command, RunConfig};
use diatomic::params::ANGSTROM;
use diatomic::{dynamics, hamiltonian, oracle, stability, InitialConditions, Molecule, Order};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn table(m: &Molecule) -> Outcome {
    let reference = verify::table_reference(m.name()).ok_or("no reference row")?;
    let computed = verify::table_row(m).map_err(|e| e.to_string())?;
    let checks = verify::table_checks(&computed, &reference);
    let asserted: Vec<_> = checks
        .iter()
        .filter(|c| c.status != Status::Recorded)
        .collect();
    let worst = asserted.iter().map(|c| c.value).fold(0.0, f64::max);
    match asserted.iter().find(|c| c.status == Status::Fail) {
        Some(c) => Err(format!("{} off by {:.3e}", c.name, c.value)),
        None if asserted.len() == 5 => Ok(format!("5 values, worst relative error {worst:.2e}")),
        None => Err(format!(
            "expected 5 asserted values, got {}",
            asserted.len()
        )),
    }
}

fn ac3() -> Outcome {
    const PRINTED: f64 = 8.96e13;
    for m in [Molecule::hydrogen(), Molecule::hydrogen_chloride()] {
        let cfg = RunConfig::new(Command::Analyze).molecule(m.name());
        let text = cli::execute(&cfg).map_err(|e| e.to_string())?.text;
        for row in ["cutoff_literal", "cutoff_from_omega1"] {
            if !text
                .lines()
                .any(|l| l.starts_with(&format!("{row},")) && l.ends_with(",third"))
            {
                return Err(format!("analyze {} lacks {row}", m.name()));
            }
        }
    }
    let out = cli::execute(&RunConfig::new(Command::Verify)).map_err(|e| e.to_string())?;
    let row = |name: &str| {
        out.text
            .lines()
            .find(|l| l.starts_with(&format!("{name},")))
            .map(|l| l.split(',').map(str::to_string).collect::<Vec<_>>())
            .ok_or(format!("verify lacks {name}"))
    };
    let zero = row("cutoff3/H2/omega2_prime_at_nD3")?;
    if zero[1] != "pass" {
        return Err(format!("omega2' at n_D3 = {} omega0", zero[2]));
    }
    let flagged = row("table/H2/cutoff3_not_asserted")?;
    let literal = row("cutoff3/H2/literal")?;
    if flagged[1] != "recorded" || literal[1] != "recorded" {
        return Err("third-order cut-off is asserted instead of recorded".into());
    }
    let readings: Vec<f64> = [&flagged[2], &literal[2]]
        .iter()
        .map(|v| v.parse().unwrap())
        .collect();
    if !readings.iter().all(|r| rel(*r, PRINTED) > 0.01) {
        return Err("a reading matches 8.96e13, deviation no longer needed".into());
    }
    Ok(format!(
        "omega2'(n_D3) = {} omega0; readings {:.3e} / {:.3e} recorded against 8.96e13",
        zero[2], readings[0], readings[1]
    ))
}

fn ac4() -> Outcome {
    let h2 = Molecule::hydrogen();
    let ic = InitialConditions::uncertainty_default(0.16 * ANGSTROM, &h2);
    let grid = dynamics::default_grid(0.0, Order::Harmonic, &h2);
    let traj = dynamics::trajectory_sho(&ic, &h2, &grid).map_err(|e| e.to_string())?;
    let e = traj.e[0];
    let drift = traj.energy_drift();
    let span = traj.times.last().unwrap() * h2.omega0() / std::f64::consts::TAU;
    if rel(e, 1.47e-12) >= 0.01 {
        return Err(format!("E = {e:.4e} erg"));
    }
    if drift >= 1e-10 {
        return Err(format!("drift {drift:.2e}"));
    }
    if span < 10.0 - 1e-9 {
        return Err(format!("only {span} periods"));
    }
    Ok(format!(
        "E = {e:.4e} erg, drift {drift:.1e} over {span:.0} periods"
    ))
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for m in [Molecule::hydrogen(), Molecule::hydrogen_chloride()] {
        let ic = InitialConditions::uncertainty_default(0.16 * ANGSTROM, &m);
        for order in [Order::Second, Order::Third] {
            for n in verify::ORACLE_LEVELS {
                let n = n as f64;
                let grid = dynamics::default_grid(n, order, &m);
                let dev = oracle::closed_form_deviation(n, order, &ic, &m, &grid)
                    .map_err(|e| e.to_string())?;
                if dev >= 1e-6 {
                    return Err(format!("{} {order} n={n}: {dev:.2e}", m.name()));
                }
                worst = worst.max(dev);
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        return Err(format!("took {elapsed:.2?}"));
    }
    Ok(format!("12 runs, worst {worst:.2e}, {elapsed:.2?}"))
}

fn ac6() -> Outcome {
    let mut worst: f64 = 0.0;
    for m in [Molecule::hydrogen(), Molecule::hydrogen_chloride()] {
        let fm = oracle::build_fock(32, &m).map_err(|e| e.to_string())?;
        let report = oracle::check_commutators(&fm);
        if let Some(r) = report.identities.iter().find(|r| r.residual >= 1e-12) {
            return Err(format!("{} {}: {:.2e}", m.name(), r.name, r.residual));
        }
        if !report.h2_commutes_exactly {
            return Err(format!("{}: [H2, H0] is not exactly zero", m.name()));
        }
        worst = worst.max(report.max_residual());
    }
    Ok(format!(
        "dim 32, worst residual {worst:.2e}, [H2,H0] = 0 exactly"
    ))
}

fn ac7() -> Outcome {
    for m in [Molecule::hydrogen(), Molecule::hydrogen_chloride()] {
        let name = m.name();
        let root = hamiltonian::spacing_root(Order::Third, &m).map_err(|e| e.to_string())?;
        let nd3 = stability::n_d3(&m).map_err(|e| e.to_string())?;
        if rel(root, nd3) >= 1e-6 {
            return Err(format!("{name}: spacing root {root} vs n_D3 {nd3}"));
        }
        let nd2 = stability::n_d2(&m);
        let fp = dynamics::frequencies(nd2, Order::Second, &m);
        if fp.w2.abs() >= 1e-12 * m.omega0() {
            return Err(format!("{name}: omega2(n_D2) = {:.2e}", fp.w2));
        }
        if rel(stability::cutoff2(&m), m.alpha() * m.omega0()) >= 1e-12
            || rel(fp.w1, stability::cutoff2(&m)) >= 1e-12
        {
            return Err(format!("{name}: cutoff2 is not alpha*omega0"));
        }
        let stiff = m.with_de(m.de() * 1e6).map_err(|e| e.to_string())?;
        let ic = InitialConditions::uncertainty_default(0.16 * ANGSTROM, &stiff);
        for n in verify::ORACLE_LEVELS {
            let n = n as f64;
            let grid = dynamics::default_grid(n, Order::Harmonic, &stiff);
            let second = dynamics::trajectory(n, Order::Second, &ic, &stiff, &grid)
                .map_err(|e| e.to_string())?;
            let sho = dynamics::trajectory_sho(&ic, &stiff, &grid).map_err(|e| e.to_string())?;
            let scale = sho.max_abs_x();
            let dev = second
                .x
                .iter()
                .zip(&sho.x)
                .map(|(a, b)| (a - b).abs() / scale)
                .fold(0.0, f64::max);
            if dev >= 1e-3 {
                return Err(format!("{name}: harmonic limit n={n} off by {dev:.2e}"));
            }
        }
    }
    Ok("spacing root = n_D3, omega2(n_D2) = 0, cutoff2 = alpha*omega0, De x1e6 matches SHO".into())
}

fn ac8() -> Outcome {
    let mut parts = Vec::new();
    for m in [Molecule::hydrogen(), Molecule::hydrogen_chloride()] {
        let exact = verify::exact_dissociation_level(m.name()).ok_or("no exact level")?;
        let nd3 = stability::n_d3(&m).map_err(|e| e.to_string())?;
        for (order, nd) in [(Order::Second, stability::n_d2(&m)), (Order::Third, nd3)] {
            let floor = stability::last_bound_level(nd).ok_or("unbounded")?;
            if !(exact <= floor && floor <= exact + 2) {
                return Err(format!(
                    "{} {order}: floor {floor} vs exact {exact}",
                    m.name()
                ));
            }
            parts.push(format!("{} {order} {floor}", m.name()));
        }
    }
    Ok(format!("{} (exact 15 / 21)", parts.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1 H2 table values", || table(&Molecule::hydrogen())),
        ("AC2 HCl table values", || {
            table(&Molecule::hydrogen_chloride())
        }),
        ("AC3 third-order cut-off readings", ac3),
        ("AC4 harmonic energy and drift", ac4),
        ("AC5 integrator vs closed forms", ac5),
        ("AC6 commutator identities", ac6),
        ("AC7 internal consistency", ac7),
        ("AC8 dissociation level vs exact", ac8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
