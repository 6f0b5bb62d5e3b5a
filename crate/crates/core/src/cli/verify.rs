//! Checks behind the `verify` command.

use crate::dynamics::{self, InitialConditions};
use crate::error::Result;
use crate::hamiltonian::{self, Order};
use crate::oracle;
use crate::params::{Molecule, ANGSTROM, HBAR};
use crate::stability;

/// Relative tolerance on the three-significant-figure reference values.
pub const TABLE_TOLERANCE: f64 = 0.01;
pub const COMMUTATOR_TOLERANCE: f64 = 1e-12;
pub const HEISENBERG_TOLERANCE: f64 = 1e-10;
pub const ORACLE_TOLERANCE: f64 = 1e-6;
pub const ROOT_TOLERANCE: f64 = 1e-6;
pub const ENERGY_DRIFT_TOLERANCE: f64 = 1e-10;

/// Levels compared between the integrator and the closed forms.
pub const ORACLE_LEVELS: [u32; 3] = [0, 5, 12];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Reported for the record, never fails the run.
    Recorded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Recorded => "recorded",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub value: f64,
    pub threshold: f64,
}

impl Check {
    fn below(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        let status = if value < threshold {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            name: name.into(),
            status,
            value,
            threshold,
        }
    }

    fn flag(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            value: if ok { 1.0 } else { 0.0 },
            threshold: 1.0,
        }
    }

    fn recorded(name: impl Into<String>, value: f64, reference: f64) -> Self {
        Self {
            name: name.into(),
            status: Status::Recorded,
            value,
            threshold: reference,
        }
    }
}

/// Reference values for one molecule.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub molecule: String,
    pub gamma2: f64,
    pub gamma3: f64,
    pub n_d2: f64,
    pub n_d3: f64,
    pub cutoff2: f64,
    pub cutoff3: f64,
}

/// Reported dissociation levels from exact treatments.
pub fn exact_dissociation_level(name: &str) -> Option<u32> {
    match name {
        "H2" => Some(15),
        "HCl" => Some(21),
        _ => None,
    }
}

pub fn table_reference(name: &str) -> Option<TableRow> {
    let row = |gamma2, cutoff2, n_d2, gamma3, cutoff3, n_d3| TableRow {
        molecule: name.to_string(),
        gamma2,
        gamma3,
        n_d2,
        n_d3,
        cutoff2,
        cutoff3,
    };
    match name {
        "H2" => Some(row(-3.09e10, 4.48e13, 17.5, -7.69e19, 8.96e13, 16.5)),
        "HCl" => Some(row(-3.55e10, 2.21e13, 23.6, -7.42e19, 4.43e13, 22.6)),
        _ => None,
    }
}

/// Computed counterpart of [`TableRow`]; `cutoff3` is the ω′₁ reading.
pub fn table_row(m: &Molecule) -> Result<TableRow> {
    Ok(TableRow {
        molecule: m.name().to_string(),
        gamma2: m.derived.gamma2,
        gamma3: m.derived.gamma3,
        n_d2: stability::n_d2(m),
        n_d3: stability::n_d3(m)?,
        cutoff2: stability::cutoff2(m),
        cutoff3: stability::cutoff3(m)?.from_omega1,
    })
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Regression of a computed row against the reference. The third-order
/// cut-off is recorded, not asserted.
pub fn table_checks(computed: &TableRow, reference: &TableRow) -> Vec<Check> {
    let name = &reference.molecule;
    let pairs = [
        ("gamma2", computed.gamma2, reference.gamma2),
        ("gamma3", computed.gamma3, reference.gamma3),
        ("n_D2", computed.n_d2, reference.n_d2),
        ("n_D3", computed.n_d3, reference.n_d3),
        ("cutoff2", computed.cutoff2, reference.cutoff2),
    ];
    let mut out: Vec<Check> = pairs
        .iter()
        .map(|(q, got, want)| {
            Check::below(
                format!("table/{name}/{q}"),
                rel(*got, *want),
                TABLE_TOLERANCE,
            )
        })
        .collect();
    out.push(Check::recorded(
        format!("table/{name}/cutoff3_not_asserted"),
        computed.cutoff3,
        reference.cutoff3,
    ));
    out
}

fn cutoff3_checks(m: &Molecule) -> Result<Vec<Check>> {
    let name = m.name();
    let nd3 = stability::n_d3(m)?;
    let c = stability::cutoff3(m)?;
    let w0 = m.omega0();
    let fp = dynamics::frequencies(nd3, Order::Third, m);
    let half = 0.5 * HBAR * w0;
    // printed bracket 12n² − 4 vs the expanded 12n² + 1
    let offset = 5.0 * w0 * half * half * m.derived.gamma3;
    Ok(vec![
        Check::below(
            format!("cutoff3/{name}/omega2_prime_at_nD3"),
            fp.w2.abs() / w0,
            1e-6,
        ),
        Check::below(
            format!("cutoff3/{name}/from_omega1_equals_beta_prime"),
            rel(c.from_omega1, fp.beta_eff),
            1e-9,
        ),
        Check::below(
            format!("cutoff3/{name}/literal_bracket_offset"),
            ((c.from_omega1 - c.literal) - offset).abs() / w0,
            1e-9,
        ),
        Check::recorded(format!("cutoff3/{name}/literal"), c.literal, c.from_omega1),
    ])
}

pub fn commutator_checks(m: &Molecule, dim: usize) -> Result<Vec<Check>> {
    let fm = oracle::build_fock(dim, m)?;
    let report = oracle::check_commutators(&fm);
    let name = m.name();
    let mut out: Vec<Check> = report
        .identities
        .iter()
        .map(|r| {
            Check::below(
                format!("commutator/{name}/dim{dim}/{}", r.name),
                r.residual,
                COMMUTATOR_TOLERANCE,
            )
        })
        .collect();
    out.push(Check::flag(
        format!("commutator/{name}/dim{dim}/[H2,H0] = 0"),
        report.h2_commutes_exactly,
    ));
    out.push(Check::flag(
        format!("commutator/{name}/dim{dim}/[H3,H0] = 0"),
        report.h3_commutes_exactly,
    ));
    for order in Order::ALL {
        let r = oracle::heisenberg_rhs_check(&fm, m, 3, order)?;
        out.push(Check::below(
            format!("heisenberg/{name}/n3/{order}"),
            r.max_deviation,
            HEISENBERG_TOLERANCE,
        ));
    }
    Ok(out)
}

pub fn oracle_checks(m: &Molecule, x0: f64) -> Result<Vec<Check>> {
    let ic = InitialConditions::uncertainty_default(x0, m);
    let mut out = Vec::new();
    for order in [Order::Second, Order::Third] {
        for n in ORACLE_LEVELS {
            let n = n as f64;
            let grid = dynamics::default_grid(n, order, m);
            let dev = oracle::closed_form_deviation(n, order, &ic, m, &grid)?;
            out.push(Check::below(
                format!("ode/{}/{order}/n{n}", m.name()),
                dev,
                ORACLE_TOLERANCE,
            ));
        }
    }
    Ok(out)
}

fn consistency_checks(m: &Molecule, x0: f64) -> Result<Vec<Check>> {
    let name = m.name();
    let nd2 = stability::n_d2(m);
    let nd3 = stability::n_d3(m)?;
    let mut out = vec![
        Check::below(
            format!("consistency/{name}/spacing_root_vs_nD3"),
            rel(hamiltonian::spacing_root(Order::Third, m)?, nd3),
            ROOT_TOLERANCE,
        ),
        Check::below(
            format!("consistency/{name}/omega2_at_nD2"),
            dynamics::frequencies(nd2, Order::Second, m).w2.abs() / m.omega0(),
            1e-12,
        ),
        Check::below(
            format!("consistency/{name}/cutoff2_is_omega1_at_nD2"),
            rel(
                dynamics::frequencies(nd2, Order::Second, m).w1,
                stability::cutoff2(m),
            ),
            1e-12,
        ),
    ];
    let ic = InitialConditions::uncertainty_default(x0, m);
    let sho = dynamics::trajectory_sho(&ic, m, &dynamics::default_grid(0.0, Order::Harmonic, m))?;
    out.push(Check::below(
        format!("energy/{name}/harmonic_drift"),
        sho.energy_drift(),
        ENERGY_DRIFT_TOLERANCE,
    ));
    if let Some(exact) = exact_dissociation_level(name) {
        for (order, nd) in [(Order::Second, nd2), (Order::Third, nd3)] {
            let floor = stability::last_bound_level(nd).unwrap_or(u32::MAX);
            out.push(Check::flag(
                format!("exact/{name}/{order}/floor_nD_within_2_of_{exact}"),
                floor >= exact && floor <= exact + 2,
            ));
        }
    }
    Ok(out)
}

/// Everything `verify` runs for one molecule.
pub fn molecule_checks(m: &Molecule, dim: usize) -> Result<Vec<Check>> {
    let x0 = 0.16 * ANGSTROM;
    let mut out = Vec::new();
    if let Some(reference) = table_reference(m.name()) {
        out.extend(table_checks(&table_row(m)?, &reference));
        if m.name() == "H2" {
            let sho_e = dynamics::trajectory_sho(
                &InitialConditions::uncertainty_default(x0, m),
                m,
                &[0.0],
            )?
            .e[0];
            out.push(Check::below(
                "table/H2/fig1_total_energy",
                rel(sho_e, 1.47e-12),
                TABLE_TOLERANCE,
            ));
        }
    }
    out.extend(cutoff3_checks(m)?);
    out.extend(consistency_checks(m, x0)?);
    out.extend(commutator_checks(m, dim)?);
    out.extend(oracle_checks(m, x0)?);
    Ok(out)
}
