//! Command front end: molecule resolution, the five commands and their CSV output.
//!
//! Every command renders to a string so the output can be golden-tested
//! without touching the filesystem. The binary only parses flags and writes
//! the result.

pub mod csv;
pub mod verify;

use std::fmt;
use std::path::{Path, PathBuf};

use crate::dynamics::{self, InitialConditions, MomentumRule};
use crate::error::Error;
use crate::hamiltonian::{self, Order};
use crate::oracle;
use crate::params::{self, Molecule, ANGSTROM};
use crate::potential;
use crate::stability::{self, LevelClass};

use self::csv::{num, Document};
use self::verify::Status;

pub const DEFAULT_X0_ANGSTROM: f64 = 0.16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Trajectory,
    Scan,
    Potential,
    Verify,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Trajectory => "trajectory",
            Command::Scan => "scan",
            Command::Potential => "potential",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Built-in name or path to a molecule file.
    pub molecule: Option<String>,
    pub order: Option<Order>,
    pub n: Option<u32>,
    pub x0_angstrom: Option<f64>,
    /// `None` selects p₀ = μω₀x₀.
    pub p0: Option<f64>,
    pub periods: Option<f64>,
    pub samples: Option<usize>,
    pub out: Option<PathBuf>,
    pub de_erg: Option<f64>,
    pub fock_dim: Option<usize>,
    pub sweep: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            molecule: None,
            order: None,
            n: None,
            x0_angstrom: None,
            p0: None,
            periods: None,
            samples: None,
            out: None,
            de_erg: None,
            fock_dim: None,
            sweep: false,
        }
    }

    pub fn molecule(mut self, name: impl Into<String>) -> Self {
        self.molecule = Some(name.into());
        self
    }

    pub fn order(mut self, order: Order) -> Self {
        self.order = Some(order);
        self
    }

    pub fn level(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    fn reject_unused(&self) -> Result<(), CliError> {
        use Command::*;
        let cmd = self.command;
        let mut unused: Vec<&str> = Vec::new();
        let mut flag = |set: bool, name: &'static str, allowed: &[Command]| {
            if set && !allowed.contains(&cmd) {
                unused.push(name);
            }
        };
        flag(
            self.order.is_some(),
            "--order",
            &[Trajectory, Scan, Potential],
        );
        flag(self.n.is_some(), "--n", &[Analyze, Trajectory, Potential]);
        flag(
            self.x0_angstrom.is_some(),
            "--x0-angstrom",
            &[Trajectory, Potential],
        );
        flag(self.p0.is_some(), "--p0", &[Trajectory, Potential]);
        flag(
            self.periods.is_some(),
            "--periods",
            &[Trajectory, Potential],
        );
        flag(
            self.samples.is_some(),
            "--samples",
            &[Trajectory, Potential],
        );
        flag(self.fock_dim.is_some(), "--fock-dim", &[Verify]);
        flag(self.sweep, "--sweep", &[Potential]);
        match unused.first() {
            Some(name) => Err(CliError::Usage(format!(
                "{name} has no effect on `{}`",
                cmd.as_str()
            ))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Model(Error),
}

impl CliError {
    /// 2 for every usage or configuration problem.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Model(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    pub text: String,
    /// False only when `verify` found a failing check.
    pub success: bool,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        Self {
            text,
            success: true,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

/// Looks up a built-in by name, otherwise reads the argument as a file path.
pub fn resolve_molecule(arg: &str, de_override: Option<f64>) -> Result<Molecule, CliError> {
    let mut params = match params::builtin_molecules()
        .into_iter()
        .find(|m| m.name.eq_ignore_ascii_case(arg))
    {
        Some(p) => p,
        None if Path::new(arg).is_file() => params::load_molecule_config(Path::new(arg))?,
        None => {
            return Err(CliError::Usage(format!(
                "--molecule: `{arg}` is neither a built-in (H2, HCl) nor a readable file"
            )))
        }
    };
    if let Some(de) = de_override {
        params.de = de;
    }
    Ok(Molecule::new(params)?)
}

fn required_molecule(cfg: &RunConfig) -> Result<Molecule, CliError> {
    let arg = cfg
        .molecule
        .as_deref()
        .ok_or_else(|| CliError::Usage("--molecule is required".into()))?;
    resolve_molecule(arg, cfg.de_erg)
}

pub fn execute(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    cfg.reject_unused()?;
    match cfg.command {
        Command::Analyze => run_analyze(cfg),
        Command::Trajectory => run_trajectory(cfg),
        Command::Scan => run_scan(cfg),
        Command::Potential => run_potential(cfg),
        Command::Verify => run_verify(cfg),
    }
}

fn level_num(v: f64) -> String {
    num(v)
}

fn class_rows(doc: &mut Document, classes: &[LevelClass], order: Order) {
    for c in classes {
        doc.row([
            format!("classification_n{}", c.n),
            c.classification.to_string(),
            "-".into(),
            order.to_string(),
        ]);
    }
}

/// Parameter summary and per-level classification.
pub fn run_analyze(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let m = required_molecule(cfg)?;
    let report = stability::analyze(&m, cfg.n)?;
    let mut doc = Document::new();
    doc.meta("molecule", m.name())
        .meta("command", "analyze")
        .meta("omega0_hz", num(m.omega0()))
        .meta("De_erg", num(m.de()))
        .meta("mu_g", num(m.mu()));
    let bound = |v: Option<u32>| v.map_or("unbounded".to_string(), |n| n.to_string());
    doc.row(["quantity", "value", "unit", "order"]);
    doc.row(["alpha".into(), num(report.alpha), "1".into(), "-".into()]);
    doc.row([
        "gamma2".into(),
        num(report.gamma2),
        "1/erg".into(),
        "second".into(),
    ]);
    doc.row([
        "n_D".into(),
        level_num(report.n_d2),
        "level".into(),
        "second".into(),
    ]);
    doc.row([
        "last_bound_n".into(),
        bound(report.last_bound_n2),
        "level".into(),
        "second".into(),
    ]);
    doc.row([
        "cutoff".into(),
        num(report.cutoff2),
        "Hz".into(),
        "second".into(),
    ]);
    doc.row([
        "gamma3".into(),
        num(report.gamma3),
        "1/erg^2".into(),
        "third".into(),
    ]);
    doc.row([
        "n_D".into(),
        level_num(report.n_d3),
        "level".into(),
        "third".into(),
    ]);
    doc.row([
        "last_bound_n".into(),
        bound(report.last_bound_n3),
        "level".into(),
        "third".into(),
    ]);
    let (lit, w1) = match report.cutoff3 {
        Some(c) => (num(c.literal), num(c.from_omega1)),
        None => ("unbounded".into(), "unbounded".into()),
    };
    doc.row(["cutoff_literal".into(), lit, "Hz".into(), "third".into()]);
    doc.row(["cutoff_from_omega1".into(), w1, "Hz".into(), "third".into()]);
    class_rows(&mut doc, &report.per_level_second, Order::Second);
    class_rows(&mut doc, &report.per_level_third, Order::Third);
    Ok(CommandOutput::ok(doc.finish()))
}

struct Sampling {
    ic: InitialConditions,
    periods: f64,
    samples: usize,
}

fn sampling(cfg: &RunConfig, m: &Molecule) -> Result<Sampling, CliError> {
    let x0 = cfg.x0_angstrom.unwrap_or(DEFAULT_X0_ANGSTROM);
    if !x0.is_finite() {
        return Err(CliError::Usage("--x0-angstrom must be finite".into()));
    }
    let ic = match cfg.p0 {
        Some(p0) if p0.is_finite() => InitialConditions::explicit(x0 * ANGSTROM, p0),
        Some(_) => return Err(CliError::Usage("--p0 must be finite".into())),
        None => InitialConditions::uncertainty_default(x0 * ANGSTROM, m),
    };
    let periods = cfg.periods.unwrap_or(dynamics::DEFAULT_PERIODS);
    if !(periods > 0.0 && periods.is_finite()) {
        return Err(CliError::Usage("--periods must be positive".into()));
    }
    let samples = cfg.samples.unwrap_or(dynamics::DEFAULT_SAMPLES);
    if samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    Ok(Sampling {
        ic,
        periods,
        samples,
    })
}

fn order_and_level(cfg: &RunConfig) -> Result<(Order, u32), CliError> {
    let order = cfg.order.unwrap_or(Order::Second);
    let n = cfg.n.unwrap_or(0);
    if order == Order::Harmonic && n != 0 {
        return Err(CliError::Usage(format!(
            "--n {n} conflicts with --order harmonic (the harmonic solution has no level dependence)"
        )));
    }
    Ok((order, n))
}

fn sampling_meta(doc: &mut Document, m: &Molecule, s: &Sampling) {
    let rule = match s.ic.rule {
        MomentumRule::Explicit => "explicit",
        MomentumRule::UncertaintyDefault => "uncertainty_default",
    };
    doc.meta("molecule", m.name())
        .meta("x0_cm", num(s.ic.x0))
        .meta("p0", num(s.ic.p0))
        .meta("p0_rule", rule)
        .meta("periods", num(s.periods))
        .meta("samples", s.samples);
}

/// Time series t, x, p, V, K, E at one level.
pub fn run_trajectory(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let m = required_molecule(cfg)?;
    let (order, n) = order_and_level(cfg)?;
    let s = sampling(cfg, &m)?;
    let nf = n as f64;
    let grid = dynamics::time_grid(
        s.periods,
        s.samples,
        dynamics::reference_frequency(nf, order, &m),
    )?;
    let traj = dynamics::trajectory(nf, order, &s.ic, &m, &grid)?;
    let mut doc = Document::new();
    doc.meta("command", "trajectory")
        .meta("order", order)
        .meta("n", n);
    sampling_meta(&mut doc, &m, &s);
    doc.row(["t", "x", "p", "V", "K", "E"]);
    for i in 0..traj.len() {
        doc.row([
            num(traj.times[i]),
            num(traj.x[i]),
            num(traj.p[i]),
            num(traj.v[i]),
            num(traj.k[i]),
            num(traj.e[i]),
        ]);
    }
    Ok(CommandOutput::ok(doc.finish()))
}

/// Levels scanned by `scan`: through ceil(n_D) + 2 at the chosen order.
pub fn scan_levels(m: &Molecule, order: Order) -> Result<u32, CliError> {
    let nd = match order {
        Order::Harmonic => f64::INFINITY,
        Order::Second => stability::n_d2(m),
        Order::Third => stability::n_d3(m)?,
    };
    Ok(if nd.is_finite() && nd >= 0.0 {
        nd.ceil() as u32 + 2
    } else {
        stability::DEFAULT_LEVELS
    })
}

/// Frequencies, energy, spacing and classification per level.
pub fn run_scan(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let m = required_molecule(cfg)?;
    let order = cfg.order.unwrap_or(Order::Second);
    let n_max = scan_levels(&m, order)?;
    let classes = stability::classify_levels(&m, order, n_max);
    let mut doc = Document::new();
    doc.meta("molecule", m.name())
        .meta("command", "scan")
        .meta("order", order);
    doc.row(["n", "w1", "w2", "energy", "spacing", "classification"]);
    for c in &classes {
        let fp = dynamics::frequencies(c.n as f64, order, &m);
        doc.row([
            c.n.to_string(),
            num(fp.w1),
            num(fp.w2),
            num(hamiltonian::energy_level(c.n, order, &m).value),
            num(hamiltonian::level_spacing(c.n as f64, order, &m)),
            c.classification.to_string(),
        ]);
    }
    Ok(CommandOutput::ok(doc.finish()))
}

/// Potential along trajectories, one level or a sweep through the bound levels.
pub fn run_potential(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let m = required_molecule(cfg)?;
    if cfg.sweep && cfg.n.is_some() {
        return Err(CliError::Usage(
            "--sweep and --n are mutually exclusive".into(),
        ));
    }
    let (order, n) = order_and_level(cfg)?;
    let s = sampling(cfg, &m)?;
    let levels: Vec<u32> = if cfg.sweep {
        let nd = match order {
            Order::Harmonic => 0.0,
            Order::Second => stability::n_d2(&m),
            Order::Third => stability::n_d3(&m)?,
        };
        let last = stability::last_bound_level(nd).ok_or(Error::Unbounded)?;
        (0..=last).collect()
    } else {
        vec![n]
    };
    let mut doc = Document::new();
    doc.meta("command", "potential")
        .meta("order", order)
        .meta("xe_cm", num(m.xe()))
        .meta("De_erg", num(m.de()));
    sampling_meta(&mut doc, &m, &s);
    doc.row(["n", "t", "x", "V", "V_hook", "kind"]);
    for n in levels {
        let nf = n as f64;
        let grid = dynamics::time_grid(
            s.periods,
            s.samples,
            dynamics::reference_frequency(nf, order, &m),
        )?;
        let curve = potential::potential_on_trajectory(nf, order, &s.ic, &m, &grid)?;
        for i in 0..curve.times.len() {
            let x = curve.x_values[i];
            doc.row([
                n.to_string(),
                num(curve.times[i]),
                num(x),
                num(curve.v_values[i]),
                num(potential::hook(x, &m)),
                curve.kind.as_str().to_string(),
            ]);
        }
    }
    Ok(CommandOutput::ok(doc.finish()))
}

/// Runs the oracle, consistency and regression checks.
pub fn run_verify(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let molecules = match cfg.molecule.as_deref() {
        Some(arg) => vec![resolve_molecule(arg, cfg.de_erg)?],
        None => {
            if cfg.de_erg.is_some() {
                return Err(CliError::Usage("--De-erg requires --molecule".into()));
            }
            vec![Molecule::hydrogen(), Molecule::hydrogen_chloride()]
        }
    };
    let dim = cfg.fock_dim.unwrap_or(oracle::DEFAULT_FOCK_DIM);
    if dim < 4 {
        return Err(CliError::Usage("--fock-dim must be at least 4".into()));
    }
    let mut checks = Vec::new();
    for m in &molecules {
        checks.extend(verify::molecule_checks(m, dim)?);
    }
    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
    let mut doc = Document::new();
    doc.meta("command", "verify")
        .meta("fock_dim", dim)
        .meta("passed", passed)
        .meta("failed", failed)
        .meta("status", if failed == 0 { "pass" } else { "fail" });
    doc.row(["check", "status", "value", "threshold"]);
    for c in &checks {
        doc.row([
            c.name.clone(),
            c.status.as_str().into(),
            num(c.value),
            num(c.threshold),
        ]);
    }
    Ok(CommandOutput {
        text: doc.finish(),
        success: failed == 0,
    })
}
