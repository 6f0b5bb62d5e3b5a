use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use diatomic::cli::{self, Command, RunConfig};
use diatomic::Order;

#[derive(Parser)]
#[command(
    name = "diatomic",
    version,
    about = "Vibrational dynamics and dissociation of diatomic molecules"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Derived parameters, dissociation levels and cut-off frequencies
    Analyze(Common),
    /// Time series of x, p and the energies at one level
    Trajectory(Common),
    /// Frequencies and classification level by level
    Scan(Common),
    /// Morse potential along trajectories
    Potential(Common),
    /// Numerical and reference checks; exits 1 on failure
    Verify(Common),
}

#[derive(Args)]
struct Common {
    /// Built-in name (H2, HCl) or path to a molecule file
    #[arg(value_name = "MOLECULE")]
    positional: Option<String>,
    #[arg(long)]
    molecule: Option<String>,
    /// harmonic, second or third
    #[arg(long)]
    order: Option<Order>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long = "x0-angstrom", allow_negative_numbers = true)]
    x0_angstrom: Option<f64>,
    /// Initial momentum (g cm/s); defaults to mu*omega0*x0
    #[arg(long, allow_negative_numbers = true)]
    p0: Option<f64>,
    #[arg(long)]
    periods: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the dissociation energy (erg); `inf` gives the harmonic limit
    #[arg(long = "De-erg")]
    de_erg: Option<f64>,
    #[arg(long = "fock-dim")]
    fock_dim: Option<usize>,
    /// Every bound level instead of a single --n (potential only)
    #[arg(long)]
    sweep: bool,
}

fn config(command: Command, c: Common) -> Result<RunConfig, String> {
    let molecule = match (c.positional, c.molecule) {
        (Some(a), Some(b)) if a != b => {
            return Err(format!("molecule given twice: `{a}` and --molecule `{b}`"))
        }
        (a, b) => a.or(b),
    };
    Ok(RunConfig {
        command,
        molecule,
        order: c.order,
        n: c.n,
        x0_angstrom: c.x0_angstrom,
        p0: c.p0,
        periods: c.periods,
        samples: c.samples,
        out: c.out,
        de_erg: c.de_erg,
        fock_dim: c.fock_dim,
        sweep: c.sweep,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (command, common) = match cli.command {
        Sub::Analyze(c) => (Command::Analyze, c),
        Sub::Trajectory(c) => (Command::Trajectory, c),
        Sub::Scan(c) => (Command::Scan, c),
        Sub::Potential(c) => (Command::Potential, c),
        Sub::Verify(c) => (Command::Verify, c),
    };
    let cfg = match config(command, common) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match cli::execute(&cfg) {
        Ok(out) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &out.text)
                    .map_err(|e| format!("--out {}: {e}", path.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(msg) = written {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
