//! Harmonic trajectory of H2 from x0 = 0.16 Å: total energy and its drift.

use diatomic::params::ANGSTROM;
use diatomic::{dynamics, InitialConditions, Molecule, Order};

fn main() -> diatomic::Result<()> {
    let h2 = Molecule::hydrogen();
    let ic = InitialConditions::uncertainty_default(0.16 * ANGSTROM, &h2);
    let grid = dynamics::default_grid(0.0, Order::Harmonic, &h2);
    let traj = dynamics::trajectory_sho(&ic, &h2, &grid)?;
    println!("E = {:.4e} erg", traj.e[0]);
    println!(
        "relative drift over {} samples: {:.2e}",
        traj.len(),
        traj.energy_drift()
    );
    // first period, in eighths
    for i in (0..traj.len()).step_by(traj.len() / 80).take(9) {
        println!(
            "t={:.3e}  V={:.3e}  K={:.3e}",
            traj.times[i], traj.v[i], traj.k[i]
        );
    }
    Ok(())
}
