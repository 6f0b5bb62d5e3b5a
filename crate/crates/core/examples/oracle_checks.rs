//! Truncated Fock-space commutators and the adaptive integrator against the
//! closed-form trajectories.

use diatomic::params::ANGSTROM;
use diatomic::{dynamics, oracle, InitialConditions, Molecule, Order};

fn main() -> diatomic::Result<()> {
    let m = Molecule::hydrogen();
    let fm = oracle::build_fock(32, &m)?;
    let report = oracle::check_commutators(&fm);
    for r in &report.identities {
        println!("{:<24} {:.2e}", r.name, r.residual);
    }
    println!("[H2,H0] exactly zero: {}", report.h2_commutes_exactly);

    let ic = InitialConditions::uncertainty_default(0.16 * ANGSTROM, &m);
    for order in [Order::Second, Order::Third] {
        for n in [0.0, 5.0, 12.0] {
            let grid = dynamics::default_grid(n, order, &m);
            let dev = oracle::closed_form_deviation(n, order, &ic, &m, &grid)?;
            println!("{order} n={n:>2}: max deviation {dev:.2e}");
        }
    }
    Ok(())
}
