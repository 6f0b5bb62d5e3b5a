//! Derived parameters, dissociation levels and cut-offs for the built-in molecules.

use diatomic::cli::verify;
use diatomic::{stability, Molecule};

fn main() -> diatomic::Result<()> {
    println!(
        "{:<5} {:>12} {:>12} {:>8} {:>8} {:>12} {:>12} {:>12}",
        "", "gamma2", "gamma3", "n_D2", "n_D3", "cutoff2", "cut3 lit", "cut3 w1'"
    );
    for m in [Molecule::hydrogen(), Molecule::hydrogen_chloride()] {
        let row = verify::table_row(&m)?;
        let c3 = stability::cutoff3(&m)?;
        println!(
            "{:<5} {:>12.3e} {:>12.3e} {:>8.2} {:>8.2} {:>12.3e} {:>12.3e} {:>12.3e}",
            m.name(),
            row.gamma2,
            row.gamma3,
            row.n_d2,
            row.n_d3,
            row.cutoff2,
            c3.literal,
            c3.from_omega1
        );
    }
    Ok(())
}
