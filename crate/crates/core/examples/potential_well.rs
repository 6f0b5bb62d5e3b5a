//! Morse potential traced by the second-order trajectory, level by level.

use diatomic::params::ANGSTROM;
use diatomic::{potential, InitialConditions, Molecule, Order};

fn main() -> diatomic::Result<()> {
    let h2 = Molecule::hydrogen();
    let ic = InitialConditions::uncertainty_default(0.16 * ANGSTROM, &h2);
    for curve in potential::potential_sweep(Order::Second, &ic, &h2)? {
        let n = curve.n.unwrap_or(0.0);
        let outer = curve.max_v_outer(h2.xe());
        println!(
            "n={n:>2}  max V (x > xe) = {outer:.3e} erg = {:.3} De",
            outer / h2.de()
        );
    }
    Ok(())
}
