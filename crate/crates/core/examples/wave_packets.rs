//! Beat envelopes at increasing levels: the slow mode stretches the packet as
//! n approaches dissociation.

use diatomic::params::ANGSTROM;
use diatomic::{dynamics, InitialConditions, Molecule, Order};

fn main() -> diatomic::Result<()> {
    let h2 = Molecule::hydrogen();
    let ic = InitialConditions::uncertainty_default(0.16 * ANGSTROM, &h2);
    for order in [Order::Second, Order::Third] {
        println!("{order} order");
        for n in [0u32, 4, 8, 12, 16] {
            let n = n as f64;
            let fp = dynamics::frequencies(n, order, &h2);
            let grid = dynamics::default_grid(n, order, &h2);
            let traj = dynamics::trajectory(n, order, &ic, &h2, &grid)?;
            println!(
                "  n={n:>2}  w1={:.3e}  w2={:.3e}  envelope={:.3e} cm  max|x|={:.3e} cm",
                fp.w1,
                fp.w2,
                dynamics::amplitude_envelope(n, order, &ic, &h2)?,
                traj.max_abs_x()
            );
        }
    }
    Ok(())
}
