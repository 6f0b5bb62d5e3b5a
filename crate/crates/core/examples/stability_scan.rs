//! Level-by-level classification of HCl at both orders.

use diatomic::{stability, Molecule, Order};

fn main() -> diatomic::Result<()> {
    let hcl = Molecule::hydrogen_chloride();
    let report = stability::analyze(&hcl, None)?;
    println!("n_D2 = {:.3}, n_D3 = {:.3}", report.n_d2, report.n_d3);
    for (order, levels) in [
        (Order::Second, &report.per_level_second),
        (Order::Third, &report.per_level_third),
    ] {
        let line: String = levels
            .iter()
            .map(|l| match l.classification.as_str() {
                "stable" => 's',
                "marginal" => 'm',
                _ => 'u',
            })
            .collect();
        println!("{order}: {line}");
    }
    Ok(())
}
