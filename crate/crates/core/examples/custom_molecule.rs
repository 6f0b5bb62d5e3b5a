//! Loads a molecule from a TOML file (path as first argument, or a built-in CO
//! description) and runs the full analysis.

use diatomic::params::parse_molecule_config;
use diatomic::{stability, Molecule};

const CO: &str = r#"
name = "CO"
omega0_hz = 4.08e14
De_ev = 11.1
mu_g = 1.14e-23
xe_angstrom = 1.13
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => CO.to_string(),
    };
    let m = Molecule::new(parse_molecule_config(&text)?)?;
    let r = stability::analyze(&m, None)?;
    println!("{}: alpha = {:.4e}", m.name(), r.alpha);
    println!("  n_D2 = {:.2}, last bound {:?}", r.n_d2, r.last_bound_n2);
    println!("  n_D3 = {:.2}, last bound {:?}", r.n_d3, r.last_bound_n3);
    println!("  cutoff2 = {:.3e} Hz", r.cutoff2);
    Ok(())
}
