//! Physical constants, molecule definitions and derived scalar parameters.
//!
//! Everything is CGS: erg, g, cm, s. Frequencies are angular and labelled Hz,
//! no factor of 2π is ever applied.
//!
//! A [`Molecule`] is the validated pairing of raw [`MoleculeParams`] with the
//! [`DerivedParams`] computed from them. Every other module takes `&Molecule`.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::hamiltonian;

/// Reduced Planck constant in erg·s. Fixed, not configurable.
pub const HBAR: f64 = 1.0546e-27;

/// One ångström in cm.
pub const ANGSTROM: f64 = 1.0e-8;

/// One electron-volt in erg.
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
}

impl PhysicalConstants {
    pub const CGS: Self = Self { hbar: HBAR };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CGS
    }
}

/// Raw spectroscopic constants of one diatomic species.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeParams {
    pub name: String,
    /// Natural angular frequency ω₀ (Hz).
    pub omega0: f64,
    /// Dissociation energy Dₑ (erg). `f64::INFINITY` selects the harmonic limit.
    pub de: f64,
    /// Reduced mass μ (g).
    pub mu: f64,
    /// Equilibrium bond length x_e (cm). Only used when building potential curves.
    pub xe: f64,
}

impl MoleculeParams {
    pub fn new(name: impl Into<String>, omega0: f64, de: f64, mu: f64, xe: f64) -> Self {
        Self {
            name: name.into(),
            omega0,
            de,
            mu,
            xe,
        }
    }

    /// Same molecule with a different dissociation energy.
    pub fn with_de(&self, de: f64) -> Self {
        Self { de, ..self.clone() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.omega0.is_finite() && self.omega0 > 0.0) {
            return Err(Error::InvalidParameter {
                field: "omega0",
                value: self.omega0,
                reason: "must be finite and positive",
            });
        }
        // +inf is the harmonic limit and is accepted.
        if self.de.is_nan() || self.de <= 0.0 {
            return Err(Error::InvalidParameter {
                field: "De",
                value: self.de,
                reason: "must be positive",
            });
        }
        if !(self.mu.is_finite() && self.mu > 0.0) {
            return Err(Error::InvalidParameter {
                field: "mu",
                value: self.mu,
                reason: "must be finite and positive",
            });
        }
        if !(self.xe.is_finite() && self.xe >= 0.0) {
            return Err(Error::InvalidParameter {
                field: "xe",
                value: self.xe,
                reason: "must be finite and non-negative",
            });
        }
        Ok(())
    }
}

/// Dimensionless and derived quantities of a molecule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// α = ħω₀ / 2Dₑ.
    pub alpha: f64,
    /// β = αω₀ (Hz).
    pub beta: f64,
    /// Hooke spring constant k = μω₀² (erg/cm²).
    pub k: f64,
    /// Morse range parameter a = sqrt(μω₀² / 2Dₑ) (1/cm).
    pub a: f64,
    /// Second-order Hamiltonian coefficient (1/erg).
    pub gamma2: f64,
    /// Third-order Hamiltonian coefficient (1/erg²).
    pub gamma3: f64,
}

pub fn derive_params(m: &MoleculeParams) -> Result<DerivedParams> {
    m.validate()?;
    let alpha = HBAR * m.omega0 / (2.0 * m.de);
    Ok(DerivedParams {
        alpha,
        beta: alpha * m.omega0,
        k: m.mu * m.omega0 * m.omega0,
        a: (0.5 * m.mu * m.omega0 * m.omega0 / m.de).sqrt(),
        gamma2: hamiltonian::gamma2(m.de),
        gamma3: hamiltonian::gamma3(alpha, m.de)?,
    })
}

/// A validated molecule: raw constants plus everything derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct Molecule {
    pub params: MoleculeParams,
    pub derived: DerivedParams,
}

impl Molecule {
    pub fn new(params: MoleculeParams) -> Result<Self> {
        let derived = derive_params(&params)?;
        Ok(Self { params, derived })
    }

    pub fn name(&self) -> &str {
        &self.params.name
    }

    pub fn omega0(&self) -> f64 {
        self.params.omega0
    }

    pub fn de(&self) -> f64 {
        self.params.de
    }

    pub fn mu(&self) -> f64 {
        self.params.mu
    }

    pub fn xe(&self) -> f64 {
        self.params.xe
    }

    pub fn alpha(&self) -> f64 {
        self.derived.alpha
    }

    /// True when Dₑ is infinite and every anharmonic correction vanishes.
    pub fn is_harmonic_limit(&self) -> bool {
        self.derived.alpha == 0.0
    }

    /// Copy with a new Dₑ, re-deriving every parameter.
    pub fn with_de(&self, de: f64) -> Result<Self> {
        Self::new(self.params.with_de(de))
    }

    /// Copy with γ₃ forced to zero. Used to check that third-order results
    /// collapse onto second-order ones.
    pub fn without_gamma3(&self) -> Self {
        let mut out = self.clone();
        out.derived.gamma3 = 0.0;
        out
    }

    pub fn by_name(name: &str) -> Option<Self> {
        builtin_molecules()
            .into_iter()
            .find(|m| m.name.eq_ignore_ascii_case(name))
            .map(|p| Self::new(p).expect("built-in molecules are valid"))
    }

    pub fn hydrogen() -> Self {
        Self::by_name("H2").unwrap()
    }

    pub fn hydrogen_chloride() -> Self {
        Self::by_name("HCl").unwrap()
    }
}

/// Built-in species. The HCl bond length (1.27 Å) is a textbook value and is
/// only used for potential curves.
pub fn builtin_molecules() -> Vec<MoleculeParams> {
    vec![
        MoleculeParams::new("H2", 8.29e14, 8.09e-12, 8.35e-25, 0.74 * ANGSTROM),
        MoleculeParams::new("HCl", 5.44e14, 7.05e-12, 1.61e-24, 1.27 * ANGSTROM),
    ]
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoleculeFile {
    name: String,
    omega0_hz: f64,
    #[serde(rename = "De_erg")]
    de_erg: Option<f64>,
    #[serde(rename = "De_ev")]
    de_ev: Option<f64>,
    mu_g: f64,
    #[serde(default)]
    xe_angstrom: f64,
}

/// Parse a molecule config (`key = value` lines, TOML syntax).
///
/// Keys: `name`, `omega0_hz`, `De_erg` (or `De_ev`), `mu_g`, `xe_angstrom`.
/// Unknown keys are rejected.
pub fn parse_molecule_config(text: &str) -> Result<MoleculeParams> {
    let file: MoleculeFile =
        toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))?;
    let de = match (file.de_erg, file.de_ev) {
        (Some(erg), None) => erg,
        (None, Some(ev)) => ev * ELECTRON_VOLT,
        (Some(_), Some(_)) => {
            return Err(Error::Config(
                "`De_erg` and `De_ev` are mutually exclusive".into(),
            ))
        }
        (None, None) => return Err(Error::Config("missing field `De_erg`".into())),
    };
    Ok(MoleculeParams::new(
        file.name,
        file.omega0_hz,
        de,
        file.mu_g,
        file.xe_angstrom * ANGSTROM,
    ))
}

pub fn load_molecule_config(path: &Path) -> Result<MoleculeParams> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    parse_molecule_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn hydrogen_alpha() {
        let h2 = Molecule::hydrogen();
        assert!(rel(h2.alpha(), 0.05) < 0.1);
        assert_eq!(format!("{:.5}", h2.alpha()), "0.05403");
    }

    #[test]
    fn hydrogen_chloride_alpha() {
        let hcl = Molecule::hydrogen_chloride();
        assert_eq!(format!("{:.2}", hcl.alpha()), "0.04");
    }

    #[test]
    fn builtins_have_reported_masses() {
        let all = builtin_molecules();
        let h2 = all.iter().find(|m| m.name == "H2").unwrap();
        let hcl = all.iter().find(|m| m.name == "HCl").unwrap();
        assert_eq!(h2.mu, 8.35e-25);
        assert_eq!(hcl.mu, 1.61e-24);
        for m in &all {
            derive_params(m).unwrap();
        }
    }

    #[test]
    fn derived_formulas() {
        let h2 = Molecule::hydrogen();
        let d = h2.derived;
        assert!(rel(d.beta / h2.omega0(), d.alpha) < 1e-15);
        assert_eq!(d.k, h2.mu() * h2.omega0() * h2.omega0());
        assert!(rel(d.a * d.a, 0.5 * d.k / h2.de()) < 1e-15);
    }

    #[test]
    fn doubling_de_halves_alpha() {
        let h2 = Molecule::hydrogen();
        let doubled = h2.with_de(2.0 * h2.de()).unwrap();
        assert_eq!(doubled.alpha(), h2.alpha() / 2.0);
    }

    #[test]
    fn rejects_non_positive_fields() {
        let base = builtin_molecules().remove(0);
        let cases = [
            (
                MoleculeParams {
                    omega0: 0.0,
                    ..base.clone()
                },
                "omega0",
            ),
            (
                MoleculeParams {
                    de: -1.0,
                    ..base.clone()
                },
                "De",
            ),
            (
                MoleculeParams {
                    mu: 0.0,
                    ..base.clone()
                },
                "mu",
            ),
            (
                MoleculeParams {
                    xe: -1.0,
                    ..base.clone()
                },
                "xe",
            ),
        ];
        for (p, name) in cases {
            match derive_params(&p) {
                Err(Error::InvalidParameter { field, .. }) => assert_eq!(field, name),
                other => panic!("expected error naming {name}, got {other:?}"),
            }
        }
    }

    #[test]
    fn infinite_de_is_the_harmonic_limit() {
        let m = Molecule::hydrogen().with_de(f64::INFINITY).unwrap();
        assert!(m.is_harmonic_limit());
        assert_eq!(m.derived.gamma2, 0.0);
        assert_eq!(m.derived.gamma3, 0.0);
    }

    #[test]
    fn config_round_trip() {
        let text = r#"
            # hydrogen, written out by hand
            name = "H2-file"
            omega0_hz = 8.29e14
            De_erg = 8.09e-12
            mu_g = 8.35e-25
            xe_angstrom = 0.74
        "#;
        let p = parse_molecule_config(text).unwrap();
        assert_eq!(p.name, "H2-file");
        assert_eq!(p.de, 8.09e-12);
        assert!(rel(p.xe, 0.74e-8) < 1e-15);
    }

    #[test]
    fn config_accepts_ev() {
        let text = "name = \"x\"\nomega0_hz = 1e14\nDe_ev = 4.5\nmu_g = 1e-24\n";
        let p = parse_molecule_config(text).unwrap();
        assert!(rel(p.de, 4.5 * ELECTRON_VOLT) < 1e-15);
    }

    #[test]
    fn config_rejects_unknown_key() {
        let text = "name = \"x\"\nomega0_hz = 1e14\nDe_erg = 1e-12\nmu_g = 1e-24\ncolour = 3\n";
        let err = parse_molecule_config(text).unwrap_err().to_string();
        assert!(err.contains("colour"), "{err}");
    }
}
