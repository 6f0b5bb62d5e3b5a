//! Expansion coefficients of the vibrational Hamiltonian and its eigenvalues.
//!
//! The anharmonic Hamiltonians are polynomials in the harmonic one,
//! H⁽²⁾ = H₀ + γ₂H₀² and H⁽³⁾ = H⁽²⁾ + γ₃H₀³, so every eigenvalue is the same
//! polynomial evaluated at E⁰ₙ = ħω₀(n + ½).

use std::fmt;

use crate::error::{Error, Result};
use crate::params::{Molecule, HBAR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Harmonic,
    Second,
    Third,
}

impl Order {
    pub const ALL: [Order; 3] = [Order::Harmonic, Order::Second, Order::Third];

    pub fn as_str(self) -> &'static str {
        match self {
            Order::Harmonic => "harmonic",
            Order::Second => "second",
            Order::Third => "third",
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "harmonic" | "sho" | "first" | "1" => Ok(Order::Harmonic),
            "second" | "2" => Ok(Order::Second),
            "third" | "3" => Ok(Order::Third),
            other => Err(format!(
                "unknown order `{other}` (expected harmonic, second or third)"
            )),
        }
    }
}

/// γ₂ = −1/(4Dₑ). Vanishes in the harmonic limit.
pub fn gamma2(de: f64) -> f64 {
    -1.0 / (4.0 * de)
}

/// γ₃ = −1 / (4Dₑ²(3/α + 13α/4 − 6)).
///
/// The bracket has no real root, so the singular branch is only reachable
/// through non-finite input.
pub fn gamma3(alpha: f64, de: f64) -> Result<f64> {
    if alpha == 0.0 {
        return Ok(0.0);
    }
    let bracket = 3.0 / alpha + 13.0 * alpha / 4.0 - 6.0;
    if bracket == 0.0 || !bracket.is_finite() {
        return Err(Error::SingularGamma3 { alpha });
    }
    Ok(-1.0 / (4.0 * de * de * bracket))
}

/// Harmonic eigenvalue ħω₀(n + ½) for a real-valued level.
pub fn harmonic_energy(n: f64, m: &Molecule) -> f64 {
    HBAR * m.omega0() * (n + 0.5)
}

/// Eigenvalue at a real-valued level index.
pub fn energy(n: f64, order: Order, m: &Molecule) -> f64 {
    let e0 = harmonic_energy(n, m);
    let d = &m.derived;
    match order {
        Order::Harmonic => e0,
        Order::Second => e0 + d.gamma2 * e0 * e0,
        Order::Third => e0 + d.gamma2 * e0 * e0 + d.gamma3 * e0 * e0 * e0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub n: u32,
    pub order: Order,
    /// erg
    pub value: f64,
}

pub fn energy_level(n: u32, order: Order, m: &Molecule) -> EnergyLevel {
    EnergyLevel {
        n,
        order,
        value: energy(n as f64, order, m),
    }
}

/// E(n + 1) − E(n).
pub fn level_spacing(n: f64, order: Order, m: &Molecule) -> f64 {
    energy(n + 1.0, order, m) - energy(n, order, m)
}

/// Real level at which the spacing to the next level vanishes.
///
/// Second order: the spacing is affine in n. Third order: it is quadratic in
/// u = n + ½ and the positive root is returned.
pub fn spacing_root(order: Order, m: &Molecule) -> Result<f64> {
    let e = HBAR * m.omega0();
    let g2 = m.derived.gamma2;
    let g3 = m.derived.gamma3;
    if order == Order::Harmonic || g2 == 0.0 {
        return Err(Error::Unbounded);
    }
    if order == Order::Second || g3 == 0.0 {
        // ħω₀[1 + 2γ₂ħω₀(n + 1)] = 0
        return Ok(-1.0 / (2.0 * g2 * e) - 1.0);
    }
    // spacing / ħω₀ = 1 + γ₂e(2u + 1) + γ₃e²(3u² + 3u + 1)
    let qa = 3.0 * g3 * e * e;
    let qb = 2.0 * g2 * e + 3.0 * g3 * e * e;
    let qc = 1.0 + g2 * e + g3 * e * e;
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant { value: disc });
    }
    let q = -0.5 * (qb + qb.signum() * disc.sqrt());
    let (r1, r2) = (q / qa, qc / q);
    Ok(r1.max(r2) - 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma2_table_values() {
        assert!(rel(Molecule::hydrogen().derived.gamma2, -3.09e10) < 0.005);
        assert!(rel(Molecule::hydrogen_chloride().derived.gamma2, -3.55e10) < 0.005);
        assert_eq!(gamma2(f64::INFINITY), 0.0);
    }

    #[test]
    fn gamma3_table_values() {
        assert!(rel(Molecule::hydrogen().derived.gamma3, -7.69e19) < 0.005);
        assert!(rel(Molecule::hydrogen_chloride().derived.gamma3, -7.42e19) < 0.005);
        assert_eq!(gamma3(0.0, f64::INFINITY).unwrap(), 0.0);
    }

    #[test]
    fn gamma3_rejects_non_finite_alpha() {
        assert!(matches!(
            gamma3(f64::NAN, 1.0),
            Err(Error::SingularGamma3 { .. })
        ));
    }

    #[test]
    fn ground_state_energy() {
        let h2 = Molecule::hydrogen();
        let e = energy_level(0, Order::Harmonic, &h2).value;
        assert_eq!(e, 0.5 * HBAR * 8.29e14);
        assert_eq!(format!("{e:.2e}"), "4.37e-13");
    }

    #[test]
    fn harmonic_spacing_is_uniform() {
        let h2 = Molecule::hydrogen();
        let s = level_spacing(0.0, Order::Harmonic, &h2);
        assert!(rel(s, HBAR * 8.29e14) < 1e-14);
        assert_eq!(format!("{s:.2e}"), "8.74e-13");
    }

    #[test]
    fn anharmonic_orders_collapse_without_de() {
        let m = Molecule::hydrogen().with_de(f64::INFINITY).unwrap();
        for n in 0..30 {
            let h = energy_level(n, Order::Harmonic, &m).value;
            assert_eq!(energy_level(n, Order::Second, &m).value, h);
            assert_eq!(energy_level(n, Order::Third, &m).value, h);
        }
    }

    #[test]
    fn third_equals_second_without_gamma3() {
        let m = Molecule::hydrogen().without_gamma3();
        for n in 0..30 {
            assert_eq!(
                energy_level(n, Order::Third, &m).value,
                energy_level(n, Order::Second, &m).value
            );
        }
    }

    #[test]
    fn second_order_spacing_changes_sign_past_dissociation() {
        let h2 = Molecule::hydrogen();
        let root = 1.0 / h2.alpha() - 1.0;
        let below = root.floor();
        assert!(level_spacing(below, Order::Second, &h2) > 0.0);
        assert!(level_spacing(below + 1.0, Order::Second, &h2) < 0.0);
        // 17 -> 18 is the last positive step, a few percent of the first
        let s17 = level_spacing(17.0, Order::Second, &h2);
        assert!(s17 > 0.0 && s17 < 0.05 * level_spacing(0.0, Order::Second, &h2));
    }

    #[test]
    fn second_order_root_matches_alpha() {
        for m in [Molecule::hydrogen(), Molecule::hydrogen_chloride()] {
            let root = spacing_root(Order::Second, &m).unwrap();
            assert!(rel(root, 1.0 / m.alpha() - 1.0) < 1e-12);
            assert!(level_spacing(root, Order::Second, &m).abs() < 1e-12 * HBAR * m.omega0());
        }
    }

    #[test]
    fn third_order_root_for_hydrogen() {
        let h2 = Molecule::hydrogen();
        let root = spacing_root(Order::Third, &h2).unwrap();
        assert!((root - 16.5).abs() < 0.05, "{root}");
        // independent check: bisection of the spacing itself
        let (mut lo, mut hi) = (0.0, 1.0 / h2.alpha());
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if level_spacing(mid, Order::Third, &h2) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!(rel(root, lo) < 1e-10);
    }

    #[test]
    fn harmonic_root_is_unbounded() {
        assert_eq!(
            spacing_root(Order::Harmonic, &Molecule::hydrogen()),
            Err(Error::Unbounded)
        );
    }

    #[test]
    fn order_parsing() {
        assert_eq!("Third".parse::<Order>().unwrap(), Order::Third);
        assert!("fourth".parse::<Order>().is_err());
    }
}
