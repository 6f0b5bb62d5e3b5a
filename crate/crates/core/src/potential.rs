//! Morse and Hooke potentials, and the potential traced out along a trajectory.
//!
//! Trajectories are displacements from equilibrium, so the potentials are
//! evaluated at the absolute separation x_e + x(t).

use crate::dynamics::{self, InitialConditions};
use crate::error::{Error, Result};
use crate::hamiltonian::Order;
use crate::params::Molecule;
use crate::stability;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    MorseExact,
    Hook,
    MorseOnSecondOrderTraj,
    MorseOnThirdOrderTraj,
}

impl PotentialKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PotentialKind::MorseExact => "morse_exact",
            PotentialKind::Hook => "hook",
            PotentialKind::MorseOnSecondOrderTraj => "morse_on_second_order_traj",
            PotentialKind::MorseOnThirdOrderTraj => "morse_on_third_order_traj",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotentialCurve {
    pub kind: PotentialKind,
    /// Level the curve was traced at, if it came from a trajectory.
    pub n: Option<f64>,
    /// Sample times, empty for curves on a spatial grid.
    pub times: Vec<f64>,
    /// Absolute separation (cm).
    pub x_values: Vec<f64>,
    /// erg
    pub v_values: Vec<f64>,
}

impl PotentialCurve {
    pub fn max_v(&self) -> f64 {
        self.v_values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest potential sampled on the dissociation side, x > x_e.
    pub fn max_v_outer(&self, xe: f64) -> f64 {
        self.x_values
            .iter()
            .zip(&self.v_values)
            .filter(|(x, _)| **x > xe)
            .map(|(_, v)| *v)
            .fold(0.0, f64::max)
    }
}

/// Dₑ(1 − e^{−a(x − x_e)})². Falls back to the Hooke form when Dₑ is infinite.
pub fn morse(x: f64, m: &Molecule) -> f64 {
    if m.de().is_infinite() {
        return hook(x, m);
    }
    let s = -(-m.derived.a * (x - m.xe())).exp_m1();
    m.de() * s * s
}

/// ½μω₀²(x − x_e)²
pub fn hook(x: f64, m: &Molecule) -> f64 {
    let d = x - m.xe();
    0.5 * m.derived.k * d * d
}

fn spatial_curve(
    kind: PotentialKind,
    f: fn(f64, &Molecule) -> f64,
    m: &Molecule,
    x_min: f64,
    x_max: f64,
    samples: usize,
) -> Result<PotentialCurve> {
    if samples < 2 || x_min.is_nan() || x_max.is_nan() || x_max <= x_min {
        return Err(Error::InvalidGrid(
            "need x_max > x_min and at least two samples",
        ));
    }
    let step = (x_max - x_min) / (samples - 1) as f64;
    let x_values: Vec<f64> = (0..samples).map(|i| x_min + step * i as f64).collect();
    let v_values = x_values.iter().map(|&x| f(x, m)).collect();
    Ok(PotentialCurve {
        kind,
        n: None,
        times: Vec::new(),
        x_values,
        v_values,
    })
}

pub fn morse_curve(m: &Molecule, x_min: f64, x_max: f64, samples: usize) -> Result<PotentialCurve> {
    spatial_curve(PotentialKind::MorseExact, morse, m, x_min, x_max, samples)
}

pub fn hook_curve(m: &Molecule, x_min: f64, x_max: f64, samples: usize) -> Result<PotentialCurve> {
    spatial_curve(PotentialKind::Hook, hook, m, x_min, x_max, samples)
}

/// Potential along the closed-form trajectory at level `n`.
///
/// Harmonic order substitutes the harmonic solution into the Hooke form;
/// second and third order substitute the beat solutions into the Morse form.
pub fn potential_on_trajectory(
    n: f64,
    order: Order,
    ic: &InitialConditions,
    m: &Molecule,
    times: &[f64],
) -> Result<PotentialCurve> {
    let traj = dynamics::trajectory(n, order, ic, m, times)?;
    let (kind, f): (_, fn(f64, &Molecule) -> f64) = match order {
        Order::Harmonic => (PotentialKind::Hook, hook),
        Order::Second => (PotentialKind::MorseOnSecondOrderTraj, morse),
        Order::Third => (PotentialKind::MorseOnThirdOrderTraj, morse),
    };
    let x_values: Vec<f64> = traj.x.iter().map(|x| m.xe() + x).collect();
    let v_values = x_values.iter().map(|&x| f(x, m)).collect();
    Ok(PotentialCurve {
        kind,
        n: Some(n),
        times: traj.times,
        x_values,
        v_values,
    })
}

/// One curve per level from 0 through floor(n_D) at the given order, each on
/// its default time grid.
pub fn potential_sweep(
    order: Order,
    ic: &InitialConditions,
    m: &Molecule,
) -> Result<Vec<PotentialCurve>> {
    let nd = match order {
        Order::Harmonic => 0.0,
        Order::Second => stability::n_d2(m),
        Order::Third => stability::n_d3(m)?,
    };
    let last = stability::last_bound_level(nd).ok_or(Error::Unbounded)?;
    (0..=last)
        .map(|n| {
            let n = n as f64;
            potential_on_trajectory(n, order, ic, m, &dynamics::default_grid(n, order, m))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn well_minimum_and_plateau() {
        for m in [Molecule::hydrogen(), Molecule::hydrogen_chloride()] {
            assert_eq!(morse(m.xe(), &m), 0.0);
            assert_eq!(hook(m.xe(), &m), 0.0);
            let far = m.xe() + 20.0 / m.derived.a;
            assert!((morse(far, &m) - m.de()).abs() < 1e-6 * m.de());
        }
    }

    #[test]
    fn curvature_is_spring_constant() {
        let m = Molecule::hydrogen();
        let h = 1e-4 / m.derived.a;
        let xe = m.xe();
        let d2 = (morse(xe + h, &m) - 2.0 * morse(xe, &m) + morse(xe - h, &m)) / (h * h);
        assert!(rel(d2, m.mu() * m.omega0() * m.omega0()) < 1e-4);
    }

    #[test]
    fn hook_at_figure_displacement() {
        let h2 = Molecule::hydrogen();
        let v = hook(h2.xe() + 0.16e-8, &h2);
        assert_eq!(format!("{v:.2e}"), "7.35e-13");
        assert!(rel(2.0 * v, 1.47e-12) < 0.01);
    }

    #[test]
    fn hook_is_leading_taylor_term() {
        // morse − hook ≈ −Dₑa³δ³ near the minimum
        let m = Molecule::hydrogen();
        let c = m.de() * m.derived.a.powi(3);
        for k in 0..=20 {
            let d = 1e-11 * 10f64.powf(k as f64 / 10.0);
            let diff = (morse(m.xe() + d, &m) - hook(m.xe() + d, &m)).abs();
            let ratio = diff / (c * d * d * d);
            assert!(ratio > 0.8 && ratio < 1.05, "delta = {d}: {ratio}");
        }
    }

    #[test]
    fn inner_and_outer_branches() {
        let m = Molecule::hydrogen_chloride();
        let curve = morse_curve(&m, 0.5 * m.xe(), m.xe() + 15.0 / m.derived.a, 500).unwrap();
        for (x, v) in curve.x_values.iter().zip(&curve.v_values) {
            if *x >= m.xe() {
                assert!(*v <= m.de());
            }
        }
        assert!(morse(0.3 * m.xe(), &m) > m.de());
    }

    #[test]
    fn ground_level_curve_follows_hooke() {
        let h2 = Molecule::hydrogen();
        let ic = InitialConditions::uncertainty_default(0.01e-8, &h2);
        let grid = dynamics::default_grid(0.0, Order::Second, &h2);
        let curve = potential_on_trajectory(0.0, Order::Second, &ic, &h2, &grid).unwrap();
        let hooke: Vec<f64> = curve.x_values.iter().map(|&x| hook(x, &h2)).collect();
        let peak = hooke.iter().copied().fold(0.0, f64::max);
        for (v, h) in curve.v_values.iter().zip(&hooke) {
            assert!((v - h).abs() < 0.05 * peak);
        }
    }

    #[test]
    fn near_dissociation_reaches_the_plateau() {
        let h2 = Molecule::hydrogen();
        let ic = InitialConditions::uncertainty_default(0.16e-8, &h2);
        let n = stability::n_d2(&h2).floor();
        let grid = dynamics::default_grid(n, Order::Second, &h2);
        let curve = potential_on_trajectory(n, Order::Second, &ic, &h2, &grid).unwrap();
        assert!(curve.max_v_outer(h2.xe()) > 0.9 * h2.de());
        assert!(curve.v_values.iter().all(|v| *v >= 0.0));
    }

    #[test]
    fn sweep_covers_bound_levels() {
        let h2 = Molecule::hydrogen();
        let ic = InitialConditions::uncertainty_default(0.16e-8, &h2);
        let curves = potential_sweep(Order::Third, &ic, &h2).unwrap();
        assert_eq!(curves.len(), 17);
        assert!(curves
            .iter()
            .all(|c| c.kind == PotentialKind::MorseOnThirdOrderTraj));
        // the outer excursion grows towards dissociation
        let first = curves[0].max_v_outer(h2.xe());
        let last = curves[16].max_v_outer(h2.xe());
        assert!(last > 5.0 * first && last > 0.9 * h2.de());
    }

    #[test]
    fn harmonic_limit_morse_is_hooke() {
        let m = Molecule::hydrogen().with_de(f64::INFINITY).unwrap();
        let x = m.xe() + 0.3e-8;
        assert_eq!(morse(x, &m), hook(x, &m));
    }
}
