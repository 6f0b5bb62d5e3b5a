//! Closed-form expectation-value trajectories.
//!
//! At every order the position obeys
//! x'' + iβ̃x' + (ω̃ₙ² − β̃²/4)x = 0, whose physical (real) solution is a
//! two-frequency beat with ω₁ = ω̃ₙ + β̃/2 and ω₂ = ω̃ₙ − β̃/2.
//! Second order uses β and ωₙ, third order the primed β′ and ω′ₙ.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::hamiltonian::Order;
use crate::params::{Molecule, HBAR};

pub const DEFAULT_SAMPLES: usize = 2048;
pub const DEFAULT_PERIODS: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentumRule {
    Explicit,
    /// p₀ = μω₀x₀
    UncertaintyDefault,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialConditions {
    /// cm
    pub x0: f64,
    /// g·cm/s
    pub p0: f64,
    pub rule: MomentumRule,
}

impl InitialConditions {
    pub fn explicit(x0: f64, p0: f64) -> Self {
        Self {
            x0,
            p0,
            rule: MomentumRule::Explicit,
        }
    }

    pub fn uncertainty_default(x0: f64, m: &Molecule) -> Self {
        Self {
            x0,
            p0: m.mu() * m.omega0() * x0,
            rule: MomentumRule::UncertaintyDefault,
        }
    }
}

/// Frequency components of one level at one order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyPair {
    pub w1: f64,
    pub w2: f64,
    /// ωₙ (second) or ω′ₙ (third); ω₀ at harmonic order.
    pub wn: f64,
    /// β (second) or β′ (third); zero at harmonic order.
    pub beta_eff: f64,
    pub order: Order,
}

impl FrequencyPair {
    /// The slower component, which decides whether the level still oscillates.
    pub fn slow(&self) -> f64 {
        self.w1.min(self.w2)
    }
}

/// (ω̃ₙ, β̃) for a real-valued level.
pub(crate) fn mode(n: f64, order: Order, m: &Molecule) -> (f64, f64) {
    let w0 = m.omega0();
    let alpha = m.alpha();
    let u = n + 0.5;
    let wn = w0 * (1.0 - alpha * u);
    let beta = m.derived.beta;
    match order {
        Order::Harmonic => (w0, 0.0),
        Order::Second => (wn, beta),
        Order::Third => {
            // α²Dₑ²γ₃ with αDₑ = ħω₀/2, finite even when Dₑ is infinite
            let half = 0.5 * HBAR * w0;
            let c = half * half * m.derived.gamma3;
            let beta_p = beta - 24.0 * w0 * c * u;
            let wn_p = wn + 4.0 * w0 * c * (3.0 * u * u + 1.0);
            (wn_p, beta_p)
        }
    }
}

pub fn frequencies(n: f64, order: Order, m: &Molecule) -> FrequencyPair {
    let (wn, beta_eff) = mode(n, order, m);
    FrequencyPair {
        w1: wn + 0.5 * beta_eff,
        w2: wn - 0.5 * beta_eff,
        wn,
        beta_eff,
        order,
    }
}

/// Uniform grid over `periods` periods of angular frequency `omega`.
pub fn time_grid(periods: f64, samples: usize, omega: f64) -> Result<Vec<f64>> {
    if samples < 2 {
        return Err(Error::InvalidGrid("need at least two samples"));
    }
    if !(periods > 0.0 && periods.is_finite()) {
        return Err(Error::InvalidGrid("period count must be positive"));
    }
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidGrid("reference frequency must be positive"));
    }
    let span = periods * 2.0 * PI / omega;
    let last = (samples - 1) as f64;
    Ok((0..samples).map(|i| span * i as f64 / last).collect())
}

/// Frequency a default grid is built on: the slower component if it is
/// still positive, otherwise the faster one, otherwise ω₀.
pub fn reference_frequency(n: f64, order: Order, m: &Molecule) -> f64 {
    let fp = frequencies(n, order, m);
    let tol = 1e-9 * m.omega0();
    [fp.slow(), fp.w1.max(fp.w2), m.omega0()]
        .into_iter()
        .find(|w| *w > tol)
        .unwrap()
}

/// 2048 samples over 10 periods of the slower frequency.
pub fn default_grid(n: f64, order: Order, m: &Molecule) -> Vec<f64> {
    time_grid(
        DEFAULT_PERIODS,
        DEFAULT_SAMPLES,
        reference_frequency(n, order, m),
    )
    .expect("reference frequency is positive")
}

fn check_grid(times: &[f64]) -> Result<()> {
    if times.is_empty() {
        return Err(Error::InvalidGrid("empty time grid"));
    }
    if times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidGrid("non-finite time"));
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid("times must be strictly increasing"));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub n: f64,
    pub order: Order,
    pub times: Vec<f64>,
    /// ⟨x(t)⟩, displacement from equilibrium (cm)
    pub x: Vec<f64>,
    /// μ·d⟨x⟩/dt (g·cm/s)
    pub p: Vec<f64>,
    /// Hooke potential ½μω₀x² (erg)
    pub v: Vec<f64>,
    /// p²/2μ (erg)
    pub k: Vec<f64>,
    /// v + k (erg)
    pub e: Vec<f64>,
}

impl Trajectory {
    fn from_xp(n: f64, order: Order, m: &Molecule, times: &[f64], xp: Vec<(f64, f64)>) -> Self {
        let mu = m.mu();
        let spring = m.derived.k;
        let (x, p): (Vec<f64>, Vec<f64>) = xp.into_iter().unzip();
        let v: Vec<f64> = x.iter().map(|x| 0.5 * spring * x * x).collect();
        let k: Vec<f64> = p.iter().map(|p| 0.5 * p * p / mu).collect();
        let e = v.iter().zip(&k).map(|(v, k)| v + k).collect();
        Self {
            n,
            order,
            times: times.to_vec(),
            x,
            p,
            v,
            k,
            e,
        }
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn max_abs_x(&self) -> f64 {
        self.x.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    /// max |E(t) − E(0)| / E(0)
    pub fn energy_drift(&self) -> f64 {
        let e0 = self.e[0];
        self.e
            .iter()
            .fold(0.0, |acc: f64, e| acc.max((e - e0).abs()))
            / e0.abs()
    }
}

/// Harmonic-oscillator trajectory. With the uncertainty default p₀ = μω₀x₀
/// this is x₀[cos ω₀t + sin ω₀t].
pub fn trajectory_sho(ic: &InitialConditions, m: &Molecule, times: &[f64]) -> Result<Trajectory> {
    check_grid(times)?;
    let w0 = m.omega0();
    let mu = m.mu();
    let b = ic.p0 / (mu * w0);
    let xp = times
        .iter()
        .map(|&t| {
            let (s, c) = (w0 * t).sin_cos();
            (ic.x0 * c + b * s, mu * w0 * (b * c - ic.x0 * s))
        })
        .collect();
    Ok(Trajectory::from_xp(0.0, Order::Harmonic, m, times, xp))
}

/// Amplitude of the sine quadrature, p₀/(μω̃ₙ).
fn sine_amplitude(n: f64, ic: &InitialConditions, m: &Molecule, wn: f64) -> Result<f64> {
    if ic.p0 == 0.0 {
        return Ok(0.0);
    }
    if wn == 0.0 {
        return Err(Error::ZeroModeFrequency { n });
    }
    Ok(ic.p0 / (m.mu() * wn))
}

/// Two-frequency beat trajectory at level `n`.
///
/// x(t) = (x₀/2)[cos ω₁t + cos ω₂t] + (p₀/2μω̃ₙ)[sin ω₁t + sin ω₂t]
pub fn trajectory(
    n: f64,
    order: Order,
    ic: &InitialConditions,
    m: &Molecule,
    times: &[f64],
) -> Result<Trajectory> {
    if order == Order::Harmonic {
        return trajectory_sho(ic, m, times);
    }
    check_grid(times)?;
    let fp = frequencies(n, order, m);
    if !(fp.w1.is_finite() && fp.w2.is_finite()) {
        return Err(Error::InvalidParameter {
            field: "n",
            value: n,
            reason: "frequencies are not finite",
        });
    }
    let b = sine_amplitude(n, ic, m, fp.wn)?;
    let mu = m.mu();
    let xp = times
        .iter()
        .map(|&t| {
            let (s1, c1) = (fp.w1 * t).sin_cos();
            let (s2, c2) = (fp.w2 * t).sin_cos();
            let x = 0.5 * ic.x0 * (c1 + c2) + 0.5 * b * (s1 + s2);
            let dx = 0.5 * ic.x0 * (-fp.w1 * s1 - fp.w2 * s2) + 0.5 * b * (fp.w1 * c1 + fp.w2 * c2);
            (x, mu * dx)
        })
        .collect();
    Ok(Trajectory::from_xp(n, order, m, times, xp))
}

/// Peak of the beat envelope, sqrt(x₀² + (p₀/μω̃ₙ)²).
pub fn amplitude_envelope(
    n: f64,
    order: Order,
    ic: &InitialConditions,
    m: &Molecule,
) -> Result<f64> {
    let (wn, _) = mode(n, order, m);
    let b = sine_amplitude(n, ic, m, wn)?;
    Ok(ic.x0.hypot(b))
}

/// Complex solution e^{−iβ̃t/2}[x₀ cos ω̃ₙt + (p₀/μω̃ₙ) sin ω̃ₙt] of the
/// second-order complex equation. Its real part is [`trajectory`].
pub fn complex_position(
    n: f64,
    order: Order,
    ic: &InitialConditions,
    m: &Molecule,
    t: f64,
) -> Result<C64> {
    let (wn, beta) = mode(n, order, m);
    let b = sine_amplitude(n, ic, m, wn)?;
    let (s, c) = (wn * t).sin_cos();
    Ok(C64::from_polar(1.0, -0.5 * beta * t) * (ic.x0 * c + b * s))
}
