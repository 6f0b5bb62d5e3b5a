//! Stability of each vibrational level and the last stable (dissociation) level.
//!
//! Substituting x(t) = x₀e^{λt} into the equation of motion gives
//! λ² + iβ̃λ + (ω̃ₙ² − β̃²/4) = 0 with roots λ = −iβ̃/2 ± iω̃ₙ. The border
//! between stable and unstable levels is λ₁ = 0, which is where the slower
//! oscillating frequency ω₂ = ω̃ₙ − β̃/2 crosses zero.

use std::fmt;

use num_complex::Complex64 as C64;

use crate::dynamics::{self, mode};
use crate::error::{Error, Result};
use crate::hamiltonian::Order;
use crate::params::{Molecule, HBAR};

/// Relative marginality window on the slow frequency, in units of ω₀.
pub const MARGINAL_TOLERANCE: f64 = 1e-9;

/// Levels classified when the dissociation level is unbounded.
pub const DEFAULT_LEVELS: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicRoots {
    pub lambda1: C64,
    pub lambda2: C64,
    pub order: Order,
    pub n: f64,
    beta: f64,
    wn: f64,
}

impl CharacteristicRoots {
    /// Largest |λ² + iβ̃λ + (ω̃ₙ² − β̃²/4)| over both roots, normalised by the
    /// magnitude of the individual terms.
    pub fn residual(&self) -> f64 {
        let c = self.wn * self.wn - 0.25 * self.beta * self.beta;
        [self.lambda1, self.lambda2]
            .into_iter()
            .map(|l| {
                let value = l * l + C64::i() * self.beta * l + c;
                let scale = l.norm_sqr() + self.beta.abs() * l.norm() + c.abs();
                if scale == 0.0 {
                    0.0
                } else {
                    value.norm() / scale
                }
            })
            .fold(0.0, f64::max)
    }
}

pub fn char_roots(n: f64, order: Order, m: &Molecule) -> CharacteristicRoots {
    let (wn, beta) = mode(n, order, m);
    CharacteristicRoots {
        lambda1: C64::new(0.0, -0.5 * beta + wn),
        lambda2: C64::new(0.0, -0.5 * beta - wn),
        order,
        n,
        beta,
        wn,
    }
}

/// n_D⁽²⁾ = 1/α − 1. Infinite in the harmonic limit.
pub fn n_d2(m: &Molecule) -> f64 {
    1.0 / m.alpha() - 1.0
}

/// Positive root of the third-order dissociation condition,
/// (1/6αDₑ)[−γ₂/γ₃ − 6αDₑ + sqrt((γ₂/γ₃)² − 3α²Dₑ² − 3/γ₃)].
pub fn n_d3(m: &Molecule) -> Result<f64> {
    if m.is_harmonic_limit() {
        return Ok(f64::INFINITY);
    }
    let g2 = m.derived.gamma2;
    let g3 = m.derived.gamma3;
    if g3 == 0.0 {
        return Ok(n_d2(m));
    }
    let alpha_de = 0.5 * HBAR * m.omega0();
    let ratio = g2 / g3;
    // equals Dₑ²(11α² − 12)²/16α², so only rounding can push it below zero
    let mut disc = ratio * ratio - 3.0 * alpha_de * alpha_de - 3.0 / g3;
    if disc < 0.0 && disc > -1e-12 * ratio * ratio {
        disc = 0.0;
    }
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant { value: disc });
    }
    Ok((-ratio - 6.0 * alpha_de + disc.sqrt()) / (6.0 * alpha_de))
}

/// ω_cut-off⁽²⁾ = αω₀.
pub fn cutoff2(m: &Molecule) -> f64 {
    m.alpha() * m.omega0()
}

/// The two readings of the third-order cut-off frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cutoff3 {
    /// ω₀[1 − αn + α²Dₑ²(12n² − 4)γ₃] at n = n_D⁽³⁾, as printed.
    pub literal: f64,
    /// ω′₁ evaluated at n = n_D⁽³⁾.
    pub from_omega1: f64,
}

pub fn cutoff3(m: &Molecule) -> Result<Cutoff3> {
    let nd = n_d3(m)?;
    if !nd.is_finite() {
        return Err(Error::Unbounded);
    }
    let w0 = m.omega0();
    let half = 0.5 * HBAR * w0;
    let c = half * half * m.derived.gamma3;
    Ok(Cutoff3 {
        literal: w0 * (1.0 - m.alpha() * nd + c * (12.0 * nd * nd - 4.0)),
        from_omega1: dynamics::frequencies(nd, Order::Third, m).w1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Stable,
    Marginal,
    Unstable,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Stable => "stable",
            Classification::Marginal => "marginal",
            Classification::Unstable => "unstable",
        }
    }

    pub fn is_bound(self) -> bool {
        self != Classification::Unstable
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelClass {
    pub n: u32,
    pub classification: Classification,
    /// ω₂ or ω′₂ at this level (Hz).
    pub slow_frequency: f64,
}

pub fn classify_level(n: u32, order: Order, m: &Molecule) -> LevelClass {
    let slow = dynamics::frequencies(n as f64, order, m).slow();
    let tol = MARGINAL_TOLERANCE * m.omega0();
    let classification = if slow > tol {
        Classification::Stable
    } else if slow < -tol {
        Classification::Unstable
    } else {
        Classification::Marginal
    };
    LevelClass {
        n,
        classification,
        slow_frequency: slow,
    }
}

/// Classification of levels 0..=n_max.
pub fn classify_levels(m: &Molecule, order: Order, n_max: u32) -> Vec<LevelClass> {
    (0..=n_max).map(|n| classify_level(n, order, m)).collect()
}

/// Highest integer level that is still bound, floor(n_D). `None` when unbounded.
pub fn last_bound_level(nd: f64) -> Option<u32> {
    (nd.is_finite() && nd >= 0.0).then(|| nd.floor() as u32)
}

/// Levels worth scanning: through ceil(n_D⁽²⁾) + 2, or a fixed count when unbounded.
pub fn scan_limit(m: &Molecule) -> u32 {
    let nd = n_d2(m);
    if nd.is_finite() && nd >= 0.0 {
        nd.ceil() as u32 + 2
    } else {
        DEFAULT_LEVELS
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub alpha: f64,
    pub gamma2: f64,
    pub gamma3: f64,
    pub n_d2: f64,
    pub n_d3: f64,
    pub last_bound_n2: Option<u32>,
    pub last_bound_n3: Option<u32>,
    pub cutoff2: f64,
    /// `None` in the harmonic limit.
    pub cutoff3: Option<Cutoff3>,
    pub per_level_second: Vec<LevelClass>,
    pub per_level_third: Vec<LevelClass>,
}

pub fn analyze(m: &Molecule, n_max: Option<u32>) -> Result<StabilityReport> {
    let nd2 = n_d2(m);
    let nd3 = n_d3(m)?;
    let cutoff3 = match cutoff3(m) {
        Ok(c) => Some(c),
        Err(Error::Unbounded) => None,
        Err(e) => return Err(e),
    };
    let n_max = n_max.unwrap_or_else(|| scan_limit(m));
    Ok(StabilityReport {
        alpha: m.alpha(),
        gamma2: m.derived.gamma2,
        gamma3: m.derived.gamma3,
        n_d2: nd2,
        n_d3: nd3,
        last_bound_n2: last_bound_level(nd2),
        last_bound_n3: last_bound_level(nd3),
        cutoff2: cutoff2(m),
        cutoff3,
        per_level_second: classify_levels(m, Order::Second, n_max),
        per_level_third: classify_levels(m, Order::Third, n_max),
    })
}
