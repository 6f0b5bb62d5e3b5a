//! Independent checks of the closed forms.
//!
//! Two routes, neither of which goes through [`crate::dynamics`]:
//!
//! * direct RK4 integration of the coupled complex equations for ⟨x⟩ and ⟨p⟩,
//!   with coefficients written out from the Heisenberg equations;
//! * a truncated Fock-space matrix representation of the ladder, position,
//!   momentum and Hamiltonian operators, used to check the commutator
//!   identities and the coefficients of the Heisenberg equations.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::hamiltonian::Order;
use crate::params::{Molecule, HBAR};

/// Per-step error target of the integrator (relative to the oscillation amplitude).
pub const STEP_TOLERANCE: f64 = 1e-9;

/// Largest step in units of 1/ω, where ω is the fastest frequency present.
const MAX_STEP_PHASE: f64 = 0.01;

pub const DEFAULT_FOCK_DIM: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexState {
    /// ⟨x⟩ (cm)
    pub x: C64,
    /// ⟨p⟩ (g·cm/s)
    pub p: C64,
    /// s
    pub t: f64,
}

/// Right-hand side x' = a·p + b·x, p' = −c·x + b·p.
#[derive(Debug, Clone, Copy)]
struct Coupled {
    a: f64,
    c: f64,
    b: C64,
}

impl Coupled {
    /// Coefficients of d⟨x⟩/dt and d⟨p⟩/dt at level n.
    fn new(n: f64, order: Order, m: &Molecule) -> Self {
        let w0 = m.omega0();
        let mu = m.mu();
        let k = m.derived.k;
        let alpha = m.alpha();
        let beta = alpha * w0;
        let u = n + 0.5;
        // ħω₀/2 = αDₑ
        let ade = 0.5 * HBAR * w0;
        let g3 = m.derived.gamma3;
        let (ratio, damp) = match order {
            Order::Harmonic => (1.0, 0.0),
            Order::Second => (1.0 - alpha * u, beta),
            Order::Third => (
                (1.0 - alpha * u) + 4.0 * ade * ade * (3.0 * u * u + 1.0) * g3,
                // β[1 − 24αDₑ²(n + ½)γ₃]
                beta - 24.0 * w0 * ade * ade * u * g3,
            ),
        };
        Self {
            a: ratio / mu,
            c: k * ratio,
            b: C64::new(0.0, -0.5 * damp),
        }
    }

    fn rhs(&self, x: C64, p: C64) -> (C64, C64) {
        (self.a * p + self.b * x, -self.c * x + self.b * p)
    }

    fn rk4(&self, x: C64, p: C64, h: f64) -> (C64, C64) {
        let (k1x, k1p) = self.rhs(x, p);
        let (k2x, k2p) = self.rhs(x + 0.5 * h * k1x, p + 0.5 * h * k1p);
        let (k3x, k3p) = self.rhs(x + 0.5 * h * k2x, p + 0.5 * h * k2p);
        let (k4x, k4p) = self.rhs(x + h * k3x, p + h * k3p);
        (
            x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
            p + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p),
        )
    }

    /// Fastest angular rate in the system.
    fn rate(&self) -> f64 {
        (self.a * self.c).abs().sqrt() + self.b.norm()
    }
}

/// Integrates the coupled complex equations of motion on `times`.
///
/// The initial ⟨p⟩ is chosen so that μ·d⟨x⟩/dt at t = 0 has real part `ic.p0`,
/// which is how the closed-form solutions read their momentum argument.
/// The step is fixed at 0.01/ω and halved whenever one full RK4 step and two
/// half steps disagree by more than [`STEP_TOLERANCE`].
pub fn integrate_coupled(
    n: f64,
    order: Order,
    ic: &crate::dynamics::InitialConditions,
    m: &Molecule,
    times: &[f64],
) -> Result<Vec<ComplexState>> {
    if times.is_empty() || times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid("times must be strictly increasing"));
    }
    let sys = Coupled::new(n, order, m);
    let p_start = if ic.p0 == 0.0 {
        0.0
    } else if sys.a == 0.0 {
        return Err(Error::ZeroModeFrequency { n });
    } else {
        ic.p0 / (m.mu() * sys.a)
    };

    let x_scale = ic
        .x0
        .hypot(p_start / (m.mu() * m.omega0()))
        .max(f64::MIN_POSITIVE);
    let p_scale = m.mu() * m.omega0() * x_scale;
    let err_norm = |(x1, p1): (C64, C64), (x2, p2): (C64, C64)| {
        ((x1 - x2).norm() / x_scale).max((p1 - p2).norm() / p_scale) / 15.0
    };

    let h_max = MAX_STEP_PHASE / sys.rate();
    let h_min = h_max * 1e-12;
    let mut h = h_max;
    let mut x = C64::new(ic.x0, 0.0);
    let mut p = C64::new(p_start, 0.0);
    let mut t = 0.0;
    let mut out = Vec::with_capacity(times.len());

    for &target in times {
        while target - t > 0.0 {
            let step = h.min(target - t);
            let full = sys.rk4(x, p, step);
            let (hx, hp) = sys.rk4(x, p, 0.5 * step);
            let half = sys.rk4(hx, hp, 0.5 * step);
            if err_norm(full, half) > STEP_TOLERANCE {
                h = 0.5 * step;
                if h < h_min {
                    return Err(Error::StepSizeUnderflow { t, h });
                }
                continue;
            }
            (x, p) = half;
            // snap onto the grid point to avoid drift from repeated additions
            t = if step == target - t { target } else { t + step };
            if h < h_max && err_norm(full, half) < STEP_TOLERANCE / 64.0 {
                h = (2.0 * h).min(h_max);
            }
        }
        out.push(ComplexState { x, p, t: target });
    }
    Ok(out)
}

/// max |Re x_integrated − x_closed| / max |x_closed| over `times`.
pub fn closed_form_deviation(
    n: f64,
    order: Order,
    ic: &crate::dynamics::InitialConditions,
    m: &Molecule,
    times: &[f64],
) -> Result<f64> {
    let numeric = integrate_coupled(n, order, ic, m, times)?;
    let closed = crate::dynamics::trajectory(n, order, ic, m, times)?;
    let peak = closed.max_abs_x();
    let worst = numeric
        .iter()
        .zip(&closed.x)
        .map(|(s, x)| (s.x.re - x).abs())
        .fold(0.0, f64::max);
    Ok(worst / peak)
}

type Mat = DMatrix<C64>;

/// Truncated Fock-space operators.
#[derive(Debug, Clone, PartialEq)]
pub struct FockMatrices {
    pub dim: usize,
    pub a_lower: Mat,
    pub a_raise: Mat,
    pub x_op: Mat,
    pub p_op: Mat,
    pub h0: Mat,
    pub h2: Mat,
    pub h3: Mat,
    pub omega0: f64,
    pub mu: f64,
}

impl FockMatrices {
    pub fn hamiltonian(&self, order: Order) -> &Mat {
        match order {
            Order::Harmonic => &self.h0,
            Order::Second => &self.h2,
            Order::Third => &self.h3,
        }
    }

    fn spring(&self) -> f64 {
        self.mu * self.omega0 * self.omega0
    }
}

pub fn build_fock(dim: usize, m: &Molecule) -> Result<FockMatrices> {
    if dim < 4 {
        return Err(Error::InvalidParameter {
            field: "dim",
            value: dim as f64,
            reason: "Fock truncation needs at least four states",
        });
    }
    let w0 = m.omega0();
    let mu = m.mu();
    let a_lower = Mat::from_fn(dim, dim, |r, c| {
        if c == r + 1 {
            C64::new((c as f64).sqrt(), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let a_raise = a_lower.adjoint();
    let x_op = (&a_raise + &a_lower) * C64::new((HBAR / (2.0 * mu * w0)).sqrt(), 0.0);
    let p_op = (&a_raise - &a_lower) * C64::new(0.0, (HBAR * mu * w0 / 2.0).sqrt());
    let ident = Mat::identity(dim, dim);
    let h0 = (&a_raise * &a_lower + &ident * C64::new(0.5, 0.0)) * C64::new(HBAR * w0, 0.0);
    let h0_sq = &h0 * &h0;
    let h0_cube = &h0_sq * &h0;
    let h2 = &h0 + &h0_sq * C64::new(m.derived.gamma2, 0.0);
    let h3 = &h2 + &h0_cube * C64::new(m.derived.gamma3, 0.0);
    Ok(FockMatrices {
        dim,
        a_lower,
        a_raise,
        x_op,
        p_op,
        h0,
        h2,
        h3,
        omega0: w0,
        mu,
    })
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    a * b - b * a
}

/// Largest entry modulus on rows/cols 0..=dim−3.
fn interior_max(m: &Mat) -> f64 {
    let keep = m.nrows() - 2;
    m.view((0, 0), (keep, keep))
        .iter()
        .fold(0.0, |acc, z| acc.max(z.norm()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityResidual {
    pub name: &'static str,
    /// max|lhs − rhs| / max|rhs| on the interior block
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub dim: usize,
    pub identities: Vec<IdentityResidual>,
    /// [H⁽²⁾, H₀] is exactly the zero matrix.
    pub h2_commutes_exactly: bool,
    /// [H⁽³⁾, H₀] is exactly the zero matrix.
    pub h3_commutes_exactly: bool,
}

impl CommutatorReport {
    pub fn max_residual(&self) -> f64 {
        self.identities
            .iter()
            .map(|r| r.residual)
            .fold(0.0, f64::max)
    }
}

pub fn check_commutators(fm: &FockMatrices) -> CommutatorReport {
    let i = C64::i();
    let hbar = C64::new(HBAR, 0.0);
    let mu = fm.mu;
    let k = fm.spring();
    let w0sq = fm.omega0 * fm.omega0;
    let (x, p, h0) = (&fm.x_op, &fm.p_op, &fm.h0);
    let h0_sq = h0 * h0;
    let h0_cube = &h0_sq * h0;
    let ident = Mat::identity(fm.dim, fm.dim);

    let cases: Vec<(&'static str, Mat, Mat)> = vec![
        (
            "[H0,x] = -i hbar p/mu",
            commutator(h0, x),
            p * (-i * hbar / mu),
        ),
        (
            "[H0^2,x] = -i hbar (2 p H0 + i hbar k x)/mu",
            commutator(&h0_sq, x),
            ((p * h0) * C64::new(2.0, 0.0) + x * (i * hbar * k)) * (-i * hbar / mu),
        ),
        ("[H0,p] = i hbar k x", commutator(h0, p), x * (i * hbar * k)),
        (
            "[H0^2,p] = i hbar k (2 x H0 - i hbar p/mu)",
            commutator(&h0_sq, p),
            ((x * h0) * C64::new(2.0, 0.0) - p * (i * hbar / mu)) * (i * hbar * k),
        ),
        (
            "[H0^3,x] = (-i hbar/mu)(3 p H0^2 + 3 i hbar k x H0 + hbar^2 w0^2 p)",
            commutator(&h0_cube, x),
            ((p * &h0_sq) * C64::new(3.0, 0.0)
                + (x * h0) * (3.0 * i * hbar * k)
                + p * (hbar * hbar * w0sq))
                * (-i * hbar / mu),
        ),
        (
            "[H0^3,p] = 3 i hbar k x H0^2 + 3 hbar^2 w0^2 p H0 + i mu hbar^3 w0^4 x",
            commutator(&h0_cube, p),
            (x * &h0_sq) * (3.0 * i * hbar * k)
                + (p * h0) * (3.0 * hbar * hbar * w0sq)
                + x * (i * mu * hbar * hbar * hbar * w0sq * w0sq),
        ),
        ("[x,p] = i hbar", commutator(x, p), &ident * (i * hbar)),
    ];

    let identities = cases
        .into_iter()
        .map(|(name, lhs, rhs)| IdentityResidual {
            name,
            residual: interior_max(&(lhs - &rhs)) / interior_max(&rhs),
        })
        .collect();

    let is_zero = |m: &Mat| m.iter().all(|z| z.re == 0.0 && z.im == 0.0);
    CommutatorReport {
        dim: fm.dim,
        identities,
        h2_commutes_exactly: is_zero(&commutator(&fm.h2, h0)),
        h3_commutes_exactly: is_zero(&commutator(&fm.h3, h0)),
    }
}

/// Coefficients of d⟨x⟩/dt = A⟨p⟩ + B⟨x⟩ and d⟨p⟩/dt = C⟨x⟩ + D⟨p⟩
/// recovered from matrix elements of (i/ħ)[H, ·] on the neighbours of |n⟩,
/// next to the values the closed-form equations of motion predict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeisenbergReport {
    pub n: usize,
    pub order: Order,
    pub x_eq: (C64, C64),
    pub p_eq: (C64, C64),
    pub expected_x_eq: (C64, C64),
    pub expected_p_eq: (C64, C64),
    /// Largest relative deviation among the four coefficients.
    pub max_deviation: f64,
}

/// Solves [u₁ v₁; u₂ v₂]·(A, B) = (r₁, r₂).
fn solve2(u: (C64, C64), v: (C64, C64), r: (C64, C64)) -> (C64, C64) {
    let det = u.0 * v.1 - u.1 * v.0;
    ((r.0 * v.1 - r.1 * v.0) / det, (u.0 * r.1 - u.1 * r.0) / det)
}

pub fn heisenberg_rhs_check(
    fm: &FockMatrices,
    m: &Molecule,
    n: usize,
    order: Order,
) -> Result<HeisenbergReport> {
    if n == 0 || n + 3 > fm.dim {
        return Err(Error::Truncation { n, dim: fm.dim });
    }
    let scale = C64::new(0.0, 1.0 / HBAR);
    let h = fm.hamiltonian(order);
    let dx = commutator(h, &fm.x_op) * scale;
    let dp = commutator(h, &fm.p_op) * scale;
    let (up, dn) = (n + 1, n - 1);
    let (x, p) = (&fm.x_op, &fm.p_op);
    let x_eq = solve2(
        (p[(up, n)], p[(dn, n)]),
        (x[(up, n)], x[(dn, n)]),
        (dx[(up, n)], dx[(dn, n)]),
    );
    let p_eq = solve2(
        (x[(up, n)], x[(dn, n)]),
        (p[(up, n)], p[(dn, n)]),
        (dp[(up, n)], dp[(dn, n)]),
    );

    let sys = Coupled::new(n as f64, order, m);
    let expected_x_eq = (C64::new(sys.a, 0.0), sys.b);
    let expected_p_eq = (C64::new(-sys.c, 0.0), sys.b);

    // damping coefficients are compared on the scale of ω₀ since they vanish at harmonic order
    let w0 = fm.omega0;
    let dev = |got: C64, want: C64, floor: f64| (got - want).norm() / want.norm().max(floor);
    let max_deviation = [
        dev(x_eq.0, expected_x_eq.0, 0.0),
        dev(x_eq.1, expected_x_eq.1, w0),
        dev(p_eq.0, expected_p_eq.0, 0.0),
        dev(p_eq.1, expected_p_eq.1, w0),
    ]
    .into_iter()
    .fold(0.0, f64::max);

    Ok(HeisenbergReport {
        n,
        order,
        x_eq,
        p_eq,
        expected_x_eq,
        expected_p_eq,
        max_deviation,
    })
}
