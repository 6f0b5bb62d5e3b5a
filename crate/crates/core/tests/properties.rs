use diatomic::params::ANGSTROM;
use diatomic::{dynamics, hamiltonian, oracle, potential, stability};
use diatomic::{InitialConditions, Molecule, MoleculeParams, Order};
use proptest::prelude::*;

fn molecule() -> impl Strategy<Value = Molecule> {
    // ω₀ in 1e13..1e15, α in 1e-3..0.2
    (13.0f64..15.0, 1e-3f64..0.2, -25.0f64..-23.0).prop_map(|(lw, alpha, lmu)| {
        let w0 = 10f64.powf(lw);
        let de = diatomic::HBAR * w0 / (2.0 * alpha);
        Molecule::new(MoleculeParams::new("p", w0, de, 10f64.powf(lmu), 1e-8)).unwrap()
    })
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

proptest! {
    #[test]
    fn alpha_scales_inversely_with_de(m in molecule(), k in 1.1f64..100.0) {
        let scaled = m.with_de(m.de() * k).unwrap();
        prop_assert!(rel(scaled.alpha(), m.alpha() / k) < 1e-12);
        prop_assert!(rel(m.derived.beta / m.omega0(), m.alpha()) < 1e-12);
    }

    #[test]
    fn beat_frequencies_split_by_beta(m in molecule(), n in 0.0f64..40.0) {
        for order in Order::ALL {
            let fp = dynamics::frequencies(n, order, &m);
            prop_assert!((fp.w1 - fp.w2 - fp.beta_eff).abs() <= 1e-12 * m.omega0());
            prop_assert!((0.5 * (fp.w1 + fp.w2) - fp.wn).abs() <= 1e-12 * m.omega0());
        }
    }

    #[test]
    fn characteristic_roots_obey_vieta(m in molecule(), n in 0.0f64..40.0) {
        for order in Order::ALL {
            let r = stability::char_roots(n, order, &m);
            let fp = dynamics::frequencies(n, order, &m);
            let sum = r.lambda1 + r.lambda2;
            let prod = r.lambda1 * r.lambda2;
            let w = m.omega0();
            // λ² + iβλ + (ω_n² − β²/4) = 0
            prop_assert!((sum.re).abs() < 1e-12 * w && (sum.im + fp.beta_eff).abs() < 1e-12 * w);
            let c = fp.wn * fp.wn - 0.25 * fp.beta_eff * fp.beta_eff;
            prop_assert!((prod.re - c).abs() <= 1e-12 * w * w && prod.im.abs() <= 1e-12 * w * w);
            prop_assert!(r.residual() < 1e-9);
        }
    }

    #[test]
    fn dissociation_routes_agree(m in molecule()) {
        let formula = stability::n_d3(&m).unwrap();
        let root = hamiltonian::spacing_root(Order::Third, &m).unwrap();
        prop_assert!(rel(root, formula) < 1e-9);
        let w2 = dynamics::frequencies(formula, Order::Third, &m).w2;
        prop_assert!(w2.abs() < 1e-9 * m.omega0());
        prop_assert!((formula - (stability::n_d2(&m) - 1.0)).abs() < 1e-6 * formula.max(1.0));
    }

    #[test]
    fn morse_stays_below_de_outside(m in molecule(), d in 0.0f64..1e-6) {
        let v = potential::morse(m.xe() + d, &m);
        prop_assert!((0.0..=m.de()).contains(&v));
        prop_assert!(potential::morse(m.xe() - d, &m) >= 0.0);
    }

    #[test]
    fn classification_is_monotone(m in molecule()) {
        let levels = stability::classify_levels(&m, Order::Second, stability::scan_limit(&m));
        let first_unbound = levels.iter().position(|l| !l.classification.is_bound());
        if let Some(i) = first_unbound {
            prop_assert!(levels[i..].iter().all(|l| !l.classification.is_bound()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn integrator_follows_closed_form(m in molecule(), n in 0u32..12, x0 in 0.01f64..0.3) {
        let ic = InitialConditions::uncertainty_default(x0 * ANGSTROM, &m);
        for order in [Order::Second, Order::Third] {
            let n = n as f64;
            let grid = dynamics::time_grid(2.0, 256, dynamics::reference_frequency(n, order, &m)).unwrap();
            let dev = oracle::closed_form_deviation(n, order, &ic, &m, &grid).unwrap();
            prop_assert!(dev < 1e-6, "{order} n={n}: {dev}");
        }
    }
}
