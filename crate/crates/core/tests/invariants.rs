//! Property tests of the public API: identities that must hold for any
//! admissible input.

use casimir_core::casimir::{
    box_ideal_energy, slab_fc_energy_asymptotic, slab_ideal_energy_density, BoxConfig, SlabConfig,
};
use casimir_core::epstein::{direct_sum, epstein_zeta, x_factor, QuadraticForm};
use casimir_core::specfun::{harmonic_literal, harmonic_number, hurwitz_zeta, riemann_zeta};
use casimir_core::ToleranceConfig;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn hurwitz_ladder(re in -3.0..4.0f64, im in -30.0..30.0f64, a in 0.05..20.0f64) {
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 1e-3);
        let lhs = hurwitz_zeta(s, a).unwrap().value - hurwitz_zeta(s, a + 1.0).unwrap().value;
        let rhs = (-s * a.ln()).exp();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn x_factor_reciprocity(re in -2.0..3.0f64, im in 0.5..40.0f64) {
        let f = QuadraticForm::new(1.0, 1.0, 0.0).unwrap();
        let s = c(re, im);
        let p = x_factor(&f, s).unwrap() * x_factor(&f, 1.0 - s).unwrap();
        prop_assert!((p - 1.0).norm() <= 1e-10, "{p}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn epstein_homogeneity(
        a in 0.5..3.0f64,
        b in 0.5..3.0f64,
        cc in -0.5..0.5f64,
        re in -1.5..2.5f64,
        im in -5.0..5.0f64,
        lambda in 0.3..4.0f64,
    ) {
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 0.1);
        let f = QuadraticForm::new(a, b, cc).unwrap();
        let g = QuadraticForm::new(lambda * a, lambda * b, lambda * cc).unwrap();
        let lhs = epstein_zeta(&g, s).unwrap().value;
        let rhs = (-s * lambda.ln()).exp() * epstein_zeta(&f, s).unwrap().value;
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + lhs.norm()), "{lhs} vs {rhs}");
    }

    #[test]
    fn box_swap_symmetry(l1 in 0.2..5.0f64, l2 in 0.2..5.0f64) {
        let a = box_ideal_energy(&BoxConfig::ideal(l1, l2).unwrap()).unwrap();
        let b = box_ideal_energy(&BoxConfig::ideal(l2, l1).unwrap()).unwrap();
        prop_assert!((a - b).abs() <= 1e-13 * a.abs().max(1.0 / l1.min(l2)));
    }
}

#[test]
fn trivial_zeros() {
    for k in 1..=5 {
        let z = riemann_zeta(c(-2.0 * f64::from(k), 0.0)).unwrap().value;
        assert!(z.norm() <= 1e-12);
    }
}

#[test]
fn harmonic_continuation_matches_literal_sums() {
    for n in 0..=20u64 {
        for s in [-4.0, -3.0, -2.0, 2.0, 3.0, 4.0] {
            let cont = harmonic_number(n as f64, c(s, 0.0)).unwrap().value;
            let lit = harmonic_literal(n, c(s, 0.0));
            assert!((cont - lit).norm() <= 1e-10 * lit.norm().max(1.0), "n = {n}, s = {s}");
        }
    }
}

#[test]
fn direct_sum_agrees_with_continuation() {
    let tol = ToleranceConfig::with_tol(1e-7);
    for (a, b, cc) in [(1.0, 1.0, 0.0), (1.0, 4.0, 0.0), (2.0, 3.0, 1.0)] {
        let f = QuadraticForm::new(a, b, cc).unwrap();
        for s in [c(2.0, 0.0), c(3.0, 1.0), c(1.8, -4.0)] {
            let d = direct_sum(&f, s, &tol).unwrap();
            let e = epstein_zeta(&f, s).unwrap();
            assert!((d.value - e.value).norm() <= d.abs_err + e.abs_err, "{a},{b},{cc} at {s}");
        }
    }
}

#[test]
fn slab_ideal_energy_is_negative() {
    for d in [1, 3, 5, 7] {
        for l in [0.1, 1.0, 10.0] {
            assert!(slab_ideal_energy_density(&SlabConfig::ideal(d, l).unwrap()) < 0.0);
        }
    }
}

#[test]
fn slab_correction_is_positive() {
    for k in 0..=12 {
        let ratio = 10f64.powf(3.0 + 0.5 * f64::from(k));
        let cfg = SlabConfig::new(3, 1.0, 1.0 / ratio).unwrap();
        let corr = slab_fc_energy_asymptotic(&cfg).unwrap() - slab_ideal_energy_density(&cfg);
        assert!(corr > 0.0, "L/lambda_p = {ratio:e}");
    }
}

#[test]
fn box_homogeneity() {
    let base = box_ideal_energy(&BoxConfig::ideal(1.0, 2.5).unwrap()).unwrap();
    for k in [0.5, 2.0, 7.0] {
        let scaled = box_ideal_energy(&BoxConfig::ideal(k, 2.5 * k).unwrap()).unwrap() * k;
        assert!((scaled - base).abs() <= 1e-11 * base.abs());
    }
}
