//! Hurwitz zeta by Euler-Maclaurin summation in the shift parameter.
//!
//! zeta_H(s; a) = sum_{n<N} (n+a)^{-s} + w^{1-s}/(s-1) + w^{-s}/2
//!              + sum_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} w^{-s-2k+1} + R,
//! with w = N + a. For Re s + 2K + 1 > 0 the remainder is bounded by the
//! first omitted term times |s+2K+1| / (Re s + 2K + 1).

use num_complex::Complex64;

use super::bernoulli::b2k_over_factorial;
use super::{as_integer, c, check_finite, EvalResult};
use crate::config::ToleranceConfig;
use crate::error::{Error, Result};
use crate::sum::NeumaierC;

const MAX_K: usize = 70;

/// One Euler-Maclaurin pass with a fixed number of direct terms.
/// Returns `None` when the Bernoulli tail starts diverging before the
/// target is met, so the caller can move further out.
fn em_pass(s: Complex64, a: f64, n_direct: u64, target: f64) -> Option<EvalResult> {
    let mut acc = NeumaierC::new();
    for n in 0..n_direct {
        let x = n as f64 + a;
        acc.add((-s * x.ln()).exp());
    }
    let w = n_direct as f64 + a;
    let lw = w.ln();
    let w_neg_s = (-s * lw).exp();
    acc.add(w_neg_s * w / (s - 1.0));
    acc.add(w_neg_s * 0.5);

    // term_k = B_{2k}/(2k)! * poch * w^{-s-2k+1}, poch = (s)_{2k-1}.
    let mut poch = s;
    let mut wpow = w_neg_s / w;
    let mut prev = f64::INFINITY;
    for k in 1..=MAX_K {
        let term = poch * wpow * b2k_over_factorial(k);
        let mag = term.norm();
        if mag == 0.0 {
            return Some(finish(acc, 0.0));
        }
        let v = acc.value().norm();
        // Absolute target scaled by max(1, |v|), tightened to near machine
        // precision relative to |v| when that is cheap.
        let goal = (target * v.max(1.0)).min((1e-16 * v).max(1e-40));
        let nk = 2.0 * k as f64 + 1.0;
        // Bound on the remainder if the sum stopped before this term.
        let denom = s.re + nk - 2.0;
        if denom > 0.0 && mag * (s + nk - 2.0).norm() / denom <= goal {
            let rem = mag * (s + nk - 2.0).norm() / denom;
            return Some(finish(acc, rem));
        }
        if mag > prev && k > 2 && target > 0.0 {
            return None;
        }
        prev = mag;
        acc.add(term);
        poch *= (s + nk - 2.0) * (s + nk - 1.0);
        wpow /= w * w;
    }
    None
}

fn finish(acc: NeumaierC, truncation: f64) -> EvalResult {
    let rounding = 4.0 * f64::EPSILON * acc.abs_total();
    EvalResult::new(acc.value(), truncation + rounding)
}

pub(crate) fn em_zeta(s: Complex64, a: f64, tol: &ToleranceConfig) -> Result<EvalResult> {
    // Direct terms needed so the Bernoulli tail converges geometrically.
    let start = (s.norm() / std::f64::consts::PI + 10.0 - a).ceil().max(0.0) as u64;
    let mut n = start;
    loop {
        if n > tol.max_terms {
            return Err(Error::Accuracy(format!(
                "Euler-Maclaurin for s = {s}, a = {a} needs more than {} terms",
                tol.max_terms
            )));
        }
        if let Some(r) = em_pass(s, a, n, 0.1 * tol.target_abs_tol) {
            return Ok(r);
        }
        n = 2 * n + 16;
    }
}

/// Hurwitz zeta with the default tolerance.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<EvalResult> {
    hurwitz_zeta_with(s, a, &ToleranceConfig::default())
}

/// Hurwitz zeta, zeta_H(s; a) = sum_{n>=0} (n+a)^{-s}, continued in s.
/// The error bound is relative to max(1, |value|).
pub fn hurwitz_zeta_with(s: Complex64, a: f64, tol: &ToleranceConfig) -> Result<EvalResult> {
    check_finite(s, "s")?;
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("Hurwitz shift must be positive, got a = {a}")));
    }
    if s == c(1.0, 0.0) {
        return Err(Error::Pole("Hurwitz zeta has a pole at s = 1".into()));
    }
    if let Some(m) = as_integer(s) {
        if m <= 0 {
            // Exact: -B_{1-s}(a)/(1-s), via the terminating expansion with N = 0.
            return em_pass(s, a, 0, 0.0).ok_or_else(|| {
                Error::Accuracy(format!("terminating expansion failed at s = {m}"))
            });
        }
    }
    em_zeta(s, a, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_one_is_riemann() {
        let z2 = hurwitz_zeta(c(2.0, 0.0), 1.0).unwrap();
        assert!((z2.value.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
        assert!(z2.abs_err < 1e-12);
    }

    #[test]
    fn negative_integers_are_bernoulli_polynomials() {
        // zeta_H(-1; a) = -B_2(a)/2 = -(a^2 - a + 1/6)/2.
        for a in [0.3, 1.0, 2.5, 21.0] {
            let v = hurwitz_zeta(c(-1.0, 0.0), a).unwrap().value.re;
            let exact = -(a * a - a + 1.0 / 6.0) / 2.0;
            assert!((v - exact).abs() < 1e-12 * exact.abs().max(1.0), "a = {a}");
        }
    }

    #[test]
    fn shift_recurrence() {
        let s = c(0.3, 7.0);
        let a = 0.7;
        let lhs = hurwitz_zeta(s, a).unwrap().value;
        let rhs = hurwitz_zeta(s, a + 1.0).unwrap().value + (-s * a.ln()).exp();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn mpmath_reference_values() {
        let cases = [
            (c(0.5, 14.0), 0.25, c(0.7003399242627597, 1.8122663241623936)),
            (c(3.0, 0.0), 10.5, c(0.004987572123857585, 0.0)),
            (c(-2.5, 1.0), 2.0, c(-0.9764063894136204, 0.001407799605838377)),
        ];
        for (s, a, v) in cases {
            let r = hurwitz_zeta(s, a).unwrap();
            assert!((r.value - v).norm() < 1e-12 * v.norm().max(1.0), "s = {s}, a = {a}: {}", r.value);
        }
    }

    #[test]
    fn pole_and_domain() {
        assert!(matches!(hurwitz_zeta(c(1.0, 0.0), 1.0), Err(Error::Pole(_))));
        assert!(matches!(hurwitz_zeta(c(2.0, 0.0), 0.0), Err(Error::Domain(_))));
    }
}
