//! Generalized harmonic numbers H_n(s) = sum_{k=1}^{n} k^{-s}.

use num_complex::Complex64;

use super::{c, check_finite, hurwitz_zeta_with, riemann_zeta_with, EvalResult};
use crate::config::ToleranceConfig;
use crate::error::{Error, Result};
use crate::sum::NeumaierC;

/// Continuation semantics: H_n(s) = zeta(s) - zeta_H(s; n+1) for real n > -1.
/// Agrees with the literal sum at integer n.
pub fn harmonic_number(n: f64, s: Complex64) -> Result<EvalResult> {
    check_finite(s, "s")?;
    if !(n > -1.0 && n.is_finite()) {
        return Err(Error::Domain(format!("harmonic index must exceed -1, got {n}")));
    }
    if s == c(1.0, 0.0) {
        return Err(Error::Pole("H_n(s) in continuation form is undefined at s = 1".into()));
    }
    if n == 0.0 {
        return Ok(EvalResult::exact(c(0.0, 0.0)));
    }
    let tol = ToleranceConfig::default();
    let z = riemann_zeta_with(s, &tol)?;
    let h = hurwitz_zeta_with(s, n + 1.0, &tol)?;
    let value = z.value - h.value;
    let rounding = 2.0 * f64::EPSILON * (z.value.norm() + h.value.norm());
    Ok(EvalResult::new(value, z.abs_err + h.abs_err + rounding))
}

/// Literal sum over k = 1..=n.
pub fn harmonic_literal(n: u64, s: Complex64) -> Complex64 {
    (1..=n).map(|k| (-s * (k as f64).ln()).exp()).collect::<NeumaierC>().value()
}
