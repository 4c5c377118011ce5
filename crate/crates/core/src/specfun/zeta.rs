//! Riemann zeta and the reflection factor vartheta(s) = zeta(s)/zeta(1-s).

use std::f64::consts::PI;

use num_complex::Complex64;

use super::hurwitz::em_zeta;
use super::{as_integer, bernoulli, c, check_finite, ln_cos, ln_gamma, ln_sin, EvalResult};
use crate::config::ToleranceConfig;
use crate::error::{Error, Result};

/// vartheta(s) = (2 pi)^s Gamma(1-s) / (Gamma(1-s/2) Gamma(s/2)).
///
/// Evaluated in log form through the equivalent expressions
/// (2 pi)^s / (2 cos(pi s/2) Gamma(s)) for Re s >= 1/2 and
/// 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) otherwise, which cancel the removable
/// singularities at even integers. Poles at the positive odd integers,
/// zeros at the non-positive even integers.
pub fn vartheta(s: Complex64) -> Result<Complex64> {
    check_finite(s, "s")?;
    if let Some(n) = as_integer(s) {
        if n > 0 && n % 2 == 1 {
            return Err(Error::Pole(format!("vartheta has a pole at s = {n}")));
        }
        if n <= 0 && n % 2 == 0 {
            return Ok(c(0.0, 0.0));
        }
    }
    let ln_v = if s.re >= 0.5 {
        s * (2.0 * PI).ln() - 2f64.ln() - ln_cos(s * (PI / 2.0)) - ln_gamma(s)
    } else {
        s * 2f64.ln() + (s - 1.0) * PI.ln() + ln_sin(s * (PI / 2.0)) + ln_gamma(1.0 - s)
    };
    let v = ln_v.exp();
    Ok(if s.im == 0.0 { c(v.re, 0.0) } else { v })
}

/// Relative rounding level of `vartheta`, driven by the size of its logs.
fn vartheta_rel_err(s: Complex64) -> f64 {
    let n = s.norm();
    f64::EPSILON * (16.0 + 2.0 * n * (2.0 + n).ln())
}

pub fn riemann_zeta(s: Complex64) -> Result<EvalResult> {
    riemann_zeta_with(s, &ToleranceConfig::default())
}

/// Riemann zeta. Euler-Maclaurin for Re s > 1/2 (and near the origin),
/// reflection zeta(s) = vartheta(s) zeta(1-s) otherwise. The error bound is
/// measured against max(1, |zeta(s)|).
pub fn riemann_zeta_with(s: Complex64, tol: &ToleranceConfig) -> Result<EvalResult> {
    check_finite(s, "s")?;
    tol.validate()?;
    if s == c(1.0, 0.0) {
        return Err(Error::Pole("zeta has a pole at s = 1".into()));
    }
    if let Some(n) = as_integer(s) {
        if n < 0 && n % 2 == 0 {
            return Ok(EvalResult::exact(c(0.0, 0.0)));
        }
        // zeta(-n) = -B_{n+1} / (n+1) for odd n, from the exact Bernoulli table.
        if (-159..0).contains(&n) {
            let k = (1 - n) as u32;
            let v = -bernoulli(k) / f64::from(k);
            return Ok(EvalResult::new(c(v, 0.0), 2.0 * f64::EPSILON * v.abs()));
        }
    }
    if s.re > 0.5 || s.norm() <= 1.0 {
        return em_zeta(s, 1.0, tol);
    }
    let th = vartheta(s)?;
    let z = em_zeta(1.0 - s, 1.0, tol)?;
    let value = th * z.value;
    let abs_err = th.norm() * z.abs_err + value.norm() * vartheta_rel_err(s);
    Ok(EvalResult::new(value, abs_err))
}
