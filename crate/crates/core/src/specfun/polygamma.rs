//! Polygamma functions of real argument.

use super::bernoulli::{b2k_over_factorial, bernoulli};
use super::{c, hurwitz_zeta};
use crate::error::{Error, Result};

const ASYMPTOTIC_FROM: f64 = 10.0;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn sign(m: u32) -> f64 {
    if m % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// psi_m(x) = (-1)^{m+1} m! zeta_H(m+1; x) for m >= 1, x > 0.
///
/// Large arguments use the asymptotic series cut at its smallest term.
pub fn polygamma(m: u32, x: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("polygamma order must be at least 1".into()));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("polygamma needs x > 0, got {x}")));
    }
    if x >= ASYMPTOTIC_FROM {
        return Ok(asymptotic_full(m, x));
    }
    let z = hurwitz_zeta(c(f64::from(m) + 1.0, 0.0), x)?;
    Ok(sign(m + 1) * factorial(m) * z.value.re)
}

/// psi_m(x) ~ (-1)^{m+1} [(m-1)!/x^m + m!/(2x^{m+1})
///            + sum_k B_{2k} (2k+m-1)! / ((2k)! x^{2k+m})].
fn asymptotic_full(m: u32, x: f64) -> f64 {
    let fm1 = factorial(m - 1);
    let mut sum = fm1 / x.powi(m as i32) + fm1 * f64::from(m) / (2.0 * x.powi(m as i32 + 1));
    // ratio = (2k+m-1)!/(m-1)!, built incrementally.
    let mut ratio = 1.0;
    let mut xp = x.powi(m as i32);
    let mut prev = f64::INFINITY;
    for k in 1..60usize {
        let lo = 2 * k as u32 + m - 2;
        ratio *= f64::from(lo) * f64::from(lo + 1);
        xp *= x * x;
        let term = b2k_over_factorial(k) * ratio * fm1 / xp;
        if term.abs() >= prev || term.abs() <= f64::EPSILON * 1e-3 * sum.abs() {
            break;
        }
        prev = term.abs();
        sum += term;
    }
    sign(m + 1) * sum
}

/// Leading terms of the large-n expansion of psi_d(n+1),
///   psi_d(n+1) ~ (-1)^{d+1} sum_k B^-_k (k+d-1)!/k! n^{-(d+k)},
/// keeping powers n^{-d} through n^{-(d+order)} (B^-_1 = -1/2).
pub fn polygamma_asymptotic(d: u32, n: f64, order: u32) -> Result<f64> {
    if d == 0 {
        return Err(Error::Domain("polygamma order must be at least 1".into()));
    }
    if !(n > 0.0 && n.is_finite()) {
        return Err(Error::Domain(format!("expansion point must be positive, got {n}")));
    }
    let mut sum = 0.0;
    let mut coef = factorial(d - 1); // (k+d-1)!/k! at k = 0
    for k in 0..=order {
        if k > 0 {
            coef *= f64::from(k + d - 1) / f64::from(k);
        }
        let b = if k == 1 { -0.5 } else { bernoulli(k) };
        if b != 0.0 {
            sum += b * coef / n.powi((d + k) as i32);
        }
    }
    Ok(sign(d + 1) * sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trigamma_at_one() {
        let v = polygamma(1, 1.0).unwrap();
        assert!((v - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
    }

    #[test]
    fn both_regimes_agree_at_the_seam() {
        for m in 1..6 {
            let a = asymptotic_full(m, 10.0);
            let h = sign(m + 1) * factorial(m) * hurwitz_zeta(c(f64::from(m) + 1.0, 0.0), 10.0).unwrap().value.re;
            assert!((a - h).abs() <= 1e-14 * h.abs(), "m = {m}: {a} {h}");
        }
    }

    #[test]
    fn mpmath_reference_values() {
        let cases = [(2, 0.3, -75.27253658872604), (3, 7.5, 0.005772436656578694), (4, 31.0, -6.927287019193370e-06)];
        for (m, x, v) in cases {
            let p = polygamma(m, x).unwrap();
            assert!((p - v).abs() <= 1e-13 * v.abs(), "m = {m}, x = {x}: {p}");
        }
    }

    #[test]
    fn leading_term_limit() {
        // x^d psi_d(x+1) -> (-1)^{d+1} (d-1)!, with relative deviation about d/(2x).
        for d in 1..6u32 {
            let want = sign(d + 1) * factorial(d - 1);
            for x in [1e3f64, 1e4] {
                let got = x.powi(d as i32) * polygamma(d, x + 1.0).unwrap();
                assert!(((got - want) / want).abs() < f64::from(d) / x, "d = {d}, x = {x}: {got}");
            }
        }
    }

    #[test]
    fn truncated_expansion_orders() {
        // Two terms of psi_3(n+1): 2/n^3 - 3/n^4.
        let v = polygamma_asymptotic(3, 20.0, 1).unwrap();
        assert!((v - (2.0 / 8000.0 - 3.0 / 160000.0)).abs() < 1e-18);
        let full = polygamma(3, 21.0).unwrap();
        let hi = polygamma_asymptotic(3, 20.0, 12).unwrap();
        assert!((hi - full).abs() < 1e-14 * full.abs());
    }
}
