//! Bernoulli numbers, convention B_1 = +1/2.
//!
//! A table is built once from the exact rational recurrence
//! sum_{j<=m} C(m+1, j) B_j = 0 and rounded to f64. Indices past the table
//! use B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

const TABLE_LEN: usize = 160;

fn table() -> &'static [f64] {
    static CELL: OnceLock<Vec<f64>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut b: Vec<BigRational> = Vec::with_capacity(TABLE_LEN);
        b.push(BigRational::one());
        for m in 1..TABLE_LEN {
            if m > 1 && m % 2 == 1 {
                b.push(BigRational::zero());
                continue;
            }
            // binom(m+1, j) built incrementally.
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc += bj * BigRational::from_integer(binom.clone());
                }
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        let mut out: Vec<f64> = b.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();
        out[1] = 0.5;
        out
    })
}

/// B_k with B_1 = +1/2.
pub fn bernoulli(k: u32) -> f64 {
    let k = k as usize;
    if k < TABLE_LEN {
        return table()[k];
    }
    if k % 2 == 1 {
        return 0.0;
    }
    // zeta(k) - 1 < 2^{1-k}, negligible here.
    let ln_mag = 2f64.ln() + super::ln_gamma(super::c(k as f64 + 1.0, 0.0)).re
        - k as f64 * (2.0 * PI).ln();
    let sign = if (k / 2) % 2 == 1 { 1.0 } else { -1.0 };
    sign * ln_mag.exp()
}

/// B_{2k} / (2k)! for k >= 1, the Euler-Maclaurin coefficients.
pub(crate) fn b2k_over_factorial(k: usize) -> f64 {
    static CELL: OnceLock<Vec<f64>> = OnceLock::new();
    let t = CELL.get_or_init(|| {
        let mut out = vec![0.0; TABLE_LEN / 2];
        let mut fact = 1.0f64;
        for (j, slot) in out.iter_mut().enumerate().skip(1) {
            fact *= ((2 * j - 1) * (2 * j)) as f64;
            *slot = bernoulli(2 * j as u32) / fact;
        }
        out
    });
    if k < t.len() {
        t[k]
    } else {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sign * 2.0 * (2.0 * PI).powi(-2 * k as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), 1.0);
        assert_eq!(bernoulli(1), 0.5);
        assert!((bernoulli(2) - 1.0 / 6.0).abs() < 1e-16);
        assert!((bernoulli(4) + 1.0 / 30.0).abs() < 1e-16);
        assert!((bernoulli(12) + 691.0 / 2730.0).abs() < 1e-15);
        assert_eq!(bernoulli(7), 0.0);
    }

    #[test]
    fn table_matches_zeta_formula_at_the_seam() {
        for k in [100u32, 120, 158] {
            let ln_mag = 2f64.ln() + super::super::ln_gamma(super::super::c(k as f64 + 1.0, 0.0)).re
                - k as f64 * (2.0 * PI).ln();
            let zeta_k = 1.0 + 2f64.powi(-(k as i32));
            let mag = ln_mag.exp() * zeta_k;
            assert!((bernoulli(k).abs() - mag).abs() / mag < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn em_coefficients_alternate() {
        assert!((b2k_over_factorial(1) - 1.0 / 12.0).abs() < 1e-17);
        assert!((b2k_over_factorial(2) + 1.0 / 720.0).abs() < 1e-18);
        for k in 1..60 {
            assert!(b2k_over_factorial(k) * b2k_over_factorial(k + 1) < 0.0);
        }
    }
}
