//! Upper incomplete Gamma function Gamma(a, z) for complex a and Re z > 0.
//!
//! Three regimes: the Legendre continued fraction (modified Lentz) for |z|
//! large against |a|, the power series of the lower function otherwise, and
//! for a close to a non-positive integer a small-epsilon expansion followed
//! by downward recurrence in a. Results are produced in log form where
//! possible so that large imaginary parts do not overflow.

use std::sync::OnceLock;

use num_complex::Complex64;

use super::hurwitz::em_zeta;
use super::{c, is_nonpositive_integer, ln_gamma, rgamma};
use crate::config::ToleranceConfig;
use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 20_000;
const TINY: f64 = 1e-300;
const NEAR_INT: f64 = 0.25;

fn zeta_int_table() -> &'static [f64] {
    static CELL: OnceLock<Vec<f64>> = OnceLock::new();
    CELL.get_or_init(|| {
        let tol = ToleranceConfig::with_tol(1e-17);
        let mut v = vec![0.0, 0.0];
        for k in 2..48 {
            v.push(em_zeta(c(k as f64, 0.0), 1.0, &tol).expect("zeta at integers").value.re);
        }
        v
    })
}

/// (e^w - 1)/w.
fn exprel(w: Complex64) -> Complex64 {
    if w.norm() < 0.5 {
        let mut term = c(1.0, 0.0);
        let mut sum = term;
        for k in 2..25 {
            term *= w / k as f64;
            sum += term;
        }
        sum
    } else {
        (w.exp() - 1.0) / w
    }
}

fn use_continued_fraction(a: Complex64, z: Complex64) -> bool {
    let r = z.norm();
    r >= 1.5 && r >= 0.9 * a.norm()
}

fn nearest_nonpositive_int(a: Complex64) -> Option<i64> {
    let m = a.re.round();
    if m <= 0.0 && (a - m).norm() < NEAR_INT {
        Some(m as i64)
    } else {
        None
    }
}

/// ln of the continued-fraction factor h with Gamma(a,z) = z^a e^{-z} h.
fn ln_cf(a: Complex64, z: Complex64) -> Result<Complex64> {
    let mut b = z + 1.0 - a;
    let mut cc = c(1.0 / TINY, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = c(TINY, 0.0);
        }
        cc = b + an / cc;
        if cc.norm() < TINY {
            cc = c(TINY, 0.0);
        }
        d = 1.0 / d;
        let del = d * cc;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            return Ok(a * z.ln() - z + h.ln());
        }
    }
    Err(Error::Accuracy(format!("incomplete gamma continued fraction stalled at a = {a}, z = {z}")))
}

/// Regularized lower function P(a, z) by its power series.
fn series_p(a: Complex64, z: Complex64) -> Result<Complex64> {
    let mut term = c(1.0, 0.0);
    let mut sum = term;
    for k in 1..MAX_ITER {
        term *= z / (a + k as f64);
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            let pref = (a * z.ln() - z - ln_gamma(a + 1.0)).exp();
            return Ok(pref * sum);
        }
    }
    Err(Error::Accuracy(format!("incomplete gamma series stalled at a = {a}, z = {z}")))
}

/// Gamma(eps, z) for |eps| < 1/4 and moderate |z|.
fn small_a(eps: Complex64, z: Complex64) -> Complex64 {
    let zt = zeta_int_table();
    // lnGamma(1+eps)/eps = -gamma + sum_{k>=2} (-1)^k zeta(k) eps^{k-1}/k.
    let mut l_over = c(-EULER_GAMMA, 0.0);
    let mut p = c(1.0, 0.0);
    for (k, zk) in zt.iter().enumerate().skip(2) {
        p *= -eps;
        l_over += p * (*zk / k as f64) * -1.0;
    }
    let g1 = exprel(l_over * eps) * l_over;
    let lz = z.ln();
    let mut tail = c(0.0, 0.0);
    let mut t = c(1.0, 0.0);
    for k in 1..MAX_ITER {
        t *= -z / k as f64;
        let add = t / (eps + k as f64);
        tail += add;
        if add.norm() < 1e-17 * tail.norm() {
            break;
        }
    }
    g1 - exprel(eps * lz) * lz - (eps * lz).exp() * tail
}

/// Gamma(a, z) directly, for a within 1/4 of the non-positive integer m.
fn near_integer(a: Complex64, m: i64, z: Complex64) -> Complex64 {
    let eps = a - m as f64;
    let mut g = small_a(eps, z);
    let mut b = eps;
    let lz = z.ln();
    for _ in 0..(-m) {
        // Gamma(b-1, z) = (Gamma(b, z) - z^{b-1} e^{-z}) / (b-1).
        g = (g - ((b - 1.0) * lz - z).exp()) / (b - 1.0);
        b -= 1.0;
    }
    g
}

fn check_z(z: Complex64) -> Result<()> {
    if z.re > 0.0 && z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("incomplete gamma needs Re z > 0, got z = {z}")))
    }
}

/// A logarithm of Gamma(a, z), Re z > 0.
pub fn ln_upper_gamma(a: Complex64, z: Complex64) -> Result<Complex64> {
    check_z(z)?;
    if use_continued_fraction(a, z) {
        return ln_cf(a, z);
    }
    if let Some(m) = nearest_nonpositive_int(a) {
        return Ok(near_integer(a, m, z).ln());
    }
    let p = series_p(a, z)?;
    Ok(ln_gamma(a) + (1.0 - p).ln())
}

/// Gamma(a, z), Re z > 0.
pub fn upper_gamma(a: Complex64, z: Complex64) -> Result<Complex64> {
    check_z(z)?;
    if !use_continued_fraction(a, z) {
        if let Some(m) = nearest_nonpositive_int(a) {
            return Ok(near_integer(a, m, z));
        }
    }
    Ok(ln_upper_gamma(a, z)?.exp())
}

/// Gamma(a, z) / Gamma(b), entire in b.
pub(crate) fn upper_gamma_ratio(a: Complex64, z: Complex64, b: Complex64) -> Result<Complex64> {
    check_z(z)?;
    if is_nonpositive_integer(b) {
        return Ok(c(0.0, 0.0));
    }
    if !use_continued_fraction(a, z) && nearest_nonpositive_int(a).is_some() {
        return Ok(upper_gamma(a, z)? * rgamma(b));
    }
    if b.re < 0.5 && (b - b.re.round()).norm() < NEAR_INT {
        return Ok(upper_gamma(a, z)? * rgamma(b));
    }
    Ok((ln_upper_gamma(a, z)? - ln_gamma(b)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn exponential_integral_limit() {
        // Gamma(0, 1) = E1(1).
        let v = upper_gamma(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(rel(v, c(0.219_383_934_395_520_27, 0.0)) < 1e-14);
    }

    #[test]
    fn integer_a_closed_form() {
        // Gamma(3, x) = 2 e^{-x} (1 + x + x^2/2).
        for x in [0.2, 1.0, 4.0, 30.0] {
            let v = upper_gamma(c(3.0, 0.0), c(x, 0.0)).unwrap();
            let exact = 2.0 * (-x).exp() * (1.0 + x + x * x / 2.0);
            assert!(rel(v, c(exact, 0.0)) < 1e-14, "x = {x}");
        }
    }

    /// [Re s, Im s, z, z', Gamma(s,z)/Gamma(s), Gamma(1-s,z')/Gamma(s)] from
    /// mpmath at 40 digits, with z on the rotated rays used by the Epstein
    /// continuation.
    const MPMATH: [[f64; 10]; 14] = [
        [0.3, 10.0, 0.3973386615901225, 1.9601331556824833, 0.3973386615901225, -1.9601331556824833, 1.4124992166154278, 0.2477815017859642, 1.6015406348675627, -2.6299522300641067],
        [2.5, 300.0, 0.666661728406035, 99.99777778600821, 0.666661728406035, -99.99777778600821, 1.0000904447847663, -0.008406591001907436, 1.311236087291433e-10, -7.401459294694829e-11],
        [-0.5, 300.0, 0.0133332345681207, 1.9999555557201643, 0.0133332345681207, -1.9999555557201643, -0.908126432980251, -0.8040408886777246, 39516.43594891367, -80852.45027729274],
        [0.9, 3.0, 185.5109409209211, 235.76617823308442, 185.5109409209211, -235.76617823308442, 2.838911606021885e-81, 7.596108250217205e-82, 6.318430826603886e-84, -2.9941998491571567e-83],
        [1.5, 300.0, 0.0666661728406035, 9.999777778600821, 0.0666661728406035, -9.999777778600821, 1.0006665759386049, 0.0007485898822682978, 1.02000570700571e-06, -1.9233944124168765e-05],
        [-1.5, 300.0, 0.666661728406035, 99.99777778600821, 0.666661728406035, -99.99777778600821, 1.0118680592663019, -0.6809454968424538, 3690417844.7551517, -7211862971.421842],
        [-1.5, 0.7, 2.0, 0.0, 2.0, 0.0, 0.01994154901024101, 0.0026617998653162256, 0.27167581601663243, -1.1869023080296164],
        [1.5, 300.0, 0.0003333308642030175, 0.04999888889300411, 0.0003333308642030175, -0.04999888889300411, 0.9999999810076533, -3.656352149206388e-07, 0.0001334170641793192, 6.0204952563715415e-05],
        [0.3, 150.0, 0.13332938275116507, 9.999111124279757, 0.13332938275116507, -9.999111124279757, 1.100073521122333, 0.004094521507453834, -7.666459057725509, -0.2903123186880918],
        [0.3, 3.0, 618.3698030697369, 785.8872607769481, 618.3698030697369, -785.8872607769481, 5.873581988967433e-271, 5.640948665902076e-271, 5.805224657866032e-270, -1.1531205477282875e-269],
        [0.0, 150.0, 0.39998814825349527, 29.99733337283927, 0.39998814825349527, -29.99733337283927, 1.191242525471245, 0.06401323416772935, -155.69540204936206, -4.417392475411675],
        [1.5, 300.0, 0.001999985185218105, 0.29999333335802464, 0.001999985185218105, -0.29999333335802464, 0.99999992684356, 5.375985353747625e-06, -4.931477097128334e-05, -3.511976210249595e-05],
        [2.5, 300.0, 0.0133332345681207, 1.9999555557201643, 0.0133332345681207, -1.9999555557201643, 0.9999994334886433, -2.354308523467262e-07, -2.146734884191347e-09, 3.8169970819153494e-08],
        [1.5, 300.0, 0.666661728406035, 99.99777778600821, 0.666661728406035, -99.99777778600821, 1.0001873096611738, -0.02522232284780957, 7.156651125345495e-06, -8.899669854906785e-06],
    ];

    #[test]
    fn mpmath_reference_ratios() {
        for v in MPMATH {
            let s = c(v[0], v[1]);
            let main = upper_gamma_ratio(s, c(v[2], v[3]), s).unwrap();
            let dual = upper_gamma_ratio(1.0 - s, c(v[4], v[5]), s).unwrap();
            for (got, want) in [(main, c(v[6], v[7])), (dual, c(v[8], v[9]))] {
                let err = (got - want).norm();
                assert!(err <= 1e-12 * want.norm() || err <= 1e-15, "s = {s}: {got} vs {want}");
            }
        }
    }
}
