//! Epstein zeta function of a positive-definite binary quadratic form.
//!
//! A(a,b,c;s) = sum'_{(n1,n2)} (a n1^2 + c n1 n2 + b n2^2)^{-s}, the prime
//! excluding the origin. Besides the direct sum (Re s > 1) the module
//! evaluates the analytic continuation with an incomplete-Gamma split of the
//! theta integral, and the functional equation as an independent path.
//!
//! Continuation. With the form scaled to determinant D = ab - c^2/4 = 1 and
//! a rotation delta = e^{i theta} of the split point,
//!
//! ```text
//! A(s) = sum'_n Q(n)^{-s} G(s, pi delta Q(n)) / G(s)
//!      + pi^{2s-1} / G(s) sum'_m Q*(m)^{s-1} G(1-s, pi Q*(m) / delta)
//!      + pi^s delta^{s-1} / ((s-1) G(s)) - (pi delta)^s / G(s+1),
//! ```
//!
//! where G(a, z) is the upper incomplete Gamma and Q* the adjugate form.
//! For large |Im s| the rotation keeps every term of size e^{2} instead of
//! e^{pi |t| / 2}, so no catastrophic cancellation occurs.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::ToleranceConfig;
use crate::error::{Error, Result};
use crate::specfun::incgamma::upper_gamma_ratio;
use crate::specfun::{as_integer, c, check_finite, ln_gamma, riemann_zeta_with, EvalResult};
use crate::sum::NeumaierC;

/// Margin kept between the rotated split and the imaginary axis.
const ROTATION_KAPPA: f64 = 2.0;

/// phi(x, y) = a x^2 + c x y + b y^2 with a > 0 and eta = 4ab - c^2 > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraticForm {
    a: f64,
    b: f64,
    c: f64,
}

impl QuadraticForm {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::Domain("form coefficients must be finite".into()));
        }
        if a <= 0.0 {
            return Err(Error::Domain(format!("form needs a > 0, got a = {a}")));
        }
        let eta = 4.0 * a * b - c * c;
        if eta <= 0.0 {
            return Err(Error::Domain(format!(
                "form ({a}, {b}, {c}) is not positive definite: eta = {eta}"
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// eta = 4ab - c^2.
    pub fn eta(&self) -> f64 {
        4.0 * self.a * self.b - self.c * self.c
    }

    /// Determinant of the Gram matrix, eta / 4.
    pub fn det(&self) -> f64 {
        self.eta() / 4.0
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self { a: k * self.a, b: k * self.b, c: k * self.c }
    }

    /// The form with n1 and n2 exchanged.
    pub fn swapped(&self) -> Self {
        Self { a: self.b, b: self.a, c: self.c }
    }

    /// det * (inverse Gram form) = (b, a, -c).
    pub fn adjugate(&self) -> Self {
        Self { a: self.b, b: self.a, c: -self.c }
    }

    /// (1/a, 1/b, 0); defined for diagonal forms only.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.c != 0.0 {
            return Err(Error::Domain(
                "reciprocal form is only defined for c = 0 (unsupported form)".into(),
            ));
        }
        Self::new(1.0 / self.a, 1.0 / self.b, 0.0)
    }

    /// Area of the region phi <= 1, 2 pi / sqrt(eta).
    pub fn unit_area(&self) -> f64 {
        2.0 * PI / self.eta().sqrt()
    }

    /// max sqrt(phi) over the corners of the unit cell [-1/2, 1/2]^2.
    pub fn cell_radius(&self) -> f64 {
        let p = self.eval(0.5, 0.5).max(self.eval(0.5, -0.5));
        p.sqrt()
    }

    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.a * x * x + self.c * x * y + self.b * y * y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub n1: i64,
    pub n2: i64,
}

impl LatticePoint {
    pub fn new(n1: i64, n2: i64) -> Self {
        Self { n1, n2 }
    }
}

pub fn phi_eval(form: &QuadraticForm, p: LatticePoint) -> f64 {
    form.eval(p.n1 as f64, p.n2 as f64)
}

/// Range of n2 with phi(n1, n2) <= x in row n1, padded by one on each side.
fn row_range(form: &QuadraticForm, n1: i64, x: f64) -> Option<(i64, i64)> {
    let n = n1 as f64;
    let disc = form.c * form.c * n * n - 4.0 * form.b * (form.a * n * n - x);
    if disc < 0.0 {
        return None;
    }
    let r = disc.sqrt();
    let lo = ((-form.c * n - r) / (2.0 * form.b)).ceil() as i64 - 1;
    let hi = ((-form.c * n + r) / (2.0 * form.b)).floor() as i64 + 1;
    Some((lo, hi))
}

fn n1_extent(form: &QuadraticForm, x: f64) -> i64 {
    (4.0 * form.b * x / form.eta()).sqrt().ceil() as i64
}

/// Every nonzero lattice point with phi <= x, ordered by (n1, n2).
pub fn enumerate_below(form: &QuadraticForm, x: f64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    if !(x > 0.0) {
        return out;
    }
    let big = n1_extent(form, x);
    for n1 in -big..=big {
        if let Some((lo, hi)) = row_range(form, n1, x) {
            for n2 in lo..=hi {
                if (n1, n2) != (0, 0) && form.eval(n1 as f64, n2 as f64) <= x {
                    out.push(LatticePoint::new(n1, n2));
                }
            }
        }
    }
    out
}

/// Number of nonzero lattice points with phi <= x.
pub fn count_below(form: &QuadraticForm, x: f64) -> u64 {
    if !(x > 0.0) {
        return 0;
    }
    let big = n1_extent(form, x);
    (-big..=big)
        .into_par_iter()
        .map(|n1| match row_range(form, n1, x) {
            Some((lo, hi)) => (lo..=hi)
                .filter(|&n2| (n1, n2) != (0, 0) && form.eval(n1 as f64, n2 as f64) <= x)
                .count() as u64,
            None => 0,
        })
        .sum()
}

/// Rough upper estimate of the number of points with phi <= x.
pub fn count_estimate(form: &QuadraticForm, x: f64) -> f64 {
    let r = x.max(0.0).sqrt() + form.cell_radius();
    form.unit_area() * r * r
}

/// sum' f(phi(n)) over phi <= x. Rows are summed in parallel, each with
/// compensated summation, and combined in row order, so the result does not
/// depend on the thread count.
pub fn sum_below<F>(form: &QuadraticForm, x: f64, f: F) -> NeumaierC
where
    F: Fn(f64) -> Complex64 + Sync,
{
    if !(x > 0.0) {
        return NeumaierC::new();
    }
    let big = n1_extent(form, x);
    let rows: Vec<NeumaierC> = (-big..=big)
        .into_par_iter()
        .map(|n1| {
            let mut acc = NeumaierC::new();
            if let Some((lo, hi)) = row_range(form, n1, x) {
                for n2 in lo..=hi {
                    if (n1, n2) == (0, 0) {
                        continue;
                    }
                    let p = form.eval(n1 as f64, n2 as f64);
                    if p <= x {
                        acc.add(f(p));
                    }
                }
            }
            acc
        })
        .collect();
    let mut total = NeumaierC::new();
    for r in &rows {
        total.merge(r);
    }
    total
}

/// Bound on |N(u) - A u| with N(u) the number of nonzero points with
/// phi <= u and A the area of phi <= 1 (unit-cell containment argument).
pub(crate) fn discrepancy_bound(form: &QuadraticForm, u: f64) -> f64 {
    let a = form.unit_area();
    let rho = form.cell_radius();
    a * (2.0 * rho * u.sqrt() + rho * rho) + 1.0
}

/// Bound on |sum'_{phi > X} phi^{-s} - A X^{1-s}/(s-1)| for Re s > 1.
pub(crate) fn direct_tail_bound(form: &QuadraticForm, s: Complex64, x: f64) -> f64 {
    let sigma = s.re;
    let a = form.unit_area();
    let rho = form.cell_radius();
    let e = discrepancy_bound(form, x) * x.powf(-sigma);
    let integral = 2.0 * a * rho * x.powf(0.5 - sigma) / (sigma - 0.5)
        + (a * rho * rho + 1.0) * x.powf(-sigma) / sigma;
    e + s.norm() * integral
}

/// Direct lattice sum for Re s > 1.
///
/// Points with phi <= X are summed exactly; the remainder is replaced by its
/// integral A X^{1-s}/(s-1), and `abs_err` bounds the difference using the
/// lattice-point discrepancy. X is the smallest power-of-two multiple that
/// meets the tolerance.
pub fn direct_sum(form: &QuadraticForm, s: Complex64, tol: &ToleranceConfig) -> Result<EvalResult> {
    check_finite(s, "s")?;
    tol.validate()?;
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("direct lattice sum needs Re s > 1, got s = {s}")));
    }
    let target = 0.5 * tol.target_abs_tol;
    let mut x = 4.0 * form.cell_radius().powi(2) + 1.0;
    while direct_tail_bound(form, s, x) > target {
        x *= 1.25;
        if count_estimate(form, x) > tol.max_terms as f64 {
            return Err(Error::Accuracy(format!(
                "direct sum at s = {s} needs more than {} lattice points for tolerance {:e}",
                tol.max_terms, tol.target_abs_tol
            )));
        }
    }
    let acc = sum_below(form, x, |p| (-s * p.ln()).exp());
    let tail = form.unit_area() * ((1.0 - s) * x.ln()).exp() / (s - 1.0);
    let value = acc.value() + tail;
    let abs_err = direct_tail_bound(form, s, x) + 8.0 * f64::EPSILON * acc.abs_total();
    Ok(EvalResult::new(value, abs_err))
}

/// Rotation angle of the split point for Im s = t.
fn rotation(t: f64) -> f64 {
    let th = (PI / 2.0 - ROTATION_KAPPA / t.abs()).max(0.0);
    th.copysign(t)
}

/// ln of the common prefactor K in the tail bound K e^{-pi c q} / q of both
/// lattice sums, see [`continuation_tail`].
fn ln_tail_prefactor(s: Complex64, theta: f64, cos_t: f64) -> f64 {
    2f64.ln() + s.re * PI.ln() - (s.im * theta).abs() - ln_gamma(s).re - (PI * cos_t).ln()
}

/// Bound on the lattice terms beyond Q > X of one sum of the continuation
/// (D = 1 normalization, counting function <= pi (sqrt(u) + rho)^2).
fn continuation_tail(ln_k: f64, cos_t: f64, rho: f64, x: f64) -> f64 {
    let pc = PI * cos_t;
    let count = PI * ((x.sqrt() + rho).powi(2) + (1.0 + rho / x.sqrt()) / pc);
    (ln_k - pc * x - x.ln()).exp() * count
}

/// Smallest X (on a geometric grid) whose tail bound is below `target`.
fn continuation_cutoff(s: Complex64, ln_k: f64, cos_t: f64, rho: f64, target: f64) -> f64 {
    // The incomplete-Gamma estimate needs pi c X >= 2 max(|Re s - 1/2| + 1/2 - 1, 0).
    let floor = 2.0 * ((s.re - 0.5).abs() - 0.5).max(0.0) / (PI * cos_t);
    let mut x = floor.max(1.0);
    while continuation_tail(ln_k, cos_t, rho, x) > target {
        x *= 1.1;
    }
    x
}

/// Epstein zeta with the default tolerance.
pub fn epstein_zeta(form: &QuadraticForm, s: Complex64) -> Result<EvalResult> {
    epstein_zeta_with(form, s, &ToleranceConfig::default())
}

/// Epstein zeta continued to all s != 1.
pub fn epstein_zeta_with(
    form: &QuadraticForm,
    s: Complex64,
    tol: &ToleranceConfig,
) -> Result<EvalResult> {
    check_finite(s, "s")?;
    tol.validate()?;
    if s == c(1.0, 0.0) {
        return Err(Error::Pole("Epstein zeta has a pole at s = 1".into()));
    }
    if let Some(n) = as_integer(s) {
        if n == 0 {
            return Ok(EvalResult::exact(c(-1.0, 0.0)));
        }
        if n < 0 {
            return Ok(EvalResult::exact(c(0.0, 0.0)));
        }
    }
    let d = form.det();
    let norm_form = form.scaled(1.0 / d.sqrt());
    let dual_form = norm_form.adjugate();
    // A(form; s) = D^{-s/2} A(normalized; s).
    let outer = (-s * (0.5 * d.ln())).exp();

    let theta = rotation(s.im);
    let cos_t = theta.cos();
    let delta = Complex64::from_polar(1.0, theta);
    let ln_k = ln_tail_prefactor(s, theta, cos_t);
    let target = 0.05 * tol.target_abs_tol / outer.norm().max(1e-300);
    let x_main = continuation_cutoff(s, ln_k, cos_t, norm_form.cell_radius(), target);
    let x_dual = continuation_cutoff(s, ln_k, cos_t, dual_form.cell_radius(), target);
    for (xx, f) in [(x_main, &norm_form), (x_dual, &dual_form)] {
        if count_estimate(f, xx) > tol.max_terms as f64 {
            return Err(Error::Accuracy(format!(
                "Epstein continuation at s = {s} needs more than {} lattice points",
                tol.max_terms
            )));
        }
    }

    let failure = std::sync::Mutex::new(None::<Error>);
    let record = |e: Error| {
        let mut g = failure.lock().expect("failure slot");
        if g.is_none() {
            *g = Some(e);
        }
        c(0.0, 0.0)
    };
    let main = sum_below(&norm_form, x_main, |q| {
        match upper_gamma_ratio(s, delta * (PI * q), s) {
            Ok(w) => (-s * q.ln()).exp() * w,
            Err(e) => record(e),
        }
    });
    let one_minus = 1.0 - s;
    let dual = sum_below(&dual_form, x_dual, |q| {
        match upper_gamma_ratio(one_minus, (PI * q) / delta, s) {
            Ok(w) => ((s - 1.0) * q.ln()).exp() * w,
            Err(e) => record(e),
        }
    });
    if let Some(e) = failure.into_inner().expect("failure slot") {
        return Err(e);
    }
    let dual_pref = ((2.0 * s - 1.0) * PI.ln()).exp();
    let i_theta = c(0.0, theta);
    let pole1 = (s * PI.ln()).exp() / (s - 1.0) * ((s - 1.0) * i_theta - ln_gamma(s)).exp();
    let pole2 = -(s * (PI.ln() + i_theta) - ln_gamma(s + 1.0)).exp();

    let inner = main.value() + dual_pref * dual.value() + pole1 + pole2;
    let rounding = 16.0
        * f64::EPSILON
        * (main.abs_total() + dual_pref.norm() * dual.abs_total() + pole1.norm() + pole2.norm());
    let trunc = continuation_tail(ln_k, cos_t, norm_form.cell_radius(), x_main)
        + continuation_tail(ln_k, cos_t, dual_form.cell_radius(), x_dual);
    let mut value = outer * inner;
    if s.im == 0.0 {
        value.im = 0.0;
    }
    Ok(EvalResult::new(value, outer.norm() * (rounding + trunc)))
}

/// X(s) = (2 pi / sqrt(eta))^{2s-1} Gamma(1-s) / Gamma(s).
pub fn x_factor(form: &QuadraticForm, s: Complex64) -> Result<Complex64> {
    check_finite(s, "s")?;
    if let Some(n) = as_integer(s) {
        if n <= 0 {
            return Err(Error::Pole(format!("X(s) involves 1/Gamma(s) with a pole at s = {n}")));
        }
        return Err(Error::Pole(format!("X(s) involves Gamma(1-s) with a pole at s = {n}")));
    }
    let l = (2.0 * PI / form.eta().sqrt()).ln();
    let v = ((2.0 * s - 1.0) * l + ln_gamma(1.0 - s) - ln_gamma(s)).exp();
    Ok(if s.im == 0.0 { c(v.re, 0.0) } else { v })
}

fn check_reflect(form: &QuadraticForm, s: Complex64) -> Result<QuadraticForm> {
    let recip = form.reciprocal()?;
    if s == c(1.0, 0.0) || s == c(0.0, 0.0) {
        return Err(Error::Pole(format!("functional equation is singular at s = {s}")));
    }
    Ok(recip)
}

/// Right-hand side of the functional equation for diagonal forms,
///   A(a,b,0;s) = X(s) (ab)^{s-1} A(1/a,1/b,0;1-s),
/// evaluated through [`epstein_zeta`] on the reciprocal form.
pub fn reflect(form: &QuadraticForm, s: Complex64) -> Result<EvalResult> {
    let recip = check_reflect(form, s)?;
    let x = x_factor(form, s)?;
    let norm = ((s - 1.0) * form.det().ln()).exp();
    let r = epstein_zeta(&recip, 1.0 - s)?;
    let pref = x * norm;
    let value = pref * r.value;
    Ok(EvalResult::new(value, pref.norm() * r.abs_err + 16.0 * f64::EPSILON * value.norm()))
}

/// The functional equation without the (ab)^{s-1} normalization. It holds
/// only when ab = 1; kept to document the size of the discrepancy.
pub fn reflect_unnormalized(form: &QuadraticForm, s: Complex64) -> Result<EvalResult> {
    let recip = check_reflect(form, s)?;
    let x = x_factor(form, s)?;
    let r = epstein_zeta(&recip, 1.0 - s)?;
    Ok(EvalResult::new(x * r.value, x.norm() * r.abs_err))
}

fn check_lengths(l1: f64, l2: f64) -> Result<()> {
    if !(l1 > 0.0 && l2 > 0.0 && l1.is_finite() && l2.is_finite()) {
        return Err(Error::Domain(format!("box sides must be positive, got {l1} x {l2}")));
    }
    Ok(())
}

/// The Epstein form pi^2 (n1^2 / L1^2 + n2^2 / L2^2) of a rectangle.
pub fn box_form(l1: f64, l2: f64) -> Result<QuadraticForm> {
    check_lengths(l1, l2)?;
    QuadraticForm::new(PI * PI / (l1 * l1), PI * PI / (l2 * l2), 0.0)
}

/// Z(pi^2/L1^2, pi^2/L2^2; s).
pub fn box_z(l1: f64, l2: f64, s: Complex64) -> Result<EvalResult> {
    epstein_zeta(&box_form(l1, l2)?, s)
}

/// E(L1, L2; s) = Z/8 - [(pi/L1)^{-2s} + (pi/L2)^{-2s}] zeta(2s) / 4.
pub fn box_energy_e(l1: f64, l2: f64, s: Complex64) -> Result<EvalResult> {
    check_lengths(l1, l2)?;
    check_finite(s, "s")?;
    if s == c(0.5, 0.0) || s == c(1.0, 0.0) {
        return Err(Error::Pole(format!("E(L1, L2; s) has a pole at s = {s}")));
    }
    let z = box_z(l1, l2, s)?;
    let tol = ToleranceConfig::default();
    let zeta = riemann_zeta_with(2.0 * s, &tol)?;
    let side = |l: f64| (-2.0 * s * (PI / l).ln()).exp();
    let edge = side(l1) + side(l2);
    let value = z.value / 8.0 - edge * zeta.value / 4.0;
    let abs_err = z.abs_err / 8.0
        + edge.norm() * zeta.abs_err / 4.0
        + 4.0 * f64::EPSILON * (z.value.norm() / 8.0 + (edge * zeta.value).norm() / 4.0);
    Ok(EvalResult::new(value, abs_err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{dirichlet_beta, riemann_zeta};
    use proptest::prelude::*;

    fn unit() -> QuadraticForm {
        QuadraticForm::new(1.0, 1.0, 0.0).unwrap()
    }

    fn four_zeta_beta(s: f64) -> f64 {
        4.0 * riemann_zeta(c(s, 0.0)).unwrap().value.re * dirichlet_beta(s).unwrap()
    }

    #[test]
    fn form_validation() {
        assert!(QuadraticForm::new(0.0, 1.0, 0.0).is_err());
        assert!(QuadraticForm::new(1.0, 1.0, 2.0).is_err());
        assert!(QuadraticForm::new(1.0, 1.0, 1.9).is_ok());
        assert_eq!(QuadraticForm::new(2.0, 3.0, 1.0).unwrap().eta(), 23.0);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_eval(&unit(), LatticePoint::new(1, 0)), 1.0);
        assert_eq!(phi_eval(&unit(), LatticePoint::new(3, 4)), 25.0);
        let f = QuadraticForm::new(2.0, 3.0, 1.0).unwrap();
        assert_eq!(phi_eval(&f, LatticePoint::new(1, -1)), 4.0);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_below(&unit(), 1.0).len(), 4);
        assert_eq!(enumerate_below(&unit(), 2.0).len(), 8);
        assert!(enumerate_below(&unit(), 0.5).is_empty());
        let pts = enumerate_below(&unit(), 25.0);
        let mut sorted = pts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(pts, sorted);
    }

    #[test]
    fn enumeration_matches_box_scan_for_skew_form() {
        let f = QuadraticForm::new(2.0, 3.0, 1.7).unwrap();
        let x = 40.0;
        let n1 = (4.0 * f.b() * x / f.eta()).sqrt().ceil() as i64;
        let n2 = (4.0 * f.a() * x / f.eta()).sqrt().ceil() as i64;
        let mut brute = Vec::new();
        for i in -n1..=n1 {
            for j in -n2..=n2 {
                if (i, j) != (0, 0) && f.eval(i as f64, j as f64) <= x {
                    brute.push(LatticePoint::new(i, j));
                }
            }
        }
        assert_eq!(enumerate_below(&f, x), brute);
        assert_eq!(count_below(&f, x), brute.len() as u64);
    }

    #[test]
    fn gauss_circle_count() {
        let x = 1e4;
        let n = count_below(&unit(), x) as f64 + 1.0;
        assert!((n / (PI * x) - 1.0).abs() < 0.05);
    }

    #[test]
    fn direct_sum_matches_zeta_beta() {
        let tol = ToleranceConfig::with_tol(1e-8);
        let r = direct_sum(&unit(), c(3.0, 0.0), &tol).unwrap();
        assert!(r.abs_err <= 1e-8);
        assert!((r.value.re - four_zeta_beta(3.0)).abs() <= r.abs_err + 1e-14);
        assert!(direct_sum(&unit(), c(1.0, 0.0), &tol).is_err());
    }

    #[test]
    fn continuation_matches_zeta_beta() {
        for s in [2.0, 3.0, 1.5, 0.5, 0.25, 1.0001] {
            let r = epstein_zeta(&unit(), c(s, 0.0)).unwrap();
            let want = four_zeta_beta(s);
            assert!((r.value.re - want).abs() <= 1e-11 * want.abs().max(1.0), "s = {s}: {} vs {want}", r.value);
        }
    }

    #[test]
    fn special_points() {
        assert_eq!(epstein_zeta(&unit(), c(0.0, 0.0)).unwrap().value, c(-1.0, 0.0));
        assert_eq!(epstein_zeta(&unit(), c(-2.0, 0.0)).unwrap().value, c(0.0, 0.0));
        assert!(matches!(epstein_zeta(&unit(), c(1.0, 0.0)), Err(Error::Pole(_))));
        // Continuity through the exact special points.
        let near = epstein_zeta(&unit(), c(1e-7, 0.0)).unwrap().value.re;
        assert!((near + 1.0).abs() < 1e-5);
    }

    #[test]
    fn x_factor_examples() {
        assert!((x_factor(&unit(), c(0.5, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        let s = c(0.3, 2.0);
        let p = x_factor(&unit(), s).unwrap() * x_factor(&unit(), 1.0 - s).unwrap();
        assert!((p - 1.0).norm() < 1e-12);
        let f = QuadraticForm::new(1.0, 2.0, 0.0).unwrap();
        assert!(matches!(x_factor(&f, c(2.0, 0.0)), Err(Error::Pole(_))));
    }

    #[test]
    fn functional_equation_residuals() {
        for (a, b) in [(1.0, 1.0), (1.0, 4.0), (2.0, 3.0)] {
            let f = QuadraticForm::new(a, b, 0.0).unwrap();
            for s in [c(-0.5, 0.0), c(0.25, 0.0), c(1.5, 0.0), c(0.3, 7.0)] {
                let lhs = epstein_zeta(&f, s).unwrap().value;
                let rhs = reflect(&f, s).unwrap().value;
                assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(1.0), "form ({a},{b}) s = {s}");
            }
        }
    }

    #[test]
    fn unnormalized_equation_fails_unless_ab_is_one() {
        let s = c(1.5, 0.0);
        let f = QuadraticForm::new(1.0, 4.0, 0.0).unwrap();
        let lhs = epstein_zeta(&f, s).unwrap().value;
        let bad = reflect_unnormalized(&f, s).unwrap().value;
        assert!((lhs - bad).norm() > 0.1 * lhs.norm());
        let g = QuadraticForm::new(2.0, 0.5, 0.0).unwrap();
        let ok = reflect_unnormalized(&g, s).unwrap().value;
        assert!((epstein_zeta(&g, s).unwrap().value - ok).norm() < 1e-10);
    }

    #[test]
    fn reflect_rejects_skew_forms() {
        let f = QuadraticForm::new(2.0, 3.0, 1.0).unwrap();
        assert!(matches!(reflect(&f, c(1.5, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn skew_form_matches_direct_sum() {
        let f = QuadraticForm::new(2.0, 3.0, 1.0).unwrap();
        let s = c(2.5, 1.0);
        let d = direct_sum(&f, s, &ToleranceConfig::with_tol(1e-9)).unwrap();
        let e = epstein_zeta(&f, s).unwrap();
        assert!((d.value - e.value).norm() <= d.abs_err + e.abs_err);
    }

    #[test]
    fn large_imaginary_part_against_zeta_beta() {
        // A(1,1,0;s) = 4 zeta(s) beta(s), beta via Hurwitz zeta.
        use crate::specfun::hurwitz_zeta;
        for s in [c(0.5, 50.0), c(0.8, 180.0), c(-0.5, 120.0)] {
            let beta = (-s * 4f64.ln()).exp()
                * (hurwitz_zeta(s, 0.25).unwrap().value - hurwitz_zeta(s, 0.75).unwrap().value);
            let want = 4.0 * riemann_zeta(s).unwrap().value * beta;
            let got = epstein_zeta(&unit(), s).unwrap();
            assert!((got.value - want).norm() <= 1e-10 * want.norm().max(1.0), "s = {s}: {} vs {want}", got.value);
        }
    }

    #[test]
    fn box_z_reductions() {
        let s = c(2.0, 0.0);
        let unit_val = epstein_zeta(&unit(), s).unwrap().value;
        assert!((box_z(PI, PI, s).unwrap().value - unit_val).norm() < 1e-13);
        assert!((box_z(1.0, 1.0, s).unwrap().value - unit_val / PI.powi(4)).norm() < 1e-13);
    }

    #[test]
    fn box_energy_poles_and_symmetry() {
        assert!(matches!(box_energy_e(1.0, 2.0, c(0.5, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(box_energy_e(1.0, 2.0, c(1.0, 0.0)), Err(Error::Pole(_))));
        let s = c(-0.5, 0.0);
        let a = box_energy_e(1.0, 2.5, s).unwrap().value;
        let b = box_energy_e(2.5, 1.0, s).unwrap().value;
        assert!((a - b).norm() < 1e-13);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn homogeneity(a in 0.3f64..3.0, b in 0.3f64..3.0, cr in -0.9f64..0.9,
                       k in 0.2f64..5.0, sr in -1.5f64..2.5, si in -20.0f64..20.0) {
            let cc = cr * 2.0 * (a * b).sqrt();
            let f = QuadraticForm::new(a, b, cc).unwrap();
            let s = c(sr, si);
            prop_assume!((s - 1.0).norm() > 1e-3);
            let lhs = epstein_zeta(&f.scaled(k), s).unwrap().value;
            let rhs = (-s * k.ln()).exp() * epstein_zeta(&f, s).unwrap().value;
            prop_assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1.0));
        }

        #[test]
        fn swap_symmetry(a in 0.3f64..3.0, b in 0.3f64..3.0, sr in -1.0f64..2.0, si in -30.0f64..30.0) {
            let f = QuadraticForm::new(a, b, 0.0).unwrap();
            let s = c(sr, si);
            prop_assume!((s - 1.0).norm() > 1e-3);
            let x = epstein_zeta(&f, s).unwrap().value;
            let y = epstein_zeta(&f.swapped(), s).unwrap().value;
            prop_assert!((x - y).norm() <= 1e-11 * x.norm().max(1.0));
        }
    }
}
