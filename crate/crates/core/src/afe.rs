//! Approximate functional equations.
//!
//! Hardy-Littlewood for the Riemann zeta function,
//!   zeta(s) = sum_{n<=x} n^{-s} + vartheta(s) sum_{n<=y} n^{s-1} + O(x^{-sigma}) + O(t^{1/2-sigma} y^{sigma-1}),
//! with 2 pi x y = t, and Potter's analogue for the Epstein zeta function,
//!   A(s) = sum'_{phi<=x} phi^{-s} + X(s) sum'_{phi<=y} phi^{s-1} + ...,
//! with 4 pi^2 x y = eta t^2.
//!
//! Both error terms are only known up to constants. The envelopes below use
//! frozen constants from the calibration file; the Potter envelope is
//! calibrated, not proven.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::Calibration;
use crate::epstein::{count_below, sum_below, x_factor, QuadraticForm};
use crate::error::{Error, Result};
use crate::specfun::{check_finite, harmonic_literal, harmonic_number, vartheta, EvalResult};

/// Relative tolerance for split constraints.
const SPLIT_RTOL: f64 = 1e-12;

/// Hardy-Littlewood split with 2 pi x y = t.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HLSplit {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

impl HLSplit {
    /// Split with the given x and y; t follows from the constraint.
    pub fn from_xy(x: f64, y: f64) -> Result<Self> {
        Self::new(x, y, 2.0 * PI * x * y)
    }

    pub fn new(x: f64, y: f64, t: f64) -> Result<Self> {
        for (name, v) in [("x", x), ("y", y), ("t", t)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!("split {name} must be positive, got {v}")));
            }
        }
        if (2.0 * PI * x * y - t).abs() > SPLIT_RTOL * t {
            return Err(Error::Domain(format!("split violates 2 pi x y = t: x = {x}, y = {y}, t = {t}")));
        }
        Ok(Self { x, y, t })
    }
}

/// Symmetric split x = y = sqrt(t / 2 pi).
pub fn hl_default_split(t: f64) -> Result<HLSplit> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    let x = (t / (2.0 * PI)).sqrt();
    Ok(HLSplit { x, y: x, t })
}

/// How the finite sums treat non-integer limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SumMode {
    /// sum over n <= floor(x).
    Literal,
    /// H_x(s) = zeta(s) - zeta_H(s; x+1) with real x.
    Continuation,
}

/// Mode used by [`afe_riemann`]: literal inside 0 <= Re s < 1, continuation
/// outside.
pub fn default_mode(s: Complex64) -> SumMode {
    if (0.0..1.0).contains(&s.re) {
        SumMode::Literal
    } else {
        SumMode::Continuation
    }
}

/// C (x^{-sigma} + t^{1/2-sigma} y^{sigma-1}) with the calibrated C.
pub fn afe_error_bound(s: Complex64, split: &HLSplit) -> f64 {
    afe_error_bound_with(s, split, Calibration::builtin().hl_envelope_c)
}

pub fn afe_error_bound_with(s: Complex64, split: &HLSplit, constant: f64) -> f64 {
    let sigma = s.re;
    constant * (split.x.powf(-sigma) + split.t.powf(0.5 - sigma) * split.y.powf(sigma - 1.0))
}

pub fn afe_riemann(s: Complex64, split: &HLSplit) -> Result<EvalResult> {
    afe_riemann_with(s, split, default_mode(s), &Calibration::builtin())
}

/// Hardy-Littlewood approximation; `abs_err` is the calibrated envelope.
pub fn afe_riemann_with(
    s: Complex64,
    split: &HLSplit,
    mode: SumMode,
    cal: &Calibration,
) -> Result<EvalResult> {
    check_finite(s, "s")?;
    if split.x < 1.0 || split.y < 1.0 {
        return Err(Error::DegenerateSplit(format!(
            "x = {:.4}, y = {:.4}: at least one sum is empty (t = {} is too small)",
            split.x, split.y, split.t
        )));
    }
    let th = vartheta(s)?;
    let (first, second) = match mode {
        SumMode::Literal => (
            harmonic_literal(split.x.floor() as u64, s),
            harmonic_literal(split.y.floor() as u64, 1.0 - s),
        ),
        SumMode::Continuation => (
            harmonic_number(split.x, s)?.value,
            harmonic_number(split.y, 1.0 - s)?.value,
        ),
    };
    let value = first + th * second;
    Ok(EvalResult::new(value, afe_error_bound_with(s, split, cal.hl_envelope_c)))
}

/// Potter split with 4 pi^2 x y = eta t^2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotterSplit {
    pub x: f64,
    pub y: f64,
    pub t: f64,
    pub eta: f64,
}

impl PotterSplit {
    pub fn new(x: f64, y: f64, t: f64, eta: f64) -> Result<Self> {
        for (name, v) in [("x", x), ("y", y), ("t", t), ("eta", eta)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!("split {name} must be positive, got {v}")));
            }
        }
        let lhs = 4.0 * PI * PI * x * y;
        let rhs = eta * t * t;
        if (lhs - rhs).abs() > SPLIT_RTOL * rhs {
            return Err(Error::Domain(format!(
                "split violates 4 pi^2 x y = eta t^2: x = {x}, y = {y}, t = {t}, eta = {eta}"
            )));
        }
        Ok(Self { x, y, t, eta })
    }

    /// x given, y from the constraint.
    pub fn from_x(form: &QuadraticForm, x: f64, t: f64) -> Result<Self> {
        let eta = form.eta();
        Self::new(x, eta * t * t / (4.0 * PI * PI * x), t, eta)
    }
}

/// Symmetric split x = y = sqrt(eta) t / (2 pi).
pub fn potter_default_split(form: &QuadraticForm, t: f64) -> Result<PotterSplit> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    let eta = form.eta();
    let x = eta.sqrt() * t / (2.0 * PI);
    Ok(PotterSplit { x, y: x, t, eta })
}

/// C_P (x^{-sigma} + |X(s)| y^{sigma-1}): the Hardy-Littlewood shape with
/// the mirror term scaled by the size of the Epstein factor.
pub fn potter_envelope(form: &QuadraticForm, s: Complex64, split: &PotterSplit, constant: f64) -> Result<f64> {
    let sigma = s.re;
    let x = x_factor(form, s)?;
    Ok(constant * (split.x.powf(-sigma) + x.norm() * split.y.powf(sigma - 1.0)))
}

pub fn potter_afe(form: &QuadraticForm, s: Complex64, split: &PotterSplit) -> Result<EvalResult> {
    potter_afe_with(form, s, split, &Calibration::builtin())
}

/// Potter's approximation; `abs_err` is the calibrated envelope.
pub fn potter_afe_with(
    form: &QuadraticForm,
    s: Complex64,
    split: &PotterSplit,
    cal: &Calibration,
) -> Result<EvalResult> {
    check_finite(s, "s")?;
    if (split.eta - form.eta()).abs() > SPLIT_RTOL * form.eta() {
        return Err(Error::Domain(format!(
            "split eta = {} does not match the form's eta = {}",
            split.eta,
            form.eta()
        )));
    }
    if count_below(form, split.x) == 0 {
        return Err(Error::DegenerateSplit(format!(
            "no lattice point with phi <= x = {}",
            split.x
        )));
    }
    let x = x_factor(form, s)?;
    let first = sum_below(form, split.x, |p| (-s * p.ln()).exp()).value();
    let second = sum_below(form, split.y, |p| ((s - 1.0) * p.ln()).exp()).value();
    let value = first + x * second;
    Ok(EvalResult::new(value, potter_envelope(form, s, split, cal.potter_envelope_c)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epstein::epstein_zeta;
    use crate::specfun::{c, riemann_zeta};

    #[test]
    fn default_split_examples() {
        let s = hl_default_split(2.0 * PI).unwrap();
        assert!((s.x - 1.0).abs() < 1e-15 && (s.y - 1.0).abs() < 1e-15);
        let s = hl_default_split(200.0 * PI).unwrap();
        assert!((s.x - 10.0).abs() < 1e-13);
        let s = hl_default_split(100.0).unwrap();
        assert!((s.x - 3.989_422_804_014_327).abs() < 1e-13);
    }

    #[test]
    fn split_constraint_enforced() {
        assert!(HLSplit::new(2.0, 3.0, 1.0).is_err());
        assert!(HLSplit::from_xy(2.0, 3.0).is_ok());
    }

    #[test]
    fn critical_line_agreement() {
        for t in [100.0, 1000.0] {
            let s = c(0.5, t);
            let split = hl_default_split(t).unwrap();
            let a = afe_riemann(s, &split).unwrap();
            let z = riemann_zeta(s).unwrap();
            assert!((a.value - z.value).norm() <= a.abs_err, "t = {t}");
        }
    }

    #[test]
    fn small_t_is_degenerate() {
        let split = hl_default_split(1.0).unwrap();
        assert!(matches!(afe_riemann(c(0.5, 1.0), &split), Err(Error::DegenerateSplit(_))));
    }

    #[test]
    fn bound_decreases_on_critical_line() {
        let b = |t: f64| afe_error_bound(c(0.5, t), &hl_default_split(t).unwrap());
        assert!(b(200.0) < b(100.0));
        // sigma = 1/2, x = y: bound = 2C (t/2pi)^{-1/4} after t^0 = 1.
        let want = 5.0 * ((100.0f64 / (2.0 * PI)).powf(-0.25) + (100.0f64 / (2.0 * PI)).powf(-0.25));
        assert!((b(100.0) - want).abs() < 1e-12);
    }

    #[test]
    fn bound_at_sigma_09() {
        // 5 (x^{-0.9} + 500^{-0.4} x^{-0.1}), x = sqrt(500 / 2 pi) = 8.920620580763856.
        let v = afe_error_bound(c(0.9, 500.0), &hl_default_split(500.0).unwrap());
        assert!((v - 1.0320715029416971).abs() < 1e-12, "{v}");
    }

    #[test]
    fn modes_agree_at_integer_limits() {
        let s = c(0.3, 40.0);
        let split = HLSplit::from_xy(4.0, 40.0 / (2.0 * PI * 4.0)).unwrap();
        let split_int = HLSplit::from_xy(4.0, 2.0).unwrap();
        let cal = Calibration::builtin();
        let a = afe_riemann_with(s, &split_int, SumMode::Literal, &cal).unwrap();
        let b = afe_riemann_with(s, &split_int, SumMode::Continuation, &cal).unwrap();
        assert!((a.value - b.value).norm() < 1e-12);
        let lit = afe_riemann_with(s, &split, SumMode::Literal, &cal).unwrap();
        let con = afe_riemann_with(s, &split, SumMode::Continuation, &cal).unwrap();
        assert!((lit.value - con.value).norm() > 1e-6);
    }

    #[test]
    fn potter_examples() {
        let f = QuadraticForm::new(1.0, 1.0, 0.0).unwrap();
        let s = c(0.5, 50.0);
        let split = potter_default_split(&f, 50.0).unwrap();
        let p = potter_afe(&f, s, &split).unwrap();
        let e = epstein_zeta(&f, s).unwrap();
        assert!((p.value - e.value).norm() <= p.abs_err);

        let tiny = PotterSplit::from_x(&f, 0.5, 50.0).unwrap();
        assert!(matches!(potter_afe(&f, s, &tiny), Err(Error::DegenerateSplit(_))));

        let g = QuadraticForm::new(1.0, 2.5, 0.0).unwrap();
        let sp = potter_default_split(&g, 30.0).unwrap();
        let a = potter_afe(&g, c(0.4, 30.0), &sp).unwrap().value;
        let b = potter_afe(&g.swapped(), c(0.4, 30.0), &sp).unwrap().value;
        assert!((a - b).norm() < 1e-12 * a.norm());
    }

    #[test]
    fn random_strip_sample_within_envelope() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let mut ratios = Vec::new();
        for _ in 0..100 {
            let sigma: f64 = rng.gen_range(0.0..1.0);
            let t: f64 = rng.gen_range(20.0..2000.0);
            let s = c(sigma, t);
            let split = hl_default_split(t).unwrap();
            let a = afe_riemann(s, &split).unwrap();
            let z = riemann_zeta(s).unwrap();
            let err = (a.value - z.value).norm();
            assert!(err <= a.abs_err, "s = {s}: {err} > {}", a.abs_err);
            ratios.push(err / a.abs_err);
        }
        ratios.sort_by(f64::total_cmp);
        assert!(ratios[50] <= 1.0);
    }

    #[test]
    fn potter_grid_within_frozen_envelope() {
        let f = QuadraticForm::new(1.0, 1.0, 0.0).unwrap();
        for sigma in [0.1, 0.3, 0.5, 0.7, 0.9] {
            for t in [20.0, 55.0, 110.0, 157.0, 200.0] {
                let s = c(sigma, t);
                let split = potter_default_split(&f, t).unwrap();
                let p = potter_afe(&f, s, &split).unwrap();
                let e = epstein_zeta(&f, s).unwrap();
                assert!((p.value - e.value).norm() <= p.abs_err, "s = {s}");
            }
        }
    }

    #[test]
    fn x_factor_reciprocity() {
        let f = QuadraticForm::new(1.0, 1.0, 0.0).unwrap();
        let s = c(0.3, 2.0);
        let p = x_factor(&f, s).unwrap() * x_factor(&f, 1.0 - s).unwrap();
        assert!((p - 1.0).norm() < 1e-10);
        assert!((x_factor(&f, c(0.5, 0.0)).unwrap() - 1.0).norm() < 1e-14);
        let g = QuadraticForm::new(1.0, 2.0, 0.0).unwrap();
        assert!(matches!(x_factor(&g, c(2.0, 0.0)), Err(Error::Pole(_))));
    }
}
