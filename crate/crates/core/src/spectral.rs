//! Brute-force spectral oracle for the Dirichlet rectangle.
//!
//! Eigenfrequencies omega = pi sqrt(n1^2/L1^2 + n2^2/L2^2), n1, n2 >= 1, are
//! enumerated explicitly. Everything here is a convergent sum; nothing is
//! analytically continued. Tails beyond the cutoff W use the two-term Weyl
//! law N(omega) = L1 L2 omega^2 / (4 pi) - (L1 + L2) omega / (2 pi) + R(omega)
//! with the elementary bound |R(omega)| <= (L1 + L2) omega / (2 pi) + 1
//! (cells below the quarter ellipse versus cells meeting it).

use std::f64::consts::PI;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::casimir::BoxConfig;
use crate::error::{Error, Result};
use crate::specfun::{c, EvalResult};
use crate::sum::Neumaier;

/// Relative slack when testing omega <= W, so that a mode computed exactly
/// at the cutoff is kept.
const EDGE_RTOL: f64 = 4.0 * f64::EPSILON;

/// Sorted eigenfrequencies up to a cutoff; degenerate modes repeat.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeList {
    frequencies: Vec<f64>,
    cutoff: f64,
    l1: f64,
    l2: f64,
}

impl ModeList {
    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn sides(&self) -> (f64, f64) {
        (self.l1, self.l2)
    }

    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }

    /// One frequency per line, ascending, shortest round-trip decimal.
    pub fn export<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for w in &self.frequencies {
            writeln!(out, "{w:?}")?;
        }
        Ok(())
    }
}

fn omega(l1: f64, l2: f64, n1: u64, n2: u64) -> f64 {
    let a = n1 as f64 / l1;
    let b = n2 as f64 / l2;
    PI * (a * a + b * b).sqrt()
}

/// Largest n2 with omega(n1, n2) <= w, if any.
fn row_max(l1: f64, l2: f64, n1: u64, w: f64) -> u64 {
    let rest = (w / PI).powi(2) - (n1 as f64 / l1).powi(2);
    if rest < 0.0 {
        return 0;
    }
    let mut n2 = (l2 * rest.sqrt()).floor() as u64 + 1;
    while n2 > 0 && omega(l1, l2, n1, n2) > w * (1.0 + EDGE_RTOL) {
        n2 -= 1;
    }
    n2
}

fn n1_max(l1: f64, w: f64) -> u64 {
    (l1 * w / PI).floor() as u64 + 1
}

/// All modes with omega <= omega_max, by bounding-box enumeration.
pub fn box_modes(cfg: &BoxConfig, omega_max: f64) -> Result<ModeList> {
    if !(omega_max > 0.0 && omega_max.is_finite()) {
        return Err(Error::Domain(format!("omega_max must be positive, got {omega_max}")));
    }
    let (l1, l2) = (cfg.l1, cfg.l2);
    let mut frequencies: Vec<f64> = (1..=n1_max(l1, omega_max))
        .into_par_iter()
        .flat_map_iter(|n1| (1..=row_max(l1, l2, n1, omega_max)).map(move |n2| omega(l1, l2, n1, n2)))
        .collect();
    frequencies.sort_by(f64::total_cmp);
    Ok(ModeList { frequencies, cutoff: omega_max, l1, l2 })
}

/// #{k : omega_k^2 < lambda}.
pub fn counting_function(modes: &ModeList, lambda: f64) -> Result<u64> {
    if lambda > modes.cutoff * modes.cutoff {
        return Err(Error::Domain(format!(
            "lambda = {lambda} exceeds the squared cutoff {}",
            modes.cutoff * modes.cutoff
        )));
    }
    Ok(modes.frequencies.partition_point(|w| w * w < lambda) as u64)
}

/// Heat trace with its truncation bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeatTrace {
    pub value: f64,
    pub tail_bound: f64,
}

/// Bound on sum_{omega > W} e^{-omega^2 t} using N(omega) <= L1 L2 omega^2 / (4 pi).
fn heat_tail(modes: &ModeList, t: f64) -> f64 {
    let w = modes.cutoff;
    modes.l1 * modes.l2 / (4.0 * PI) * (w * w + 1.0 / t) * (-w * w * t).exp()
}

/// Relative size of the truncation tail tolerated by [`heat_trace`].
pub const HEAT_GUARD: f64 = 1e-12;

/// Theta(t) = sum_k e^{-omega_k^2 t}; the tail beyond the cutoff must stay
/// below 1e-12 of the value.
pub fn heat_trace(modes: &ModeList, t: f64) -> Result<HeatTrace> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    let value = modes
        .frequencies
        .iter()
        .map(|w| (-w * w * t).exp())
        .collect::<Neumaier>()
        .value();
    let tail_bound = heat_tail(modes, t);
    if tail_bound > HEAT_GUARD * value {
        return Err(Error::InsufficientCutoff(format!(
            "heat-trace tail bound {tail_bound:e} exceeds {HEAT_GUARD:e} of the value {value:e} at t = {t:e}; \
             raise the cutoff or use t >= {:e}",
            smallest_guarded_t(modes).unwrap_or(f64::NAN)
        )));
    }
    Ok(HeatTrace { value, tail_bound })
}

/// Smallest t (to relative 1e-9) at which [`heat_trace`] passes its guard.
pub fn smallest_guarded_t(modes: &ModeList) -> Option<f64> {
    let first = *modes.frequencies.first()?;
    let ok = |t: f64| {
        let v: f64 = modes.frequencies.iter().map(|w| (-w * w * t).exp()).collect::<Neumaier>().value();
        heat_tail(modes, t) <= HEAT_GUARD * v
    };
    let mut hi = 50.0 / (first * first);
    if !ok(hi) {
        return None;
    }
    let mut lo = hi;
    while ok(lo) {
        lo *= 0.5;
        if lo < 1e-300 {
            return Some(lo);
        }
    }
    while hi / lo - 1.0 > 1e-9 {
        let mid = (lo * hi).sqrt();
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// Linear fit of 4 pi t Theta(t) = area + slope sqrt(t) on a t-window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeatFit {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
    pub area: f64,
    /// Expected -(L1 + L2) sqrt(pi) for the rectangle.
    pub perimeter_slope: f64,
}

/// Fits 4 pi t Theta(t) against sqrt(t) on [t_min, factor t_min] with t_min
/// the smallest guarded t.
pub fn heat_fit(modes: &ModeList, factor: f64, points: usize) -> Result<HeatFit> {
    let t_min = smallest_guarded_t(modes)
        .ok_or_else(|| Error::InsufficientCutoff("no guarded t for this mode list".into()))?;
    if !(factor > 1.0) || points < 2 {
        return Err(Error::Domain("fit window needs factor > 1 and at least 2 points".into()));
    }
    let t_max = factor * t_min;
    let mut xs = Vec::with_capacity(points);
    let mut ys = Vec::with_capacity(points);
    for i in 0..points {
        let t = t_min * factor.powf(i as f64 / (points - 1) as f64);
        let th = heat_trace(modes, t)?;
        xs.push(t.sqrt());
        ys.push(4.0 * PI * t * th.value);
    }
    let (slope, intercept) = linear_fit(&xs, &ys);
    Ok(HeatFit { t_min, t_max, points, area: intercept, perimeter_slope: slope })
}

/// Least squares y = slope x + intercept.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// Bound on the error of the two-term Weyl tail for sum_{omega > W} omega^{-p}.
fn power_tail(l1: f64, l2: f64, w: f64, p: f64) -> (f64, f64) {
    let area = l1 * l2 / (2.0 * PI);
    let perim = (l1 + l2) / (2.0 * PI);
    let tail = area * w.powf(2.0 - p) / (p - 2.0) - perim * w.powf(1.0 - p) / (p - 1.0);
    let err = perim * w.powf(1.0 - p) * (2.0 * p - 1.0) / (p - 1.0) + 2.0 * w.powf(-p);
    (tail, err)
}

/// sum_{omega <= W} omega^{-p}, rows in parallel and merged in order.
fn power_sum_rows(l1: f64, l2: f64, w: f64, p: f64) -> (f64, f64) {
    let rows: Vec<Neumaier> = (1..=n1_max(l1, w))
        .into_par_iter()
        .map(|n1| (1..=row_max(l1, l2, n1, w)).map(|n2| omega(l1, l2, n1, n2).powf(-p)).collect())
        .collect();
    let mut total = Neumaier::new();
    for r in &rows {
        total.merge(r);
    }
    (total.value(), total.abs_total())
}

/// zeta_{sqrt(D)}(s) = sum_k omega_k^{-s} over the mode list plus the Weyl
/// tail; `abs_err` bounds the tail error.
pub fn spectral_zeta_direct(modes: &ModeList, s: f64) -> Result<EvalResult> {
    if !(s > 2.0) {
        return Err(Error::Domain(format!("the mode sum diverges for s <= 2, got s = {s}")));
    }
    let acc: Neumaier = modes.frequencies.iter().map(|w| w.powf(-s)).collect();
    let (tail, err) = power_tail(modes.l1, modes.l2, modes.cutoff, s);
    Ok(EvalResult::new(
        c(acc.value() + tail, 0.0),
        err + 4.0 * f64::EPSILON * acc.abs_total(),
    ))
}

/// E(L1, L2; s) = (1/2) sum omega^{-2s} for s > 1, enumerated up to
/// omega_max without storing the modes.
pub fn e_direct(cfg: &BoxConfig, s: f64, omega_max: f64) -> Result<EvalResult> {
    if !(s > 1.0) {
        return Err(Error::Domain(format!("the mode sum diverges for s <= 1, got s = {s}")));
    }
    if !(omega_max > 0.0 && omega_max.is_finite()) {
        return Err(Error::Domain(format!("omega_max must be positive, got {omega_max}")));
    }
    let p = 2.0 * s;
    let (sum, abs_total) = power_sum_rows(cfg.l1, cfg.l2, omega_max, p);
    let (tail, err) = power_tail(cfg.l1, cfg.l2, omega_max, p);
    Ok(EvalResult::new(
        c(0.5 * (sum + tail), 0.0),
        0.5 * (err + 4.0 * f64::EPSILON * abs_total),
    ))
}
