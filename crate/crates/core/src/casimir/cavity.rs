//! Rectangle [0, L1] x [0, L2].
//!
//! Ideal energy
//!   U = (pi/48)(1/L1 + 1/L2) - (L1 L2 / 32 pi) sum'(n1^2 L1^2 + n2^2 L2^2)^{-3/2}.
//!
//! Finite conductivity uses the dimensionless form
//! Phi = pi^2 lambda_p^2 (n1^2/L1^2 + n2^2/L2^2), the per-side cutoffs
//! n_c^(i) = (L_i/lambda_p)^{1/2} and the ellipse Phi <= Y = n_c^(1) n_c^(2).
//! Dropping the cutoff polynomials of the approximate functional equations
//! at s = -1/2 leaves
//!   U^fc = U + coef sum_{Phi > Y} Phi^{-3/2} - sum_i psi_1(n_c^(i) + 1) / (8 pi L_i),
//! coef = pi^2 lambda_p^3 / (32 (L1 L2)^2): the mirror sums over the ellipse
//! reproduce U except for the lattice tail, and the Riemann mirrors reproduce
//! the perimeter term except for the polygamma tails.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{check_lambda, check_length, fc_guard};
use crate::afe::{afe_error_bound_with, potter_envelope, HLSplit, PotterSplit};
use crate::config::Calibration;
use crate::epstein::{
    box_energy_e, count_below, count_estimate, direct_tail_bound, epstein_zeta, sum_below, x_factor, QuadraticForm,
};
use crate::error::{Error, Result};
use crate::specfun::{c, check_finite, harmonic_number, hurwitz_zeta, polygamma, riemann_zeta, vartheta};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoxConfig {
    pub l1: f64,
    pub l2: f64,
    pub lambda_p: f64,
}

impl BoxConfig {
    pub fn new(l1: f64, l2: f64, lambda_p: f64) -> Result<Self> {
        check_length("L1", l1)?;
        check_length("L2", l2)?;
        check_lambda(lambda_p)?;
        Ok(Self { l1, l2, lambda_p })
    }

    pub fn ideal(l1: f64, l2: f64) -> Result<Self> {
        Self::new(l1, l2, 0.0)
    }

    pub fn swapped(&self) -> Self {
        Self { l1: self.l2, l2: self.l1, lambda_p: self.lambda_p }
    }

    /// Phi = pi^2 lambda_p^2 (n1^2/L1^2 + n2^2/L2^2).
    pub fn phi_form(&self) -> Result<QuadraticForm> {
        let k = PI * self.lambda_p;
        QuadraticForm::new((k / self.l1).powi(2), (k / self.l2).powi(2), 0.0)
    }

    /// Y = n_c^(1) n_c^(2) = sqrt(L1 L2) / lambda_p.
    pub fn ellipse_bound(&self) -> f64 {
        (self.l1 * self.l2).sqrt() / self.lambda_p
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxIdealReport {
    pub energy: f64,
    /// (pi/48)(1/L1 + 1/L2).
    pub perimeter_term: f64,
    /// -(L1 L2 / 32 pi) times the lattice sum.
    pub lattice_term: f64,
    /// sum'(n1^2 L1^2 + n2^2 L2^2)^{-3/2}.
    pub lattice_sum: f64,
    pub lattice_abs_err: f64,
    pub abs_err: f64,
    /// E(L1, L2; -1/2) through the Epstein continuation of Z.
    pub continuation: f64,
    /// continuation - energy; reported, not gated.
    pub continuation_residual: f64,
}

pub fn box_ideal_energy(cfg: &BoxConfig) -> Result<f64> {
    Ok(box_ideal_report(cfg)?.energy)
}

/// Closed form for U with the lattice sum from the Epstein evaluator on the
/// form (L1^2, L2^2, 0) at s = 3/2, which converges exponentially and carries
/// its own error bound.
pub fn box_ideal_report(cfg: &BoxConfig) -> Result<BoxIdealReport> {
    let (l1, l2) = (cfg.l1, cfg.l2);
    let perimeter_term = PI / 48.0 * (1.0 / l1 + 1.0 / l2);
    let form = QuadraticForm::new(l1 * l1, l2 * l2, 0.0)?;
    let sum = epstein_zeta(&form, c(1.5, 0.0))?;
    let pref = l1 * l2 / (32.0 * PI);
    let lattice_term = -pref * sum.value.re;
    let energy = perimeter_term + lattice_term;
    let abs_err = pref * sum.abs_err + 4.0 * f64::EPSILON * (perimeter_term.abs() + lattice_term.abs());
    let continuation = box_energy_e(l1, l2, c(-0.5, 0.0))?.value.re;
    Ok(BoxIdealReport {
        energy,
        perimeter_term,
        lattice_term,
        lattice_sum: sum.value.re,
        lattice_abs_err: sum.abs_err,
        abs_err,
        continuation,
        continuation_residual: continuation - energy,
    })
}

/// n_c = (side / lambda_p)^{1/2}.
pub fn box_nc(side: f64, lambda_p: f64) -> Result<f64> {
    check_length("side", side)?;
    if !(lambda_p > 0.0 && lambda_p.is_finite()) {
        return Err(Error::Domain(format!("n_c needs lambda_p > 0, got {lambda_p}")));
    }
    Ok((side / lambda_p).sqrt())
}

/// How the lattice tail sum_{Phi > Y} Phi^{-3/2} was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeMode {
    /// Full sum from the Epstein evaluator minus the enumerated ellipse.
    Exact,
    /// Integral 2 A Y^{-1/2} with a lattice-discrepancy bound.
    Asymptotic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxFcReport {
    pub energy: f64,
    /// Ideal U.
    pub ideal: f64,
    /// coef sum_{Phi > Y} Phi^{-3/2}, positive.
    pub lattice_correction: f64,
    pub lattice_abs_err: f64,
    pub lattice_mode: LatticeMode,
    /// -sum_i psi_1(n_c^(i) + 1) / (8 pi L_i), negative.
    pub perimeter_correction: f64,
    /// Two-term expansion -(1/(8 pi lambda_p)) sum_i [(lambda_p/L_i)^{3/2} - (lambda_p/L_i)^2 / 2].
    pub perimeter_two_term: f64,
    pub n_c1: f64,
    pub n_c2: f64,
    pub abs_err: f64,
    /// U - coef sum_{Phi <= Y} Phi^{-3/2} + (1/(2 lambda_p (2 pi)^2)) sum_i [...],
    /// the alternative closed form evaluated term by term.
    pub display_literal: f64,
}

pub fn box_fc_energy(cfg: &BoxConfig) -> Result<f64> {
    Ok(box_fc_report(cfg, &Calibration::builtin())?.energy)
}

fn fc_preconditions(cfg: &BoxConfig, cal: &Calibration) -> Result<()> {
    if cfg.lambda_p == 0.0 {
        return Err(Error::Domain("finite-conductivity box needs lambda_p > 0".into()));
    }
    fc_guard("L1", cfg.l1, cfg.lambda_p, cal)?;
    fc_guard("L2", cfg.l2, cfg.lambda_p, cal)
}

/// sum_{Phi > Y} Phi^{-3/2} with its error bound.
fn lattice_tail(cfg: &BoxConfig, lattice_sum: &BoxIdealReport, cal: &Calibration) -> Result<(f64, f64, LatticeMode)> {
    let form = cfg.phi_form()?;
    let y = cfg.ellipse_bound();
    let s = c(1.5, 0.0);
    if count_estimate(&form, y) <= cal.max_terms as f64 {
        // sum' Phi^{-3/2} = (pi lambda_p)^{-3} (L1 L2)^3 sum'(n1^2 L1^2 + n2^2 L2^2)^{-3/2}.
        let scale = (cfg.l1 * cfg.l2 / (PI * cfg.lambda_p)).powi(3);
        let full = scale * lattice_sum.lattice_sum;
        let inner = sum_below(&form, y, |p| c(p.powf(-1.5), 0.0));
        let tail = full - inner.value().re;
        let err = scale * lattice_sum.lattice_abs_err + 8.0 * f64::EPSILON * (full + inner.abs_total());
        Ok((tail, err, LatticeMode::Exact))
    } else {
        let tail = form.unit_area() * 2.0 / y.sqrt();
        Ok((tail, direct_tail_bound(&form, s, y), LatticeMode::Asymptotic))
    }
}

/// Finite-conductivity energy with a per-term breakdown.
pub fn box_fc_report(cfg: &BoxConfig, cal: &Calibration) -> Result<BoxFcReport> {
    fc_preconditions(cfg, cal)?;
    let ideal = box_ideal_report(cfg)?;
    let lp = cfg.lambda_p;
    let coef = PI * PI * lp.powi(3) / (32.0 * (cfg.l1 * cfg.l2).powi(2));
    let (tail, tail_err, lattice_mode) = lattice_tail(cfg, &ideal, cal)?;
    let lattice_correction = coef * tail;
    let n_c1 = box_nc(cfg.l1, lp)?;
    let n_c2 = box_nc(cfg.l2, lp)?;
    let mut perimeter_correction = 0.0;
    let mut perimeter_two_term = 0.0;
    let mut alt_bracket = 0.0;
    for (l, n) in [(cfg.l1, n_c1), (cfg.l2, n_c2)] {
        perimeter_correction -= polygamma(1, n + 1.0)? / (8.0 * PI * l);
        let r = lp / l;
        let bracket = r.powf(1.5) - 0.5 * r * r;
        perimeter_two_term -= bracket / (8.0 * PI * lp);
        alt_bracket += bracket / (2.0 * lp * (2.0 * PI).powi(2));
    }
    let energy = ideal.energy + lattice_correction + perimeter_correction;
    // coef sum_{Phi <= Y} = -lattice_term - lattice_correction.
    let display_literal = ideal.energy + ideal.lattice_term + lattice_correction + alt_bracket;
    let abs_err = ideal.abs_err
        + coef * tail_err
        + 8.0 * f64::EPSILON * (perimeter_correction.abs() + energy.abs());
    Ok(BoxFcReport {
        energy,
        ideal: ideal.energy,
        lattice_correction,
        lattice_abs_err: coef * tail_err,
        lattice_mode,
        perimeter_correction,
        perimeter_two_term,
        n_c1,
        n_c2,
        abs_err,
        display_literal,
    })
}

/// How [`box_fc_zeta_rep`] treats the Riemann pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepMode {
    /// Hardy-Littlewood with u = v = n_c^(i) and continued harmonic numbers.
    Continuation,
    /// The truncated representation taken literally, term by term.
    DisplayLiteral,
}

/// Truncated representation of E(L1, L2; s) split into its pieces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxZetaRep {
    pub value: Complex64,
    /// (lambda_p^{2s}/8) sum'_{Phi <= Y} Phi^{-s}.
    pub direct: Complex64,
    /// (lambda_p^{2s}/8) X(s) sum'_{Phi <= Y} Phi^{s-1}.
    pub mirror: Complex64,
    /// Riemann pieces built from the direct harmonic sums.
    pub riemann_direct: Complex64,
    /// Riemann pieces built from the reflected harmonic sums.
    pub riemann_mirror: Complex64,
    /// Calibrated envelope (Potter plus Hardy-Littlewood), not a proof.
    pub abs_err: f64,
    /// For Re s > 1 (continuation mode): rigorous bound on
    /// |direct + riemann_direct - E(L1, L2; s)|.
    pub convergent_bound: Option<f64>,
    pub points: u64,
}

impl BoxZetaRep {
    /// direct + riemann_direct: the part that converges to E for Re s > 1.
    pub fn convergent_part(&self) -> Complex64 {
        self.direct + self.riemann_direct
    }
}

/// E(L1, L2; s) with the Epstein part replaced by Potter's approximate
/// functional equation on x = y = Y (t = Y^3 / pi) and the Riemann parts by
/// Hardy-Littlewood with u = v = n_c^(i).
pub fn box_fc_zeta_rep(cfg: &BoxConfig, s: Complex64, mode: RepMode, cal: &Calibration) -> Result<BoxZetaRep> {
    check_finite(s, "s")?;
    if cfg.lambda_p == 0.0 {
        return Err(Error::Domain("the truncated representation needs lambda_p > 0".into()));
    }
    if s == c(0.5, 0.0) || s == c(1.0, 0.0) {
        return Err(Error::Pole(format!("E(L1, L2; s) has a pole at s = {s}")));
    }
    let form = cfg.phi_form()?;
    let y = cfg.ellipse_bound();
    let points = count_estimate(&form, y);
    if points > cal.max_terms as f64 {
        return Err(Error::Accuracy(format!(
            "the ellipse Phi <= {y:e} holds about {points:e} lattice points, above max_terms = {}",
            cal.max_terms
        )));
    }
    let split = PotterSplit::new(y, y, y.powi(3) / PI, form.eta())?;
    let inner = count_below(&form, y);
    if inner == 0 {
        return Err(Error::DegenerateSplit(format!("no lattice point with Phi <= {y}")));
    }
    let lam2s = (2.0 * s * cfg.lambda_p.ln()).exp();
    let x = x_factor(&form, s)?;
    let direct = lam2s / 8.0 * sum_below(&form, y, |p| (-s * p.ln()).exp()).value();
    let mirror = lam2s / 8.0 * x * sum_below(&form, y, |p| ((s - 1.0) * p.ln()).exp()).value();
    let mut abs_err = lam2s.norm() / 8.0 * potter_envelope(&form, s, &split, cal.potter_envelope_c)?;

    let mut riemann_direct = c(0.0, 0.0);
    let mut riemann_mirror = c(0.0, 0.0);
    let mut convergent_bound = 0.0;
    let theta = vartheta(2.0 * s)?;
    for l in [cfg.l1, cfg.l2] {
        let n = box_nc(l, cfg.lambda_p)?;
        let r = cfg.lambda_p / l;
        match mode {
            RepMode::Continuation => {
                let w = (-2.0 * s * (PI / l).ln()).exp();
                riemann_direct -= w / 4.0 * harmonic_number(n, 2.0 * s)?.value;
                riemann_mirror -= w / 4.0 * theta * harmonic_number(n, 1.0 - 2.0 * s)?.value;
                let hl = HLSplit::new(n, n, 2.0 * PI * n * n)?;
                abs_err += w.norm() / 4.0 * afe_error_bound_with(2.0 * s, &hl, cal.hl_envelope_c);
                if s.re > 1.0 {
                    let sig = 2.0 * s.re;
                    convergent_bound +=
                        w.norm() / 4.0 * ((n + 1.0).powf(-sig) + (n + 1.0).powf(1.0 - sig) / (sig - 1.0));
                }
            }
            RepMode::DisplayLiteral => {
                let rs = |p: Complex64| (p * r.ln()).exp();
                let zeta = riemann_zeta(2.0 * s)?.value;
                let zh = hurwitz_zeta(2.0 * s, n + 1.0)?.value;
                riemann_direct -= lam2s / 4.0 * rs(-2.0 * s) * (2.0 * zeta - zh);
                let phase = (Complex64::i() * PI * (1.0 - 4.0 * s)).exp();
                let bracket = rs(-3.0 * s) / (2.0 * s) - 0.5 * rs((1.0 - 6.0 * s) / 2.0);
                riemann_mirror -= lam2s / 4.0 * phase * theta * bracket;
            }
        }
    }
    let convergent_bound = if mode == RepMode::Continuation && s.re > 1.0 {
        let tail = form.unit_area() * ((1.0 - s) * y.ln()).exp() / (s - 1.0);
        Some(lam2s.norm() / 8.0 * (tail.norm() + direct_tail_bound(&form, s, y)) + convergent_bound)
    } else {
        None
    };
    Ok(BoxZetaRep {
        value: direct + mirror + riemann_direct + riemann_mirror,
        direct,
        mirror,
        riemann_direct,
        riemann_mirror,
        abs_err,
        convergent_bound,
        points: inner,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::dirichlet_beta;

    fn cal() -> Calibration {
        Calibration::builtin()
    }

    #[test]
    fn unit_square_closed_form() {
        let r = box_ideal_report(&BoxConfig::ideal(1.0, 1.0).unwrap()).unwrap();
        let zb = 4.0 * riemann_zeta(c(1.5, 0.0)).unwrap().value.re * dirichlet_beta(1.5).unwrap();
        assert!(((r.lattice_sum - zb) / zb).abs() < 1e-10);
        assert!((r.lattice_sum - 9.033_621_683_100_95).abs() < 1e-12);
        assert!((r.energy - 0.041_040_597_344_096_999).abs() < 1e-13);
    }

    #[test]
    fn symmetry_and_homogeneity() {
        let a = box_ideal_energy(&BoxConfig::ideal(1.0, 2.0).unwrap()).unwrap();
        let b = box_ideal_energy(&BoxConfig::ideal(2.0, 1.0).unwrap()).unwrap();
        assert!((a - b).abs() < 1e-15);
        for k in [0.5, 2.0, 7.0] {
            let u = box_ideal_energy(&BoxConfig::ideal(k * 1.3, k * 0.7).unwrap()).unwrap();
            let v = box_ideal_energy(&BoxConfig::ideal(1.3, 0.7).unwrap()).unwrap();
            assert!((u * k - v).abs() < 1e-11);
        }
    }

    #[test]
    fn nc_examples() {
        assert!((box_nc(1e4, 1.0).unwrap() - 100.0).abs() < 1e-12);
        assert_eq!(box_nc(1.0, 1.0).unwrap(), 1.0);
        let p = box_nc(1e-4, 1e-8).unwrap() * box_nc(1e-2, 1e-8).unwrap();
        assert!((p / 1e5 - 1.0).abs() < 1e-12);
        assert!(box_nc(1.0, 0.0).is_err());
    }

    #[test]
    fn fc_recovers_ideal() {
        let cfg = BoxConfig::new(1.0, 1.0, 1e-8).unwrap();
        let r = box_fc_report(&cfg, &cal()).unwrap();
        assert_eq!(r.lattice_mode, LatticeMode::Asymptotic);
        assert!(((r.energy - r.ideal) / r.ideal).abs() < 1e-3);
        assert!(r.lattice_correction > 0.0 && r.perimeter_correction < 0.0);
    }

    #[test]
    fn fc_symmetry() {
        let a = box_fc_report(&BoxConfig::new(1.0, 3.0, 1e-6).unwrap(), &cal()).unwrap();
        let b = box_fc_report(&BoxConfig::new(3.0, 1.0, 1e-6).unwrap(), &cal()).unwrap();
        assert_eq!(a.energy, b.energy);
    }

    #[test]
    fn perimeter_two_term_is_close() {
        let r = box_fc_report(&BoxConfig::new(1.0, 2.0, 1e-6).unwrap(), &cal()).unwrap();
        let d = (r.perimeter_correction - r.perimeter_two_term) / r.perimeter_correction;
        // Next term is of relative size (lambda_p/L)^{1/2} / 6.
        assert!(d.abs() < 1e-3, "{d}");
    }

    #[test]
    fn exact_and_asymptotic_tail_agree() {
        let mut low = cal();
        low.fc_guard_ratio = 10.0;
        let cfg = BoxConfig::new(1.0, 1.5, 0.01).unwrap();
        let exact = box_fc_report(&cfg, &low).unwrap();
        assert_eq!(exact.lattice_mode, LatticeMode::Exact);
        let mut tiny = low;
        tiny.max_terms = 10;
        let asym = box_fc_report(&cfg, &tiny).unwrap();
        assert_eq!(asym.lattice_mode, LatticeMode::Asymptotic);
        let diff = (exact.lattice_correction - asym.lattice_correction).abs();
        assert!(diff <= exact.lattice_abs_err + asym.lattice_abs_err, "{diff}");
    }

    #[test]
    fn guard_and_domain() {
        assert!(matches!(
            box_fc_report(&BoxConfig::new(1.0, 1.0, 1e-2).unwrap(), &cal()),
            Err(Error::Guard(_))
        ));
        assert!(matches!(box_fc_report(&BoxConfig::ideal(1.0, 1.0).unwrap(), &cal()), Err(Error::Domain(_))));
    }

    #[test]
    fn zeta_rep_convergent_region() {
        let s = c(2.0, 0.25);
        let e = box_energy_e(1.0, 1.0, s).unwrap();
        let mut prev = f64::INFINITY;
        for lp in [0.05, 0.02, 0.01] {
            let r = box_fc_zeta_rep(&BoxConfig::new(1.0, 1.0, lp).unwrap(), s, RepMode::Continuation, &cal()).unwrap();
            let d = (r.convergent_part() - e.value).norm();
            let bound = r.convergent_bound.unwrap();
            assert!(d <= bound + e.abs_err, "lambda_p = {lp}: {d} > {bound}");
            assert!(d < prev);
            prev = d;
        }
    }

    #[test]
    fn zeta_rep_ellipse_count() {
        let cfg = BoxConfig::new(1.0, 1.0, 0.02).unwrap();
        let r = box_fc_zeta_rep(&cfg, c(0.3, 5.0), RepMode::Continuation, &cal()).unwrap();
        // Phi <= Y is n1^2 + n2^2 <= Y / (pi lambda_p)^2 for a square.
        let unit = QuadraticForm::new(1.0, 1.0, 0.0).unwrap();
        let bound = cfg.ellipse_bound() / (PI * cfg.lambda_p).powi(2);
        assert_eq!(r.points, count_below(&unit, bound));
    }

    #[test]
    fn zeta_rep_swap_symmetry() {
        let s = c(-0.5, 3.0);
        let a = box_fc_zeta_rep(&BoxConfig::new(1.0, 2.0, 0.02).unwrap(), s, RepMode::Continuation, &cal()).unwrap();
        let b = box_fc_zeta_rep(&BoxConfig::new(2.0, 1.0, 0.02).unwrap(), s, RepMode::Continuation, &cal()).unwrap();
        assert!((a.value - b.value).norm() <= 1e-12 * a.value.norm());
        let a = box_fc_zeta_rep(&BoxConfig::new(1.0, 2.0, 0.02).unwrap(), s, RepMode::DisplayLiteral, &cal()).unwrap();
        let b = box_fc_zeta_rep(&BoxConfig::new(2.0, 1.0, 0.02).unwrap(), s, RepMode::DisplayLiteral, &cal()).unwrap();
        assert!((a.value - b.value).norm() <= 1e-12 * a.value.norm());
    }

    #[test]
    fn zeta_rep_refuses_too_many_points() {
        let cfg = BoxConfig::new(1.0, 1.0, 1e-6).unwrap();
        assert!(matches!(
            box_fc_zeta_rep(&cfg, c(2.0, 0.25), RepMode::Continuation, &cal()),
            Err(Error::Accuracy(_))
        ));
    }
}
