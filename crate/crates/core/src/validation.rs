//! Numerical self-checks grouped by module.
//!
//! Every check recomputes its quantities from scratch and compares against
//! closed forms, independent evaluation paths or the calibrated envelopes.
//! The envelope checks read their constants from the supplied
//! [`Calibration`], so a perturbed constant makes them fail.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::afe::{afe_error_bound_with, afe_riemann_with, default_mode, hl_default_split, potter_afe_with, potter_default_split};
use crate::casimir::{
    box_fc_report, box_fc_zeta_rep, box_ideal_report, slab_fc_asymptotic_report, slab_fc_hurwitz_report,
    slab_ideal_energy_density, BoxConfig, RepMode, SlabConfig,
};
use crate::config::Calibration;
use crate::epstein::{box_energy_e, count_below, epstein_zeta, reflect, QuadraticForm};
use crate::error::{Error, Result};
use crate::spectral::{box_modes, counting_function, e_direct, heat_trace, linear_fit, smallest_guarded_t};
use crate::specfun::{c, dirichlet_beta, gamma, riemann_zeta, vartheta};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Specfun,
    Afe,
    Slab,
    Epstein,
    Box,
    Spectral,
}

impl Group {
    pub const ALL: [Group; 6] = [Group::Specfun, Group::Afe, Group::Slab, Group::Epstein, Group::Box, Group::Spectral];

    pub fn name(self) -> &'static str {
        match self {
            Group::Specfun => "specfun",
            Group::Afe => "afe",
            Group::Slab => "slab",
            Group::Epstein => "epstein",
            Group::Box => "box",
            Group::Spectral => "spectral",
        }
    }

    /// Acceptance criteria covered by the group.
    pub fn criteria(self) -> &'static [u32] {
        match self {
            Group::Specfun => &[1, 2],
            Group::Afe => &[3],
            Group::Slab => &[4, 5],
            Group::Epstein => &[6],
            Group::Box => &[8, 9],
            Group::Spectral => &[7, 10],
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown check group '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub group: Group,
    pub criterion: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

fn check<F>(group: Group, criterion: u32, name: &str, f: F) -> Check
where
    F: FnOnce() -> Result<(bool, String)>,
{
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        group,
        criterion,
        name: name.to_string(),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.abs().ln()).collect();
    linear_fit(&lx, &ly).0
}

fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
}

/// Checks for one acceptance criterion (1 through 10).
pub fn criterion_checks(criterion: u32, cal: &Calibration) -> Vec<Check> {
    match criterion {
        1 => specfun_constants(),
        2 => vec![reflection_grid()],
        3 => afe_checks(cal),
        4 => slab_ideal_checks(),
        5 => slab_fc_checks(cal),
        6 => epstein_checks(),
        7 => vec![box_oracle()],
        8 => box_ideal_checks(),
        9 => box_fc_checks(cal),
        10 => spectral_checks(),
        _ => Vec::new(),
    }
}

pub fn run_group(group: Group, cal: &Calibration) -> Vec<Check> {
    group.criteria().iter().flat_map(|&n| criterion_checks(n, cal)).collect()
}

/// All groups in order, or only `only`.
pub fn run_all(cal: &Calibration, only: Option<Group>) -> Vec<Check> {
    Group::ALL
        .into_iter()
        .filter(|g| only.map_or(true, |o| o == *g))
        .flat_map(|g| run_group(g, cal))
        .collect()
}

fn specfun_constants() -> Vec<Check> {
    let g = Group::Specfun;
    vec![
        check(g, 1, "zeta at 0, -1, -3", || {
            let mut worst: f64 = 0.0;
            for (s, want) in [(0.0, -0.5), (-1.0, -1.0 / 12.0), (-3.0, 1.0 / 120.0)] {
                worst = worst.max((riemann_zeta(c(s, 0.0))?.value.re - want).abs());
            }
            Ok((worst <= 1e-12, format!("max abs error {worst:.2e} (tol 1e-12)")))
        }),
        check(g, 1, "Gamma(-3/2) = 4 sqrt(pi)/3", || {
            let r = rel(gamma(c(-1.5, 0.0))?.re, 4.0 * PI.sqrt() / 3.0);
            Ok((r <= 1e-13, format!("rel error {r:.2e} (tol 1e-13)")))
        }),
        check(g, 1, "trivial zeros zeta(-2k), k = 1..5", || {
            let mut worst: f64 = 0.0;
            for k in 1..=5 {
                worst = worst.max(riemann_zeta(c(-2.0 * f64::from(k), 0.0))?.value.norm());
            }
            Ok((worst <= 1e-12, format!("max |zeta| {worst:.2e} (tol 1e-12)")))
        }),
    ]
}

fn reflection_grid() -> Check {
    check(Group::Specfun, 2, "reflection zeta(s) = vartheta(s) zeta(1-s)", || {
        let mut worst: f64 = 0.0;
        let mut skipped = 0;
        for sigma in [-2.0, -1.0, 0.0, 1.0, 2.0, 3.0] {
            for t in [0.0, 1.0, 5.0, 10.0, 50.0] {
                if t == 0.0 && (sigma == 0.0 || sigma == 1.0) {
                    continue;
                }
                let s = c(sigma, t);
                // At positive odd integers vartheta has a pole against a
                // trivial zero of zeta(1-s); the identity is a limit there.
                let th = match vartheta(s) {
                    Ok(v) => v,
                    Err(Error::Pole(_)) => {
                        skipped += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                let z = riemann_zeta(s)?.value;
                let r = th * riemann_zeta(1.0 - s)?.value;
                worst = worst.max((z - r).norm() / (1.0 + z.norm()));
            }
        }
        Ok((
            worst <= 1e-10,
            format!("max residual / (1 + |zeta|) {worst:.2e} (tol 1e-10), {skipped} vartheta poles skipped"),
        ))
    })
}

fn afe_checks(cal: &Calibration) -> Vec<Check> {
    let g = Group::Afe;
    let c_hl = cal.hl_envelope_c;
    let c_p = cal.potter_envelope_c;
    vec![
        check(g, 3, "Hardy-Littlewood envelope, 100 random s", || {
            let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
            let mut ratios = Vec::with_capacity(100);
            for _ in 0..100 {
                let sigma: f64 = rng.gen_range(0.0..1.0);
                let t: f64 = rng.gen_range(20.0..2000.0);
                let s = c(sigma, t);
                let split = hl_default_split(t)?;
                let a = afe_riemann_with(s, &split, default_mode(s), cal)?;
                let z = riemann_zeta(s)?;
                ratios.push((a.value - z.value).norm() / afe_error_bound_with(s, &split, c_hl));
            }
            ratios.sort_by(f64::total_cmp);
            let max = ratios[99];
            let median = 0.5 * (ratios[49] + ratios[50]);
            Ok((
                max <= 1.0 && median <= 1.0,
                format!("C = {c_hl}: max ratio {max:.3}, median {median:.3} (both <= 1)"),
            ))
        }),
        check(g, 3, "Potter envelope, form (1,1,0)", || {
            let form = QuadraticForm::new(1.0, 1.0, 0.0)?;
            let mut worst: f64 = 0.0;
            for sigma in [0.1, 0.25, 0.5, 0.75, 0.9] {
                for t in [20.0, 40.0, 80.0, 120.0, 157.0, 200.0] {
                    let s = c(sigma, t);
                    let split = potter_default_split(&form, t)?;
                    let p = potter_afe_with(&form, s, &split, cal)?;
                    let e = epstein_zeta(&form, s)?;
                    worst = worst.max((p.value - e.value).norm() / p.abs_err);
                }
            }
            Ok((worst <= 1.0, format!("C_P = {c_p}: max error / envelope {worst:.3} (<= 1)")))
        }),
    ]
}

fn slab_ideal_checks() -> Vec<Check> {
    let g = Group::Slab;
    vec![
        check(g, 4, "eps_3 L^3 = -pi^2/1440, eps_1 L = -pi/24", || {
            let mut worst: f64 = 0.0;
            for l in [0.3, 1.0, 4.0] {
                let e3 = slab_ideal_energy_density(&SlabConfig::ideal(3, l)?) * l.powi(3);
                let e1 = slab_ideal_energy_density(&SlabConfig::ideal(1, l)?) * l;
                worst = worst.max(rel(e3, -PI * PI / 1440.0)).max(rel(e1, -PI / 24.0));
            }
            Ok((worst <= 1e-12, format!("max rel error {worst:.2e} (tol 1e-12)")))
        }),
        check(g, 4, "eps_d(2L) / eps_d(L) = 2^-d", || {
            let mut worst: f64 = 0.0;
            for d in [1u32, 3, 5] {
                for l in [0.1, 1.0, 10.0] {
                    let a = slab_ideal_energy_density(&SlabConfig::ideal(d, l)?);
                    let b = slab_ideal_energy_density(&SlabConfig::ideal(d, 2.0 * l)?);
                    worst = worst.max((b / a - 2f64.powi(-(d as i32))).abs());
                }
            }
            Ok((worst <= 1e-13, format!("max deviation {worst:.2e} (tol 1e-13)")))
        }),
        check(g, 4, "eps_d < 0", || {
            let mut ok = true;
            for d in [1u32, 3, 5, 7] {
                for l in [0.1, 1.0, 10.0] {
                    ok &= slab_ideal_energy_density(&SlabConfig::ideal(d, l)?) < 0.0;
                }
            }
            Ok((ok, "d in {1,3,5,7}, L in {0.1,1,10}".into()))
        }),
    ]
}

fn slab_fc_checks(cal: &Calibration) -> Vec<Check> {
    let g = Group::Slab;
    vec![
        check(g, 5, "(a) ideal recovery at L/lambda_p = 1e8", || {
            let cfg = SlabConfig::new(3, 1.0, 1e-8)?;
            let h = slab_fc_hurwitz_report(&cfg, cal)?;
            let a = slab_fc_asymptotic_report(&cfg, cal)?;
            let r = rel(h.energy, h.ideal).max(rel(a.energy, a.ideal));
            Ok((r <= 1e-3, format!("max rel deviation {r:.2e} (tol 1e-3)")))
        }),
        check(g, 5, "(b) correction positive for L/lambda_p in [1e3, 1e9]", || {
            let mut ok = true;
            for ratio in logspace(1e3, 1e9, 25) {
                let cfg = SlabConfig::new(3, 1.0, 1.0 / ratio)?;
                ok &= slab_fc_asymptotic_report(&cfg, cal)?.energy - slab_ideal_energy_density(&cfg) > 0.0;
                ok &= slab_fc_hurwitz_report(&cfg, cal)?.energy - slab_ideal_energy_density(&cfg) > 0.0;
            }
            Ok((ok, "25 log-spaced ratios, both paths".into()))
        }),
        check(g, 5, "(c) two-path difference ~ (lambda_p/L)^(5/3)", || {
            let k = cal.slab_two_path_k;
            let xs = logspace(1e-8, 1e-4, 9);
            let mut ys = Vec::new();
            let mut worst: f64 = 0.0;
            for &x in &xs {
                let cfg = SlabConfig::new(3, 1.0, x)?;
                let h = slab_fc_hurwitz_report(&cfg, cal)?;
                let a = slab_fc_asymptotic_report(&cfg, cal)?;
                let diff = ((h.correction_1 + h.correction_2) - (a.correction_1 + a.correction_2)).abs() / h.ideal.abs();
                worst = worst.max(diff / x.powf(5.0 / 3.0));
                ys.push(diff);
            }
            let slope = log_slope(&xs, &ys);
            let dev = (slope / (5.0 / 3.0) - 1.0).abs();
            Ok((
                dev <= 0.05 && worst <= k,
                format!("slope {slope:.4} (5/3 within 5%), max diff/(lambda_p/L)^(5/3) {worst:.4} <= K = {k}"),
            ))
        }),
        check(g, 5, "(d) second correction ~ L^(-13/3)", || {
            let lp = 1e-9;
            let ls = logspace(1e-3, 1.0, 7);
            let mut hur = Vec::new();
            let mut asy = Vec::new();
            for &l in &ls {
                let cfg = SlabConfig::new(3, l, lp)?;
                hur.push(slab_fc_hurwitz_report(&cfg, cal)?.correction_2);
                asy.push(slab_fc_asymptotic_report(&cfg, cal)?.correction_2);
            }
            let sh = log_slope(&ls, &hur);
            let sa = log_slope(&ls, &asy);
            let want = -13.0 / 3.0;
            let dev = rel(sh, want).max(rel(sa, want));
            Ok((dev <= 0.02, format!("slopes {sh:.4} (Hurwitz remainder), {sa:.4} (asymptotic); -13/3 within 2%")))
        }),
        check(g, 5, "leading correction ~ L^-(d+1)", || {
            let lp = 1e-9;
            let ls = logspace(1e-3, 1.0, 7);
            let mut hur = Vec::new();
            let mut asy = Vec::new();
            for &l in &ls {
                let cfg = SlabConfig::new(3, l, lp)?;
                let h = slab_fc_hurwitz_report(&cfg, cal)?;
                let a = slab_fc_asymptotic_report(&cfg, cal)?;
                hur.push(h.correction_1 + h.correction_2);
                asy.push(a.correction_1 + a.correction_2);
            }
            let sh = log_slope(&ls, &hur);
            let sa = log_slope(&ls, &asy);
            let dev = rel(sh, -4.0).max(rel(sa, -4.0));
            Ok((dev <= 0.02, format!("slopes {sh:.4}, {sa:.4}; -4 within 2%")))
        }),
    ]
}

fn epstein_checks() -> Vec<Check> {
    let g = Group::Epstein;
    vec![
        check(g, 6, "A(1,1,0;2) = 4 zeta(2) beta(2)", || {
            let form = QuadraticForm::new(1.0, 1.0, 0.0)?;
            let v = epstein_zeta(&form, c(2.0, 0.0))?.value.re;
            let want = 4.0 * riemann_zeta(c(2.0, 0.0))?.value.re * dirichlet_beta(2.0)?;
            let r = rel(v, want);
            Ok((r <= 1e-10, format!("rel error {r:.2e} (tol 1e-10)")))
        }),
        check(g, 6, "functional equation residual", || {
            let mut worst: f64 = 0.0;
            let mut skipped = 0;
            for (a, b) in [(1.0, 1.0), (1.0, 4.0), (2.0, 3.0)] {
                let form = QuadraticForm::new(a, b, 0.0)?;
                for s in [-0.5, 0.25, 1.5, 2.0] {
                    let s = c(s, 0.0);
                    let rhs = match reflect(&form, s) {
                        Ok(r) => r.value,
                        Err(Error::Pole(_)) => {
                            skipped += 1;
                            continue;
                        }
                        Err(e) => return Err(e),
                    };
                    let lhs = epstein_zeta(&form, s)?.value;
                    worst = worst.max((lhs - rhs).norm() / lhs.norm().max(1.0));
                }
            }
            Ok((worst <= 1e-9, format!("max residual {worst:.2e} (tol 1e-9), {skipped} pole points skipped")))
        }),
        check(g, 6, "Gauss circle count at x = 1e4", || {
            let form = QuadraticForm::new(1.0, 1.0, 0.0)?;
            let n = count_below(&form, 1e4) as f64;
            let r = rel(n, PI * 1e4);
            Ok((r <= 0.05, format!("count {n}, rel deviation from pi x {r:.2e} (tol 5%)")))
        }),
    ]
}

/// Cutoff used by the box oracle.
const ORACLE_OMEGA: f64 = 4000.0;

fn box_oracle() -> Check {
    check(Group::Spectral, 7, "E_direct vs continued E(L1,L2;s)", || {
        let mut worst: f64 = 0.0;
        let mut within = true;
        for (l1, l2, s) in [(1.0, 1.0, 2.0), (1.0, 3.0, 3.0), (2.0, 1.0, 1.5)] {
            let d = e_direct(&BoxConfig::ideal(l1, l2)?, s, ORACLE_OMEGA)?;
            let e = box_energy_e(l1, l2, c(s, 0.0))?;
            let diff = (d.value - e.value).norm();
            within &= diff <= d.abs_err + e.abs_err;
            worst = worst.max(diff / e.value.norm());
        }
        Ok((
            worst <= 1e-6 && within,
            format!("max rel difference {worst:.2e} (tol 1e-6), all within truncation bounds: {within}"),
        ))
    })
}

fn box_ideal_checks() -> Vec<Check> {
    let g = Group::Box;
    vec![
        check(g, 8, "U(1,1) lattice sum = 4 zeta(3/2) beta(3/2)", || {
            let r = box_ideal_report(&BoxConfig::ideal(1.0, 1.0)?)?;
            let want = 4.0 * riemann_zeta(c(1.5, 0.0))?.value.re * dirichlet_beta(1.5)?;
            let e = rel(r.lattice_sum, want);
            Ok((e <= 1e-10, format!("rel error {e:.2e} (tol 1e-10), U(1,1) = {:.15}", r.energy)))
        }),
        check(g, 8, "U(cL1,cL2) c = U(L1,L2)", || {
            let base = box_ideal_report(&BoxConfig::ideal(1.0, 2.5)?)?.energy;
            let mut worst: f64 = 0.0;
            for k in [0.5, 2.0, 7.0] {
                let u = box_ideal_report(&BoxConfig::ideal(k, 2.5 * k)?)?.energy;
                worst = worst.max((u * k - base).abs());
            }
            Ok((worst <= 1e-11, format!("max deviation {worst:.2e} (tol 1e-11)")))
        }),
        check(g, 8, "continuation path residual (reported)", || {
            let r = box_ideal_report(&BoxConfig::ideal(1.0, 1.0)?)?;
            Ok((
                true,
                format!(
                    "E(1,1;-1/2) = {:.15}, closed form {:.15}, residual {:.3e}",
                    r.continuation, r.energy, r.continuation_residual
                ),
            ))
        }),
    ]
}

fn box_fc_checks(cal: &Calibration) -> Vec<Check> {
    let g = Group::Box;
    vec![
        check(g, 9, "ideal recovery at lambda_p/L = 1e-8", || {
            let mut worst: f64 = 0.0;
            for (l1, l2) in [(1.0, 1.0), (1.0, 3.0)] {
                let r = box_fc_report(&BoxConfig::new(l1, l2, 1e-8 * l1.min(l2))?, cal)?;
                worst = worst.max(rel(r.energy, r.ideal));
            }
            Ok((worst <= 1e-3, format!("max rel deviation {worst:.2e} (tol 1e-3)")))
        }),
        check(g, 9, "symmetry L1 <-> L2", || {
            let a = box_fc_report(&BoxConfig::new(1.0, 3.0, 1e-6)?, cal)?;
            let b = box_fc_report(&BoxConfig::new(3.0, 1.0, 1e-6)?, cal)?;
            Ok((a.energy == b.energy, format!("{:e} vs {:e}", a.energy, b.energy)))
        }),
        check(g, 9, "per-term scaling exponents", || {
            // Fixed lambda_p, L1 = L2 = L: lattice ~ L^{-5/2}, perimeter ~ L^{-3/2}.
            let lp = 1e-6;
            let ls = logspace(0.01, 10.0, 7);
            let (mut lat, mut per) = (Vec::new(), Vec::new());
            for &l in &ls {
                let r = box_fc_report(&BoxConfig::new(l, l, lp)?, cal)?;
                lat.push(r.lattice_correction);
                per.push(r.perimeter_correction);
            }
            let sl = log_slope(&ls, &lat);
            let sp = log_slope(&ls, &per);
            // Fixed L: lattice ~ lambda_p^{3/2}, perimeter ~ lambda_p^{1/2}.
            let lps = logspace(1e-9, 1e-4, 7);
            let (mut lat2, mut per2) = (Vec::new(), Vec::new());
            for &lp in &lps {
                let r = box_fc_report(&BoxConfig::new(1.0, 2.0, lp)?, cal)?;
                lat2.push(r.lattice_correction);
                per2.push(r.perimeter_correction);
            }
            let tl = log_slope(&lps, &lat2);
            let tp = log_slope(&lps, &per2);
            let dev = rel(sl, -2.5).max(rel(sp, -1.5)).max(rel(tl, 1.5)).max(rel(tp, 0.5));
            Ok((
                dev <= 0.05,
                format!("L slopes {sl:.4} (-5/2), {sp:.4} (-3/2); lambda_p slopes {tl:.4} (3/2), {tp:.4} (1/2); within 5%"),
            ))
        }),
        check(g, 9, "truncated representation -> E(L1,L2;s) at Re s = 2", || {
            let s = c(2.0, 0.25);
            let e = box_energy_e(1.0, 1.0, s)?;
            let mut ok = true;
            let mut last = 0.0;
            for lp in [0.04, 0.02, 0.01] {
                let r = box_fc_zeta_rep(&BoxConfig::new(1.0, 1.0, lp)?, s, RepMode::Continuation, cal)?;
                let d = (r.convergent_part() - e.value).norm();
                ok &= d <= r.convergent_bound.unwrap_or(0.0) + e.abs_err;
                last = d;
            }
            Ok((ok, format!("within the tail bound at lambda_p = 0.04, 0.02, 0.01; last difference {last:.2e}")))
        }),
    ]
}

fn spectral_checks() -> Vec<Check> {
    let g = Group::Spectral;
    vec![
        check(g, 10, "Weyl ratio N(lambda) 4 pi / lambda", || {
            let w: f64 = 500.0;
            let modes = box_modes(&BoxConfig::ideal(1.0, 1.0)?, w)?;
            let lambda = w * w;
            let n = counting_function(&modes, lambda)?;
            let dev = (n as f64 * 4.0 * PI / lambda - 1.0).abs();
            Ok((n >= 10_000 && dev <= 0.02, format!("N = {n}, deviation {dev:.4} (tol 0.02)")))
        }),
        check(g, 10, "heat trace 4 pi t Theta(t) -> area", || {
            let modes = box_modes(&BoxConfig::ideal(1.0, 1.0)?, 3000.0)?;
            let t = smallest_guarded_t(&modes)
                .ok_or_else(|| Error::InsufficientCutoff("no guarded t".into()))?;
            let th = heat_trace(&modes, t)?;
            let dev = (4.0 * PI * t * th.value - 1.0).abs();
            Ok((dev <= 0.01, format!("t = {t:.3e}, deviation {dev:.4} (tol 0.01)")))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_names_round_trip() {
        for g in Group::ALL {
            assert_eq!(g.name().parse::<Group>().unwrap(), g);
        }
        assert!("nope".parse::<Group>().is_err());
    }

    #[test]
    fn every_criterion_has_a_group() {
        let mut all: Vec<u32> = Group::ALL.iter().flat_map(|g| g.criteria().iter().copied()).collect();
        all.sort();
        assert_eq!(all, (1..=10).collect::<Vec<_>>());
    }

    #[test]
    fn fast_groups_pass() {
        let cal = Calibration::builtin();
        for g in [Group::Specfun, Group::Slab, Group::Epstein] {
            for c in run_group(g, &cal) {
                assert!(c.passed, "{} / {}: {}", c.group, c.name, c.detail);
            }
        }
    }

    #[test]
    fn perturbed_envelope_fails() {
        let mut cal = Calibration::builtin();
        cal.hl_envelope_c = 0.01;
        cal.potter_envelope_c = 0.01;
        let checks = run_group(Group::Afe, &cal);
        assert!(checks.iter().all(|c| !c.passed));
    }
}
