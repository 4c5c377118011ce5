//! Single-point evaluations behind the `slab`, `box`, `zeta`, `epstein` and
//! `afe` subcommands.

use casimir_core::afe::{afe_riemann_with, default_mode, hl_default_split, HLSplit, SumMode};
use casimir_core::casimir::{
    box_fc_report, box_ideal_report, slab_afe_report, slab_fc_asymptotic_report, slab_fc_hurwitz_report,
    slab_ideal_report, BoxConfig, LatticeMode, SlabConfig, SlabReport,
};
use casimir_core::epstein::{epstein_zeta_with, QuadraticForm};
use casimir_core::specfun::{dirichlet_beta, riemann_zeta_with};
use casimir_core::{Calibration, Result};
use clap::ValueEnum;
use num_complex::Complex64;

use crate::report::{Num, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SlabMode {
    Ideal,
    #[value(name = "fc_hurwitz")]
    FcHurwitz,
    #[value(name = "fc_asymptotic")]
    FcAsymptotic,
    Afe,
}

impl SlabMode {
    fn name(self) -> &'static str {
        match self {
            SlabMode::Ideal => "ideal",
            SlabMode::FcHurwitz => "fc_hurwitz",
            SlabMode::FcAsymptotic => "fc_asymptotic",
            SlabMode::Afe => "afe",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoxMode {
    Ideal,
    Fc,
}

pub fn slab_energy(d: u32, l: f64, lambda_p: f64, mode: SlabMode, cal: &Calibration) -> Result<SlabReport> {
    let cfg = SlabConfig::new(d, l, lambda_p)?;
    match mode {
        SlabMode::Ideal => Ok(slab_ideal_report(&cfg)),
        SlabMode::FcHurwitz => slab_fc_hurwitz_report(&cfg, cal),
        SlabMode::FcAsymptotic => slab_fc_asymptotic_report(&cfg, cal),
        SlabMode::Afe => slab_afe_report(&cfg, cal),
    }
}

pub fn slab(d: u32, l: f64, lambda_p: f64, mode: SlabMode, cal: &Calibration) -> Result<Report> {
    let r = slab_energy(d, l, lambda_p, mode, cal)?;
    let mut rep = Report::new("slab", Num::Real(r.energy), r.abs_err, cal)
        .mode(mode.name())
        .input("d", f64::from(d))
        .input("L", l)
        .input("lambda_p", lambda_p)
        .component("ideal", r.ideal)
        .component("correction_1", r.correction_1)
        .component("correction_2", r.correction_2)
        .tag("ideal", "eq:casimir");
    rep = match mode {
        SlabMode::Ideal => rep.tag("value", "eq:casimir").tag("pole_free_rearrangement", "ef"),
        SlabMode::FcHurwitz => rep.tag("value", "eq:H-Ls").tag("harmonic_continuation", "eq:GHNH"),
        SlabMode::FcAsymptotic => rep.tag("value", "eq:psiexp").tag("n_c", "eq:H-L"),
        SlabMode::Afe => rep.tag("value", "eq:H-L").tag("split", "eq:hardy").tag("harmonic_continuation", "eq:GHNH"),
    };
    if let Some(n) = r.n_c {
        rep = rep.detail("n_c", n);
    }
    for (k, v) in &r.diagnostics {
        rep = rep.detail(k, *v);
    }
    Ok(rep)
}

/// (energy, ideal, correction_1, correction_2, abs_err) for one box point.
pub fn box_energy(l1: f64, l2: f64, lambda_p: f64, mode: BoxMode, cal: &Calibration) -> Result<[f64; 5]> {
    let cfg = BoxConfig::new(l1, l2, lambda_p)?;
    Ok(match mode {
        BoxMode::Ideal => {
            let r = box_ideal_report(&cfg)?;
            [r.energy, r.energy, 0.0, 0.0, r.abs_err]
        }
        BoxMode::Fc => {
            let r = box_fc_report(&cfg, cal)?;
            [r.energy, r.ideal, r.lattice_correction, r.perimeter_correction, r.abs_err]
        }
    })
}

pub fn boxed(l1: f64, l2: f64, lambda_p: f64, mode: BoxMode, cal: &Calibration) -> Result<Report> {
    let cfg = BoxConfig::new(l1, l2, lambda_p)?;
    let base = |v: f64, e: f64, m: &str| {
        Report::new("box", Num::Real(v), e, cal)
            .mode(m)
            .input("L1", l1)
            .input("L2", l2)
            .input("lambda_p", lambda_p)
            .tag("ideal", "eq:CasBox")
    };
    Ok(match mode {
        BoxMode::Ideal => {
            let r = box_ideal_report(&cfg)?;
            base(r.energy, r.abs_err, "ideal")
                .component("perimeter_term", r.perimeter_term)
                .component("lattice_term", r.lattice_term)
                .tag("value", "eq:CasBox")
                .tag("lattice_sum", "eq:potter")
                .detail("lattice_sum", r.lattice_sum)
                .detail("lattice_tail_bound", r.lattice_abs_err)
                .detail("continuation", r.continuation)
                .detail("continuation_residual", r.continuation_residual)
        }
        BoxMode::Fc => {
            let r = box_fc_report(&cfg, cal)?;
            let lattice_mode = match r.lattice_mode {
                LatticeMode::Exact => "exact",
                LatticeMode::Asymptotic => "asymptotic",
            };
            base(r.energy, r.abs_err, "fc")
                .component("ideal", r.ideal)
                .component("lattice_correction", r.lattice_correction)
                .component("perimeter_correction", r.perimeter_correction)
                .label("lattice_mode", lattice_mode)
                .tag("value", "eq:potter")
                .tag("perimeter_correction", "eq:psiexp")
                .detail("n_c1", r.n_c1)
                .detail("n_c2", r.n_c2)
                .detail("lattice_abs_err", r.lattice_abs_err)
                .detail("perimeter_two_term", r.perimeter_two_term)
                .detail("display_literal", r.display_literal)
        }
    })
}

pub fn zeta(s: Complex64, cal: &Calibration) -> Result<Report> {
    let r = riemann_zeta_with(s, &cal.tolerance())?;
    Ok(Report::new("zeta", Num::complex(r.value), r.abs_err, cal)
        .input("s_re", s.re)
        .input("s_im", s.im)
        .tag("value", "p2")
        .tag("continuation", "ef"))
}

pub fn epstein(a: f64, b: f64, c: f64, s: Complex64, cal: &Calibration) -> Result<Report> {
    let form = QuadraticForm::new(a, b, c)?;
    let r = epstein_zeta_with(&form, s, &cal.tolerance())?;
    let mut rep = Report::new("epstein", Num::complex(r.value), r.abs_err, cal)
        .input("a", a)
        .input("b", b)
        .input("c", c)
        .input("s_re", s.re)
        .input("s_im", s.im)
        .tag("value", "eq:CasBox")
        .tag("reflection", "eq:potter");
    // Z(k, k, 0; s) = k^{-s} 4 zeta(s) beta(s) for real s.
    if c == 0.0 && a == b && s.im == 0.0 && s.re > 0.0 && s.re != 1.0 {
        let z = riemann_zeta_with(s, &cal.tolerance())?;
        let want = a.powf(-s.re) * 4.0 * z.value.re * dirichlet_beta(s.re)?;
        let diff = (r.value - want).norm();
        let tol = r.abs_err + a.powf(-s.re) * 4.0 * z.abs_err + 1e-12 * want.abs().max(1.0);
        rep = rep
            .component("identity_4_zeta_beta", want)
            .flag("identity_agrees", diff <= tol)
            .detail("identity_difference", diff);
    }
    Ok(rep)
}

pub fn afe(s: Complex64, x: Option<f64>, cal: &Calibration) -> Result<Report> {
    let t = s.im;
    let split = match x {
        Some(x) => HLSplit::from_xy(x, t / (2.0 * std::f64::consts::PI * x))?,
        None => hl_default_split(t)?,
    };
    let mode = default_mode(s);
    let a = afe_riemann_with(s, &split, mode, cal)?;
    let z = riemann_zeta_with(s, &cal.tolerance())?;
    let diff = (a.value - z.value).norm();
    let envelope = a.abs_err;
    Ok(Report::new("afe", Num::complex(a.value), envelope, cal)
        .mode(match mode {
            SumMode::Literal => "literal",
            SumMode::Continuation => "continuation",
        })
        .input("s_re", s.re)
        .input("s_im", s.im)
        .component("zeta_re", z.value.re)
        .component("zeta_im", z.value.im)
        .component("difference", diff)
        .component("envelope", envelope)
        .flag("within_envelope", diff <= envelope + z.abs_err)
        .tag("value", "eq:hardy")
        .tag("zeta", "p2")
        .detail("x", split.x)
        .detail("y", split.y)
        .detail("t", split.t)
        .detail("zeta_abs_err", z.abs_err))
}
