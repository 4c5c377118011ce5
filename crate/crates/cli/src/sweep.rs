//! Parameter sweeps: grid construction, concurrent evaluation, ordered CSV
//! or JSON output.

use std::io::Write;

use casimir_core::{Calibration, Error};
use clap::ValueEnum;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::{afe, box_energy, slab_energy, zeta, BoxMode, SlabMode};
use crate::report::{fmt_num, Num};

pub const CSV_HEADER: [&str; 8] =
    ["param_value", "energy", "ideal_term", "correction_1", "correction_2", "abs_err", "guard_ok", "error_msg"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Slab,
    Box,
    Zeta,
    Afe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Param {
    #[value(name = "L")]
    L,
    #[value(name = "lambda_p")]
    LambdaP,
    #[value(name = "d")]
    D,
    #[value(name = "L1")]
    L1,
    #[value(name = "L2")]
    L2,
    #[value(name = "s_imag")]
    SImag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepSpec {
    pub param: Param,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: Scale,
}

/// Base point that the swept parameter overrides.
#[derive(Debug, Clone, Copy)]
pub struct Base {
    pub kind: Kind,
    pub slab_mode: SlabMode,
    pub box_mode: BoxMode,
    pub d: u32,
    pub l: f64,
    pub l1: f64,
    pub l2: f64,
    pub lambda_p: f64,
    pub s_re: f64,
    pub s_im: f64,
}

impl SweepSpec {
    /// Checks the spec against the sweep kind; errors are usage errors.
    pub fn validate(&self, kind: Kind) -> Result<(), String> {
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err("start and stop must be finite".into());
        }
        if self.start >= self.stop {
            return Err(format!("start ({}) must be below stop ({})", self.start, self.stop));
        }
        if self.points < 2 {
            return Err(format!("points must be at least 2, got {}", self.points));
        }
        if self.scale == Scale::Log && self.start <= 0.0 {
            return Err(format!("log scale needs start > 0, got {}", self.start));
        }
        let allowed: &[Param] = match kind {
            Kind::Slab => &[Param::L, Param::LambdaP, Param::D],
            Kind::Box => &[Param::L1, Param::L2, Param::LambdaP],
            Kind::Zeta | Kind::Afe => &[Param::SImag],
        };
        if !allowed.contains(&self.param) {
            return Err(format!("parameter {:?} cannot be swept for kind {:?}", self.param, kind));
        }
        if self.param == Param::D {
            for v in self.grid() {
                if (v - v.round()).abs() > 1e-9 || v < 0.5 {
                    return Err(format!("d must take positive integer values, grid contains {v}"));
                }
            }
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    return self.stop;
                }
                let f = i as f64 / (n - 1) as f64;
                match self.scale {
                    Scale::Linear => self.start + f * (self.stop - self.start),
                    Scale::Log => {
                        let (a, b) = (self.start.log10(), self.stop.log10());
                        10f64.powf(a + f * (b - a))
                    }
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub param_value: f64,
    pub energy: Option<f64>,
    pub ideal_term: Option<f64>,
    pub correction_1: Option<f64>,
    pub correction_2: Option<f64>,
    pub abs_err: Option<f64>,
    pub guard_ok: bool,
    pub error_msg: String,
}

impl Row {
    fn ok(p: f64, v: [f64; 5], guard_ok: bool) -> Self {
        Self {
            param_value: p,
            energy: Some(v[0]),
            ideal_term: Some(v[1]),
            correction_1: Some(v[2]),
            correction_2: Some(v[3]),
            abs_err: Some(v[4]),
            guard_ok,
            error_msg: String::new(),
        }
    }

    fn err(p: f64, e: &Error) -> Self {
        Self {
            param_value: p,
            energy: None,
            ideal_term: None,
            correction_1: None,
            correction_2: None,
            abs_err: None,
            guard_ok: false,
            error_msg: e.to_string(),
        }
    }

    pub fn succeeded(&self) -> bool {
        self.energy.is_some()
    }
}

fn complex_parts(v: Num) -> (f64, f64) {
    match v {
        Num::Real(x) => (x, 0.0),
        Num::Complex { re, im } => (re, im),
    }
}

fn eval(base: &Base, param: Param, p: f64, cal: &Calibration) -> Row {
    let mut b = *base;
    match param {
        Param::L => b.l = p,
        Param::LambdaP => b.lambda_p = p,
        Param::D => b.d = p.round() as u32,
        Param::L1 => b.l1 = p,
        Param::L2 => b.l2 = p,
        Param::SImag => b.s_im = p,
    }
    let s = Complex64::new(b.s_re, b.s_im);
    let res = match b.kind {
        Kind::Slab => slab_energy(b.d, b.l, b.lambda_p, b.slab_mode, cal)
            .map(|r| ([r.energy, r.ideal, r.correction_1, r.correction_2, r.abs_err], true)),
        Kind::Box => box_energy(b.l1, b.l2, b.lambda_p, b.box_mode, cal).map(|v| (v, true)),
        // energy = Re, ideal_term = Im of the evaluated function.
        Kind::Zeta => zeta(s, cal).map(|r| {
            let (re, im) = complex_parts(r.value);
            ([re, im, 0.0, 0.0, r.abs_err], true)
        }),
        // correction_1 = |afe - zeta|, correction_2 = envelope; guard_ok = within envelope.
        Kind::Afe => afe(s, None, cal).map(|r| {
            let (re, im) = complex_parts(r.value);
            let within = r.flags.get("within_envelope").copied().unwrap_or(false);
            ([re, im, r.components["difference"], r.components["envelope"], r.abs_err], within)
        }),
    };
    match res {
        Ok((v, guard_ok)) => Row::ok(p, v, guard_ok),
        Err(e) => Row::err(p, &e),
    }
}

/// Rows in grid order; points are evaluated concurrently.
pub fn run(base: &Base, spec: &SweepSpec, cal: &Calibration) -> Vec<Row> {
    spec.grid().into_par_iter().map(|p| eval(base, spec.param, p, cal)).collect()
}

fn cell(v: Option<f64>) -> String {
    v.map(fmt_num).unwrap_or_default()
}

pub fn write_csv(rows: &[Row], w: &mut dyn Write) -> csv::Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(CSV_HEADER)?;
    for r in rows {
        wr.write_record([
            fmt_num(r.param_value),
            cell(r.energy),
            cell(r.ideal_term),
            cell(r.correction_1),
            cell(r.correction_2),
            cell(r.abs_err),
            r.guard_ok.to_string(),
            r.error_msg.clone(),
        ])?;
    }
    wr.flush()?;
    Ok(())
}
