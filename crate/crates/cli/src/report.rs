//! Report model and its text, JSON and CSV renderings.

use std::collections::BTreeMap;
use std::io::Write;

use casimir_core::{Calibration, ToleranceConfig};
use clap::ValueEnum;
use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Shortest round-trip decimal; scientific notation outside [1e-4, 1e15).
pub fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || !a.is_finite() || (1e-4..1e15).contains(&a) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

/// A real or complex result.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
pub enum Num {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl Num {
    pub fn complex(z: Complex64) -> Self {
        Num::Complex { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Guards {
    pub fc_guard_ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Constants {
    pub hl_envelope_c: f64,
    pub potter_envelope_c: f64,
    pub slab_two_path_k: f64,
}

/// Run metadata; the timestamp is the only field that varies between runs.
#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub tool_version: &'static str,
    pub tolerances: ToleranceConfig,
    pub guards: Guards,
    pub calibration: Constants,
    pub details: BTreeMap<String, f64>,
    pub timestamp: String,
}

impl Metadata {
    pub fn new(cal: &Calibration) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION"),
            tolerances: cal.tolerance(),
            guards: Guards { fc_guard_ratio: cal.fc_guard_ratio },
            calibration: Constants {
                hl_envelope_c: cal.hl_envelope_c,
                potter_envelope_c: cal.potter_envelope_c,
                slab_two_path_k: cal.slab_two_path_k,
            },
            details: BTreeMap::new(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
        }
    }
}

/// Single-point evaluation result.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub mode: Option<String>,
    pub inputs: BTreeMap<String, f64>,
    pub value: Num,
    pub abs_err: f64,
    pub components: BTreeMap<String, f64>,
    pub flags: BTreeMap<String, bool>,
    pub labels: BTreeMap<String, String>,
    pub provenance: BTreeMap<String, String>,
    pub metadata: Metadata,
}

impl Report {
    pub fn new(command: &str, value: Num, abs_err: f64, cal: &Calibration) -> Self {
        Self {
            command: command.to_string(),
            mode: None,
            inputs: BTreeMap::new(),
            value,
            abs_err,
            components: BTreeMap::new(),
            flags: BTreeMap::new(),
            labels: BTreeMap::new(),
            provenance: BTreeMap::new(),
            metadata: Metadata::new(cal),
        }
    }

    pub fn mode(mut self, mode: &str) -> Self {
        self.mode = Some(mode.to_string());
        self
    }

    pub fn input(mut self, k: &str, v: f64) -> Self {
        self.inputs.insert(k.into(), v);
        self
    }

    pub fn component(mut self, k: &str, v: f64) -> Self {
        self.components.insert(k.into(), v);
        self
    }

    pub fn flag(mut self, k: &str, v: bool) -> Self {
        self.flags.insert(k.into(), v);
        self
    }

    pub fn label(mut self, k: &str, v: &str) -> Self {
        self.labels.insert(k.into(), v.into());
        self
    }

    pub fn tag(mut self, k: &str, v: &str) -> Self {
        self.provenance.insert(k.into(), v.into());
        self
    }

    pub fn detail(mut self, k: &str, v: f64) -> Self {
        self.metadata.details.insert(k.into(), v);
        self
    }

    /// Flattened (key, value) pairs shared by the text and CSV renderings.
    fn rows(&self) -> Vec<(String, String)> {
        let mut out = vec![("command".to_string(), self.command.clone())];
        if let Some(m) = &self.mode {
            out.push(("mode".into(), m.clone()));
        }
        out.extend(self.inputs.iter().map(|(k, v)| (format!("input.{k}"), fmt_num(*v))));
        match self.value {
            Num::Real(v) => out.push(("value".into(), fmt_num(v))),
            Num::Complex { re, im } => {
                out.push(("value.re".into(), fmt_num(re)));
                out.push(("value.im".into(), fmt_num(im)));
            }
        }
        out.push(("abs_err".into(), fmt_num(self.abs_err)));
        out.extend(self.components.iter().map(|(k, v)| (format!("component.{k}"), fmt_num(*v))));
        out.extend(self.flags.iter().map(|(k, v)| (format!("flag.{k}"), v.to_string())));
        out.extend(self.labels.iter().map(|(k, v)| (format!("label.{k}"), v.clone())));
        out.extend(self.provenance.iter().map(|(k, v)| (format!("provenance.{k}"), v.clone())));
        let m = &self.metadata;
        out.push(("metadata.tool_version".into(), m.tool_version.into()));
        out.push(("metadata.target_abs_tol".into(), fmt_num(m.tolerances.target_abs_tol)));
        out.push(("metadata.max_terms".into(), m.tolerances.max_terms.to_string()));
        out.push(("metadata.fc_guard_ratio".into(), fmt_num(m.guards.fc_guard_ratio)));
        out.push(("metadata.hl_envelope_c".into(), fmt_num(m.calibration.hl_envelope_c)));
        out.push(("metadata.potter_envelope_c".into(), fmt_num(m.calibration.potter_envelope_c)));
        out.push(("metadata.slab_two_path_k".into(), fmt_num(m.calibration.slab_two_path_k)));
        out.extend(m.details.iter().map(|(k, v)| (format!("metadata.{k}"), fmt_num(*v))));
        out.push(("metadata.timestamp".into(), m.timestamp.clone()));
        out
    }

    pub fn render(&self, format: Format, w: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *w, self)?;
                writeln!(w)
            }
            Format::Text => {
                let rows = self.rows();
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in rows {
                    writeln!(w, "{k:<width$}  {v}")?;
                }
                Ok(())
            }
            Format::Csv => {
                let mut wr = csv::Writer::from_writer(w);
                wr.write_record(["key", "value"])?;
                for (k, v) in self.rows() {
                    wr.write_record([k, v])?;
                }
                wr.flush()
            }
        }
    }
}
