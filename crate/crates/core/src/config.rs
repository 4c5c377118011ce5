//! Tolerances and frozen calibration constants.
//!
//! The checked-in calibration file (`config/calibration.toml`) is compiled
//! into the crate; [`Calibration::builtin`] parses it. Overrides use the same
//! flat key-value format.

use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../../config/calibration.toml");

/// Numeric accuracy targets and term budgets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub target_abs_tol: f64,
    pub max_terms: u64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Calibration::builtin().tolerance()
    }
}

impl ToleranceConfig {
    pub fn with_tol(tol: f64) -> Self {
        Self { target_abs_tol: tol, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_tol > 0.0 && self.target_abs_tol.is_finite()) {
            return Err(Error::Config(format!(
                "target_abs_tol must be positive, got {}",
                self.target_abs_tol
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::Config("max_terms must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Calibration {
    pub hl_envelope_c: f64,
    pub potter_envelope_c: f64,
    pub slab_two_path_k: f64,
    pub fc_guard_ratio: f64,
    pub target_abs_tol: f64,
    pub max_terms: u64,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Overrides {
    hl_envelope_c: Option<f64>,
    potter_envelope_c: Option<f64>,
    slab_two_path_k: Option<f64>,
    fc_guard_ratio: Option<f64>,
    target_abs_tol: Option<f64>,
    max_terms: Option<u64>,
}

impl Calibration {
    /// The checked-in constants.
    pub fn builtin() -> Calibration {
        static CELL: OnceLock<Calibration> = OnceLock::new();
        *CELL.get_or_init(|| {
            let cal: Calibration =
                toml::from_str(BUILTIN).expect("built-in calibration file is valid");
            cal.validate().expect("built-in calibration constants are valid");
            cal
        })
    }

    /// Builtin constants with the keys present in `text` replaced.
    pub fn with_overrides(text: &str) -> Result<Calibration> {
        let o: Overrides = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let mut c = Self::builtin();
        if let Some(v) = o.hl_envelope_c {
            c.hl_envelope_c = v;
        }
        if let Some(v) = o.potter_envelope_c {
            c.potter_envelope_c = v;
        }
        if let Some(v) = o.slab_two_path_k {
            c.slab_two_path_k = v;
        }
        if let Some(v) = o.fc_guard_ratio {
            c.fc_guard_ratio = v;
        }
        if let Some(v) = o.target_abs_tol {
            c.target_abs_tol = v;
        }
        if let Some(v) = o.max_terms {
            c.max_terms = v;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn from_file(path: &Path) -> Result<Calibration> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::with_overrides(&text)
    }

    pub fn tolerance(&self) -> ToleranceConfig {
        ToleranceConfig { target_abs_tol: self.target_abs_tol, max_terms: self.max_terms }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("hl_envelope_c", self.hl_envelope_c),
            ("potter_envelope_c", self.potter_envelope_c),
            ("slab_two_path_k", self.slab_two_path_k),
            ("fc_guard_ratio", self.fc_guard_ratio),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive and finite, got {v}")));
            }
        }
        self.tolerance().validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses() {
        let c = Calibration::builtin();
        assert_eq!(c.hl_envelope_c, 5.0);
        assert!(c.target_abs_tol > 0.0);
    }

    #[test]
    fn overrides_replace_only_given_keys() {
        let c = Calibration::with_overrides("hl_envelope_c = 0.5\n").unwrap();
        assert_eq!(c.hl_envelope_c, 0.5);
        assert_eq!(c.potter_envelope_c, Calibration::builtin().potter_envelope_c);
    }

    #[test]
    fn rejects_unknown_and_invalid() {
        assert!(Calibration::with_overrides("bogus = 1.0").is_err());
        assert!(Calibration::with_overrides("target_abs_tol = -1.0").is_err());
    }
}
