//! Zeta-regularized Casimir energies for ideal and finite-conductivity
//! boundaries.
//!
//! The crate is layered: [`specfun`] provides the analytic special functions,
//! [`afe`] the approximate functional equations with their error envelopes,
//! [`epstein`] the two-dimensional Epstein zeta machinery, [`casimir`] the
//! physical energies for slab and rectangular-box geometries, and
//! [`spectral`] an independent brute-force oracle built from explicit mode
//! lists. [`validation`] bundles the numerical self-checks used by the CLI.

pub mod afe;
pub mod casimir;
pub mod config;
pub mod epstein;
pub mod error;
pub mod spectral;
pub mod specfun;
pub mod sum;
pub mod validation;

pub use config::{Calibration, ToleranceConfig};
pub use error::{Error, Result};
pub use specfun::{ComplexScalar, EvalResult};
