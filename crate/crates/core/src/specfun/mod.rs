//! Special functions on the complex plane.
//!
//! Riemann and Hurwitz zeta by Euler-Maclaurin summation with explicit
//! remainder bounds, the reflection factor `vartheta`, complex Gamma via a
//! Lanczos approximation, polygamma, continued harmonic numbers, the
//! Dirichlet beta function, and the upper incomplete Gamma used by the
//! Epstein continuation.

mod bernoulli;
mod beta;
mod gamma;
mod harmonic;
mod hurwitz;
pub(crate) mod incgamma;
mod polygamma;
mod zeta;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use bernoulli::bernoulli;
pub use beta::dirichlet_beta;
pub use gamma::{gamma, ln_gamma, rgamma};
pub use harmonic::{harmonic_literal, harmonic_number};
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_with};
pub use incgamma::{ln_upper_gamma, upper_gamma};
pub use polygamma::{polygamma, polygamma_asymptotic};
pub use zeta::{riemann_zeta, riemann_zeta_with, vartheta};

pub(crate) use gamma::{ln_cos, ln_sin};

/// Complex scalar used throughout the crate.
pub type ComplexScalar = Complex64;

/// A value together with a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_err: f64,
}

impl EvalResult {
    pub fn new(value: Complex64, abs_err: f64) -> Self {
        Self { value, abs_err }
    }

    pub fn exact(value: Complex64) -> Self {
        Self { value, abs_err: 0.0 }
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }
}

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `Some(n)` if `z` is exactly the real integer `n`.
pub fn as_integer(z: Complex64) -> Option<i64> {
    if z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 9.0e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

pub(crate) fn is_nonpositive_integer(z: Complex64) -> bool {
    matches!(as_integer(z), Some(n) if n <= 0)
}

pub(crate) fn check_finite(z: Complex64, what: &str) -> crate::Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::Domain(format!("{what} must be finite, got {z}")))
    }
}
