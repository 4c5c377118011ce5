//! Casimir energies of a massless scalar field with Dirichlet boundaries.
//!
//! Two geometries: the slab R^{d-1} x [0, L] ([`slab`]) and the rectangle
//! [0, L1] x [0, L2] ([`cavity`]). Each has an ideal energy and
//! finite-conductivity variants in which modes above the plasma frequency
//! are cut at a critical index n_c. Lengths are in one user-chosen unit and
//! energies come out in natural units (hbar = c = 1).

pub mod cavity;
pub mod slab;

pub use cavity::{
    box_fc_energy, box_fc_report, box_fc_zeta_rep, box_ideal_energy, box_ideal_report, box_nc,
    BoxConfig, BoxFcReport, BoxIdealReport, BoxZetaRep, LatticeMode, RepMode,
};
pub use slab::{
    slab_afe_energy, slab_afe_report, slab_fc_asymptotic_report, slab_fc_energy_asymptotic,
    slab_fc_energy_hurwitz, slab_fc_hurwitz_report, slab_ideal_energy_density,
    slab_ideal_report, slab_nc, SlabConfig, SlabReport,
};

use crate::config::Calibration;
use crate::error::{Error, Result};

pub(crate) fn check_length(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
    }
    Ok(())
}

pub(crate) fn check_lambda(v: f64) -> Result<()> {
    if !(v >= 0.0 && v.is_finite()) {
        return Err(Error::Domain(format!("lambda_p must be >= 0 and finite, got {v}")));
    }
    Ok(())
}

/// Finite-conductivity applicability: length / lambda_p >= guard ratio.
pub(crate) fn fc_guard(name: &str, length: f64, lambda_p: f64, cal: &Calibration) -> Result<()> {
    let ratio = length / lambda_p;
    if ratio < cal.fc_guard_ratio {
        return Err(Error::Guard(format!(
            "{name}/lambda_p = {ratio:e} is below the guard ratio {:e}",
            cal.fc_guard_ratio
        )));
    }
    Ok(())
}
