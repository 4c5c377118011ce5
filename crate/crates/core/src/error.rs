//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Evaluation requested at a genuine singularity.
    #[error("pole: {0}")]
    Pole(String),

    /// Argument outside the documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An approximate functional equation split is unusable.
    #[error("degenerate split: {0}")]
    DegenerateSplit(String),

    /// A physical applicability guard failed.
    #[error("guard violation: {0}")]
    Guard(String),

    /// Even spatial dimension in an odd-only formula.
    #[error("unsupported dimension d = {0}: the finite-conductivity slab formulas need odd d")]
    EvenDimension(u32),

    /// The requested tolerance cannot be met within the term budget.
    #[error("accuracy not reached: {0}")]
    Accuracy(String),

    /// Spectral cutoff too small for the requested quantity.
    #[error("insufficient cutoff: {0}")]
    InsufficientCutoff(String),

    /// Malformed configuration input.
    #[error("config error: {0}")]
    Config(String),
}

impl Error {
    /// True for errors caused by inputs rather than internal limits.
    pub fn is_domain_like(&self) -> bool {
        !matches!(self, Error::Accuracy(_) | Error::InsufficientCutoff(_))
    }
}
