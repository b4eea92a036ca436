//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by state constructors, channels, measures, and sweeps.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated (dimension, range, or
    /// structural contract such as Hermiticity).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The filter maps the state to (numerically) zero: the post-selected
    /// outcome never occurs, so no renormalized state exists.
    #[error("filter annihilates state: success probability {prob:.3e} below threshold")]
    FilterAnnihilated { prob: f64 },

    /// Onset search was asked for a pair whose concurrence is already zero
    /// before any noise is applied.
    #[error("never entangled: concurrence is zero at gamma_t = 0")]
    NeverEntangled,

    /// Onset search ran out of horizon while the concurrence was still positive.
    #[error("no death found: concurrence still positive at gamma_t = {horizon}")]
    NoDeathFound { horizon: f64 },

    /// A configuration file could not be read or parsed.
    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
