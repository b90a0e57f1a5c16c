// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the domain of the requested formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// A malformed argument (unsorted grid, unknown profile name, ...).
    #[error("argument error: {0}")]
    Argument(String),

    /// A correlator was evaluated at an unregulated coincidence point.
    #[error("singular correlator: {0}")]
    Singularity(String),

    #[error("quadrature on [{lo}, {hi}] did not converge: estimated error {residual:.3e}")]
    Quadrature { lo: f64, hi: f64, residual: f64 },

    #[error("epsilon extrapolation residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    Extrapolation { residual: f64, tolerance: f64 },

    #[error("invalid density matrix: {0}")]
    Validation(String),

    #[error(
        "integration unstable at tau = {tau}: minimum eigenvalue {min_eigenvalue:.3e}; reduce dt"
    )]
    Instability { tau: f64, min_eigenvalue: f64 },

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
