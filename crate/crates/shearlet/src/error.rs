//! Error type shared by the transform engine, file formats, and CLI.

use crate::transform::SpectraKey;

/// Errors from transforms, verification, and file I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Construction or indexing error from the core library.
    #[error(transparent)]
    Core(#[from] shearlet_core::Error),
    /// Operating-system level I/O failure.
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    /// Malformed or unsupported image file.
    #[error("image format: {0}")]
    ImageFormat(String),
    /// Malformed or unsupported coefficient or spectra container.
    #[error("container format: {0}")]
    ContainerFormat(String),
    /// Coefficients and spectra were produced for different grids.
    #[error("coefficient key ({actual}) does not match spectra key ({expected})")]
    KeyMismatch {
        expected: SpectraKey,
        actual: SpectraKey,
    },
    /// A real view was requested but the imaginary parts are not negligible.
    #[error("coefficients are not real: max |imag| = {max_imag:e} exceeds {tolerance:e}")]
    NotReal { max_imag: f64, tolerance: f64 },
    /// Data contains NaN or an infinity.
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
