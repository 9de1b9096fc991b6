//! Discrete shearlet transform of square images: FFT transform engine,
//! numerical frame verification, file formats, and the `shearlet` CLI.
//!
//! The construction itself (windows, frequency grid, band indexing, spectra)
//! lives in the `shearlet-core` crate, re-exported here. This crate adds
//! everything that needs the standard library: FFT plans, timers, the
//! spectra cache, PGM image I/O, the binary containers, and the CLI.
//!
//! ```
//! use shearlet::{random_image, ShearletTransform, ShearletVariant};
//!
//! let transform = ShearletTransform::build(33, None, ShearletVariant::Classic)?;
//! let image = random_image(33, 7);
//! let coeffs = transform.forward(&image)?;
//! let back = transform.inverse(&coeffs)?;
//! let worst = image
//!     .data()
//!     .iter()
//!     .zip(back.data())
//!     .map(|(a, b)| (a - b).abs())
//!     .fold(0.0, f64::max);
//! assert!(worst <= 1e-12);
//! # Ok::<(), shearlet::Error>(())
//! ```

pub mod cache;
pub mod cli;
pub mod container;
pub mod error;
pub mod fft;
pub mod framecheck;
pub mod pgm;
pub mod transform;

mod fsio;

pub use error::{Error, Result};
pub use framecheck::{
    bench, check_roundtrip, check_tiling, random_image, tiling_deviation_of, verify, FrameReport,
    PARSEVAL_TOLERANCE, ROUNDTRIP_TOLERANCE, TILING_TOLERANCE,
};
pub use transform::{
    compensated_sum, variant_from_name, variant_name, CoefficientCube, ShearletTransform,
    SpectraKey, REAL_TOLERANCE,
};

pub use shearlet_core::{
    band_count, render, scales_for_size, Band, FrequencyGrid, Image, Shape, ShapeKind,
    ShearletVariant, SpectraCube, SpectrumGenerator,
};

/// Element type of coefficient planes.
pub use rustfft::num_complex::Complex64;
