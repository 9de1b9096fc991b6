//! Band-limited, cone-adapted shearlet spectra on finite frequency grids.
//!
//! This crate holds the allocation-only math of the decomposition: Meyer-type
//! window functions, the centered frequency grid for an `n`-by-`n` image, the
//! flat ordering of the `2^(j0+2) - 3` bands, the sampled spectra planes
//! whose squares tile the grid (the Parseval certificate), and synthetic test
//! images. The FFT-based transform, frame checks, file formats, and CLI live
//! in the companion `shearlet` crate.
//!
//! ```
//! use shearlet_core::{ShearletVariant, SpectraCube};
//!
//! let cube = SpectraCube::build(17, None, ShearletVariant::Classic).unwrap();
//! assert_eq!(cube.planes().len(), 13);
//! assert!(cube.tiling_deviation() <= 1e-13);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bands;
pub mod error;
pub mod grid;
pub mod image;
pub mod imagegen;
pub mod spectra;
pub mod windows;

pub use bands::Band;
pub use error::Error;
pub use grid::{band_count, scales_for_size, FrequencyGrid};
pub use image::Image;
pub use imagegen::{render, Shape, ShapeKind};
pub use spectra::{
    sample_plane, scaling_spectrum, shearlet_spectrum, SpectraCube, SpectrumGenerator,
};
pub use windows::ShearletVariant;
