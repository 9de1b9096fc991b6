//! Error type shared by the construction paths in this crate.

use core::fmt;

/// Failures that the spectra, grid, and image constructors can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Image or grid side length below the supported minimum of 4.
    SizeTooSmall { n: usize },
    /// Scale count must be at least 1.
    ZeroScales,
    /// Flat band index outside `1..=band_count`.
    FlatIndexOutOfRange { flat: u32, eta: u32 },
    /// Band parameters that no flat index maps to for the given scale count.
    InvalidBand,
    /// Buffer length does not match the declared square side.
    DimensionMismatch { expected: usize, actual: usize },
    /// Plane count does not match the band count of the grid.
    PlaneCountMismatch { expected: usize, actual: usize },
    /// A sample was NaN or infinite where finite data is required.
    NonFinite,
    /// Shape parameters outside their admissible range.
    InvalidShape,
    /// Shape extends outside the unit canvas.
    ShapeOutsideCanvas,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::SizeTooSmall { n } => {
                write!(f, "side length {n} is below the minimum of 4")
            }
            Error::ZeroScales => write!(f, "scale count must be at least 1"),
            Error::FlatIndexOutOfRange { flat, eta } => {
                write!(f, "flat band index {flat} outside 1..={eta}")
            }
            Error::InvalidBand => {
                write!(f, "band parameters do not name a valid band")
            }
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "expected {expected} samples, got {actual}")
            }
            Error::PlaneCountMismatch { expected, actual } => {
                write!(f, "expected {expected} planes, got {actual}")
            }
            Error::NonFinite => write!(f, "non-finite sample in input data"),
            Error::InvalidShape => {
                write!(f, "shape size or intensity outside its valid range")
            }
            Error::ShapeOutsideCanvas => {
                write!(f, "shape extends outside the unit canvas")
            }
        }
    }
}

impl core::error::Error for Error {}
