//! Square grayscale image container.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Row-major `n`-by-`n` grayscale raster with finite samples.
///
/// Pixel values are conventionally in `[0, 1]` for picture data, but any
/// finite value is allowed so the container also serves reconstruction
/// output before quantization.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    n: usize,
    data: Vec<f64>,
}

impl Image {
    /// Wraps row-major samples; `data.len()` must equal `n * n` and every
    /// sample must be finite.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Image, Error> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                actual: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Image { n, data })
    }

    /// All-zero image.
    pub fn zeros(n: usize) -> Image {
        Image {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Side length in pixels.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major samples.
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Consumes the image into its row-major samples.
    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    /// Sample at row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_length_and_finiteness() {
        assert!(Image::new(2, vec![0.0; 4]).is_ok());
        assert_eq!(
            Image::new(2, vec![0.0; 3]),
            Err(Error::DimensionMismatch {
                expected: 4,
                actual: 3
            })
        );
        assert_eq!(
            Image::new(2, vec![0.0, f64::NAN, 0.0, 0.0]),
            Err(Error::NonFinite)
        );
        assert_eq!(Image::new(1, vec![f64::INFINITY]), Err(Error::NonFinite));
    }

    #[test]
    fn row_major_access() {
        let img = Image::new(2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(img.get(0, 0), 1.0);
        assert_eq!(img.get(0, 1), 2.0);
        assert_eq!(img.get(1, 0), 3.0);
        assert_eq!(img.get(1, 1), 4.0);
        assert_eq!(img.n(), 2);
    }
}
