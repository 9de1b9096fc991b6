//! Forward and inverse transforms against a spectra stack.
//!
//! The forward transform takes one centered DFT of the image, multiplies it
//! by each spectra plane, and inverts each product back to the pixel grid.
//! The inverse transform is the adjoint: re-transform every coefficient
//! plane, multiply by the same spectra, accumulate, and invert once. Because
//! the squared spectra sum to one at every grid point, the composition is
//! the identity and energy is preserved exactly (up to roundoff).

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use shearlet_core::{band_count, Band, Image, ShearletVariant, SpectraCube};

use crate::cache;
use crate::error::{Error, Result};
use crate::fft::Fft2;

/// Largest imaginary magnitude [`CoefficientCube::to_real`] will discard.
pub const REAL_TOLERANCE: f64 = 1e-8;

/// Lowercase name used by files, reports, and the CLI.
pub fn variant_name(variant: ShearletVariant) -> &'static str {
    match variant {
        ShearletVariant::Classic => "classic",
        ShearletVariant::Smooth => "smooth",
    }
}

/// Inverse of [`variant_name`].
pub fn variant_from_name(name: &str) -> Option<ShearletVariant> {
    match name {
        "classic" => Some(ShearletVariant::Classic),
        "smooth" => Some(ShearletVariant::Smooth),
        _ => None,
    }
}

/// Identifies the spectra family a coefficient stack belongs to. Transforms
/// refuse to mix stacks with different keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpectraKey {
    pub n: usize,
    pub scales: u32,
    pub variant: ShearletVariant,
}

impl SpectraKey {
    pub fn of(cube: &SpectraCube) -> SpectraKey {
        SpectraKey {
            n: cube.n(),
            scales: cube.scales(),
            variant: cube.variant(),
        }
    }
}

impl fmt::Display for SpectraKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} scales={} variant={}",
            self.n,
            self.scales,
            variant_name(self.variant)
        )
    }
}

/// Complex coefficient planes in flat band order, keyed to the spectra that
/// produced them. Flat index 1 is the scaling plane, as everywhere else.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientCube {
    key: SpectraKey,
    planes: Vec<Vec<Complex64>>,
}

impl CoefficientCube {
    /// Assembles a cube from externally produced planes in flat order.
    pub fn from_planes(key: SpectraKey, planes: Vec<Vec<Complex64>>) -> Result<CoefficientCube> {
        let eta = band_count(key.scales) as usize;
        if planes.len() != eta {
            return Err(shearlet_core::Error::PlaneCountMismatch {
                expected: eta,
                actual: planes.len(),
            }
            .into());
        }
        let len = key.n * key.n;
        for plane in &planes {
            if plane.len() != len {
                return Err(shearlet_core::Error::DimensionMismatch {
                    expected: len,
                    actual: plane.len(),
                }
                .into());
            }
        }
        Ok(CoefficientCube { key, planes })
    }

    pub fn key(&self) -> SpectraKey {
        self.key
    }

    pub fn n(&self) -> usize {
        self.key.n
    }

    pub fn scales(&self) -> u32 {
        self.key.scales
    }

    pub fn variant(&self) -> ShearletVariant {
        self.key.variant
    }

    /// Number of planes.
    pub fn eta(&self) -> usize {
        self.planes.len()
    }

    pub fn planes(&self) -> &[Vec<Complex64>] {
        &self.planes
    }

    /// Plane for 1-based flat index `flat`.
    pub fn plane(&self, flat: u32) -> Result<&[Complex64]> {
        let band = Band::from_flat(flat, self.key.scales)?;
        let _ = band;
        Ok(&self.planes[(flat - 1) as usize])
    }

    /// Band descriptor for 1-based flat index `flat`.
    pub fn band(&self, flat: u32) -> Result<Band> {
        Ok(Band::from_flat(flat, self.key.scales)?)
    }

    /// Largest imaginary magnitude across all planes.
    pub fn max_imag(&self) -> f64 {
        self.planes
            .iter()
            .flatten()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }

    /// True when every imaginary part is bitwise `+0.0`; such cubes survive
    /// the real-only file encoding without any loss.
    pub fn is_bitwise_real(&self) -> bool {
        self.planes.iter().flatten().all(|z| z.im.to_bits() == 0)
    }

    /// Real parts of all planes. Errors when any imaginary magnitude exceeds
    /// [`REAL_TOLERANCE`]; dropping large imaginary parts silently would hide
    /// the symmetry loss of even grids.
    pub fn to_real(&self) -> Result<Vec<Vec<f64>>> {
        let max_imag = self.max_imag();
        if max_imag > REAL_TOLERANCE {
            return Err(Error::NotReal {
                max_imag,
                tolerance: REAL_TOLERANCE,
            });
        }
        Ok(self
            .planes
            .iter()
            .map(|p| p.iter().map(|z| z.re).collect())
            .collect())
    }

    /// Squared Frobenius norm of every plane, in flat order. Their sum equals
    /// the squared image norm (Parseval).
    pub fn band_energy(&self) -> Vec<f64> {
        self.planes
            .iter()
            .map(|p| compensated_sum(p.iter().map(|z| z.norm_sqr())))
            .collect()
    }

    /// Sum of all band energies.
    pub fn total_energy(&self) -> f64 {
        compensated_sum(self.band_energy())
    }
}

/// Neumaier compensated summation. Plain sequential summation of the millions
/// of terms behind a large-grid energy drifts by ~1e-12 relative, which would
/// swamp the quantities the frame checks measure; this keeps the error near
/// one rounding of the result.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut compensation = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}

/// Transform engine binding a spectra stack to FFT plans for its grid size.
pub struct ShearletTransform {
    spectra: Arc<SpectraCube>,
    fft: Fft2,
    parallel: bool,
}

impl ShearletTransform {
    pub fn new(spectra: Arc<SpectraCube>) -> ShearletTransform {
        let fft = Fft2::new(spectra.n());
        ShearletTransform {
            spectra,
            fft,
            parallel: false,
        }
    }

    /// Builds (or fetches from the process cache) the built-in spectra for
    /// an `n`-by-`n` image and wraps them in a transform.
    pub fn build(
        n: usize,
        scales: Option<u32>,
        variant: ShearletVariant,
    ) -> Result<ShearletTransform> {
        Ok(ShearletTransform::new(cache::spectra_for(
            n, scales, variant,
        )?))
    }

    /// Enables per-plane parallelism. Plane results are identical to the
    /// sequential path bit for bit; only the scheduling changes.
    pub fn with_parallel(mut self, parallel: bool) -> ShearletTransform {
        self.parallel = parallel;
        self
    }

    pub fn spectra(&self) -> &SpectraCube {
        &self.spectra
    }

    pub fn key(&self) -> SpectraKey {
        SpectraKey::of(&self.spectra)
    }

    /// Decomposes `image` into one complex plane per band: a single centered
    /// DFT, a pointwise multiply per spectra plane, and one inverse DFT each.
    pub fn forward(&self, image: &Image) -> Result<CoefficientCube> {
        if image.n() != self.spectra.n() {
            return Err(shearlet_core::Error::DimensionMismatch {
                expected: self.spectra.n(),
                actual: image.n(),
            }
            .into());
        }
        let spatial: Vec<Complex64> = image
            .data()
            .iter()
            .map(|&v| Complex64::new(v, 0.0))
            .collect();
        let hat = self.fft.forward_centered(&spatial);
        let run = |plane: &Vec<f64>| -> Vec<Complex64> {
            let product: Vec<Complex64> = hat.iter().zip(plane).map(|(f, &p)| f * p).collect();
            self.fft.inverse_centered(&product)
        };
        let planes: Vec<Vec<Complex64>> = if self.parallel {
            self.spectra.planes().par_iter().map(run).collect()
        } else {
            self.spectra.planes().iter().map(run).collect()
        };
        Ok(CoefficientCube {
            key: self.key(),
            planes,
        })
    }

    /// Reconstructs the image: re-transform every plane, multiply by the same
    /// spectra, accumulate in frequency space, and invert once. For stacks
    /// produced by [`forward`](Self::forward) the imaginary residue of the
    /// result is at roundoff level; the real part is returned.
    pub fn inverse(&self, coeffs: &CoefficientCube) -> Result<Image> {
        if coeffs.key() != self.key() {
            return Err(Error::KeyMismatch {
                expected: self.key(),
                actual: coeffs.key(),
            });
        }
        let n = self.spectra.n();
        let run = |(cplane, splane): (&Vec<Complex64>, &Vec<f64>)| -> Vec<Complex64> {
            let hat = self.fft.forward_centered(cplane);
            hat.iter().zip(splane).map(|(f, &p)| f * p).collect()
        };
        // Accumulation stays in flat order on one thread either way, so the
        // parallel path is bitwise identical to the sequential one.
        let contributions: Vec<Vec<Complex64>> = if self.parallel {
            coeffs
                .planes()
                .par_iter()
                .zip(self.spectra.planes().par_iter())
                .map(run)
                .collect()
        } else {
            coeffs
                .planes()
                .iter()
                .zip(self.spectra.planes().iter())
                .map(run)
                .collect()
        };
        let mut acc = vec![Complex64::new(0.0, 0.0); n * n];
        for plane in &contributions {
            for (a, z) in acc.iter_mut().zip(plane) {
                *a += z;
            }
        }
        let spatial = self.fft.inverse_centered(&acc);
        let data: Vec<f64> = spatial.iter().map(|z| z.re).collect();
        Ok(Image::new(n, data)?)
    }
}
