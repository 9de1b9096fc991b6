//! Frequency-domain spectra of the decomposition.
//!
//! Each plane samples one band's spectrum on the centered grid, laid out
//! row-major with `plane[r * n + c] = spectrum(w1 = axis[c], w2 = axis[r])`,
//! so the first frequency axis runs along columns. The squares of all planes
//! sum to 1 at every grid point, which is the computable certificate that the
//! transform built from them is a Parseval frame.
//!
//! The frequency plane splits into a horizontal cone (`|w2| < |w1|`), a
//! vertical cone (`|w1| < |w2|`), the seam `|w1| = |w2|`, and the low-pass
//! square `max(|w1|, |w2|) < 1/2` covered by the scaling plane. Shearlets
//! with `|k| < 2^j` live inside one cone; the two `|k| = 2^j` planes per
//! scale are glued from horizontal, vertical, and seam parts.

use alloc::vec::Vec;

use crate::bands::Band;
use crate::error::Error;
use crate::grid::FrequencyGrid;
use crate::windows::{corona_2d, psi1_hat, psi2_hat, scaling_1d, scaling_2d, ShearletVariant};

/// Horizontal cone membership: `|w1| >= 1/2` and `|w2| < |w1|`.
pub fn in_horizontal_cone(w1: f64, w2: f64) -> bool {
    w1.abs() >= 0.5 && w2.abs() < w1.abs()
}

/// Vertical cone membership: `|w2| >= 1/2` and `|w1| < |w2|`.
pub fn in_vertical_cone(w1: f64, w2: f64) -> bool {
    w2.abs() >= 0.5 && w1.abs() < w2.abs()
}

/// Seam membership: `|w1| = |w2| >= 1/2`, tested with exact float equality.
/// The symmetric axis construction makes seam points exactly representable,
/// so the three masks partition every grid point outside the low-pass square.
pub fn on_seam(w1: f64, w2: f64) -> bool {
    w1.abs() >= 0.5 && w1.abs() == w2.abs()
}

/// Scaling spectrum at one frequency point.
///
/// Classic: `scaling_1d(max(|w1|, |w2|))`, constant along max-norm squares.
/// Smooth: the separable tensor window `scaling_2d`.
pub fn scaling_spectrum(variant: ShearletVariant, w1: f64, w2: f64) -> f64 {
    match variant {
        ShearletVariant::Classic => scaling_1d(w1.abs().max(w2.abs())),
        ShearletVariant::Smooth => scaling_2d(w1, w2),
    }
}

/// Radial factor of a scale-`j` shearlet at `(w1, w2)`, with `w1` playing
/// the cone-axis role. Classic uses the 1-D corona of the axis frequency;
/// smooth uses the 2-D corona of the dilated point, which is symmetric in
/// its arguments and therefore shared by all three glued parts.
fn radial_factor(variant: ShearletVariant, j: u32, w1: f64, w2: f64) -> f64 {
    let d = 1.0 / (1u64 << (2 * j)) as f64;
    match variant {
        ShearletVariant::Classic => psi1_hat(d * w1),
        ShearletVariant::Smooth => corona_2d(d * w1, d * w2),
    }
}

/// Cone-interior part with the horizontal mask. The mask guarantees
/// `|w1| >= 1/2`, so the shear quotient `w2 / w1` is always well defined;
/// outside the mask the value is exactly zero.
fn horizontal_part(variant: ShearletVariant, j: u32, k: i32, w1: f64, w2: f64) -> f64 {
    if !in_horizontal_cone(w1, w2) {
        return 0.0;
    }
    let radial = radial_factor(variant, j, w1, w2);
    if radial == 0.0 {
        return 0.0;
    }
    radial * psi2_hat(k as f64 + (1u64 << j) as f64 * (w2 / w1))
}

/// Mirror of [`horizontal_part`] with the axes swapped and the vertical mask.
fn vertical_part(variant: ShearletVariant, j: u32, k: i32, w1: f64, w2: f64) -> f64 {
    if !in_vertical_cone(w1, w2) {
        return 0.0;
    }
    let radial = radial_factor(variant, j, w2, w1);
    if radial == 0.0 {
        return 0.0;
    }
    radial * psi2_hat(k as f64 + (1u64 << j) as f64 * (w1 / w2))
}

/// Seam part of a glued plane: horizontal-form arguments under the seam mask.
fn seam_part(variant: ShearletVariant, j: u32, k: i32, w1: f64, w2: f64) -> f64 {
    if !on_seam(w1, w2) {
        return 0.0;
    }
    let radial = radial_factor(variant, j, w1, w2);
    if radial == 0.0 {
        return 0.0;
    }
    radial * psi2_hat(k as f64 + (1u64 << j) as f64 * (w2 / w1))
}

/// Spectrum value of `band` at the frequency point `(w1, w2)`.
///
/// Total: any finite input yields a finite value in `[0, 1]`, exactly zero
/// outside the band's cone mask. The diagonal planes sum their horizontal,
/// vertical, and seam parts, whose masks are pairwise disjoint.
pub fn shearlet_spectrum(variant: ShearletVariant, band: Band, w1: f64, w2: f64) -> f64 {
    match band {
        Band::Scaling => scaling_spectrum(variant, w1, w2),
        Band::Horizontal { j, k } => horizontal_part(variant, j, k, w1, w2),
        Band::Vertical { j, k } => vertical_part(variant, j, k, w1, w2),
        Band::Diagonal { j, k } => {
            horizontal_part(variant, j, k, w1, w2)
                + vertical_part(variant, j, k, w1, w2)
                + seam_part(variant, j, k, w1, w2)
        }
    }
}

/// Point evaluator for spectra families.
///
/// The built-in families implement this via [`shearlet_spectrum`];
/// externally supplied generators plug into [`SpectraCube::from_generator`],
/// with the frame tiling check as the admission test.
pub trait SpectrumGenerator {
    /// Spectrum value of `band` at the frequency point `(w1, w2)`.
    fn evaluate(&self, band: Band, w1: f64, w2: f64) -> f64;
}

impl SpectrumGenerator for ShearletVariant {
    fn evaluate(&self, band: Band, w1: f64, w2: f64) -> f64 {
        shearlet_spectrum(*self, band, w1, w2)
    }
}

/// Samples one band's spectrum on the grid at the requested image size.
///
/// Rows and columns run over the first `n_image` axis samples; for an even
/// request this crops the last row and column of the internal odd grid.
pub fn sample_plane<G: SpectrumGenerator + ?Sized>(
    generator: &G,
    grid: &FrequencyGrid,
    band: Band,
) -> Vec<f64> {
    let n = grid.n_image();
    let axis = grid.axis();
    let mut plane = Vec::with_capacity(n * n);
    for &w2 in &axis[..n] {
        for &w1 in &axis[..n] {
            plane.push(generator.evaluate(band, w1, w2));
        }
    }
    plane
}

/// All decomposition planes sampled on one grid.
///
/// Planes sit in flat-index order (`planes()[0]` is flat index 1, the
/// scaling plane) and are stored row-major at the requested image size.
/// On an odd grid every plane is even-symmetric under point reflection;
/// even sizes lose the boundary row and column and with them that symmetry.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectraCube {
    grid: FrequencyGrid,
    variant: ShearletVariant,
    planes: Vec<Vec<f64>>,
}

impl SpectraCube {
    /// Builds the built-in spectra family for an `n`-by-`n` image.
    pub fn build(
        n: usize,
        scales: Option<u32>,
        variant: ShearletVariant,
    ) -> Result<SpectraCube, Error> {
        let grid = FrequencyGrid::new(n, scales)?;
        Ok(SpectraCube::from_generator(grid, variant, &variant))
    }

    /// Samples every band of `generator` on `grid`. The `variant` tag is
    /// recorded for cache and file keying; it need not describe `generator`.
    pub fn from_generator<G: SpectrumGenerator + ?Sized>(
        grid: FrequencyGrid,
        variant: ShearletVariant,
        generator: &G,
    ) -> SpectraCube {
        let planes = Band::all(grid.scales())
            .into_iter()
            .map(|band| sample_plane(generator, &grid, band))
            .collect();
        SpectraCube {
            grid,
            variant,
            planes,
        }
    }

    /// Assembles a cube from externally computed planes in flat order;
    /// lengths must match the grid.
    pub fn from_planes(
        grid: FrequencyGrid,
        variant: ShearletVariant,
        planes: Vec<Vec<f64>>,
    ) -> Result<SpectraCube, Error> {
        let eta = grid.band_count() as usize;
        if planes.len() != eta {
            return Err(Error::PlaneCountMismatch {
                expected: eta,
                actual: planes.len(),
            });
        }
        let len = grid.n_image() * grid.n_image();
        for plane in &planes {
            if plane.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    actual: plane.len(),
                });
            }
        }
        Ok(SpectraCube {
            grid,
            variant,
            planes,
        })
    }

    /// Grid the planes were sampled on.
    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    /// Family tag the cube was built with.
    pub fn variant(&self) -> ShearletVariant {
        self.variant
    }

    /// Side length of each stored plane (the requested image size).
    pub fn n(&self) -> usize {
        self.grid.n_image()
    }

    /// Number of scale bands.
    pub fn scales(&self) -> u32 {
        self.grid.scales()
    }

    /// Planes in flat-index order; `planes()[i]` is flat index `i + 1`.
    pub fn planes(&self) -> &[Vec<f64>] {
        &self.planes
    }

    /// Plane for a 1-based flat index.
    pub fn plane(&self, flat: u32) -> Result<&[f64], Error> {
        let eta = self.grid.band_count();
        if flat < 1 || flat > eta {
            return Err(Error::FlatIndexOutOfRange { flat, eta });
        }
        Ok(&self.planes[flat as usize - 1])
    }

    /// Band described by a 1-based flat index.
    pub fn band(&self, flat: u32) -> Result<Band, Error> {
        Band::from_flat(flat, self.grid.scales())
    }

    /// Largest pointwise deviation of the squared-plane sum from 1, the
    /// computable distance from an exact Parseval frame.
    pub fn tiling_deviation(&self) -> f64 {
        let len = self.n() * self.n();
        let mut worst = 0.0f64;
        for idx in 0..len {
            let sum: f64 = self.planes.iter().map(|p| p[idx] * p[idx]).sum();
            worst = worst.max((sum - 1.0).abs());
        }
        worst
    }
}
