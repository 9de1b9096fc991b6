//! Centered square frequency grid on which all spectra are sampled.
//!
//! For an `n`-pixel side the grid covers `[-X, X]^2` with `X = 2^(2*j0 - 1)`
//! and `j0 = scales_for_size(n)` dyadic scale bands. Sampling always happens
//! on an odd number of points per axis so the origin and the cone seams fall
//! exactly on samples; an even request is served by the next odd grid with
//! the last row and column cropped off downstream.

use alloc::vec::Vec;

use crate::error::Error;

/// Smallest supported image side.
pub const MIN_SIZE: usize = 4;

/// Default number of dyadic scale bands for an `n`-pixel side:
/// `floor(log2(n) / 2)`.
///
/// `4..=15 -> 1`, `16..=63 -> 2`, `64..=255 -> 3`, `256..=1023 -> 4`,
/// `1024 -> 5`.
pub fn scales_for_size(n: usize) -> u32 {
    debug_assert!(n >= MIN_SIZE);
    n.ilog2() / 2
}

/// Number of spectra planes for `j0` scales: `2^(j0+2) - 3`.
///
/// One scaling plane plus `2^(j+2)` oriented planes per scale band `j`.
pub fn band_count(j0: u32) -> u32 {
    (1u32 << (j0 + 2)) - 3
}

/// Odd sampling grid for one frequency axis, shared by both axes.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    n_image: usize,
    n_internal: usize,
    scales: u32,
    x_max: f64,
    delta: f64,
    axis: Vec<f64>,
    oversized_scales: bool,
}

impl FrequencyGrid {
    /// Builds the grid for an `n`-by-`n` image, using `scales` bands or the
    /// [`scales_for_size`] default when `None`.
    ///
    /// A `scales` above the default is accepted but flagged via
    /// [`oversized_scales`](Self::oversized_scales): the extent grows with the
    /// scale count, so the spacing leaves the (1/4, 1] regime and the grid
    /// under-resolves the spectra.
    pub fn new(n: usize, scales: Option<u32>) -> Result<Self, Error> {
        if n < MIN_SIZE {
            return Err(Error::SizeTooSmall { n });
        }
        let default_scales = scales_for_size(n);
        let scales = scales.unwrap_or(default_scales);
        if scales == 0 {
            return Err(Error::ZeroScales);
        }
        let n_internal = if n.is_multiple_of(2) { n + 1 } else { n };
        let half = (n_internal - 1) / 2;
        let x_max = (1u64 << (2 * scales - 1)) as f64;
        let delta = (1u64 << (2 * scales)) as f64 / (n_internal - 1) as f64;
        // axis[i] = x_max * (i - half) / half gives exact endpoints, an
        // exact zero at the center, and bitwise odd symmetry.
        let axis = (0..n_internal)
            .map(|i| x_max * (i as f64 - half as f64) / half as f64)
            .collect();
        Ok(FrequencyGrid {
            n_image: n,
            n_internal,
            scales,
            x_max,
            delta,
            axis,
            oversized_scales: scales > default_scales,
        })
    }

    /// Requested image side (possibly even).
    pub fn n_image(&self) -> usize {
        self.n_image
    }

    /// Odd sampling side; equals `n_image` when that is odd, else `n_image + 1`.
    pub fn n_internal(&self) -> usize {
        self.n_internal
    }

    /// Number of dyadic scale bands `j0`.
    pub fn scales(&self) -> u32 {
        self.scales
    }

    /// Number of spectra planes `2^(j0+2) - 3`.
    pub fn band_count(&self) -> u32 {
        band_count(self.scales)
    }

    /// Largest sampled frequency magnitude `2^(2*j0 - 1)`.
    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    /// Grid step `2^(2*j0) / (n_internal - 1)`; in `(1/4, 1]` for default
    /// scale counts.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Index of the zero-frequency sample, `(n_internal - 1) / 2`.
    pub fn center(&self) -> usize {
        (self.n_internal - 1) / 2
    }

    /// Centered axis samples, `axis[center] = 0`, endpoints exactly `±x_max`.
    pub fn axis(&self) -> &[f64] {
        &self.axis
    }

    /// True when the caller requested more scales than the default. The
    /// pointwise tiling still holds (the extent tracks the scale count), but
    /// `delta` exceeds 1, so the sampled spectra are under-resolved.
    pub fn oversized_scales(&self) -> bool {
        self.oversized_scales
    }
}
