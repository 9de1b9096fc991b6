//! Centered two-dimensional FFTs on square grids.
//!
//! Spectra are stored with the zero frequency in the middle of the plane,
//! so the transform pipeline is: forward DFT, rotate to centered order,
//! multiply, rotate back, inverse DFT. The index rotations are the only
//! parity-sensitive step and are fixed here once for both parities.

use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

/// Rotates a square plane so the zero-frequency bin moves from index `0`
/// to index `n/2` on each axis: `out[i] = in[(i + n - n/2) % n]`.
pub fn fftshift2(input: &[Complex64], n: usize) -> Vec<Complex64> {
    assert_eq!(input.len(), n * n, "plane must be n*n");
    let src = |i: usize| (i + n - n / 2) % n;
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        let row = src(r) * n;
        for c in 0..n {
            out.push(input[row + src(c)]);
        }
    }
    out
}

/// Inverse of [`fftshift2`] for both parities: `out[i] = in[(i + n/2) % n]`.
pub fn ifftshift2(input: &[Complex64], n: usize) -> Vec<Complex64> {
    assert_eq!(input.len(), n * n, "plane must be n*n");
    let src = |i: usize| (i + n / 2) % n;
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        let row = src(r) * n;
        for c in 0..n {
            out.push(input[row + src(c)]);
        }
    }
    out
}

fn transpose_square(data: &mut [Complex64], n: usize) {
    for r in 0..n {
        for c in (r + 1)..n {
            data.swap(r * n + c, c * n + r);
        }
    }
}

/// Planned forward/inverse 2-D FFT pair for one grid size. The plans are
/// shareable across threads; every call allocates its own scratch, so one
/// instance can serve parallel per-plane work.
pub struct Fft2 {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl Fft2 {
    pub fn new(n: usize) -> Fft2 {
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(n);
        let inverse = planner.plan_fft_inverse(n);
        Fft2 {
            n,
            forward,
            inverse,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Runs the plan over all rows, then all columns, in place.
    fn pass(&self, data: &mut [Complex64], plan: &Arc<dyn Fft<f64>>) {
        let mut scratch = vec![Complex64::new(0.0, 0.0); plan.get_inplace_scratch_len()];
        plan.process_with_scratch(data, &mut scratch);
        transpose_square(data, self.n);
        plan.process_with_scratch(data, &mut scratch);
        transpose_square(data, self.n);
    }

    /// Unnormalized forward 2-D DFT, output rotated to centered order.
    pub fn forward_centered(&self, spatial: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(spatial.len(), self.n * self.n, "plane must be n*n");
        let mut data = spatial.to_vec();
        self.pass(&mut data, &self.forward);
        fftshift2(&data, self.n)
    }

    /// Inverse of [`forward_centered`]: rotates back to DFT order, runs the
    /// unnormalized inverse DFT, and applies the `1/n^2` factor.
    pub fn inverse_centered(&self, centered: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(centered.len(), self.n * self.n, "plane must be n*n");
        let mut data = ifftshift2(centered, self.n);
        self.pass(&mut data, &self.inverse);
        let scale = 1.0 / (self.n * self.n) as f64;
        for z in &mut data {
            *z *= scale;
        }
        data
    }
}
