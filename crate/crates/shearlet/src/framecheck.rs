//! Numerical frame verification and timing.
//!
//! The three checks certify the construction end to end: the squared spectra
//! must tile the frequency grid, analysis followed by synthesis must return
//! the input, and the coefficient energies must add up to the image energy.
//! All randomness is seeded, so every report is reproducible bit for bit.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shearlet_core::{Image, ShearletVariant, SpectraCube};

use crate::error::Result;
use crate::transform::{compensated_sum, variant_from_name, variant_name, ShearletTransform};

/// Largest tolerated deviation of the squared-spectra sum from one.
pub const TILING_TOLERANCE: f64 = 1e-13;
/// Largest tolerated pixel error after a forward/inverse roundtrip.
pub const ROUNDTRIP_TOLERANCE: f64 = 1e-12;
/// Largest tolerated relative energy mismatch between image and coefficients.
pub const PARSEVAL_TOLERANCE: f64 = 1e-12;

/// Seeded uniform test image: pixels are consecutive `f64` draws in `[0, 1)`
/// from a ChaCha8 stream keyed by `seed`. The generator is pinned so that
/// reports stay reproducible across machines and versions.
pub fn random_image(n: usize, seed: u64) -> Image {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..n * n).map(|_| rng.random::<f64>()).collect();
    Image::new(n, data).expect("uniform draws are finite")
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Max over grid points of |sum of squared plane values − 1| for raw planes;
/// degenerate stacks (any count, any size) are allowed.
pub fn tiling_deviation_of(planes: &[Vec<f64>]) -> f64 {
    let len = planes.first().map_or(0, |p| p.len());
    let mut worst: f64 = if len == 0 { 1.0 } else { 0.0 };
    for i in 0..len {
        let total = compensated_sum(planes.iter().map(|p| p[i] * p[i]));
        worst = worst.max((total - 1.0).abs());
    }
    worst
}

/// Max over grid points of |sum of squared plane values − 1|.
pub fn check_tiling(spectra: &SpectraCube) -> f64 {
    tiling_deviation_of(spectra.planes())
}

/// Worst pixel error of `inverse(forward(f))` over `trials` seeded random
/// images. Panics if `trials` is zero.
pub fn check_roundtrip(n: usize, trials: u32, variant: ShearletVariant, seed: u64) -> Result<f64> {
    assert!(trials >= 1, "at least one trial is required");
    let transform = ShearletTransform::build(n, None, variant)?;
    let mut worst: f64 = 0.0;
    for t in 0..trials {
        let image = random_image(n, seed.wrapping_add(t as u64));
        let back = transform.inverse(&transform.forward(&image)?)?;
        worst = worst.max(max_abs_diff(image.data(), back.data()));
    }
    Ok(worst)
}

/// One verification run: deviations plus wall-clock timings.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameReport {
    pub n: usize,
    pub scales: u32,
    pub variant: ShearletVariant,
    pub max_tiling_deviation: f64,
    pub roundtrip_max_error: f64,
    pub parseval_rel_error: f64,
    /// First-use cost: spectra assembly plus one forward pass.
    pub cold_seconds: f64,
    /// Average forward pass against already built spectra.
    pub forward_seconds: f64,
    /// Average inverse pass.
    pub inverse_seconds: f64,
}

impl FrameReport {
    /// True when every deviation is within its published tolerance.
    pub fn passes(&self) -> bool {
        self.max_tiling_deviation <= TILING_TOLERANCE
            && self.roundtrip_max_error <= ROUNDTRIP_TOLERANCE
            && self.parseval_rel_error <= PARSEVAL_TOLERANCE
    }

    pub fn tsv_header() -> &'static str {
        "n\tscales\tvariant\ttiling_dev\troundtrip_err\tparseval_rel\tcold_s\twarm_s\tinverse_s"
    }

    /// Machine-readable row. Floats use the shortest decimal form that
    /// parses back to the same bits, so the encoding is lossless.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.scales,
            variant_name(self.variant),
            self.max_tiling_deviation,
            self.roundtrip_max_error,
            self.parseval_rel_error,
            self.cold_seconds,
            self.forward_seconds,
            self.inverse_seconds,
        )
    }

    /// Parses a row produced by [`to_tsv`](Self::to_tsv).
    pub fn from_tsv(line: &str) -> Option<FrameReport> {
        let mut fields = line.trim_end_matches(['\r', '\n']).split('\t');
        let report = FrameReport {
            n: fields.next()?.parse().ok()?,
            scales: fields.next()?.parse().ok()?,
            variant: variant_from_name(fields.next()?)?,
            max_tiling_deviation: fields.next()?.parse().ok()?,
            roundtrip_max_error: fields.next()?.parse().ok()?,
            parseval_rel_error: fields.next()?.parse().ok()?,
            cold_seconds: fields.next()?.parse().ok()?,
            forward_seconds: fields.next()?.parse().ok()?,
            inverse_seconds: fields.next()?.parse().ok()?,
        };
        fields.next().is_none().then_some(report)
    }
}

/// Runs all three checks for one configuration and times the passes.
/// Panics if `trials` is zero.
pub fn verify(
    n: usize,
    scales: Option<u32>,
    variant: ShearletVariant,
    trials: u32,
    seed: u64,
) -> Result<FrameReport> {
    assert!(trials >= 1, "at least one trial is required");
    let cold_start = Instant::now();
    let cube = Arc::new(SpectraCube::build(n, scales, variant)?);
    let transform = ShearletTransform::new(cube.clone());
    let _ = transform.forward(&random_image(n, seed))?;
    let cold_seconds = cold_start.elapsed().as_secs_f64();

    let max_tiling_deviation = check_tiling(&cube);
    let mut roundtrip_max_error: f64 = 0.0;
    let mut parseval_rel_error: f64 = 0.0;
    let mut forward_total = 0.0;
    let mut inverse_total = 0.0;
    for t in 0..trials {
        let image = random_image(n, seed.wrapping_add(t as u64));
        let t_fwd = Instant::now();
        let coeffs = transform.forward(&image)?;
        forward_total += t_fwd.elapsed().as_secs_f64();
        let t_inv = Instant::now();
        let back = transform.inverse(&coeffs)?;
        inverse_total += t_inv.elapsed().as_secs_f64();

        roundtrip_max_error = roundtrip_max_error.max(max_abs_diff(image.data(), back.data()));
        let norm = compensated_sum(image.data().iter().map(|v| v * v));
        let energy = coeffs.total_energy();
        let rel = if norm == 0.0 {
            energy.abs()
        } else {
            (energy - norm).abs() / norm
        };
        parseval_rel_error = parseval_rel_error.max(rel);
    }
    Ok(FrameReport {
        n,
        scales: cube.scales(),
        variant,
        max_tiling_deviation,
        roundtrip_max_error,
        parseval_rel_error,
        cold_seconds,
        forward_seconds: forward_total / trials as f64,
        inverse_seconds: inverse_total / trials as f64,
    })
}

const BENCH_SEED: u64 = 0x5eed;

/// Times cold (spectra assembly plus forward) and warm passes per size,
/// averaging over `repeats` runs of each, and fills in the deviations from
/// the warm runs. Panics if `repeats` is zero.
pub fn bench(sizes: &[usize], repeats: u32, parallel: bool) -> Result<Vec<FrameReport>> {
    assert!(repeats >= 1, "at least one repeat is required");
    sizes
        .iter()
        .map(|&n| bench_one(n, repeats, parallel))
        .collect()
}

fn bench_one(n: usize, repeats: u32, parallel: bool) -> Result<FrameReport> {
    let variant = ShearletVariant::Classic;
    let image = random_image(n, BENCH_SEED);

    // Cold runs rebuild the spectra from scratch every time, bypassing the
    // process cache on purpose.
    let mut cold_total = 0.0;
    let mut kept = None;
    for _ in 0..repeats {
        let start = Instant::now();
        let cube = SpectraCube::build(n, None, variant)?;
        let transform = ShearletTransform::new(Arc::new(cube)).with_parallel(parallel);
        let _ = transform.forward(&image)?;
        cold_total += start.elapsed().as_secs_f64();
        kept = Some(transform);
    }
    let transform = kept.expect("repeats >= 1");

    let mut forward_total = 0.0;
    let mut inverse_total = 0.0;
    let mut roundtrip_max_error: f64 = 0.0;
    let mut parseval_rel_error: f64 = 0.0;
    for _ in 0..repeats {
        let t_fwd = Instant::now();
        let coeffs = transform.forward(&image)?;
        forward_total += t_fwd.elapsed().as_secs_f64();
        let t_inv = Instant::now();
        let back = transform.inverse(&coeffs)?;
        inverse_total += t_inv.elapsed().as_secs_f64();

        roundtrip_max_error = roundtrip_max_error.max(max_abs_diff(image.data(), back.data()));
        let norm = compensated_sum(image.data().iter().map(|v| v * v));
        parseval_rel_error = parseval_rel_error.max((coeffs.total_energy() - norm).abs() / norm);
    }
    Ok(FrameReport {
        n,
        scales: transform.spectra().scales(),
        variant,
        max_tiling_deviation: check_tiling(transform.spectra()),
        roundtrip_max_error,
        parseval_rel_error,
        cold_seconds: cold_total / repeats as f64,
        forward_seconds: forward_total / repeats as f64,
        inverse_seconds: inverse_total / repeats as f64,
    })
}
