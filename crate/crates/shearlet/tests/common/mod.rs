//! Shared test oracle: the transform computed straight from the definition
//! with O(n^4) centered DFT sums, no FFT library involved.

use shearlet::{Complex64, Image, SpectraCube};

/// Centered DFT from the definition; index `i` on each axis carries the
/// integer frequency `i - n/2`.
pub fn naive_forward_centered(spatial: &[Complex64], n: usize) -> Vec<Complex64> {
    dft_centered(spatial, n, -1.0, 1.0)
}

/// Inverse of [`naive_forward_centered`], including the `1/n^2` factor.
pub fn naive_inverse_centered(centered: &[Complex64], n: usize) -> Vec<Complex64> {
    dft_centered(centered, n, 1.0, 1.0 / (n * n) as f64)
}

fn dft_centered(input: &[Complex64], n: usize, sign: f64, scale: f64) -> Vec<Complex64> {
    assert_eq!(input.len(), n * n);
    let freq = |i: usize| i as f64 - (n / 2) as f64;
    // The inverse sums over centered frequencies; the forward sums over
    // pixels. Both index sets are 0..n per axis, with the centered offset
    // applied to the frequency side only, so one loop body serves both
    // directions: the forward pairs pixel m with frequency w, the inverse
    // pairs frequency w with pixel m, and the exponent is symmetric in the
    // product w*m.
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let (a2, a1) = if sign < 0.0 {
                (freq(r), freq(c))
            } else {
                (r as f64, c as f64)
            };
            let mut acc = Complex64::new(0.0, 0.0);
            for m2 in 0..n {
                for m1 in 0..n {
                    let (b2, b1) = if sign < 0.0 {
                        (m2 as f64, m1 as f64)
                    } else {
                        (freq(m2), freq(m1))
                    };
                    let phase = sign * 2.0 * std::f64::consts::PI * (a1 * b1 + a2 * b2) / n as f64;
                    acc += input[m2 * n + m1] * Complex64::new(phase.cos(), phase.sin());
                }
            }
            out.push(acc * scale);
        }
    }
    out
}

/// Whole forward transform through the naive path: one centered DFT, one
/// pointwise multiply per plane, one naive inverse each.
pub fn naive_transform(image: &Image, spectra: &SpectraCube) -> Vec<Vec<Complex64>> {
    let n = image.n();
    let spatial: Vec<Complex64> = image
        .data()
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    let hat = naive_forward_centered(&spatial, n);
    spectra
        .planes()
        .iter()
        .map(|plane| {
            let product: Vec<Complex64> = hat.iter().zip(plane).map(|(f, &p)| f * p).collect();
            naive_inverse_centered(&product, n)
        })
        .collect()
}

/// Worst elementwise modulus difference across two plane stacks.
pub fn max_plane_diff(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(pa, pb)| pa.iter().zip(pb).map(|(x, y)| (x - y).norm()))
        .fold(0.0, f64::max)
}
