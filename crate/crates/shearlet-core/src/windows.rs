//! Meyer-type window functions underlying the shearlet spectra.
//!
//! Every function here is total: any finite `f64` input yields a finite value
//! in `[0, 1]`, and inputs outside the stated support return exactly `0.0`,
//! so callers never need range checks before evaluating. All 1-D windows
//! except [`meyer_aux`] are even in their argument.
//!
//! Transcendentals go through `libm` so spectra built from these windows are
//! bit-reproducible across platforms and in `no_std` builds.

use core::f64::consts::FRAC_PI_2;

/// Selects which window family a spectra cube is built from.
///
/// `Classic` combines the 1-D corona window [`psi1_hat`] with the shear
/// window [`psi2_hat`] inside each frequency cone; `Smooth` swaps the radial
/// factor for the 2-D corona window [`corona_2d`], which makes the glued
/// diagonal planes continuous across the seam. Exactly these two families
/// exist; files and caches key on the discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShearletVariant {
    Classic,
    Smooth,
}

impl ShearletVariant {
    /// Stable one-byte code used by the container formats.
    pub fn code(self) -> u8 {
        match self {
            ShearletVariant::Classic => 0,
            ShearletVariant::Smooth => 1,
        }
    }

    /// Inverse of [`code`](Self::code); unknown codes yield `None`.
    pub fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(ShearletVariant::Classic),
            1 => Some(ShearletVariant::Smooth),
            _ => None,
        }
    }
}

/// Smooth polynomial step: `0` for `x <= 0`, `1` for `x >= 1`, and the ramp
/// `35x^4 - 84x^5 + 70x^6 - 20x^7` in between.
///
/// Satisfies `meyer_aux(x) + meyer_aux(1 - x) = 1`, which is what makes every
/// window pair derived from it tile. The ramp is evaluated in Horner form and
/// clamped to `[0, 1]` so rounding can never push a value outside the unit
/// interval (the trig wrappers rely on that).
pub fn meyer_aux(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if x >= 1.0 {
        1.0
    } else {
        let p = x * x * x * x * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x)));
        p.clamp(0.0, 1.0)
    }
}

/// Even bump window supported on `1 <= |w| <= 4`.
///
/// Rises as `sin(pi/2 * meyer_aux(|w| - 1))` on `[1, 2]`, reaching `1` at
/// `|w| = 2`, then falls as `cos(pi/2 * meyer_aux(|w|/2 - 1))` on `(2, 4)`.
pub fn meyer_bump(w: f64) -> f64 {
    let a = w.abs();
    if (1.0..=2.0).contains(&a) {
        libm::sin(FRAC_PI_2 * meyer_aux(a - 1.0))
    } else if (2.0..4.0).contains(&a) {
        libm::cos(FRAC_PI_2 * meyer_aux(a / 2.0 - 1.0))
    } else {
        0.0
    }
}

/// 1-D corona window with support `[-4, -1/2] ∪ [1/2, 4]`.
///
/// Piecewise: `sin(pi/2 * meyer_aux(2|w| - 1))` on `(1/2, 1)`, exactly `1`
/// on `[1, 2]`, `cos(pi/2 * meyer_aux(|w|/2 - 1))` on `(2, 4)`. This equals
/// `sqrt(meyer_bump(2w)^2 + meyer_bump(w)^2)` up to rounding; the piecewise
/// form keeps the plateau exact, which the dyadic tiling sums depend on.
pub fn psi1_hat(w: f64) -> f64 {
    let a = w.abs();
    if (0.5..1.0).contains(&a) {
        libm::sin(FRAC_PI_2 * meyer_aux(2.0 * a - 1.0))
    } else if (1.0..=2.0).contains(&a) {
        1.0
    } else if (2.0..4.0).contains(&a) {
        libm::cos(FRAC_PI_2 * meyer_aux(a / 2.0 - 1.0))
    } else {
        0.0
    }
}

/// 1-D shear window `sqrt(meyer_aux(1 - |w|))`, supported on `[-1, 1]` with
/// peak value `1` at the origin.
///
/// Its shifted squares form a partition of unity: for every `j >= 0` the sum
/// of `psi2_hat(k + 2^j x)^2` over `k = -2^j ..= 2^j` is `1` on `|x| <= 1`.
pub fn psi2_hat(w: f64) -> f64 {
    libm::sqrt(meyer_aux(1.0 - w.abs()))
}

/// 1-D low-pass window: `1` on `|w| <= 1/2`, `cos(pi/2 * meyer_aux(2|w| - 1))`
/// on `(1/2, 1)`, zero on `|w| >= 1`.
///
/// Complements [`psi1_hat`] on the handover band: `psi1_hat(w)^2 +
/// scaling_1d(w)^2 = 1` for `1/2 <= |w| <= 1`.
pub fn scaling_1d(w: f64) -> f64 {
    let a = w.abs();
    if a <= 0.5 {
        1.0
    } else if a < 1.0 {
        libm::cos(FRAC_PI_2 * meyer_aux(2.0 * a - 1.0))
    } else {
        0.0
    }
}

/// Separable 2-D low-pass window `scaling_1d(w1) * scaling_1d(w2)`, the
/// scaling spectrum of the smooth variant.
pub fn scaling_2d(w1: f64, w2: f64) -> f64 {
    scaling_1d(w1) * scaling_1d(w2)
}

/// 2-D corona window `sqrt(scaling_2d(w1/4, w2/4)^2 - scaling_2d(w1, w2)^2)`,
/// supported on `[-4, 4]^2` minus the open square `(-1/2, 1/2)^2` and
/// symmetric under swapping or negating its arguments.
///
/// Dyadic dilates telescope: `scaling_2d(w)^2 + sum_j corona_2d(4^-j w)^2`
/// collapses to `scaling_2d(4^-j0 w)^2`, which is `1` wherever both
/// `|w|/4^j0 <= 1/2`. The difference under the root is clamped at zero so
/// rounding on the shared plateaus cannot produce NaN.
pub fn corona_2d(w1: f64, w2: f64) -> f64 {
    let outer = scaling_2d(w1 / 4.0, w2 / 4.0);
    let inner = scaling_2d(w1, w2);
    libm::sqrt((outer * outer - inner * inner).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_1_SQRT_2;

    /// Tolerance for identities that chain a handful of rounded operations.
    const TIGHT: f64 = 1e-14;
    /// Tolerance for sums over many window evaluations.
    const TILE: f64 = 1e-13;

    fn samples(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
        (0..=count).map(move |i| lo + (hi - lo) * i as f64 / count as f64)
    }

    #[test]
    fn aux_ramp_hits_dyadic_rationals_exactly() {
        // 35x^4 - 84x^5 + 70x^6 - 20x^7 at x = 1/4 is 289/4096; every Horner
        // step stays on dyadic rationals, so equality is exact.
        assert_eq!(meyer_aux(0.25), 0.070556640625);
        assert_eq!(meyer_aux(0.5), 0.5);
        assert_eq!(meyer_aux(0.75), 1.0 - 0.070556640625);
    }

    #[test]
    fn aux_saturates_outside_unit_interval() {
        assert_eq!(meyer_aux(-3.0), 0.0);
        assert_eq!(meyer_aux(0.0), 0.0);
        assert_eq!(meyer_aux(1.0), 1.0);
        assert_eq!(meyer_aux(17.5), 1.0);
    }

    #[test]
    fn aux_is_monotone_and_complementary() {
        let mut prev = 0.0;
        for x in samples(0.0, 1.0, 10_000) {
            let v = meyer_aux(x);
            assert!(v >= prev, "not monotone at x={x}");
            assert!((0.0..=1.0).contains(&v));
            assert!((v + meyer_aux(1.0 - x) - 1.0).abs() <= TIGHT);
            prev = v;
        }
    }

    #[test]
    fn bump_boundary_and_peak_values() {
        assert_eq!(meyer_bump(0.0), 0.0);
        assert_eq!(meyer_bump(1.0), 0.0);
        assert_eq!(meyer_bump(2.0), 1.0);
        assert_eq!(meyer_bump(-2.0), 1.0);
        assert_eq!(meyer_bump(4.0), 0.0);
        assert_eq!(meyer_bump(4.5), 0.0);
        assert!((meyer_bump(1.5) - FRAC_1_SQRT_2).abs() <= TIGHT);
    }

    #[test]
    fn psi1_matches_bump_composition() {
        // Dual route: the piecewise form must agree with
        // sqrt(bump(2w)^2 + bump(w)^2) everywhere.
        for w in samples(-5.0, 5.0, 20_000) {
            let composed = libm::sqrt(meyer_bump(2.0 * w).powi(2) + meyer_bump(w).powi(2));
            assert!((psi1_hat(w) - composed).abs() <= TIGHT, "mismatch at w={w}");
        }
    }

    #[test]
    fn psi1_plateau_and_support() {
        assert_eq!(psi1_hat(1.0), 1.0);
        assert_eq!(psi1_hat(1.5), 1.0);
        assert_eq!(psi1_hat(2.0), 1.0);
        assert_eq!(psi1_hat(0.5), 0.0);
        assert_eq!(psi1_hat(0.3), 0.0);
        assert_eq!(psi1_hat(4.0), 0.0);
        assert_eq!(psi1_hat(-7.0), 0.0);
        assert!((psi1_hat(0.75) - FRAC_1_SQRT_2).abs() <= TIGHT);
        assert!((psi1_hat(-0.75) - FRAC_1_SQRT_2).abs() <= TIGHT);
    }

    #[test]
    fn psi2_values_and_support() {
        assert_eq!(psi2_hat(0.0), 1.0);
        assert_eq!(psi2_hat(1.0), 0.0);
        assert_eq!(psi2_hat(-1.0), 0.0);
        assert_eq!(psi2_hat(1.25), 0.0);
        // meyer_aux(0.5) = 1/2 exactly, and IEEE sqrt rounds correctly.
        assert_eq!(psi2_hat(0.5), FRAC_1_SQRT_2);
        assert_eq!(psi2_hat(-0.5), FRAC_1_SQRT_2);
    }

    #[test]
    fn psi2_shifted_squares_tile() {
        for j in 0..=4u32 {
            let scale = (1u64 << j) as f64;
            let k_max = 1i64 << j;
            for x in samples(-1.0, 1.0, 4_000) {
                let sum: f64 = (-k_max..=k_max)
                    .map(|k| psi2_hat(k as f64 + scale * x).powi(2))
                    .sum();
                assert!((sum - 1.0).abs() <= TILE, "j={j} x={x} sum={sum}");
            }
        }
    }

    #[test]
    fn scaling_values_and_support() {
        assert_eq!(scaling_1d(0.0), 1.0);
        assert_eq!(scaling_1d(0.5), 1.0);
        assert_eq!(scaling_1d(1.0), 0.0);
        assert_eq!(scaling_1d(3.0), 0.0);
        assert!((scaling_1d(0.75) - FRAC_1_SQRT_2).abs() <= TIGHT);
    }

    #[test]
    fn psi1_scaling_overlap_is_unity() {
        for w in samples(0.5, 1.0, 10_000) {
            let sum = psi1_hat(w).powi(2) + scaling_1d(w).powi(2);
            assert!((sum - 1.0).abs() <= TILE, "w={w} sum={sum}");
        }
    }

    #[test]
    fn dyadic_psi1_sum_is_unity_on_plateau() {
        // sum_{j < j0} psi1(4^-j w)^2 = 1 for 1 <= |w| <= 2^(2(j0-1)+1).
        for j0 in 1..=5u32 {
            let hi = (1u64 << (2 * (j0 - 1) + 1)) as f64;
            for w in samples(1.0, hi, 10_000) {
                let sum: f64 = (0..j0)
                    .map(|j| psi1_hat(w / (1u64 << (2 * j)) as f64).powi(2))
                    .sum();
                assert!((sum - 1.0).abs() <= TILE, "j0={j0} w={w} sum={sum}");
            }
        }
    }

    #[test]
    fn even_windows_are_bitwise_even() {
        // All even windows evaluate through |w|, so symmetry is exact.
        for w in samples(0.0, 6.0, 5_000) {
            assert_eq!(meyer_bump(w), meyer_bump(-w));
            assert_eq!(psi1_hat(w), psi1_hat(-w));
            assert_eq!(psi2_hat(w), psi2_hat(-w));
            assert_eq!(scaling_1d(w), scaling_1d(-w));
        }
    }

    #[test]
    fn corona_symmetry_support_and_plateaus() {
        assert_eq!(corona_2d(0.3, 0.2), 0.0); // inside the inner plateau
        assert_eq!(corona_2d(0.5, 0.5), 0.0);
        assert_eq!(corona_2d(1.0, 0.5), 1.0); // inner factor vanished, outer flat
        assert_eq!(corona_2d(17.0, 0.0), 0.0); // outside the outer square
        for w1 in samples(-5.0, 5.0, 200) {
            for w2 in samples(-5.0, 5.0, 200) {
                let v = corona_2d(w1, w2);
                assert!(v.is_finite() && (0.0..=1.0).contains(&v));
                assert_eq!(v, corona_2d(w2, w1));
                assert_eq!(v, corona_2d(-w1, -w2));
            }
        }
    }

    #[test]
    fn corona_telescopes_against_scaling() {
        // scaling^2 + sum_j corona(4^-j .)^2 telescopes to scaling(4^-j0 .)^2.
        for j0 in 1..=3u32 {
            let outer = (1u64 << (2 * j0)) as f64;
            for w1 in samples(-8.0, 8.0, 160) {
                for w2 in samples(-8.0, 8.0, 160) {
                    let mut sum = scaling_2d(w1, w2).powi(2);
                    for j in 0..j0 {
                        let d = (1u64 << (2 * j)) as f64;
                        sum += corona_2d(w1 / d, w2 / d).powi(2);
                    }
                    let target = scaling_2d(w1 / outer, w2 / outer).powi(2);
                    assert!(
                        (sum - target).abs() <= TILE,
                        "j0={j0} w=({w1},{w2}) sum={sum} target={target}"
                    );
                }
            }
        }
    }

    #[test]
    fn variant_codes_round_trip() {
        for v in [ShearletVariant::Classic, ShearletVariant::Smooth] {
            assert_eq!(ShearletVariant::from_code(v.code()), Some(v));
        }
        assert_eq!(ShearletVariant::from_code(2), None);
        assert_eq!(ShearletVariant::from_code(255), None);
    }
}
