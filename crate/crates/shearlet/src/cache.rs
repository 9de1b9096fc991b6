//! Process-wide spectra cache keyed by (size, scale count, variant).
//!
//! Spectra assembly costs far more than a transform pass, so repeated
//! transforms of same-shaped images must not rebuild the planes. The cache
//! is immutable-value based: entries are `Arc`s handed out to any thread.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use shearlet_core::{FrequencyGrid, ShearletVariant, SpectraCube};

use crate::error::Result;
use crate::transform::SpectraKey;

static CACHE: OnceLock<Mutex<HashMap<SpectraKey, Arc<SpectraCube>>>> = OnceLock::new();

fn cache() -> &'static Mutex<HashMap<SpectraKey, Arc<SpectraCube>>> {
    CACHE.get_or_init(Mutex::default)
}

/// Returns the cached spectra for the key, building them on first use.
pub fn spectra_for(
    n: usize,
    scales: Option<u32>,
    variant: ShearletVariant,
) -> Result<Arc<SpectraCube>> {
    // The grid resolves the default scale count and validates the size.
    let grid = FrequencyGrid::new(n, scales)?;
    let key = SpectraKey {
        n,
        scales: grid.scales(),
        variant,
    };
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    // Build outside the lock so distinct keys do not serialize each other;
    // a racing duplicate build is benign and the first insert wins.
    let built = Arc::new(SpectraCube::from_generator(grid, variant, &variant));
    let mut map = cache().lock().unwrap();
    Ok(map.entry(key).or_insert(built).clone())
}

/// Registers an externally built cube (for example one loaded from a file)
/// and returns the shared handle. Replaces any entry under the same key:
/// explicitly loaded planes win over previously built ones.
pub fn insert(cube: SpectraCube) -> Arc<SpectraCube> {
    let key = SpectraKey::of(&cube);
    let arc = Arc::new(cube);
    cache().lock().unwrap().insert(key, arc.clone());
    arc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_requests_share_one_cube() {
        let a = spectra_for(21, None, ShearletVariant::Classic).unwrap();
        let b = spectra_for(21, None, ShearletVariant::Classic).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn distinct_keys_get_distinct_cubes() {
        let a = spectra_for(21, None, ShearletVariant::Classic).unwrap();
        let b = spectra_for(21, None, ShearletVariant::Smooth).unwrap();
        let c = spectra_for(21, Some(1), ShearletVariant::Classic).unwrap();
        assert!(!Arc::ptr_eq(&a, &b));
        assert!(!Arc::ptr_eq(&a, &c));
        assert_eq!(c.scales(), 1);
    }

    #[test]
    fn inserted_cubes_are_served_back() {
        // A key nothing else in the test process uses.
        let cube = SpectraCube::build(23, Some(1), ShearletVariant::Smooth).unwrap();
        let stored = insert(cube);
        let fetched = spectra_for(23, Some(1), ShearletVariant::Smooth).unwrap();
        assert!(Arc::ptr_eq(&stored, &fetched));
    }

    #[test]
    fn invalid_sizes_propagate_the_grid_error() {
        assert!(spectra_for(3, None, ShearletVariant::Classic).is_err());
    }
}
