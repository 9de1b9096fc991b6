//! Flat ordering of the decomposition planes.
//!
//! Planes are numbered 1-based. Flat index 1 is the scaling plane; each scale
//! band `j = 0, 1, ...` then contributes `2^(j+2)` oriented planes starting at
//! flat index `2^(j+2) - 2`. Within a band the walk starts in the horizontal
//! cone at shear 0, steps down to the most negative shear, crosses the seam
//! (`k = -2^j`), sweeps the vertical cone from negative to positive shear,
//! crosses the opposite seam (`k = +2^j`), and returns through the horizontal
//! cone with decreasing positive shears.

use alloc::vec::Vec;

use crate::error::Error;
use crate::grid::band_count;

/// One plane of the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    /// Low-pass plane, always flat index 1.
    Scaling,
    /// Shearlet supported in the horizontal cone `|w2| < |w1|`; `|k| < 2^j`.
    Horizontal { j: u32, k: i32 },
    /// Shearlet supported in the vertical cone `|w1| < |w2|`; `|k| < 2^j`.
    Vertical { j: u32, k: i32 },
    /// Seam shearlet glued across both cones; `|k| = 2^j`.
    Diagonal { j: u32, k: i32 },
}

impl Band {
    /// Decodes a 1-based flat index for a decomposition with `j0` scales.
    pub fn from_flat(flat: u32, j0: u32) -> Result<Band, Error> {
        let eta = band_count(j0);
        if flat < 1 || flat > eta {
            return Err(Error::FlatIndexOutOfRange { flat, eta });
        }
        if flat == 1 {
            return Ok(Band::Scaling);
        }
        // Band j occupies flats [2^(j+2) - 2, 2^(j+3) - 3], so flat + 2
        // lies in [2^(j+2), 2^(j+3) - 1] and ilog2 recovers j.
        let j = (flat + 2).ilog2() - 2;
        let s = 1u32 << j;
        let pos = flat - ((1u32 << (j + 2)) - 2);
        let band = if pos == 0 {
            Band::Horizontal { j, k: 0 }
        } else if pos < s {
            Band::Horizontal {
                j,
                k: -(pos as i32),
            }
        } else if pos == s {
            Band::Diagonal { j, k: -(s as i32) }
        } else if pos < 3 * s {
            Band::Vertical {
                j,
                k: pos as i32 - 2 * s as i32,
            }
        } else if pos == 3 * s {
            Band::Diagonal { j, k: s as i32 }
        } else {
            Band::Horizontal {
                j,
                k: 4 * s as i32 - pos as i32,
            }
        };
        Ok(band)
    }

    /// Encodes this band as its 1-based flat index; inverse of
    /// [`from_flat`](Self::from_flat).
    pub fn flat_index(self, j0: u32) -> Result<u32, Error> {
        let (j, k, base, s) = match self {
            Band::Scaling => return Ok(1),
            Band::Horizontal { j, k } | Band::Vertical { j, k } | Band::Diagonal { j, k } => {
                if j >= j0 {
                    return Err(Error::InvalidBand);
                }
                let s = 1u32 << j;
                (j, k, (1u32 << (j + 2)) - 2, s)
            }
        };
        let _ = j;
        let a = k.unsigned_abs();
        match self {
            Band::Scaling => unreachable!(),
            Band::Horizontal { .. } => {
                if a >= s {
                    return Err(Error::InvalidBand);
                }
                Ok(if k <= 0 { base + a } else { base + 4 * s - a })
            }
            Band::Vertical { .. } => {
                if a >= s {
                    return Err(Error::InvalidBand);
                }
                Ok((base + 2 * s).wrapping_add_signed(k))
            }
            Band::Diagonal { .. } => {
                if a != s {
                    return Err(Error::InvalidBand);
                }
                Ok(if k < 0 { base + s } else { base + 3 * s })
            }
        }
    }

    /// All bands of a `j0`-scale decomposition in flat order.
    pub fn all(j0: u32) -> Vec<Band> {
        (1..=band_count(j0))
            .map(|flat| Band::from_flat(flat, j0).expect("flat in range"))
            .collect()
    }

    /// Scale index, `None` for the scaling plane.
    pub fn j(self) -> Option<u32> {
        match self {
            Band::Scaling => None,
            Band::Horizontal { j, .. } | Band::Vertical { j, .. } | Band::Diagonal { j, .. } => {
                Some(j)
            }
        }
    }

    /// Shear index, `None` for the scaling plane.
    pub fn k(self) -> Option<i32> {
        match self {
            Band::Scaling => None,
            Band::Horizontal { k, .. } | Band::Vertical { k, .. } | Band::Diagonal { k, .. } => {
                Some(k)
            }
        }
    }

    /// Stable lowercase label used in listings.
    pub fn label(self) -> &'static str {
        match self {
            Band::Scaling => "scaling",
            Band::Horizontal { .. } => "horizontal",
            Band::Vertical { .. } => "vertical",
            Band::Diagonal { .. } => "diagonal",
        }
    }
}
