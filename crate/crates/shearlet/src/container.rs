//! Binary containers for coefficient stacks ("FFSC") and spectra stacks
//! ("FFSP").
//!
//! Layout, all little-endian:
//!
//! | offset | size | field                                   |
//! |--------|------|-----------------------------------------|
//! | 0      | 4    | magic, `FFSC` or `FFSP`                 |
//! | 4      | 2    | version, u16 = 1                        |
//! | 6      | 1    | variant, u8 (0 classic, 1 smooth)       |
//! | 7      | 1    | flags, u8 (bit 0: real-only payload)    |
//! | 8      | 4    | n, u32 (image side)                     |
//! | 12     | 2    | j0, u16 (scale count)                   |
//! | 14     | 4    | eta, u32 (plane count)                  |
//!
//! followed by `eta` row-major `n*n` planes. Each element is one f64
//! (real-only) or an (re, im) f64 pair. Plane order is the flat band order,
//! so files double as golden fixtures for reimplementation.

use std::path::Path;

use rustfft::num_complex::Complex64;
use shearlet_core::{band_count, FrequencyGrid, ShearletVariant, SpectraCube};

use crate::error::{Error, Result};
use crate::fsio::atomic_write;
use crate::transform::{CoefficientCube, SpectraKey};

pub const MAGIC_COEFFICIENTS: [u8; 4] = *b"FFSC";
pub const MAGIC_SPECTRA: [u8; 4] = *b"FFSP";
pub const VERSION: u16 = 1;
pub const FLAG_REAL_ONLY: u8 = 1;
pub const HEADER_LEN: usize = 18;

fn corrupt(msg: impl Into<String>) -> Error {
    Error::ContainerFormat(msg.into())
}

/// The two container kinds, distinguished by magic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContainerKind {
    Coefficients,
    Spectra,
}

/// Reads just enough of `path` to tell the container kinds apart.
pub fn sniff_kind(path: &Path) -> Result<ContainerKind> {
    let bytes = std::fs::read(path)?;
    match bytes.get(..4) {
        Some(m) if m == MAGIC_COEFFICIENTS => Ok(ContainerKind::Coefficients),
        Some(m) if m == MAGIC_SPECTRA => Ok(ContainerKind::Spectra),
        _ => Err(corrupt("unrecognized magic (expected FFSC or FFSP)")),
    }
}

struct Header {
    variant: ShearletVariant,
    real_only: bool,
    n: usize,
    scales: u32,
    eta: usize,
}

fn encode_header(
    magic: [u8; 4],
    variant: ShearletVariant,
    real_only: bool,
    n: usize,
    scales: u32,
    eta: usize,
) -> Result<[u8; HEADER_LEN]> {
    let n32 =
        u32::try_from(n).map_err(|_| corrupt(format!("side {n} exceeds the format limit")))?;
    let j16 = u16::try_from(scales)
        .map_err(|_| corrupt(format!("scale count {scales} exceeds the format limit")))?;
    let eta32 = u32::try_from(eta)
        .map_err(|_| corrupt(format!("plane count {eta} exceeds the format limit")))?;
    let mut out = [0u8; HEADER_LEN];
    out[0..4].copy_from_slice(&magic);
    out[4..6].copy_from_slice(&VERSION.to_le_bytes());
    out[6] = variant.code();
    out[7] = if real_only { FLAG_REAL_ONLY } else { 0 };
    out[8..12].copy_from_slice(&n32.to_le_bytes());
    out[12..14].copy_from_slice(&j16.to_le_bytes());
    out[14..18].copy_from_slice(&eta32.to_le_bytes());
    Ok(out)
}

fn decode_header(bytes: &[u8], expected_magic: [u8; 4]) -> Result<Header> {
    if bytes.len() < HEADER_LEN {
        return Err(corrupt("file shorter than the header"));
    }
    if bytes[0..4] != expected_magic {
        return Err(corrupt(format!(
            "wrong magic {:?} (expected {:?})",
            String::from_utf8_lossy(&bytes[0..4]),
            String::from_utf8_lossy(&expected_magic),
        )));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != VERSION {
        return Err(corrupt(format!("unsupported version {version}")));
    }
    let variant = ShearletVariant::from_code(bytes[6])
        .ok_or_else(|| corrupt(format!("unknown variant code {}", bytes[6])))?;
    if bytes[7] & !FLAG_REAL_ONLY != 0 {
        return Err(corrupt(format!("unknown flag bits {:#04x}", bytes[7])));
    }
    let real_only = bytes[7] & FLAG_REAL_ONLY != 0;
    let n = u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize;
    let scales = u16::from_le_bytes([bytes[12], bytes[13]]) as u32;
    let eta = u32::from_le_bytes(bytes[14..18].try_into().unwrap()) as usize;
    if !(1..=16).contains(&scales) {
        return Err(corrupt(format!("scale count {scales} out of range")));
    }
    if eta != band_count(scales) as usize {
        return Err(corrupt(format!(
            "eta {eta} does not match scale count {scales} (expected {})",
            band_count(scales)
        )));
    }
    let elem = if real_only { 8 } else { 16 };
    let expected = HEADER_LEN + eta * n * n * elem;
    if bytes.len() != expected {
        return Err(corrupt(format!(
            "file size mismatch: expected {expected} bytes, found {}",
            bytes.len()
        )));
    }
    Ok(Header {
        variant,
        real_only,
        n,
        scales,
        eta,
    })
}

fn read_f64s(bytes: &[u8], count: usize, offset: &mut usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    for chunk in bytes[*offset..*offset + count * 8].chunks_exact(8) {
        let v = f64::from_le_bytes(chunk.try_into().unwrap());
        if !v.is_finite() {
            return Err(corrupt("non-finite sample in payload"));
        }
        out.push(v);
    }
    *offset += count * 8;
    Ok(out)
}

/// Writes a coefficient stack. Planes whose imaginary parts are all bitwise
/// `+0.0` are stored real-only at half the size; the roundtrip is bit-exact
/// either way. Non-finite values are rejected.
pub fn write_coefficients(coeffs: &CoefficientCube, path: &Path) -> Result<()> {
    for plane in coeffs.planes() {
        for z in plane {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite {
                    context: "coefficient plane",
                });
            }
        }
    }
    let real_only = coeffs.is_bitwise_real();
    let key = coeffs.key();
    let elem = if real_only { 8 } else { 16 };
    let mut bytes = Vec::with_capacity(HEADER_LEN + coeffs.eta() * key.n * key.n * elem);
    bytes.extend_from_slice(&encode_header(
        MAGIC_COEFFICIENTS,
        key.variant,
        real_only,
        key.n,
        key.scales,
        coeffs.eta(),
    )?);
    for plane in coeffs.planes() {
        for z in plane {
            bytes.extend_from_slice(&z.re.to_le_bytes());
            if !real_only {
                bytes.extend_from_slice(&z.im.to_le_bytes());
            }
        }
    }
    atomic_write(path, &bytes)
}

/// Reads a coefficient stack written by [`write_coefficients`].
pub fn read_coefficients(path: &Path) -> Result<CoefficientCube> {
    let bytes = std::fs::read(path)?;
    let header = decode_header(&bytes, MAGIC_COEFFICIENTS)?;
    let len = header.n * header.n;
    let mut offset = HEADER_LEN;
    let mut planes = Vec::with_capacity(header.eta);
    for _ in 0..header.eta {
        let plane = if header.real_only {
            read_f64s(&bytes, len, &mut offset)?
                .into_iter()
                .map(|re| Complex64::new(re, 0.0))
                .collect()
        } else {
            read_f64s(&bytes, 2 * len, &mut offset)?
                .chunks_exact(2)
                .map(|p| Complex64::new(p[0], p[1]))
                .collect::<Vec<_>>()
        };
        planes.push(plane);
    }
    CoefficientCube::from_planes(
        SpectraKey {
            n: header.n,
            scales: header.scales,
            variant: header.variant,
        },
        planes,
    )
}

/// Writes a spectra stack; spectra are real by construction, so the payload
/// is always real-only.
pub fn write_spectra(cube: &SpectraCube, path: &Path) -> Result<()> {
    for plane in cube.planes() {
        if plane.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "spectra plane",
            });
        }
    }
    let n = cube.n();
    let eta = cube.planes().len();
    let mut bytes = Vec::with_capacity(HEADER_LEN + eta * n * n * 8);
    bytes.extend_from_slice(&encode_header(
        MAGIC_SPECTRA,
        cube.variant(),
        true,
        n,
        cube.scales(),
        eta,
    )?);
    for plane in cube.planes() {
        for v in plane {
            bytes.extend_from_slice(&v.to_le_bytes());
        }
    }
    atomic_write(path, &bytes)
}

/// Reads a spectra stack written by [`write_spectra`]. The grid is rebuilt
/// from the header (the construction is deterministic), so a loaded cube
/// compares equal to the one that was saved.
pub fn read_spectra(path: &Path) -> Result<SpectraCube> {
    let bytes = std::fs::read(path)?;
    let header = decode_header(&bytes, MAGIC_SPECTRA)?;
    if !header.real_only {
        return Err(corrupt("spectra containers must be real-only"));
    }
    let len = header.n * header.n;
    let mut offset = HEADER_LEN;
    let mut planes = Vec::with_capacity(header.eta);
    for _ in 0..header.eta {
        planes.push(read_f64s(&bytes, len, &mut offset)?);
    }
    let grid = FrequencyGrid::new(header.n, Some(header.scales))?;
    Ok(SpectraCube::from_planes(grid, header.variant, planes)?)
}
