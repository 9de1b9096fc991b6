//! Square grayscale PGM images, binary (P5) and plain-text (P2).
//!
//! Only 8-bit files (maxval 255) are accepted; samples map to `[0, 1]` by
//! division with 255. Writing always emits P5 with round-half-up
//! quantization after clamping to `[0, 1]`.

use std::path::Path;

use shearlet_core::Image;

use crate::error::{Error, Result};
use crate::fsio::atomic_write;

fn bad(msg: impl Into<String>) -> Error {
    Error::ImageFormat(msg.into())
}

/// Header tokenizer: whitespace separates tokens, `#` starts a comment that
/// runs to the end of its line.
struct Tokens<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(bytes: &'a [u8]) -> Tokens<'a> {
        Tokens { bytes, pos: 0 }
    }

    fn skip_separators(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' | 0x0b | 0x0c => self.pos += 1,
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => return,
            }
        }
    }

    fn token(&mut self) -> Result<&'a [u8]> {
        self.skip_separators();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(bad("truncated header"));
        }
        Ok(&self.bytes[start..self.pos])
    }

    fn number(&mut self) -> Result<u32> {
        let token = self.token()?;
        std::str::from_utf8(token)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                bad(format!(
                    "expected a number, found {:?}",
                    String::from_utf8_lossy(token)
                ))
            })
    }
}

/// Reads a square PGM image; pixel values are scaled to `[0, 1]`.
pub fn read_image(path: &Path) -> Result<Image> {
    parse_image(&std::fs::read(path)?)
}

fn parse_image(bytes: &[u8]) -> Result<Image> {
    let mut tokens = Tokens::new(bytes);
    let magic = tokens.token()?;
    if magic != b"P5" && magic != b"P2" {
        return Err(bad("not a PGM file (expected magic P5 or P2)"));
    }
    let width = tokens.number()?;
    let height = tokens.number()?;
    let maxval = tokens.number()?;
    if width != height {
        return Err(bad(format!(
            "{width}x{height} image: only square images are supported"
        )));
    }
    if width == 0 {
        return Err(bad("empty image"));
    }
    if maxval != 255 {
        return Err(bad(format!(
            "maxval {maxval}: only 8-bit PGM (maxval 255) is supported"
        )));
    }
    let n = width as usize;
    let count = n * n;
    let mut data = Vec::with_capacity(count);
    if magic == b"P5" {
        // Exactly one whitespace byte separates the header from the samples.
        if tokens.pos >= bytes.len() || !bytes[tokens.pos].is_ascii_whitespace() {
            return Err(bad("missing separator before binary samples"));
        }
        let start = tokens.pos + 1;
        let payload = &bytes[start.min(bytes.len())..];
        if payload.len() < count {
            return Err(bad(format!(
                "truncated pixel data: expected {count} bytes, found {}",
                payload.len()
            )));
        }
        if payload.len() > count {
            return Err(bad("trailing bytes after pixel data"));
        }
        data.extend(payload.iter().map(|&b| b as f64 / 255.0));
    } else {
        for _ in 0..count {
            let v = tokens.number()?;
            if v > 255 {
                return Err(bad(format!("sample {v} exceeds maxval 255")));
            }
            data.push(v as f64 / 255.0);
        }
        tokens.skip_separators();
        if tokens.pos != bytes.len() {
            return Err(bad("trailing data after pixel samples"));
        }
    }
    Ok(Image::new(n, data)?)
}

/// Writes `image` as binary PGM, clamping to `[0, 1]` and quantizing with
/// round-half-up (`0.5` becomes byte 128).
pub fn write_image(image: &Image, path: &Path) -> Result<()> {
    atomic_write(path, &encode_image(image))
}

fn encode_image(image: &Image) -> Vec<u8> {
    let n = image.n();
    let mut out = format!("P5\n{n} {n}\n255\n").into_bytes();
    out.extend(
        image
            .data()
            .iter()
            .map(|&v| (v.clamp(0.0, 1.0) * 255.0).round() as u8),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_bytes(bytes: &[u8]) -> tempfile::NamedTempFile {
        let file = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(file.path(), bytes).unwrap();
        file
    }

    #[test]
    fn binary_samples_scale_to_unit_range() {
        let file = write_bytes(b"P5\n2 2\n255\n\x00\xff\x80\x40");
        let image = read_image(file.path()).unwrap();
        assert_eq!(image.data(), &[0.0, 1.0, 128.0 / 255.0, 64.0 / 255.0]);
    }

    #[test]
    fn text_format_with_comments_parses_like_binary() {
        let file = write_bytes(b"P2\n# a comment\n2 2 # inline\n255\n0 255\n128 64\n");
        let image = read_image(file.path()).unwrap();
        assert_eq!(image.data(), &[0.0, 1.0, 128.0 / 255.0, 64.0 / 255.0]);
    }

    #[test]
    fn writer_quantizes_half_up_and_clamps() {
        let image = Image::new(2, vec![0.5, -0.2, 1.7, 0.0]).unwrap();
        let encoded = encode_image(&image);
        assert_eq!(&encoded[..11], b"P5\n2 2\n255\n");
        assert_eq!(&encoded[11..], &[128u8, 0, 255, 0]);
    }

    #[test]
    fn extreme_images_fill_the_byte_range() {
        let zeros = encode_image(&Image::zeros(3));
        assert!(zeros.ends_with(&[0u8; 9]));
        let ones = encode_image(&Image::new(3, vec![1.0; 9]).unwrap());
        assert!(ones.ends_with(&[255u8; 9]));
    }

    #[test]
    fn roundtrip_is_exact_after_quantization() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("image.pgm");
        let n = 5;
        let data: Vec<f64> = (0..n * n).map(|i| i as f64 / (n * n) as f64).collect();
        let image = Image::new(n, data.clone()).unwrap();
        write_image(&image, &path).unwrap();
        let back = read_image(&path).unwrap();
        for (&orig, &got) in data.iter().zip(back.data()) {
            let quantized = (orig.clamp(0.0, 1.0) * 255.0).round() / 255.0;
            assert_eq!(got, quantized);
        }
        // A second pass through the quantizer is the identity.
        write_image(&back, &path).unwrap();
        assert_eq!(read_image(&path).unwrap().data(), back.data());
    }

    #[test]
    fn non_square_images_are_rejected_with_a_pointer() {
        let file = write_bytes(b"P5\n3 2\n255\n\x00\x00\x00\x00\x00\x00");
        let err = read_image(file.path()).unwrap_err().to_string();
        assert!(err.contains("square"), "{err}");
    }

    #[test]
    fn unsupported_depths_and_magics_are_rejected() {
        let deep = write_bytes(b"P5\n2 2\n65535\n\x00\x00\x00\x00\x00\x00\x00\x00");
        assert!(read_image(deep.path())
            .unwrap_err()
            .to_string()
            .contains("maxval"));
        let ppm = write_bytes(b"P6\n2 2\n255\n");
        assert!(read_image(ppm.path()).is_err());
    }

    #[test]
    fn truncation_and_overruns_are_rejected() {
        let short = write_bytes(b"P5\n2 2\n255\n\x00\x01\x02");
        assert!(read_image(short.path())
            .unwrap_err()
            .to_string()
            .contains("truncated"));
        let long = write_bytes(b"P5\n2 2\n255\n\x00\x01\x02\x03\x04");
        assert!(read_image(long.path())
            .unwrap_err()
            .to_string()
            .contains("trailing"));
        let big = write_bytes(b"P2\n2 2\n255\n0 1 2 300\n");
        assert!(read_image(big.path())
            .unwrap_err()
            .to_string()
            .contains("300"));
    }

    #[test]
    fn missing_files_surface_io_errors() {
        let err = read_image(Path::new("/nonexistent/missing.pgm")).unwrap_err();
        assert!(matches!(err, Error::Io(_)));
    }
}
