//! Synthetic binary test images with controlled edge orientations.
//!
//! Shapes live on the unit canvas `[0, 1]^2` and are rasterized by sampling
//! pixel centers: pixel `(r, c)` maps to the point `((c + 1/2)/n, (r + 1/2)/n)`
//! and takes the shape's intensity when the point lies strictly inside, zero
//! otherwise. Offsets from the canvas center are computed from the integer
//! form `(2c + 1 - n) / (2n)`, which negates exactly under reflection, so a
//! centered shape equals its own transpose and 180-degree rotation bitwise.

use alloc::vec::Vec;

use crate::error::Error;
use crate::image::Image;

/// Shape geometry; `size` is always the full extent of the bounding box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    /// Disc of diameter `size` (round edges, all orientations).
    Ball,
    /// Axis-aligned square of side `size` (horizontal and vertical edges).
    Square,
    /// 45-degree rotated square with diagonal `size` (diagonal edges).
    Rhombus,
    /// Fixed arrangement of one square, one ball, and one rhombus scaled
    /// into the shape's bounding box.
    Picture,
}

/// A shape placed on the unit canvas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shape {
    pub kind: ShapeKind,
    /// Center `(x, y)` in canvas coordinates.
    pub center: (f64, f64),
    /// Bounding-box extent, in `(0, 1]`.
    pub size: f64,
    /// Value of covered pixels, in `[0, 1]`.
    pub intensity: f64,
}

impl Shape {
    /// Disc of diameter `size` centered at `(cx, cy)`, intensity 1.
    pub fn ball(cx: f64, cy: f64, size: f64) -> Shape {
        Shape {
            kind: ShapeKind::Ball,
            center: (cx, cy),
            size,
            intensity: 1.0,
        }
    }

    /// Axis-aligned square of side `size` centered at `(cx, cy)`, intensity 1.
    pub fn square(cx: f64, cy: f64, size: f64) -> Shape {
        Shape {
            kind: ShapeKind::Square,
            center: (cx, cy),
            size,
            intensity: 1.0,
        }
    }

    /// Rotated square with diagonal `size` centered at `(cx, cy)`, intensity 1.
    pub fn rhombus(cx: f64, cy: f64, size: f64) -> Shape {
        Shape {
            kind: ShapeKind::Rhombus,
            center: (cx, cy),
            size,
            intensity: 1.0,
        }
    }

    /// The full-canvas composite arrangement, intensity 1.
    pub fn picture() -> Shape {
        Shape {
            kind: ShapeKind::Picture,
            center: (0.5, 0.5),
            size: 1.0,
            intensity: 1.0,
        }
    }
}

/// Sub-shapes of [`ShapeKind::Picture`] in unit-box coordinates.
const PICTURE_LAYOUT: [(ShapeKind, f64, f64, f64); 3] = [
    (ShapeKind::Square, 0.28, 0.30, 0.32),
    (ShapeKind::Ball, 0.72, 0.30, 0.32),
    (ShapeKind::Rhombus, 0.50, 0.74, 0.40),
];

fn validate(shape: &Shape) -> Result<(), Error> {
    let (cx, cy) = shape.center;
    if !(cx.is_finite() && cy.is_finite() && shape.size.is_finite() && shape.intensity.is_finite())
    {
        return Err(Error::InvalidShape);
    }
    if shape.size <= 0.0 || shape.size > 1.0 || !(0.0..=1.0).contains(&shape.intensity) {
        return Err(Error::InvalidShape);
    }
    let half = shape.size / 2.0;
    if cx - half < 0.0 || cx + half > 1.0 || cy - half < 0.0 || cy + half > 1.0 {
        return Err(Error::ShapeOutsideCanvas);
    }
    Ok(())
}

/// Strict-interior membership of the canvas point offset `(dx, dy)` from the
/// shape center.
fn covers(kind: ShapeKind, half: f64, dx: f64, dy: f64) -> bool {
    match kind {
        ShapeKind::Ball => dx * dx + dy * dy < half * half,
        ShapeKind::Square => dx.abs() < half && dy.abs() < half,
        ShapeKind::Rhombus => dx.abs() + dy.abs() < half,
        ShapeKind::Picture => unreachable!("picture expands to primitives"),
    }
}

/// Primitive shapes a `Shape` rasterizes as: itself, or the scaled picture
/// arrangement.
fn primitives(shape: &Shape) -> Vec<Shape> {
    match shape.kind {
        ShapeKind::Picture => {
            let origin = (
                shape.center.0 - shape.size / 2.0,
                shape.center.1 - shape.size / 2.0,
            );
            PICTURE_LAYOUT
                .iter()
                .map(|&(kind, ux, uy, usize_)| Shape {
                    kind,
                    center: (origin.0 + ux * shape.size, origin.1 + uy * shape.size),
                    size: usize_ * shape.size,
                    intensity: shape.intensity,
                })
                .collect()
        }
        _ => alloc::vec![*shape],
    }
}

/// Rasterizes `shape` onto an `n`-by-`n` canvas.
///
/// Every pixel is exactly `0` or exactly `shape.intensity`. Errors if the
/// parameters are out of range or the shape leaves the canvas.
pub fn render(shape: &Shape, n: usize) -> Result<Image, Error> {
    validate(shape)?;
    let parts = primitives(shape);
    for part in &parts {
        validate(part)?;
    }
    let mut data = Vec::with_capacity(n * n);
    let denom = 2.0 * n as f64;
    for r in 0..n {
        // Offset of the pixel-center from the canvas center, exact in the
        // integer numerator so reflections negate it bitwise.
        let y = (2 * r as i64 + 1 - n as i64) as f64 / denom;
        for c in 0..n {
            let x = (2 * c as i64 + 1 - n as i64) as f64 / denom;
            let hit = parts.iter().any(|p| {
                let dx = x - (p.center.0 - 0.5);
                let dy = y - (p.center.1 - 0.5);
                covers(p.kind, p.size / 2.0, dx, dy)
            });
            data.push(if hit { shape.intensity } else { 0.0 });
        }
    }
    Image::new(n, data)
}
