//! Banded contour images as binary PPM (P6).
//!
//! One pixel per node, top row at the largest `y`. Values are divided by the
//! field's max-norm, cut into `levels` equal bands over `[-1, 1]`, and each
//! band is painted with the colour of its centre on a blue-white-red ramp.
//! The band edges are symmetric about 0, so an odd level count puts 0 in a
//! white band. A field that is identically zero is painted white.

use std::fs;
use std::path::Path;

use crate::spectral::PhysicalField;

const NEGATIVE: [f64; 3] = [5.0, 48.0, 97.0];
const MIDDLE: [f64; 3] = [255.0, 255.0, 255.0];
const POSITIVE: [f64; 3] = [103.0, 0.0, 31.0];

/// Colour of `s ∈ [-1, 1]`: linear from white at 0 to dark blue at -1 and
/// dark red at +1.
pub fn diverging_color(s: f64) -> [u8; 3] {
    let s = s.clamp(-1.0, 1.0);
    let end = if s < 0.0 { NEGATIVE } else { POSITIVE };
    let w = s.abs();
    let mut out = [0u8; 3];
    for c in 0..3 {
        out[c] = (MIDDLE[c] + w * (end[c] - MIDDLE[c])).round() as u8;
    }
    out
}

/// Band index of `s ∈ [-1, 1]` among `levels` equal bands.
pub fn band(s: f64, levels: usize) -> usize {
    let b = ((s.clamp(-1.0, 1.0) + 1.0) * 0.5 * levels as f64).floor() as usize;
    b.min(levels - 1)
}

fn band_center(b: usize, levels: usize) -> f64 {
    -1.0 + (2 * b + 1) as f64 / levels as f64
}

/// Encoded P6 bytes for `f`.
///
/// Panics if `levels < 2`.
pub fn contour_image(f: &PhysicalField, levels: usize) -> Vec<u8> {
    assert!(levels >= 2, "need at least two contour levels");
    let g = f.grid();
    let (w, h) = (g.nx(), g.ny());
    let scale = f.max_abs();
    let palette: Vec<[u8; 3]> = (0..levels).map(|b| diverging_color(band_center(b, levels))).collect();

    let header = format!("P6\n{w} {h}\n255\n");
    let mut out = Vec::with_capacity(header.len() + 3 * w * h);
    out.extend_from_slice(header.as_bytes());
    for row in (0..h).rev() {
        for i in 0..w {
            let rgb = if scale == 0.0 {
                diverging_color(0.0)
            } else {
                palette[band(f.at(i, row) / scale, levels)]
            };
            out.extend_from_slice(&rgb);
        }
    }
    out
}

pub fn render_contour(f: &PhysicalField, path: impl AsRef<Path>, levels: usize) -> std::io::Result<()> {
    fs::write(path, contour_image(f, levels))
}
