use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::{Field, Grid, Image};
use crate::error::{Error, Result};

/// How samples outside the raster are synthesized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Padding {
    /// Repeat the nearest edge pixel.
    #[default]
    Replicate,
    /// Mirror about the edge pixel without repeating it (`dcb|abcd|cba`).
    Reflect,
    /// Treat everything outside as 0.
    Zero,
}

impl Padding {
    pub const ALL: [Padding; 3] = [Padding::Replicate, Padding::Reflect, Padding::Zero];

    pub fn name(self) -> &'static str {
        match self {
            Padding::Replicate => "replicate",
            Padding::Reflect => "reflect",
            Padding::Zero => "zero",
        }
    }

    /// Maps a possibly out-of-range coordinate into `0..len`.
    /// `None` means the sample is a zero pad.
    #[inline]
    pub fn resolve(self, idx: isize, len: usize) -> Option<usize> {
        debug_assert!(len > 0);
        if idx >= 0 && (idx as usize) < len {
            return Some(idx as usize);
        }
        match self {
            Padding::Zero => None,
            Padding::Replicate => Some(if idx < 0 { 0 } else { len - 1 }),
            Padding::Reflect => {
                if len == 1 {
                    return Some(0);
                }
                let period = 2 * (len as isize - 1);
                let m = idx.rem_euclid(period);
                Some(if m < len as isize { m } else { period - m } as usize)
            }
        }
    }
}

impl std::str::FromStr for Padding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Padding::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown padding mode '{s}' (replicate, reflect, zero)")))
    }
}

impl Grid<f64> {
    /// Border-aware sample lookup; total for every coordinate.
    #[inline]
    pub fn sample(&self, row: isize, col: isize, padding: Padding) -> f64 {
        match (padding.resolve(row, self.height()), padding.resolve(col, self.width())) {
            (Some(r), Some(c)) => *self.get(r, c),
            _ => 0.0,
        }
    }
}

/// Odd-sided square correlation mask.
#[derive(Debug, Clone, PartialEq)]
pub struct Stencil {
    side: usize,
    weights: Vec<f64>,
}

impl Stencil {
    pub fn new(side: usize, weights: Vec<f64>) -> Result<Self> {
        if side.is_multiple_of(2) {
            return Err(Error::InvalidKernel(format!("side must be odd, got {side}")));
        }
        if weights.len() != side * side {
            return Err(Error::InvalidKernel(format!(
                "{} coefficients for a {side}x{side} kernel",
                weights.len()
            )));
        }
        Ok(Self { side, weights })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn radius(&self) -> usize {
        self.side / 2
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weight at offset `(dr, dc)` from the center.
    pub fn at(&self, dr: isize, dc: isize) -> f64 {
        let r = self.radius() as isize;
        self.weights[((dr + r) as usize) * self.side + (dc + r) as usize]
    }
}

/// Cross-correlation of `image` with `stencil` (the mask is not flipped):
/// `out(r, c) = Σ stencil(dr, dc) · image(r + dr, c + dc)`.
///
/// Rows are processed in parallel; each output pixel is summed in a fixed
/// order so the result does not depend on the thread count.
pub fn convolve(image: &Image, stencil: &Stencil, padding: Padding) -> Result<Field> {
    let (w, h) = (image.width(), image.height());
    let rad = stencil.radius();
    let side = stencil.side();
    let src = image.data();
    let taps: Vec<(isize, isize, f64)> = (0..side * side)
        .map(|i| {
            (
                (i / side) as isize - rad as isize,
                (i % side) as isize - rad as isize,
                stencil.weights[i],
            )
        })
        .filter(|&(_, _, k)| k != 0.0)
        .collect();

    let mut out = vec![0.0; w * h];
    out.par_chunks_mut(w).enumerate().for_each(|(r, dst)| {
        let row_inside = r >= rad && r + rad < h;
        for (c, px) in dst.iter_mut().enumerate() {
            let mut acc = 0.0;
            if row_inside && c >= rad && c + rad < w {
                for &(dr, dc, k) in &taps {
                    let idx = (r as isize + dr) as usize * w + (c as isize + dc) as usize;
                    acc += k * src[idx];
                }
            } else {
                for &(dr, dc, k) in &taps {
                    acc += k * image.sample(r as isize + dr, c as isize + dc, padding);
                }
            }
            *px = acc;
        }
    });
    Grid::from_vec(w, h, out)
}

/// 1-D correlation along rows (`horizontal = true`) or columns.
pub(crate) fn correlate_1d(image: &Image, taps: &[f64], horizontal: bool, padding: Padding) -> Field {
    let (w, h) = (image.width(), image.height());
    let rad = (taps.len() / 2) as isize;
    let mut out = vec![0.0; w * h];
    out.par_chunks_mut(w).enumerate().for_each(|(r, dst)| {
        for (c, px) in dst.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (i, &k) in taps.iter().enumerate() {
                let off = i as isize - rad;
                let v = if horizontal {
                    image.sample(r as isize, c as isize + off, padding)
                } else {
                    image.sample(r as isize + off, c as isize, padding)
                };
                acc += k * v;
            }
            *px = acc;
        }
    });
    Grid::from_vec(w, h, out).expect("shape preserved")
}
