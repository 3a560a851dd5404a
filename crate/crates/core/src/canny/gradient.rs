use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::imgcore::{convolve, Field, Grid, Image, Padding};
use crate::kernels::{Kernel, KernelPair};

/// How `gx` and `gy` combine into a magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    /// `sqrt(gx² + gy²)`
    #[default]
    L2,
    /// `|gx| + |gy|`
    L1,
}

impl Norm {
    #[inline]
    pub fn combine(self, gx: f64, gy: f64) -> f64 {
        match self {
            Norm::L2 => gx.hypot(gy),
            Norm::L1 => gx.abs() + gy.abs(),
        }
    }
}

impl std::str::FromStr for Norm {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l2" => Ok(Norm::L2),
            "l1" => Ok(Norm::L1),
            other => Err(crate::Error::Parameter(format!("unknown norm '{other}' (l1, l2)"))),
        }
    }
}

/// Gradient direction folded into `[0°, 180°)` and snapped to 45° steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Deg0,
    Deg45,
    Deg90,
    Deg135,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Deg0, Direction::Deg45, Direction::Deg90, Direction::Deg135];

    pub fn degrees(self) -> f64 {
        match self {
            Direction::Deg0 => 0.0,
            Direction::Deg45 => 45.0,
            Direction::Deg90 => 90.0,
            Direction::Deg135 => 135.0,
        }
    }

    /// Nearest bin to `atan2(gy, gx)` mod 180°; ties go to the earlier bin.
    pub fn quantize(gx: f64, gy: f64) -> Direction {
        let angle = gy.atan2(gx).to_degrees().rem_euclid(180.0);
        let mut best = Direction::Deg0;
        let mut best_dist = f64::INFINITY;
        for d in Direction::ALL {
            let diff = (angle - d.degrees()).abs();
            let dist = diff.min(180.0 - diff);
            if dist < best_dist {
                best = d;
                best_dist = dist;
            }
        }
        best
    }

    /// `(row, col)` step toward the neighbor along the gradient. Rows grow
    /// downward, matching the sign convention of `gy`.
    pub fn step(self) -> (isize, isize) {
        match self {
            Direction::Deg0 => (0, 1),
            Direction::Deg45 => (1, 1),
            Direction::Deg90 => (1, 0),
            Direction::Deg135 => (1, -1),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradientField {
    pub gx: Field,
    pub gy: Field,
    /// Min-max rescaled to `[0, 255]`.
    pub magnitude: Field,
    pub orientation: Grid<Direction>,
}

/// Rescales to `[0, 255]`; a flat field maps to all zeros.
pub fn normalize_min_max(field: &Field) -> Field {
    let (lo, hi) = field.min_max();
    if hi.partial_cmp(&lo) != Some(std::cmp::Ordering::Greater) {
        return field.map(|_| 0.0);
    }
    let span = hi - lo;
    field.map(|&v| (v - lo) / span * 255.0)
}

/// Gradient with replicate padding.
pub fn gradient(image: &Image, gx: &Kernel, gy: &Kernel, norm: Norm) -> Result<GradientField> {
    let pair = KernelPair::new(gx.clone(), gy.clone())?;
    gradient_with(image, &pair, norm, Padding::Replicate)
}

/// Gradient for a validated pair.
///
/// The pair is first reduced by its shared coefficient GCD, so integer
/// multiples of a pair give bit-identical fields.
pub fn gradient_with(image: &Image, pair: &KernelPair, norm: Norm, padding: Padding) -> Result<GradientField> {
    let pair = pair.primitive();
    let gx = convolve(image, &pair.gx.stencil(), padding)?;
    let gy = convolve(image, &pair.gy.stencil(), padding)?;

    let raw = Grid::from_vec(
        gx.width(),
        gx.height(),
        gx.data()
            .iter()
            .zip(gy.data())
            .map(|(&x, &y)| norm.combine(x, y))
            .collect(),
    )?;
    let orientation = Grid::from_vec(
        gx.width(),
        gx.height(),
        gx.data()
            .iter()
            .zip(gy.data())
            .map(|(&x, &y)| Direction::quantize(x, y))
            .collect(),
    )?;
    Ok(GradientField {
        magnitude: normalize_min_max(&raw),
        gx,
        gy,
        orientation,
    })
}
