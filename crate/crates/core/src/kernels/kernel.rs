use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::imgcore::Stencil;

/// Direction a derivative kernel differentiates along.
///
/// `X` responds to change across columns (vertical edges), `Y` to change
/// across rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

/// Odd-square integer first-derivative kernel.
///
/// Construction enforces: zero coefficient sum, antisymmetry about the
/// center column (`X`) or center row (`Y`), and at least one nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Kernel {
    side: usize,
    axis: Axis,
    coeffs: Vec<i64>,
}

impl Kernel {
    pub fn new(axis: Axis, side: usize, coeffs: Vec<i64>) -> Result<Self> {
        if side < 3 || side.is_multiple_of(2) {
            return Err(Error::InvalidKernel(format!("side must be odd and >= 3, got {side}")));
        }
        if coeffs.len() != side * side {
            return Err(Error::InvalidKernel(format!(
                "{} coefficients for a {side}x{side} kernel",
                coeffs.len()
            )));
        }
        if coeffs.iter().all(|&v| v == 0) {
            return Err(Error::InvalidKernel("all coefficients are zero".into()));
        }
        let k = Self { side, axis, coeffs };
        let rad = k.radius();
        for dr in -rad..=rad {
            for dc in -rad..=rad {
                let mirrored = match axis {
                    Axis::X => k.at(dr, -dc),
                    Axis::Y => k.at(-dr, dc),
                };
                if k.at(dr, dc) != -mirrored {
                    return Err(Error::InvalidKernel(format!(
                        "{axis:?} kernel is not antisymmetric at offset ({dr}, {dc})"
                    )));
                }
            }
        }
        // antisymmetry already forces a zero sum; checked for clarity of the error
        if k.coeffs.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidKernel("coefficients do not sum to zero".into()));
        }
        Ok(k)
    }

    /// Builds from nested rows, top to bottom.
    pub fn from_rows<const N: usize>(axis: Axis, rows: [[i64; N]; N]) -> Result<Self> {
        Self::new(axis, N, rows.iter().flatten().copied().collect())
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn radius(&self) -> isize {
        (self.side / 2) as isize
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.coeffs.chunks(self.side).map(<[i64]>::to_vec).collect()
    }

    /// Coefficient at row offset `dr`, column offset `dc` from the center.
    pub fn at(&self, dr: isize, dc: isize) -> i64 {
        let r = self.radius();
        self.coeffs[((dr + r) as usize) * self.side + (dc + r) as usize]
    }

    /// Matrix transpose; the axis flips with it.
    pub fn transpose(&self) -> Kernel {
        let n = self.side;
        let coeffs = (0..n * n).map(|i| self.coeffs[(i % n) * n + i / n]).collect();
        Kernel {
            side: n,
            axis: self.axis.other(),
            coeffs,
        }
    }

    /// Greatest common divisor of all coefficients (always ≥ 1).
    pub fn gcd(&self) -> i64 {
        gcd_all(self.coeffs.iter().copied())
    }

    /// Divides out the coefficient GCD.
    pub fn reduced(&self) -> Kernel {
        self.divided(self.gcd())
    }

    pub(crate) fn divided(&self, d: i64) -> Kernel {
        Kernel {
            side: self.side,
            axis: self.axis,
            coeffs: self.coeffs.iter().map(|v| v / d).collect(),
        }
    }

    pub fn scaled(&self, factor: i64) -> Result<Kernel> {
        if factor <= 0 {
            return Err(Error::Parameter(format!("kernel scale must be positive, got {factor}")));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|v| v.checked_mul(factor))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidKernel("coefficient overflow while scaling".into()))?;
        Ok(Kernel {
            side: self.side,
            axis: self.axis,
            coeffs,
        })
    }

    pub fn stencil(&self) -> Stencil {
        Stencil::new(self.side, self.coeffs.iter().map(|&v| v as f64).collect()).expect("kernel side is odd")
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn gcd_all(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0, gcd).max(1)
}

/// An `(x, y)` kernel pair of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelPair {
    pub gx: Kernel,
    pub gy: Kernel,
}

impl KernelPair {
    pub fn new(gx: Kernel, gy: Kernel) -> Result<Self> {
        if gx.axis() != Axis::X || gy.axis() != Axis::Y {
            return Err(Error::InvalidPair(format!(
                "expected (x, y) kernels, got ({:?}, {:?})",
                gx.axis(),
                gy.axis()
            )));
        }
        if gx.side() != gy.side() {
            return Err(Error::InvalidPair(format!(
                "kernel sizes differ: {} vs {}",
                gx.side(),
                gy.side()
            )));
        }
        Ok(Self { gx, gy })
    }

    /// Pair whose `gy` is the transpose of `gx`.
    pub fn from_gx(gx: Kernel) -> Result<Self> {
        let gy = gx.transpose();
        Self::new(gx, gy)
    }

    pub fn side(&self) -> usize {
        self.gx.side()
    }

    pub fn scaled(&self, factor: i64) -> Result<Self> {
        Ok(Self {
            gx: self.gx.scaled(factor)?,
            gy: self.gy.scaled(factor)?,
        })
    }

    /// Divides both kernels by the GCD shared across the pair, so a pair and
    /// any positive integer multiple of it reduce to the same kernels.
    pub fn primitive(&self) -> Self {
        let g = gcd(self.gx.gcd(), self.gy.gcd()).max(1);
        Self {
            gx: self.gx.divided(g),
            gy: self.gy.divided(g),
        }
    }
}
