//! Weighted plane fit over a window and the derivative kernels it implies.
//!
//! Minimizing `Σ w(r,c)² (α r + β c + γ − I(r,c))²` over a mirror-symmetric
//! window decouples: the cross moments `Σ w² r`, `Σ w² c`, `Σ w² r c` all
//! vanish, so
//!
//! ```text
//! α = Σ w² r I / Σ w² r²      β = Σ w² c I / Σ w² c²      γ = Σ w² I / Σ w²
//! ```
//!
//! The numerator of `β` is a correlation with coefficients `w² c`, which is
//! the x-derivative kernel up to scale (and `w² r` for y).

use serde::{Deserialize, Serialize};

use super::kernel::{Axis, Kernel};
use super::weights::WeightMatrix;
use crate::error::{Error, Result};

/// Unreduced estimator coefficients `w² · c` (x) or `w² · r` (y), row-major.
pub fn estimator_coefficients(weights: &WeightMatrix, axis: Axis) -> Result<Vec<i64>> {
    let l = weights.radius() as isize;
    let mut out = Vec::with_capacity(weights.side() * weights.side());
    for r in -l..=l {
        for c in -l..=l {
            let w = i64::try_from(weights.at(r, c)).ok();
            let offset = match axis {
                Axis::X => c,
                Axis::Y => r,
            } as i64;
            let v = w
                .and_then(|w| w.checked_mul(w))
                .and_then(|w2| w2.checked_mul(offset))
                .ok_or_else(|| Error::Unsupported("kernel coefficient overflow".into()))?;
            out.push(v);
        }
    }
    Ok(out)
}

/// Minimal integer derivative kernel for a weight matrix.
pub fn derive_kernel(weights: &WeightMatrix, axis: Axis) -> Result<Kernel> {
    let raw = estimator_coefficients(weights, axis)?;
    Ok(Kernel::new(axis, weights.side(), raw)?.reduced())
}

/// `Σ w² · c²` (x) or `Σ w² · r²` (y): divides a raw estimator response into
/// the slope estimate.
pub fn estimator_normalizer(weights: &WeightMatrix, axis: Axis) -> f64 {
    weights
        .offsets()
        .map(|(r, c, w)| {
            let d = match axis {
                Axis::X => c,
                Axis::Y => r,
            } as f64;
            (w as f64).powi(2) * d * d
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneFit {
    /// Slope along rows.
    pub alpha: f64,
    /// Slope along columns.
    pub beta: f64,
    /// Weighted mean level.
    pub gamma: f64,
}

/// Weighted least-squares plane through a row-major patch.
pub fn plane_fit(patch: &[f64], weights: &WeightMatrix) -> Result<PlaneFit> {
    let side = weights.side();
    if patch.len() != side * side {
        return Err(Error::Dimension(format!(
            "patch has {} values, weights expect {side}x{side}",
            patch.len()
        )));
    }
    let l = weights.radius() as isize;
    let (mut sr, mut sc, mut s0) = (0.0, 0.0, 0.0);
    let (mut nr, mut nc, mut n0) = (0.0, 0.0, 0.0);
    for (r, c, w) in weights.offsets() {
        let w2 = (w as f64).powi(2);
        let i = patch[((r + l) as usize) * side + (c + l) as usize];
        let (rf, cf) = (r as f64, c as f64);
        nr += w2 * rf * i;
        nc += w2 * cf * i;
        n0 += w2 * i;
        sr += w2 * rf * rf;
        sc += w2 * cf * cf;
        s0 += w2;
    }
    if sr == 0.0 || sc == 0.0 || s0 == 0.0 {
        return Err(Error::SingularFit(
            "weights leave the normal equations rank-deficient".into(),
        ));
    }
    Ok(PlaneFit {
        alpha: nr / sr,
        beta: nc / sc,
        gamma: n0 / s0,
    })
}
