use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::imgcore::{quantize, Image};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OtsuResult {
    pub threshold: u8,
    pub between_class_variance: f64,
}

pub type Histogram = [u64; 256];

/// 256-bin histogram of the image quantized to 8 bits.
pub fn histogram(image: &Image) -> Histogram {
    let mut hist = [0u64; 256];
    for &v in image.data() {
        hist[quantize(v) as usize] += 1;
    }
    hist
}

pub fn otsu_threshold(image: &Image) -> Result<OtsuResult> {
    otsu_from_histogram(&histogram(image))
}

/// Smallest cut `t` in `0..=254` maximizing `ω₀ω₁(μ₀ − μ₁)²` for the classes
/// `{≤ t}` and `{> t}`.
///
/// With `n₀` pixels and intensity sum `S₀` below the cut, the score equals
/// `(N·S₀ − n₀·S)² / (N² · n₀ · n₁)`. The numerator is computed in exact
/// integers and candidates are compared by 256-bit cross-multiplication, so
/// ties are real ties.
pub fn otsu_from_histogram(hist: &Histogram) -> Result<OtsuResult> {
    if hist.iter().filter(|&&n| n > 0).count() < 2 {
        return Err(Error::NoContrast);
    }
    let total: u128 = hist.iter().map(|&n| u128::from(n)).sum();
    let sum: u128 = hist.iter().enumerate().map(|(i, &n)| i as u128 * u128::from(n)).sum();

    // score = num / den with num = (N·S₀ − n₀·S)², den = n₀·n₁
    let mut best: Option<(u8, u128, u128)> = None;
    let (mut n0, mut s0) = (0u128, 0u128);
    for (t, &count) in hist.iter().enumerate().take(255) {
        n0 += u128::from(count);
        s0 += t as u128 * u128::from(count);
        let n1 = total - n0;
        if n0 == 0 || n1 == 0 {
            continue;
        }
        let diff = (total * s0).abs_diff(n0 * sum);
        let num = diff
            .checked_mul(diff)
            .ok_or_else(|| Error::Unsupported("image too large for exact Otsu arithmetic".into()))?;
        let den = n0 * n1;
        let better = match best {
            None => true,
            Some((_, bn, bd)) => wide_mul(num, bd) > wide_mul(bn, den),
        };
        if better {
            best = Some((t as u8, num, den));
        }
    }
    let (threshold, num, den) = best.expect("two occupied bins give a valid cut");
    let n = total as f64;
    Ok(OtsuResult {
        threshold,
        between_class_variance: num as f64 / den as f64 / (n * n),
    })
}

/// Full 256-bit product as `(high, low)`.
fn wide_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a_hi, a_lo) = (a >> 64, a & MASK);
    let (b_hi, b_lo) = (b >> 64, b & MASK);
    let ll = a_lo * b_lo;
    let lh = a_lo * b_hi;
    let hl = a_hi * b_lo;
    let hh = a_hi * b_hi;
    let mid = (ll >> 64) + (lh & MASK) + (hl & MASK);
    let low = (ll & MASK) | (mid << 64);
    let high = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (high, low)
}

/// Fraction around the Otsu value used to place the two hysteresis levels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdConfig {
    pub sigma_fraction: f64,
}

impl Default for ThresholdConfig {
    fn default() -> Self {
        Self { sigma_fraction: 0.33 }
    }
}

impl ThresholdConfig {
    pub fn new(sigma_fraction: f64) -> Result<Self> {
        if !(sigma_fraction > 0.0 && sigma_fraction < 1.0) {
            return Err(Error::Parameter(format!(
                "sigma fraction must lie in (0, 1), got {sigma_fraction}"
            )));
        }
        Ok(Self { sigma_fraction })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HysteresisThresholds {
    pub low: u8,
    pub high: u8,
}

/// `low = (1 − σ)·t`, `high = (1 + σ)·t`, each rounded half-up and clamped
/// to `[0, 255]`.
pub fn hysteresis_thresholds(otsu: &OtsuResult, cfg: &ThresholdConfig) -> HysteresisThresholds {
    let t = f64::from(otsu.threshold);
    HysteresisThresholds {
        low: quantize((1.0 - cfg.sigma_fraction) * t),
        high: quantize((1.0 + cfg.sigma_fraction) * t),
    }
}
