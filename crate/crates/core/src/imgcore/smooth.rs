use super::convolve::{correlate_1d, Padding};
use super::grid::Image;
use crate::error::{Error, Result};

pub const DEFAULT_SIGMA: f64 = 1.4;
pub const DEFAULT_RADIUS: usize = 2;

/// Normalized 1-D Gaussian taps for offsets `-radius..=radius`.
pub fn gaussian_taps(sigma: f64, radius: usize) -> Result<Vec<f64>> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::Parameter(format!(
            "gaussian sigma must be positive, got {sigma}"
        )));
    }
    if radius == 0 {
        return Err(Error::Parameter("gaussian radius must be at least 1".into()));
    }
    let r = radius as isize;
    let raw: Vec<f64> = (-r..=r)
        .map(|k| (-((k * k) as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let total: f64 = raw.iter().sum();
    Ok(raw.into_iter().map(|g| g / total).collect())
}

/// Separable Gaussian smoothing, rows first then columns, clamped to `[0, 255]`.
pub fn gaussian_blur(image: &Image, sigma: f64, radius: usize, padding: Padding) -> Result<Image> {
    let taps = gaussian_taps(sigma, radius)?;
    let horizontal = correlate_1d(image, &taps, true, padding);
    let mut out = correlate_1d(&horizontal, &taps, false, padding);
    for v in out.data_mut() {
        *v = v.clamp(0.0, 255.0);
    }
    Ok(out)
}
