use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::gradient::{gradient_with, GradientField, Norm};
use super::suppress::{hysteresis_nonzero, non_max_suppression};
use super::threshold::{hysteresis_thresholds, otsu_threshold, HysteresisThresholds, OtsuResult, ThresholdConfig};
use crate::error::{Error, Result};
use crate::imgcore::{gaussian_blur, EdgeMap, Field, Image, Padding, DEFAULT_RADIUS, DEFAULT_SIGMA};
use crate::kernels::{registry_get, KernelPair, Operator};

/// Which raster feeds the Otsu histogram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OtsuSource {
    /// The normalized gradient magnitude, i.e. the values the thresholds gate.
    #[default]
    Magnitude,
    /// The smoothed input image.
    Blurred,
}

impl std::str::FromStr for OtsuSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "magnitude" => Ok(OtsuSource::Magnitude),
            "blurred" | "blurred-input" | "input" => Ok(OtsuSource::Blurred),
            other => Err(Error::Parameter(format!(
                "unknown otsu source '{other}' (magnitude, blurred)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CannyParams {
    pub gaussian_sigma: f64,
    pub gaussian_radius: usize,
    pub sigma_fraction: f64,
    pub norm: Norm,
    pub otsu_source: OtsuSource,
    pub padding: Padding,
}

impl Default for CannyParams {
    fn default() -> Self {
        Self {
            gaussian_sigma: DEFAULT_SIGMA,
            gaussian_radius: DEFAULT_RADIUS,
            sigma_fraction: ThresholdConfig::default().sigma_fraction,
            norm: Norm::L2,
            otsu_source: OtsuSource::Magnitude,
            padding: Padding::Replicate,
        }
    }
}

/// A registry operator or an explicit kernel pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorSpec {
    Registry { operator: Operator, size: usize },
    Custom { label: String, pair: KernelPair },
}

impl OperatorSpec {
    pub fn registry(operator: Operator, size: usize) -> Self {
        OperatorSpec::Registry { operator, size }
    }

    pub fn pair(&self) -> Result<KernelPair> {
        match self {
            OperatorSpec::Registry { operator, size } => registry_get(*operator, *size),
            OperatorSpec::Custom { pair, .. } => Ok(pair.clone()),
        }
    }

    /// Short label such as `sobel3`.
    pub fn label(&self) -> String {
        match self {
            OperatorSpec::Registry { operator, size } => format!("{}{}", operator.name(), size),
            OperatorSpec::Custom { label, .. } => label.clone(),
        }
    }
}

/// Wall-clock time per stage in milliseconds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct StageTimings {
    pub blur_ms: f64,
    pub gradient_ms: f64,
    pub otsu_ms: f64,
    pub suppression_ms: f64,
    pub hysteresis_ms: f64,
}

#[derive(Debug, Clone)]
pub struct CannyOutput {
    pub edges: EdgeMap,
    pub otsu: OtsuResult,
    pub thresholds: HysteresisThresholds,
    pub gradient: GradientField,
    pub suppressed: Field,
    pub timings: StageTimings,
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Blur → gradient → Otsu → thresholds → suppression → hysteresis on a
/// grayscale image.
///
/// Pixels zeroed by suppression never become edges, even when the Otsu cut
/// is 0 and both thresholds collapse to 0.
pub fn canny_pipeline(image: &Image, operator: &OperatorSpec, params: &CannyParams) -> Result<CannyOutput> {
    let cfg = ThresholdConfig::new(params.sigma_fraction)?;
    let pair = operator.pair()?;
    let mut timings = StageTimings::default();

    let t = Instant::now();
    let blurred = gaussian_blur(image, params.gaussian_sigma, params.gaussian_radius, params.padding)?;
    timings.blur_ms = elapsed_ms(t);

    let t = Instant::now();
    let gradient = gradient_with(&blurred, &pair, params.norm, params.padding)?;
    timings.gradient_ms = elapsed_ms(t);

    let t = Instant::now();
    let otsu = match params.otsu_source {
        OtsuSource::Magnitude => otsu_threshold(&gradient.magnitude)?,
        OtsuSource::Blurred => otsu_threshold(&blurred)?,
    };
    let thresholds = hysteresis_thresholds(&otsu, &cfg);
    timings.otsu_ms = elapsed_ms(t);

    let t = Instant::now();
    let suppressed = non_max_suppression(&gradient);
    timings.suppression_ms = elapsed_ms(t);

    let t = Instant::now();
    let edges = hysteresis_nonzero(&suppressed, &thresholds);
    timings.hysteresis_ms = elapsed_ms(t);

    Ok(CannyOutput {
        edges,
        otsu,
        thresholds,
        gradient,
        suppressed,
        timings,
    })
}

/// Deterministic summary of a run (no timings).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CannyDiagnostics {
    pub operator: String,
    pub width: usize,
    pub height: usize,
    pub otsu: u8,
    pub between_class_variance: f64,
    pub low: u8,
    pub high: u8,
    pub edge_pixels: usize,
}

impl CannyOutput {
    pub fn diagnostics(&self, operator: &OperatorSpec) -> CannyDiagnostics {
        CannyDiagnostics {
            operator: operator.label(),
            width: self.edges.width(),
            height: self.edges.height(),
            otsu: self.otsu.threshold,
            between_class_variance: self.otsu.between_class_variance,
            low: self.thresholds.low,
            high: self.thresholds.high,
            edge_pixels: self.edges.count(),
        }
    }
}
