//! Otsu-driven Canny edge detection with pluggable derivative kernels.

mod gradient;
mod pipeline;
mod suppress;
mod threshold;

pub use gradient::{gradient, gradient_with, normalize_min_max, Direction, GradientField, Norm};
pub use pipeline::{
    canny_pipeline, CannyDiagnostics, CannyOutput, CannyParams, OperatorSpec, OtsuSource, StageTimings,
};
pub use suppress::{hysteresis, hysteresis_nonzero, non_max_suppression};
pub use threshold::{
    histogram, hysteresis_thresholds, otsu_from_histogram, otsu_threshold, Histogram, HysteresisThresholds, OtsuResult,
    ThresholdConfig,
};
