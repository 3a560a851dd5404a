//! Distance-weighted first-derivative edge operators and the tooling to
//! evaluate them.
//!
//! * [`imgcore`]: raster type, grayscale conversion, padded correlation,
//!   Gaussian smoothing, PNG/PGM IO.
//! * [`kernels`]: the operator registry (Sobel, Prewitt, Scharr and the two
//!   weighted operators at 3x3 and 5x5), weight schemes, and the derivation
//!   of a kernel from a weight matrix through a weighted plane fit.
//! * [`canny`]: Gaussian → gradient → Otsu → non-maximum suppression →
//!   hysteresis.
//! * [`analysis`]: 8-connected edge components, edge statistics and
//!   operator-vs-operator comparison.

pub mod analysis;
pub mod canny;
mod error;
pub mod imgcore;
pub mod kernels;

pub use error::{Error, Result};
