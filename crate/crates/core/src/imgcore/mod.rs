//! Raster substrate: the grid type, grayscale conversion, border-aware
//! correlation, Gaussian smoothing and file IO.

mod color;
mod convolve;
mod grid;
pub mod io;
mod smooth;

pub use color::{luma, to_grayscale};
pub use convolve::{convolve, Padding, Stencil};
pub use grid::{quantize, EdgeMap, Field, Grid, Image};
pub use smooth::{gaussian_blur, gaussian_taps, DEFAULT_RADIUS, DEFAULT_SIGMA};
