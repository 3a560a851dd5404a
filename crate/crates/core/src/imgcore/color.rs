use image::RgbImage;

use super::grid::{Grid, Image};
use crate::error::{Error, Result};

/// BT.601 luma, `0.299 R + 0.587 G + 0.114 B`, rounded half-up.
///
/// Evaluated in integer thousandths so the rounding is exact.
#[inline]
pub fn luma(r: u8, g: u8, b: u8) -> u8 {
    let weighted = 299 * u32::from(r) + 587 * u32::from(g) + 114 * u32::from(b);
    ((weighted + 500) / 1000) as u8
}

pub fn to_grayscale(rgb: &RgbImage) -> Result<Image> {
    let (w, h) = (rgb.width() as usize, rgb.height() as usize);
    if w == 0 || h == 0 {
        return Err(Error::Dimension(format!("empty RGB image ({w}x{h})")));
    }
    let data = rgb.pixels().map(|p| f64::from(luma(p.0[0], p.0[1], p.0[2]))).collect();
    Grid::from_vec(w, h, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_colors() {
        assert_eq!(luma(255, 255, 255), 255);
        assert_eq!(luma(0, 0, 0), 0);
        assert_eq!(luma(255, 0, 0), 76);
        assert_eq!(luma(0, 255, 0), 150);
        assert_eq!(luma(0, 0, 255), 29);
    }

    #[test]
    fn gray_inputs_pass_through() {
        for g in 0..=255u8 {
            assert_eq!(luma(g, g, g), g);
        }
    }

    #[test]
    fn empty_input_is_a_dimension_error() {
        let empty = RgbImage::new(0, 4);
        assert!(matches!(to_grayscale(&empty), Err(Error::Dimension(_))));
    }

    #[test]
    fn converts_whole_raster() {
        let rgb = RgbImage::from_raw(2, 1, vec![255, 0, 0, 10, 10, 10]).unwrap();
        let gray = to_grayscale(&rgb).unwrap();
        assert_eq!(gray.data(), &[76.0, 10.0]);
    }
}
