//! Raster IO: binary PGM (P5) is handled here directly, PNG and JPEG go
//! through the `image` crate. Everything is 8-bit single channel on the way
//! out; color input is reduced with [`to_grayscale`](super::to_grayscale).

use std::io::Cursor;
use std::path::Path;

use image::{DynamicImage, ImageFormat as CodecFormat, RgbImage};
use serde::{Deserialize, Serialize};

use super::color::to_grayscale;
use super::grid::{quantize, EdgeMap, Grid, Image};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Png,
    Pgm,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Png => "png",
            OutputFormat::Pgm => "pgm",
        }
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "png" => Ok(OutputFormat::Png),
            "pgm" => Ok(OutputFormat::Pgm),
            other => Err(Error::Parameter(format!("unknown output format '{other}' (png, pgm)"))),
        }
    }
}

/// Reads any supported file as a grayscale image.
pub fn read_gray(path: impl AsRef<Path>) -> Result<Image> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|source| Error::Read {
        path: path.to_path_buf(),
        source,
    })?;
    decode_gray(&bytes).map_err(|e| match e {
        Error::Decode { reason, .. } => Error::Decode {
            path: path.to_path_buf(),
            reason,
        },
        Error::Dimension(reason) => Error::Decode {
            path: path.to_path_buf(),
            reason,
        },
        other => other,
    })
}

pub fn decode_gray(bytes: &[u8]) -> Result<Image> {
    if bytes.starts_with(b"P5") {
        return decode_pgm(bytes);
    }
    let decoded = image::load_from_memory(bytes).map_err(|e| decode_err(e.to_string()))?;
    match decoded {
        DynamicImage::ImageLuma8(gray) => {
            let (w, h) = (gray.width() as usize, gray.height() as usize);
            Grid::from_vec(w, h, gray.into_raw().into_iter().map(f64::from).collect())
        }
        other => to_grayscale(&other.into_rgb8()),
    }
}

pub fn read_rgb(path: impl AsRef<Path>) -> Result<RgbImage> {
    let path = path.as_ref();
    let img = image::open(path).map_err(|e| Error::Decode {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    Ok(img.into_rgb8())
}

fn decode_err(reason: impl Into<String>) -> Error {
    Error::Decode {
        path: Default::default(),
        reason: reason.into(),
    }
}

/// Parses a binary PGM. Maxval above 255 is read as 16-bit big-endian and
/// rescaled; any maxval is mapped onto `0..=255`.
pub fn decode_pgm(bytes: &[u8]) -> Result<Image> {
    let mut pos = 0usize;
    let mut fields = [0usize; 4];
    for (i, field) in fields.iter_mut().enumerate() {
        // skip whitespace and comments
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while bytes.get(pos).is_some_and(|&b| b != b'\n') {
                        pos += 1;
                    }
                }
                _ => break,
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#') {
            pos += 1;
        }
        let token = std::str::from_utf8(&bytes[start..pos]).map_err(|_| decode_err("non-ASCII PGM header"))?;
        if i == 0 {
            if token != "P5" {
                return Err(decode_err(format!("not a binary PGM (magic '{token}')")));
            }
        } else {
            *field = token
                .parse()
                .map_err(|_| decode_err(format!("bad PGM header field '{token}'")))?;
        }
    }
    // exactly one whitespace byte separates the header from the raster
    if !bytes.get(pos).is_some_and(|b| b.is_ascii_whitespace()) {
        return Err(decode_err("truncated PGM header"));
    }
    pos += 1;

    let [_, width, height, maxval] = fields;
    if maxval == 0 || maxval > 65535 {
        return Err(decode_err(format!("PGM maxval {maxval} out of range")));
    }
    let bytes_per = if maxval > 255 { 2 } else { 1 };
    let need = width
        .checked_mul(height)
        .and_then(|n| n.checked_mul(bytes_per))
        .ok_or_else(|| decode_err("PGM dimensions overflow"))?;
    let raster = bytes
        .get(pos..pos + need)
        .ok_or_else(|| decode_err(format!("PGM raster truncated: need {need} bytes")))?;

    let data: Vec<f64> = if bytes_per == 1 {
        raster.iter().map(|&v| rescale(u32::from(v), maxval as u32)).collect()
    } else {
        raster
            .chunks_exact(2)
            .map(|p| rescale(u32::from(u16::from_be_bytes([p[0], p[1]])), maxval as u32))
            .collect()
    };
    Grid::from_vec(width, height, data)
}

fn rescale(v: u32, maxval: u32) -> f64 {
    let v = v.min(maxval);
    if maxval == 255 {
        f64::from(v)
    } else {
        f64::from((v * 255 * 2 + maxval) / (2 * maxval))
    }
}

pub fn encode_pgm(gray: &[u8], width: usize, height: usize) -> Vec<u8> {
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend_from_slice(gray);
    out
}

/// Quantized 8-bit encoding of an intensity image.
pub fn encode_gray(image: &Image, format: OutputFormat) -> Result<Vec<u8>> {
    let pixels: Vec<u8> = image.data().iter().map(|&v| quantize(v)).collect();
    encode_luma(pixels, image.width(), image.height(), format)
}

/// Edge pixels as 255, background as 0.
pub fn encode_edges(edges: &EdgeMap, format: OutputFormat) -> Result<Vec<u8>> {
    let pixels = edges.data().iter().map(|&e| if e { 255 } else { 0 }).collect();
    encode_luma(pixels, edges.width(), edges.height(), format)
}

fn encode_luma(pixels: Vec<u8>, width: usize, height: usize, format: OutputFormat) -> Result<Vec<u8>> {
    match format {
        OutputFormat::Pgm => Ok(encode_pgm(&pixels, width, height)),
        OutputFormat::Png => {
            let img = image::GrayImage::from_raw(width as u32, height as u32, pixels)
                .ok_or_else(|| Error::Encode("buffer size mismatch".into()))?;
            let mut buf = Cursor::new(Vec::new());
            img.write_to(&mut buf, CodecFormat::Png)
                .map_err(|e| Error::Encode(e.to_string()))?;
            Ok(buf.into_inner())
        }
    }
}

/// PNG encoding of an RGB raster.
pub fn encode_rgb_png(rgb: &Grid<[u8; 3]>) -> Result<Vec<u8>> {
    let raw: Vec<u8> = rgb.data().iter().flatten().copied().collect();
    let img = RgbImage::from_raw(rgb.width() as u32, rgb.height() as u32, raw)
        .ok_or_else(|| Error::Encode("buffer size mismatch".into()))?;
    let mut buf = Cursor::new(Vec::new());
    img.write_to(&mut buf, CodecFormat::Png)
        .map_err(|e| Error::Encode(e.to_string()))?;
    Ok(buf.into_inner())
}
