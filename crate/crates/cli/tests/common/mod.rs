#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use edgeforge::imgcore::io::{encode_gray, OutputFormat};
use edgeforge::imgcore::{Grid, Image};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn edgeforge() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_edgeforge"));
    cmd.env_remove("EDGEFORGE_THREADS");
    cmd
}

pub fn run(args: &[&str]) -> Output {
    edgeforge().args(args).output().expect("spawn edgeforge")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

pub fn write_png(path: &Path, image: &Image) -> PathBuf {
    std::fs::write(path, encode_gray(image, OutputFormat::Png).unwrap()).unwrap();
    path.to_path_buf()
}

/// Dark background with a bright rectangle, plus mild seeded noise so that
/// operators disagree on some pixels.
pub fn scene(seed: u64, w: usize, h: usize) -> Image {
    let mut rng = StdRng::seed_from_u64(seed);
    let (r0, c0) = (rng.gen_range(4..h / 3), rng.gen_range(4..w / 3));
    let (r1, c1) = (rng.gen_range(2 * h / 3..h - 4), rng.gen_range(2 * w / 3..w - 4));
    let (cr, cc, rad) = (h as f64 / 2.0, w as f64 / 2.0, (w.min(h) / 6) as f64);
    Grid::from_fn(w, h, |r, c| {
        let mut v = 40.0;
        if (r0..r1).contains(&r) && (c0..c1).contains(&c) {
            v = 170.0;
        }
        if (r as f64 - cr).hypot(c as f64 - cc) < rad {
            v = 90.0;
        }
        (v + rng.gen_range(-12.0..12.0f64)).clamp(0.0, 255.0)
    })
    .unwrap()
}

pub fn square() -> Image {
    Grid::from_fn(64, 64, |r, c| {
        if (16..48).contains(&r) && (16..48).contains(&c) {
            255.0
        } else {
            0.0
        }
    })
    .unwrap()
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}
