use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::stats::{edge_stats, EdgeStats};
use crate::canny::{canny_pipeline, CannyParams, OperatorSpec};
use crate::error::Result;
use crate::imgcore::io::read_gray;
use crate::imgcore::{EdgeMap, Image};

/// One CSV-shaped statistics row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsRow {
    pub image: String,
    pub operator: String,
    pub edge_pixels: usize,
    pub num_edges: usize,
    pub avg_pixels_per_edge: f64,
}

#[derive(Debug, Clone)]
pub struct ImageComparison {
    pub image: String,
    pub stats_a: EdgeStats,
    pub stats_b: EdgeStats,
    pub edges_a: EdgeMap,
    pub edges_b: EdgeMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub image: String,
    pub error: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CompareSummary {
    pub images: usize,
    pub failures: usize,
    /// Images where `a` found strictly more edge pixels.
    pub a_more_edge_pixels: usize,
    /// Images where `a` found at least as many edge pixels.
    pub a_at_least_edge_pixels: usize,
    /// Images where `a` found strictly more components.
    pub a_more_edges: usize,
    /// Images where `a` has a strictly larger average component size.
    pub a_longer_edges: usize,
}

#[derive(Debug, Clone)]
pub struct CompareReport {
    pub operator_a: String,
    pub operator_b: String,
    /// In corpus order.
    pub images: Vec<ImageComparison>,
    pub failures: Vec<Failure>,
    pub summary: CompareSummary,
}

impl CompareReport {
    /// Two rows per image (`a` then `b`), corpus order.
    pub fn stats_rows(&self) -> Vec<StatsRow> {
        let row = |image: &str, op: &str, s: &EdgeStats| StatsRow {
            image: image.to_string(),
            operator: op.to_string(),
            edge_pixels: s.edge_pixels,
            num_edges: s.num_edges,
            avg_pixels_per_edge: s.avg_pixels_per_edge,
        };
        self.images
            .iter()
            .flat_map(|c| {
                [
                    row(&c.image, &self.operator_a, &c.stats_a),
                    row(&c.image, &self.operator_b, &c.stats_b),
                ]
            })
            .collect()
    }
}

pub fn image_label(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Runs both operators on one grayscale image.
pub fn compare_image(
    label: &str,
    image: &Image,
    op_a: &OperatorSpec,
    op_b: &OperatorSpec,
    params: &CannyParams,
    min_size: usize,
) -> Result<ImageComparison> {
    let a = canny_pipeline(image, op_a, params)?;
    let b = canny_pipeline(image, op_b, params)?;
    Ok(ImageComparison {
        image: label.to_string(),
        stats_a: edge_stats(&a.edges, min_size),
        stats_b: edge_stats(&b.edges, min_size),
        edges_a: a.edges,
        edges_b: b.edges,
    })
}

/// Compares two operators over files. Images that fail to load or process
/// become [`Failure`] records; the rest are still compared.
pub fn compare_operators(
    corpus: &[PathBuf],
    op_a: &OperatorSpec,
    op_b: &OperatorSpec,
    params: &CannyParams,
    min_size: usize,
) -> CompareReport {
    let results: Vec<_> = corpus
        .par_iter()
        .map(|path| {
            let label = image_label(path);
            read_gray(path)
                .and_then(|img| compare_image(&label, &img, op_a, op_b, params, min_size))
                .map_err(|e| Failure {
                    image: label,
                    error: e.to_string(),
                })
        })
        .collect();

    let mut images = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(c) => images.push(c),
            Err(f) => failures.push(f),
        }
    }
    let summary = summarize(&images, failures.len());
    CompareReport {
        operator_a: op_a.label(),
        operator_b: op_b.label(),
        images,
        failures,
        summary,
    }
}

fn summarize(images: &[ImageComparison], failures: usize) -> CompareSummary {
    let count =
        |f: &dyn Fn(&EdgeStats, &EdgeStats) -> bool| images.iter().filter(|c| f(&c.stats_a, &c.stats_b)).count();
    CompareSummary {
        images: images.len(),
        failures,
        a_more_edge_pixels: count(&|a, b| a.edge_pixels > b.edge_pixels),
        a_at_least_edge_pixels: count(&|a, b| a.edge_pixels >= b.edge_pixels),
        a_more_edges: count(&|a, b| a.num_edges > b.num_edges),
        a_longer_edges: count(&|a, b| a.avg_pixels_per_edge > b.avg_pixels_per_edge),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imgcore::io::{encode_gray, OutputFormat};
    use crate::imgcore::Grid;
    use crate::kernels::Operator;

    fn square_png(dir: &Path, name: &str) -> PathBuf {
        let img = Grid::from_fn(48, 48, |r, c| {
            if (12..36).contains(&r) && (12..36).contains(&c) {
                230.0
            } else {
                20.0
            }
        })
        .unwrap();
        let path = dir.join(name);
        std::fs::write(&path, encode_gray(&img, OutputFormat::Png).unwrap()).unwrap();
        path
    }

    fn tmpdir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("edgeforge-compare-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        dir
    }

    #[test]
    fn same_operator_gives_identical_columns() {
        let dir = tmpdir("same");
        let p = square_png(&dir, "sq.png");
        let sobel = OperatorSpec::registry(Operator::Sobel, 3);
        let rep = compare_operators(&[p], &sobel, &sobel, &CannyParams::default(), 1);
        assert_eq!(rep.images.len(), 1);
        assert_eq!(rep.images[0].stats_a, rep.images[0].stats_b);
        assert_eq!(rep.stats_rows().len(), 2);
        assert_eq!(rep.summary.a_more_edge_pixels, 0);
        assert_eq!(rep.summary.a_at_least_edge_pixels, 1);
        std::fs::remove_dir_all(dir).ok();
    }

    #[test]
    fn unreadable_file_is_recorded_and_run_continues() {
        let dir = tmpdir("bad");
        let good = square_png(&dir, "a.png");
        let bad = dir.join("b.png");
        std::fs::write(&bad, b"not a png").unwrap();
        let missing = dir.join("c.png");
        let op_a = OperatorSpec::registry(Operator::ProposedA, 3);
        let op_b = OperatorSpec::registry(Operator::Sobel, 3);
        let rep = compare_operators(&[good, bad, missing], &op_a, &op_b, &CannyParams::default(), 1);
        assert_eq!(rep.summary.images, 1);
        assert_eq!(rep.summary.failures, 2);
        assert_eq!(rep.failures[0].image, "b.png");
        assert_eq!(rep.failures[1].image, "c.png");
        assert_eq!(rep.stats_rows()[0].operator, "proposed_a3");
        std::fs::remove_dir_all(dir).ok();
    }
}
