use serde::{Deserialize, Serialize};

use super::labeling::label_components;
use crate::error::{Error, Result};
use crate::imgcore::{EdgeMap, Grid};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeStats {
    pub edge_pixels: usize,
    pub num_edges: usize,
    pub avg_pixels_per_edge: f64,
}

/// Component statistics, ignoring components smaller than `min_size`.
pub fn edge_stats(edges: &EdgeMap, min_size: usize) -> EdgeStats {
    let labeling = label_components(edges);
    let kept: Vec<usize> = labeling
        .component_sizes
        .into_iter()
        .filter(|&s| s >= min_size)
        .collect();
    let edge_pixels: usize = kept.iter().sum();
    let num_edges = kept.len();
    EdgeStats {
        edge_pixels,
        num_edges,
        avg_pixels_per_edge: if num_edges == 0 {
            0.0
        } else {
            edge_pixels as f64 / num_edges as f64
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffMaps {
    pub only_in_a: EdgeMap,
    pub only_in_b: EdgeMap,
    pub in_both: EdgeMap,
}

pub fn diff_maps(a: &EdgeMap, b: &EdgeMap) -> Result<DiffMaps> {
    if !a.same_shape(b) {
        return Err(Error::Dimension(format!(
            "edge maps differ in size: {}x{} vs {}x{}",
            a.width(),
            a.height(),
            b.width(),
            b.height()
        )));
    }
    let zip = |f: fn(bool, bool) -> bool| {
        Grid::from_vec(
            a.width(),
            a.height(),
            a.data().iter().zip(b.data()).map(|(&x, &y)| f(x, y)).collect(),
        )
        .expect("shape checked")
    };
    Ok(DiffMaps {
        only_in_a: zip(|x, y| x && !y),
        only_in_b: zip(|x, y| !x && y),
        in_both: zip(|x, y| x && y),
    })
}

impl DiffMaps {
    /// RGB composite: red = only in `a`, green = only in `b`, blue = both.
    pub fn composite(&self) -> Grid<[u8; 3]> {
        let n = self.in_both.len();
        let data = (0..n)
            .map(|i| {
                let on = |m: &EdgeMap| if m.data()[i] { 255 } else { 0 };
                [on(&self.only_in_a), on(&self.only_in_b), on(&self.in_both)]
            })
            .collect();
        Grid::from_vec(self.in_both.width(), self.in_both.height(), data).expect("shape preserved")
    }
}
