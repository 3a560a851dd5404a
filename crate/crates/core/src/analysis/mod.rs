//! Edge-map statistics: 8-connected components, per-map counts, pairwise
//! differences and corpus-level operator comparison.

mod compare;
mod labeling;
mod stats;

pub use compare::{
    compare_image, compare_operators, image_label, CompareReport, CompareSummary, Failure, ImageComparison, StatsRow,
};
pub use labeling::{label_components, ComponentLabeling};
pub use stats::{diff_maps, edge_stats, DiffMaps, EdgeStats};
