use std::path::PathBuf;

use clap::Args;
use edgeforge::canny::{CannyParams, Norm, OperatorSpec, OtsuSource};
use edgeforge::imgcore::io::OutputFormat;
use edgeforge::imgcore::{Padding, DEFAULT_RADIUS, DEFAULT_SIGMA};
use edgeforge::kernels::Operator;
use serde::{Deserialize, Serialize};

/// Fully resolved settings of one run. Serialized into the manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub operator: Operator,
    /// Second operator; only used by `compare`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator_b: Option<Operator>,
    pub size: usize,
    pub gaussian_sigma: f64,
    pub gaussian_radius: usize,
    pub sigma_fraction: f64,
    pub norm: Norm,
    pub otsu_source: OtsuSource,
    pub padding: Padding,
    pub min_edge_size: usize,
    pub out: PathBuf,
    pub format: OutputFormat,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            operator: Operator::ProposedA,
            operator_b: None,
            size: 3,
            gaussian_sigma: DEFAULT_SIGMA,
            gaussian_radius: DEFAULT_RADIUS,
            sigma_fraction: 0.33,
            norm: Norm::L2,
            otsu_source: OtsuSource::Magnitude,
            padding: Padding::Replicate,
            min_edge_size: 1,
            out: PathBuf::from("out"),
            format: OutputFormat::Png,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn canny_params(&self) -> CannyParams {
        CannyParams {
            gaussian_sigma: self.gaussian_sigma,
            gaussian_radius: self.gaussian_radius,
            sigma_fraction: self.sigma_fraction,
            norm: self.norm,
            otsu_source: self.otsu_source,
            padding: self.padding,
        }
    }

    pub fn operator_spec(&self) -> OperatorSpec {
        OperatorSpec::registry(self.operator, self.size)
    }

    pub fn operator_b_spec(&self) -> OperatorSpec {
        OperatorSpec::registry(self.operator_b.unwrap_or(Operator::Sobel), self.size)
    }
}

/// Per-run flags. Every field is optional so that explicit flags can be
/// layered over a manifest.
#[derive(Debug, Clone, Default, Args)]
pub struct ConfigArgs {
    /// Edge operator [default: proposed_a]
    #[arg(long)]
    pub operator: Option<Operator>,
    /// Kernel size, 3 or 5 [default: 3]
    #[arg(long)]
    pub size: Option<usize>,
    /// Gaussian standard deviation [default: 1.4]
    #[arg(long)]
    pub gaussian_sigma: Option<f64>,
    /// Gaussian kernel radius [default: 2]
    #[arg(long)]
    pub gaussian_radius: Option<usize>,
    /// Hysteresis band around the Otsu threshold, in (0, 1) [default: 0.33]
    #[arg(long)]
    pub sigma_fraction: Option<f64>,
    /// Magnitude norm: l2 or l1 [default: l2]
    #[arg(long)]
    pub norm: Option<Norm>,
    /// Otsu input: magnitude or blurred [default: magnitude]
    #[arg(long)]
    pub otsu_source: Option<OtsuSource>,
    /// Border handling: replicate, reflect or zero [default: replicate]
    #[arg(long)]
    pub padding: Option<Padding>,
    /// Smallest component counted as an edge [default: 1]
    #[arg(long)]
    pub min_edge_size: Option<usize>,
    /// Output directory [default: out]
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Image output format: png or pgm [default: png]
    #[arg(long)]
    pub format: Option<OutputFormat>,
    /// Also write per-stage timings (not reproducible)
    #[arg(long)]
    pub timings: bool,
}

impl ConfigArgs {
    pub fn apply(&self, mut cfg: RunConfig) -> RunConfig {
        macro_rules! set {
            ($($f:ident),*) => {$(
                if let Some(v) = self.$f.clone() {
                    cfg.$f = v;
                }
            )*};
        }
        set!(
            operator,
            size,
            gaussian_sigma,
            gaussian_radius,
            sigma_fraction,
            norm,
            otsu_source,
            padding,
            min_edge_size,
            out,
            format
        );
        cfg.timings |= self.timings;
        cfg
    }
}
