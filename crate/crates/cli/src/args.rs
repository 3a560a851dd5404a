use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use edgeforge::kernels::Operator;

use crate::config::ConfigArgs;

#[derive(Debug, Parser)]
#[command(
    name = "edgeforge",
    version,
    about = "Gradient operators, Canny edge maps and operator comparisons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the normalized gradient magnitude of an unsmoothed image
    Gradient(RunArgs),
    /// Run the Canny pipeline and write the edge map plus diagnostics
    Canny(RunArgs),
    /// Compare two operators on an image or a directory of images
    Compare(CompareArgs),
    /// Print registry kernels as JSON
    Kernels(KernelArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Input image (PNG, PGM or JPEG); `compare` also accepts a directory
    pub input: Option<PathBuf>,
    /// Repeat the run recorded in a manifest; other flags override it
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    #[command(flatten)]
    pub config: ConfigArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Operator compared against --operator [default: sobel]
    #[arg(long)]
    pub operator_b: Option<Operator>,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    /// Only this operator
    #[arg(long)]
    pub name: Option<Operator>,
    /// Only this size (3 or 5)
    #[arg(long)]
    pub size: Option<usize>,
    /// Also derive each kernel from its weight scheme and report whether it matches
    #[arg(long)]
    pub derive: bool,
}
