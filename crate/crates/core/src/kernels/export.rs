use serde::{Deserialize, Serialize};

use super::derive::derive_kernel;
use super::kernel::{Axis, Kernel};
use super::registry::Operator;
use super::weights::{build_weights_inverse_distance, build_weights_radial, WeightMatrix};
use crate::error::{Error, Result};

/// JSON form of a kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelRecord {
    pub name: String,
    pub size: usize,
    pub axis: Axis,
    /// Row-major, top row first.
    pub coefficients: Vec<Vec<i64>>,
}

impl KernelRecord {
    pub fn new(name: impl Into<String>, kernel: &Kernel) -> Self {
        Self {
            name: name.into(),
            size: kernel.side(),
            axis: kernel.axis(),
            coefficients: kernel.rows(),
        }
    }

    pub fn to_kernel(&self) -> Result<Kernel> {
        if self.coefficients.len() != self.size || self.coefficients.iter().any(|r| r.len() != self.size) {
            return Err(Error::InvalidKernel(format!(
                "coefficients of '{}' are not {}x{}",
                self.name, self.size, self.size
            )));
        }
        Kernel::new(self.axis, self.size, self.coefficients.concat())
    }
}

/// Weight scheme whose plane fit is meant to generate an operator, if any.
pub fn derivation_weights(op: Operator, size: usize) -> Result<Option<WeightMatrix>> {
    let radius = size / 2;
    Ok(match op {
        Operator::Prewitt => Some(WeightMatrix::uniform(radius)?),
        Operator::ProposedA => Some(build_weights_inverse_distance(radius)?),
        Operator::ProposedB => Some(build_weights_radial(radius)?),
        Operator::Sobel | Operator::Scharr => None,
    })
}

/// Derived x kernel for an operator, when it has a weight scheme.
pub fn derived_gx(op: Operator, size: usize) -> Result<Option<Kernel>> {
    derivation_weights(op, size)?
        .map(|w| derive_kernel(&w, Axis::X))
        .transpose()
}
