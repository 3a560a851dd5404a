//! Derivative kernels: the operator registry, weight schemes and the
//! weight-matrix → kernel derivation.

mod derive;
mod export;
mod kernel;
pub mod registry;
mod weights;

pub use derive::{derive_kernel, estimator_coefficients, estimator_normalizer, plane_fit, PlaneFit};
pub use export::{derivation_weights, derived_gx, KernelRecord};
pub use kernel::{Axis, Kernel, KernelPair};
pub use registry::{registry_entries, registry_get, registry_get_named, Operator, RegistryEntry};
pub use weights::{build_weights_inverse_distance, build_weights_radial, WeightMatrix};
