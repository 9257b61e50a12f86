//! Weyl vectors, the evaluation grid, the `C^±`, `d_μ` and `k_μ` constants,
//! the interpolation polynomials `J_μ` at `k = -1`, `h = q - p + 1/2`, and
//! the verification suites.

pub mod constants;
pub mod grid;
pub mod interp;
pub mod verify;

use thiserror::Error;

use crate::partitions::{HookParams, Partition};

pub use constants::{c_factor, corollary_value, d_mu, hook_product, k_mu, paper_target, transposed_target, Sign};
pub use grid::{grid_point, restrict, weyl_vectors, GridPoint, Space};
pub use interp::{
    derive_k, evaluation_matrix, expansion_identity, interpolation_J, preferred_j, shimura_image, DerivedK,
    ExpansionEntry, ExpansionReport, Fallback, InterpolationResult, Mode, Orientation, ShimuraImage,
};
pub use verify::{verify_properties, Property, Record, Report, Status, VerifySpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("{mu} is not a {hp}-hook partition")]
    NotAHook { mu: Partition, hp: HookParams },
    #[error("normalization target for {mu} at {hp} is zero")]
    DegenerateNormalization { mu: Partition, hp: HookParams },
    #[error("inconsistent system for {mu} at {hp} in {mode} mode")]
    InconsistentSystem { mu: Partition, hp: HookParams, mode: Mode },
    #[error("system for {mu} at {hp} still underdetermined with window {window}")]
    Underdetermined { mu: Partition, hp: HookParams, window: usize },
    #[error("top coefficient of J_{mu} at {hp} is zero")]
    ZeroTopCoefficient { mu: Partition, hp: HookParams },
}
