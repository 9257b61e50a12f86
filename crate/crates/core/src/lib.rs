//! Exact computer algebra for super Jack polynomials and Type BC
//! interpolation polynomials on (p,q)-hook partitions.
//!
//! Modules, bottom up:
//!
//! - [`partitions`]: partitions, transposes, hook enumeration, `λ^♮`
//! - [`exactalg`]: rationals, rational functions in θ, sparse polynomials,
//!   fraction-free linear solving
//! - [`symmfunc`]: power-sum and monomial bases, the θ inner product and
//!   Jack polynomials `P_λ(x; θ)`
//! - [`superpoly`]: super Jack polynomials, supersymmetry predicates, the
//!   even ring basis and the restriction map
//! - [`interpbc`]: Weyl vectors, the evaluation grid, the `C^±`, `d_μ`,
//!   `k_μ` constants, interpolation polynomials `J_μ` and verification suites
//!
//! No floating point is used anywhere.

pub mod exactalg;
pub mod interpbc;
pub mod partitions;
pub mod superpoly;
pub mod symmfunc;

pub use exactalg::{ExactScalar, Rational, SparsePoly};
pub use partitions::{HookParams, Partition};
