//! Exact arithmetic: rationals, rational functions in θ, sparse multivariate
//! polynomials and fraction-free linear solving.

pub mod linsolve;
pub mod poly;
pub mod scalar;

use thiserror::Error;

pub use linsolve::{mat_vec, solve_exact, LinearSolveOutcome};
pub use poly::{Monomial, PolyRecord, SparsePoly, TermRecord};
pub use scalar::{int, parse_rational, rat, ExactScalar, RatFunc, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("pole: denominator vanishes at θ = {0}")]
    Pole(Rational),
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("cannot parse polynomial: {0}")]
    ParsePoly(String),
}

/// Specializes θ in `f` to `theta0`.
pub fn scalar_eval(f: &ExactScalar, theta0: &Rational) -> Result<Rational, AlgebraError> {
    f.eval(theta0)
}
