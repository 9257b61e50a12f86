//! Symmetric functions in the power-sum basis, conversion to the monomial
//! basis, the θ-deformed inner product and Jack polynomials.

pub mod jack;
pub mod transition;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{ExactScalar, Rational};
use crate::partitions::Partition;

pub use jack::{jack_p, JackCache, JackParam};
pub use transition::monomial_expand;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("m_{partition} needs at least {} variables, got {n}", partition.len())]
    TooFewVariables { partition: Partition, n: usize },
    #[error("component of degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("degenerate Jack parameter θ = {0}")]
    DegenerateParameter(Rational),
    #[error("cache file: {0}")]
    Cache(String),
}

/// A symmetric function as an exact combination of power-sum products
/// `p_λ = p_{λ1} p_{λ2} ...`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymFun {
    coeffs: BTreeMap<Partition, ExactScalar>,
}

impl SymFun {
    pub fn zero() -> Self {
        SymFun::default()
    }

    /// `p_λ`.
    pub fn power(lambda: &Partition) -> Self {
        SymFun {
            coeffs: BTreeMap::from([(lambda.clone(), ExactScalar::one())]),
        }
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (Partition, ExactScalar)>) -> Self {
        let mut f = SymFun::zero();
        for (l, c) in coeffs {
            f.add_term(l, c);
        }
        f
    }

    fn add_term(&mut self, lambda: Partition, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(lambda).or_insert_with(ExactScalar::zero);
        *e += &c;
        if e.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, ExactScalar> {
        &self.coeffs
    }

    pub fn coefficient(&self, lambda: &Partition) -> ExactScalar {
        self.coeffs.get(lambda).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    pub fn homogeneous_part(&self, d: usize) -> SymFun {
        SymFun {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> SymFun {
        SymFun::from_coeffs(self.coeffs.iter().map(|(l, a)| (l.clone(), a * c)))
    }

    pub fn add(&self, other: &SymFun) -> SymFun {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFun) -> SymFun {
        self.add(&other.scale(&ExactScalar::from_int(-1)))
    }

    /// Product; `p_λ p_μ = p_{λ ∪ μ}`.
    pub fn mul(&self, other: &SymFun) -> SymFun {
        let mut out = SymFun::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), ca * cb);
            }
        }
        out
    }

    /// The monomial symmetric function `m_λ`.
    pub fn monomial(lambda: &Partition) -> SymFun {
        let t = transition::tables(lambda.size());
        SymFun::from_coeffs(
            t.m_to_p[lambda]
                .iter()
                .map(|(mu, c)| (mu.clone(), ExactScalar::Rational(c.clone()))),
        )
    }

    /// Coefficients in the monomial basis.
    pub fn to_monomial(&self) -> BTreeMap<Partition, ExactScalar> {
        let mut out: BTreeMap<Partition, ExactScalar> = BTreeMap::new();
        for (lambda, c) in &self.coeffs {
            let t = transition::tables(lambda.size());
            for (mu, k) in &t.p_to_m[lambda] {
                let term = c * &ExactScalar::Rational(Rational::from_integer(k.clone()));
                *out.entry(mu.clone()).or_insert_with(ExactScalar::zero) += &term;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Builds from monomial-basis coefficients.
    pub fn from_monomial(coeffs: &BTreeMap<Partition, ExactScalar>) -> SymFun {
        let mut out = SymFun::zero();
        for (lambda, c) in coeffs {
            out = out.add(&SymFun::monomial(lambda).scale(c));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "p")]
    PowerSum,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
        })
    }
}

/// Coefficients of a symmetric function in a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpansion {
    pub basis: Basis,
    pub coeffs: BTreeMap<Partition, ExactScalar>,
}

impl SymExpansion {
    pub fn power_sums(f: &SymFun) -> Self {
        SymExpansion {
            basis: Basis::PowerSum,
            coeffs: f.coeffs.clone(),
        }
    }

    pub fn to_symfun(&self) -> SymFun {
        match self.basis {
            Basis::PowerSum => SymFun::from_coeffs(self.coeffs.clone()),
            Basis::Monomial => SymFun::from_monomial(&self.coeffs),
        }
    }

    pub fn to_record(&self) -> SymFunRecord {
        SymFunRecord {
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .map(|(l, c)| SymTermRecord {
                    partition: l.clone(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_record(r: &SymFunRecord) -> Self {
        SymExpansion {
            basis: r.basis,
            coeffs: r
                .terms
                .iter()
                .filter(|t| !t.coefficient.is_zero())
                .map(|t| (t.partition.clone(), t.coefficient.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}{}", self.basis, l)?;
            } else {
                write!(f, "{}*{}{}", c, self.basis, l)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymTermRecord {
    pub partition: Partition,
    pub coefficient: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymFunRecord {
    pub basis: Basis,
    pub terms: Vec<SymTermRecord>,
}

/// Re-expresses `f` in `target`. Every component of `f` must have degree at
/// most `degree_bound`.
pub fn basis_convert(
    f: &SymExpansion,
    target: Basis,
    degree_bound: usize,
) -> Result<SymExpansion, SymError> {
    if let Some(d) = f.coeffs.keys().map(Partition::size).max() {
        if d > degree_bound {
            return Err(SymError::DegreeBound {
                degree: d,
                bound: degree_bound,
            });
        }
    }
    let as_p = f.to_symfun();
    let coeffs = match target {
        Basis::PowerSum => as_p.coeffs,
        Basis::Monomial => as_p.to_monomial(),
    };
    Ok(SymExpansion {
        basis: target,
        coeffs,
    })
}

/// `z_λ = Π_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, m) in lambda.multiplicities() {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

/// `⟨p_λ, p_μ⟩_θ = δ_{λμ} z_λ θ^{-ℓ(λ)}`, extended bilinearly.
pub fn jack_inner(f: &SymFun, g: &SymFun, theta: &ExactScalar) -> Result<ExactScalar, SymError> {
    let inv = theta.recip().map_err(|_| SymError::DegenerateParameter(Rational::zero()))?;
    let mut total = ExactScalar::zero();
    for (lambda, a) in &f.coeffs {
        if let Some(b) = g.coeffs.get(lambda) {
            let w = ExactScalar::Rational(Rational::from_integer(z_lambda(lambda)))
                * inv.pow(lambda.len() as u32);
            total += &(&(a * b) * &w);
        }
    }
    Ok(total)
}
