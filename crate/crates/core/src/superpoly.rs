//! Super Jack polynomials, supersymmetry predicates, the even ring basis in
//! squared variables and the restriction map from `𝔥*` to `𝔞*`.
//!
//! Two variable lists are used throughout: `x1..xp, y1..yq` on `𝔞*` and
//! `x+1..x+p, x-1..x-p, y+1..y+q, y-1..y-q` on `𝔥*`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactalg::{AlgebraError, ExactScalar, Rational, SparsePoly};
use crate::partitions::{enumerate_hooks, HookParams, Partition, SizeMode};
use crate::symmfunc::{jack_p, JackParam, SymError, SymFun};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperError {
    #[error("θ = 0 has no image under φ_θ")]
    ZeroTheta,
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// cancellation along `x1 = t, y1 = -t`
    Signed,
    /// cancellation along `x1 = y1 = t`
    Plain,
}

pub fn a_vars(hp: HookParams) -> Vec<String> {
    (1..=hp.p)
        .map(|i| format!("x{i}"))
        .chain((1..=hp.q).map(|j| format!("y{j}")))
        .collect()
}

pub fn h_vars(hp: HookParams) -> Vec<String> {
    let mut v = Vec::with_capacity(2 * (hp.p + hp.q));
    for (name, n) in [("x", hp.p), ("y", hp.q)] {
        for sign in ['+', '-'] {
            v.extend((1..=n).map(|i| format!("{name}{sign}{i}")));
        }
    }
    v
}

fn power_sum(vars: &[String], xs: &[usize], ys: &[usize], r: u32, y_coeff: &ExactScalar) -> SparsePoly {
    let n = vars.len();
    let mut terms = Vec::new();
    for &i in xs {
        let mut e = vec![0; n];
        e[i] = r;
        terms.push((e, ExactScalar::one()));
    }
    for &j in ys {
        let mut e = vec![0; n];
        e[j] = r;
        terms.push((e, y_coeff.clone()));
    }
    SparsePoly::from_terms(vars, terms).expect("arity matches")
}

fn sign_pow(r: u32) -> ExactScalar {
    ExactScalar::from_int(if r.is_multiple_of(2) { 1 } else { -1 })
}

/// `Σ x_i^r - (-1)^r Σ y_j^r` over `x1..xp, y1..yq`.
pub fn a_power_sum(r: u32, hp: HookParams) -> SparsePoly {
    let xs: Vec<usize> = (0..hp.p).collect();
    let ys: Vec<usize> = (hp.p..hp.p + hp.q).collect();
    power_sum(&a_vars(hp), &xs, &ys, r, &-sign_pow(r))
}

/// `Σ x_{±i}^r - (-1)^r Σ y_{±j}^r` over the `𝔥*` list.
pub fn h_power_sum(r: u32, hp: HookParams) -> SparsePoly {
    let xs: Vec<usize> = (0..2 * hp.p).collect();
    let ys: Vec<usize> = (2 * hp.p..2 * (hp.p + hp.q)).collect();
    power_sum(&h_vars(hp), &xs, &ys, r, &-sign_pow(r))
}

/// `Σ x_i^r - (1/θ) Σ y_j^r`.
pub fn phi_generator(r: u32, hp: HookParams, theta: &JackParam) -> Result<SparsePoly, SuperError> {
    let th = theta.scalar();
    let inv = th.recip().map_err(|_| SuperError::ZeroTheta)?;
    let xs: Vec<usize> = (0..hp.p).collect();
    let ys: Vec<usize> = (hp.p..hp.p + hp.q).collect();
    Ok(power_sum(&a_vars(hp), &xs, &ys, r, &-inv))
}

/// The homomorphism `p_r ↦ Σ x_i^r - (1/θ) Σ y_j^r`.
pub fn phi_theta(f: &SymFun, hp: HookParams, theta: &JackParam) -> Result<SparsePoly, SuperError> {
    let vars = a_vars(hp);
    let max_part = f
        .coeffs()
        .keys()
        .flat_map(|l| l.parts().first().copied())
        .max()
        .unwrap_or(0);
    let gens: Vec<SparsePoly> = (0..=max_part as u32)
        .map(|r| phi_generator(r, hp, theta))
        .collect::<Result<_, _>>()?;
    let mut out = SparsePoly::zero(&vars);
    for (lambda, c) in f.coeffs() {
        let mut t = SparsePoly::constant(&vars, c.clone());
        for (part, mult) in lambda.multiplicities() {
            t = &t * &gens[part].pow(mult as u32);
        }
        out = &out + &t;
    }
    Ok(out)
}

/// `SP_λ(x, y; θ) = φ_θ(P_λ(x; θ))`.
pub fn super_jack(lambda: &Partition, hp: HookParams, theta: &JackParam) -> Result<SparsePoly, SuperError> {
    if matches!(theta, JackParam::Value(v) if v.is_zero()) {
        return Err(SuperError::ZeroTheta);
    }
    phi_theta(&jack_p(lambda, theta)?, hp, theta)
}

/// `x_i ↦ x_i², y_j ↦ y_j²`.
pub fn squared_substitution(f: &SparsePoly) -> SparsePoly {
    f.map_exponents(|e| e.iter().map(|&k| 2 * k).collect())
}

/// `SP_ν(x², y²; 1)`, cached.
pub fn squared_super_jack(nu: &Partition, hp: HookParams) -> SparsePoly {
    type Cache = RwLock<HashMap<(HookParams, Partition), SparsePoly>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (hp, nu.clone());
    if let Some(f) = cache.read().expect("basis cache poisoned").get(&key) {
        return f.clone();
    }
    let sp = super_jack(nu, hp, &JackParam::Value(Rational::one()))
        .expect("θ = 1 is never degenerate");
    let f = squared_substitution(&sp);
    cache
        .write()
        .expect("basis cache poisoned")
        .entry(key)
        .or_insert(f)
        .clone()
}

/// Pairs `(ν, SP_ν(x², y²; 1))` for `ν ∈ ℋ_d(p,q)` in enumeration order.
pub fn lambda0_basis(hp: HookParams, d: usize) -> Vec<(Partition, SparsePoly)> {
    enumerate_hooks(hp, d, SizeMode::UpTo)
        .into_iter()
        .map(|nu| {
            let f = squared_super_jack(&nu, hp);
            (nu, f)
        })
        .collect()
}

fn separately_symmetric(f: &SparsePoly, hp: HookParams) -> bool {
    let blocks = [(0, hp.p), (hp.p, hp.p + hp.q)];
    blocks.iter().all(|&(lo, hi)| {
        (lo..hi).all(|i| (i + 1..hi).all(|j| f.swap_vars(i, j) == *f))
    })
}

fn cancels(f: &SparsePoly, hp: HookParams, variant: Variant) -> bool {
    let vars = a_vars(hp);
    let mut target = vars.clone();
    target.push("t".to_string());
    let t = SparsePoly::var(&target, "t").expect("t is declared");
    let y_image = match variant {
        Variant::Signed => -&t,
        Variant::Plain => t.clone(),
    };
    let assignment = BTreeMap::from([(vars[0].clone(), t), (vars[hp.p].clone(), y_image)]);
    let Ok(f) = lift(f, &target) else {
        return false;
    };
    let Ok(g) = f.substitute(&target, &assignment) else {
        return false;
    };
    let ti = target.len() - 1;
    let independent = g.terms().all(|(m, _)| m.0[ti] == 0);
    independent
}

fn lift(f: &SparsePoly, target: &[String]) -> Result<SparsePoly, AlgebraError> {
    if !target.starts_with(f.vars()) {
        return Err(AlgebraError::VariableMismatch(format!("{:?}", f.vars())));
    }
    SparsePoly::from_terms(
        target,
        f.terms().map(|(m, c)| {
            let mut e = m.0.clone();
            e.resize(target.len(), 0);
            (e, c.clone())
        }),
    )
}

/// Separate symmetry in the `x` and `y` blocks plus `t`-independence along
/// the cancellation line of `variant`.
pub fn is_supersymmetric(f: &SparsePoly, hp: HookParams, variant: Variant) -> bool {
    f.vars() == a_vars(hp) && separately_symmetric(f, hp) && cancels(f, hp, variant)
}

/// Supersymmetric and invariant under every sign change of a variable.
pub fn is_even_supersymmetric(f: &SparsePoly, hp: HookParams) -> bool {
    f.terms().all(|(m, _)| m.0.iter().all(|e| e % 2 == 0))
        && is_supersymmetric(f, hp, Variant::Signed)
}

/// `x_{±i} ↦ ±x_i/2, y_{±j} ↦ ±y_j/2`.
pub fn res_map(f: &SparsePoly, hp: HookParams) -> Result<SparsePoly, SuperError> {
    let target = a_vars(hp);
    let half = ExactScalar::from_ratio(1, 2);
    let mut assignment = BTreeMap::new();
    for (name, n, offset) in [("x", hp.p, 0), ("y", hp.q, hp.p)] {
        for i in 1..=n {
            let v = SparsePoly::var(&target, &target[offset + i - 1])?;
            assignment.insert(format!("{name}+{i}"), v.scale(&half));
            assignment.insert(format!("{name}-{i}"), v.scale(&-&half));
        }
    }
    Ok(f.substitute(&target, &assignment)?)
}

/// The point `x_{±i} = ±a_i, y_{±j} = ±b_j` of `𝔥*`.
pub fn h_point(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut v: Vec<Rational> = a.to_vec();
    v.extend(a.iter().map(|x| -x));
    v.extend(b.iter().cloned());
    v.extend(b.iter().map(|x| -x));
    v
}
