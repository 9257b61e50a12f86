//! Transition between the power-sum basis `p_λ` and the monomial basis
//! `m_λ`, degree by degree.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::{ExactScalar, Rational, SparsePoly};
use crate::partitions::{partitions_of, Partition};

use super::SymError;

/// Both transition matrices for one degree `n`.
#[derive(Debug)]
pub struct DegreeTables {
    /// Partitions of `n` in reverse-lex order.
    pub order: Vec<Partition>,
    /// `p_λ = Σ_μ p_to_m[λ][μ] m_μ`; only `μ ⊵ λ` occur.
    pub p_to_m: BTreeMap<Partition, BTreeMap<Partition, BigInt>>,
    /// `m_λ = Σ_μ m_to_p[λ][μ] p_μ`.
    pub m_to_p: BTreeMap<Partition, BTreeMap<Partition, Rational>>,
}

/// Coefficient of the monomial `x^μ` in `p_λ`: the number of ways to send
/// each part of `λ` to a row of `μ` so that every row is filled exactly.
pub fn power_monomial_coefficient(lambda: &Partition, mu: &Partition) -> BigInt {
    fn go(parts: &[usize], capacity: &mut [usize]) -> BigInt {
        let Some((&first, rest)) = parts.split_first() else {
            return if capacity.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let mut total = BigInt::zero();
        for i in 0..capacity.len() {
            if capacity[i] >= first {
                capacity[i] -= first;
                total += go(rest, capacity);
                capacity[i] += first;
            }
        }
        total
    }
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    let mut cap = mu.parts().to_vec();
    go(lambda.parts(), &mut cap)
}

fn build(n: usize) -> DegreeTables {
    let order = partitions_of(n);
    let mut p_to_m = BTreeMap::new();
    for lambda in &order {
        let row: BTreeMap<Partition, BigInt> = order
            .iter()
            .filter_map(|mu| {
                let c = power_monomial_coefficient(lambda, mu);
                (!c.is_zero()).then(|| (mu.clone(), c))
            })
            .collect();
        p_to_m.insert(lambda.clone(), row);
    }
    // p_λ involves only m_μ earlier in `order`, so m_λ is solved for in order:
    // m_λ = (p_λ - Σ_{μ before λ} c_{λμ} m_μ) / c_{λλ}
    let mut m_to_p: BTreeMap<Partition, BTreeMap<Partition, Rational>> = BTreeMap::new();
    for lambda in &order {
        let row = &p_to_m[lambda];
        let diag = Rational::from_integer(row[lambda].clone());
        let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
        acc.insert(lambda.clone(), Rational::one());
        for (mu, c) in row {
            if mu == lambda {
                continue;
            }
            let c = Rational::from_integer(c.clone());
            for (nu, d) in &m_to_p[mu] {
                *acc.entry(nu.clone()).or_insert_with(Rational::zero) -= &c * d;
            }
        }
        let expansion = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, v / &diag))
            .collect();
        m_to_p.insert(lambda.clone(), expansion);
    }
    DegreeTables {
        order,
        p_to_m,
        m_to_p,
    }
}

/// Cached tables for degree `n`.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("transition cache poisoned").get(&n) {
        return t.clone();
    }
    let built = Arc::new(build(n));
    cache
        .write()
        .expect("transition cache poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

/// The monomial symmetric polynomial `m_λ` in variables `x1..xn`.
pub fn monomial_expand(lambda: &Partition, n: usize) -> Result<SparsePoly, SymError> {
    if n < lambda.len() {
        return Err(SymError::TooFewVariables {
            partition: lambda.clone(),
            n,
        });
    }
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 1..=n {
        *counts.entry(lambda.part(i)).or_default() += 1;
    }
    let mut exps: Vec<Vec<u32>> = Vec::new();
    fn perms(counts: &mut BTreeMap<usize, usize>, cur: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            cur.push(k as u32);
            perms(counts, cur, n, out);
            cur.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    perms(&mut counts, &mut Vec::new(), n, &mut exps);
    let poly = SparsePoly::from_terms(&vars, exps.into_iter().map(|e| (e, ExactScalar::from_int(1))))
        .expect("arity matches");
    Ok(poly)
}
