//! Monic Jack symmetric functions `P_λ(x; θ)` by Gram–Schmidt.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactalg::{parse_rational, ExactScalar, Rational};
use crate::partitions::{partitions_of, Partition};

use super::{jack_inner, SymError, SymExpansion, SymFunRecord, SymFun};

/// The Jack parameter: the formal symbol θ or a rational value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JackParam {
    Generic,
    Value(Rational),
}

impl JackParam {
    pub fn scalar(&self) -> ExactScalar {
        match self {
            JackParam::Generic => ExactScalar::theta(),
            JackParam::Value(v) => ExactScalar::Rational(v.clone()),
        }
    }

    pub fn parse(s: &str) -> Result<Self, SymError> {
        let s = s.trim();
        if s == "generic" || s == "θ" || s == "theta" {
            return Ok(JackParam::Generic);
        }
        parse_rational(s)
            .map(JackParam::Value)
            .map_err(|e| SymError::Cache(e.to_string()))
    }
}

impl fmt::Display for JackParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JackParam::Generic => f.write_str("generic"),
            JackParam::Value(v) => write!(f, "{v}"),
        }
    }
}

fn degree_jacks(n: usize, theta: &JackParam) -> Result<BTreeMap<Partition, SymFun>, SymError> {
    if let JackParam::Value(v) = theta {
        if v.is_zero() {
            return Err(SymError::DegenerateParameter(v.clone()));
        }
    }
    let th = theta.scalar();
    let mut order = partitions_of(n);
    // smallest in dominance first
    order.reverse();
    let mut done: Vec<(Partition, SymFun, ExactScalar)> = Vec::new();
    for lambda in order {
        let m = SymFun::monomial(&lambda);
        let mut p = m.clone();
        for (_, q, norm) in &done {
            let c = jack_inner(&m, q, &th)?;
            if !c.is_zero() {
                p = p.sub(&q.scale(&(&c / norm)));
            }
        }
        let norm = jack_inner(&p, &p, &th)?;
        if norm.is_zero() {
            let v = match theta {
                JackParam::Value(v) => v.clone(),
                JackParam::Generic => Rational::zero(),
            };
            return Err(SymError::DegenerateParameter(v));
        }
        done.push((lambda, p, norm));
    }
    Ok(done.into_iter().map(|(l, p, _)| (l, p)).collect())
}

/// In-memory store of computed Jack functions, shared across threads.
#[derive(Default)]
pub struct JackCache {
    entries: RwLock<HashMap<(Partition, JackParam), Arc<SymFun>>>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    partition: Partition,
    theta: String,
    expansion: SymFunRecord,
}

impl JackCache {
    pub fn new() -> Self {
        JackCache::default()
    }

    pub fn global() -> &'static JackCache {
        static G: OnceLock<JackCache> = OnceLock::new();
        G.get_or_init(JackCache::new)
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("jack cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, lambda: &Partition, theta: &JackParam) -> Result<Arc<SymFun>, SymError> {
        let key = (lambda.clone(), theta.clone());
        if let Some(f) = self.entries.read().expect("jack cache poisoned").get(&key) {
            return Ok(f.clone());
        }
        let computed = degree_jacks(lambda.size(), theta)?;
        let mut w = self.entries.write().expect("jack cache poisoned");
        for (l, p) in computed {
            w.entry((l, theta.clone())).or_insert_with(|| Arc::new(p));
        }
        Ok(w[&key].clone())
    }

    /// Merges entries from a JSON cache file; a missing file is not an error.
    pub fn load(&self, path: &Path) -> Result<usize, SymError> {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(SymError::Cache(e.to_string())),
        };
        let entries: Vec<CacheEntry> =
            serde_json::from_str(&text).map_err(|e| SymError::Cache(e.to_string()))?;
        let n = entries.len();
        let mut w = self.entries.write().expect("jack cache poisoned");
        for e in entries {
            let theta = JackParam::parse(&e.theta)?;
            let f = SymExpansion::from_record(&e.expansion).to_symfun();
            w.entry((e.partition, theta)).or_insert_with(|| Arc::new(f));
        }
        Ok(n)
    }

    /// Writes every entry, sorted, as JSON.
    pub fn save(&self, path: &Path) -> Result<(), SymError> {
        let r = self.entries.read().expect("jack cache poisoned");
        let mut keys: Vec<&(Partition, JackParam)> = r.keys().collect();
        keys.sort();
        let entries: Vec<CacheEntry> = keys
            .into_iter()
            .map(|k| CacheEntry {
                partition: k.0.clone(),
                theta: k.1.to_string(),
                expansion: SymExpansion::power_sums(&r[k]).to_record(),
            })
            .collect();
        let text = serde_json::to_string(&entries).map_err(|e| SymError::Cache(e.to_string()))?;
        std::fs::write(path, text).map_err(|e| SymError::Cache(e.to_string()))
    }
}

/// `P_λ(x; θ)` in the power-sum basis, through the global cache.
pub fn jack_p(lambda: &Partition, theta: &JackParam) -> Result<SymFun, SymError> {
    JackCache::global().get(lambda, theta).map(|f| (*f).clone())
}
