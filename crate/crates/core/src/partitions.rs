//! Integer partitions and (p,q)-hook combinatorics.
//!
//! A [`Partition`] is stored in canonical form: weakly decreasing parts with
//! trailing zeros removed, so derived equality is mathematical equality.
//! Orderings follow the (size, reverse-lexicographic) convention used by every
//! partition-indexed linear system in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("{partition} is not a ({m},{n})-hook partition")]
    NotAHook {
        partition: Partition,
        m: usize,
        n: usize,
    },
    #[error("hook parameters must be positive, got (p,q) = ({p},{q})")]
    InvalidHookParams { p: usize, q: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n]).expect("single part")
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-based, padded with zeros.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&r| r >= c).count())
            .collect();
        Partition { parts }
    }

    /// `true` iff `self_i >= other_i` for all `i`, i.e. the diagram of `self`
    /// contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(o, s)| s >= o)
    }

    /// `true` iff `self_{p+1} <= q`.
    pub fn is_hook(&self, hp: HookParams) -> bool {
        self.part(hp.p + 1) <= hp.q
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Boxes `(i, j)` of the Young diagram, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Multiplicities `m_i` of each part value `i`, as `(i, m_i)` pairs with
    /// `m_i > 0`, increasing in `i`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &part in self.parts.iter().rev() {
            match out.last_mut() {
                Some((v, m)) if *v == part => *m += 1,
                _ => out.push((part, 1)),
            }
        }
        out
    }

    /// Comma separated parts, empty string for the empty partition.
    pub fn to_csv(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Canonical order: by size, then reverse-lexicographic (so `(3)` precedes
/// `(2,1)` precedes `(1,1,1)`).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "({})", self.to_csv())
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `3,1`, `(3,1)`, `∅`, `()` or the empty string.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_csv())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Bosonic rank `p` and fermionic rank `q`, both at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookParams {
    pub p: usize,
    pub q: usize,
}

impl HookParams {
    pub fn new(p: usize, q: usize) -> Result<Self, PartitionError> {
        if p == 0 || q == 0 {
            return Err(PartitionError::InvalidHookParams { p, q });
        }
        Ok(HookParams { p, q })
    }

    /// The roles of `p` and `q` exchanged.
    pub fn swapped(self) -> Self {
        HookParams {
            p: self.q,
            q: self.p,
        }
    }
}

impl fmt::Display for HookParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeMode {
    Exact,
    UpTo,
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Hook partitions of size `d` (`Exact`) or of size at most `d` (`UpTo`),
/// sorted by (size, reverse-lex).
pub fn enumerate_hooks(hp: HookParams, d: usize, mode: SizeMode) -> Vec<Partition> {
    let sizes = match mode {
        SizeMode::Exact => d..=d,
        SizeMode::UpTo => 0..=d,
    };
    sizes
        .flat_map(partitions_of)
        .filter(|l| l.is_hook(hp))
        .collect()
}

/// The `(m+n)`-tuple `(λ_1..λ_m, <λ'_1-m>..<λ'_n-m>)` with `<x> = max(x, 0)`.
pub fn lambda_natural(lambda: &Partition, m: usize, n: usize) -> Result<Vec<usize>, PartitionError> {
    if lambda.part(m + 1) > n {
        return Err(PartitionError::NotAHook {
            partition: lambda.clone(),
            m,
            n,
        });
    }
    let t = lambda.transpose();
    Ok((1..=m)
        .map(|i| lambda.part(i))
        .chain((1..=n).map(|j| t.part(j).saturating_sub(m)))
        .collect())
}
