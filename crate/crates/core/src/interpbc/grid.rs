//! Weyl vectors and the evaluation grid `2λ̄^♮ + ρ`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactalg::{rat, Rational};
use crate::partitions::{lambda_natural, HookParams, Partition, PartitionError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Space {
    /// `p + q` coordinates in the basis `α^B_1..α^B_p, α^F_1..α^F_q`
    A,
    /// `2p + 2q` coordinates ordered like the `x±i, y±j` variable list
    H,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoint {
    pub hp: HookParams,
    pub space: Space,
    pub coords: Vec<Rational>,
}

impl GridPoint {
    pub fn new(hp: HookParams, space: Space, coords: Vec<Rational>) -> Self {
        let n = match space {
            Space::A => hp.p + hp.q,
            Space::H => 2 * (hp.p + hp.q),
        };
        assert_eq!(coords.len(), n, "grid point arity does not match {space:?}");
        GridPoint { hp, space, coords }
    }

    pub fn bosonic(&self) -> &[Rational] {
        match self.space {
            Space::A => &self.coords[..self.hp.p],
            Space::H => &self.coords[..2 * self.hp.p],
        }
    }

    pub fn fermionic(&self) -> &[Rational] {
        match self.space {
            Space::A => &self.coords[self.hp.p..],
            Space::H => &self.coords[2 * self.hp.p..],
        }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(self.bosonic()), join(self.fermionic()))
    }
}

/// `ρ` on `𝔞*` and `ρ_𝔥` on `𝔥*`.
pub fn weyl_vectors(hp: HookParams) -> (GridPoint, GridPoint) {
    let (p, q) = (hp.p as i64, hp.q as i64);
    let a: Vec<Rational> = (1..=p)
        .map(|i| rat(2 * (p - i) + 1 - 2 * q, 1))
        .chain((1..=q).map(|j| rat(2 * (q - j) + 1, 1)))
        .collect();
    let c: Vec<Rational> = (1..=p).map(|i| rat(2 * (p - i - q) + 1, 2)).collect();
    let d: Vec<Rational> = (1..=q).map(|j| rat(2 * (q - j) + 1, 2)).collect();
    let mut h = c.clone();
    h.extend(c.iter().map(|x| -x));
    h.extend(d.iter().cloned());
    h.extend(d.iter().map(|x| -x));
    (GridPoint::new(hp, Space::A, a), GridPoint::new(hp, Space::H, h))
}

/// Restriction `𝔥* → 𝔞*`: each coordinate becomes `u_{+i} - u_{-i}`.
pub fn restrict(u: &GridPoint) -> GridPoint {
    assert_eq!(u.space, Space::H);
    let (p, q) = (u.hp.p, u.hp.q);
    let b = u.bosonic();
    let f = u.fermionic();
    let coords = (0..p)
        .map(|i| &b[i] - &b[p + i])
        .chain((0..q).map(|j| &f[j] - &f[q + j]))
        .collect();
    GridPoint::new(u.hp, Space::A, coords)
}

/// `2λ̄^♮ + ρ`.
pub fn grid_point(lambda: &Partition, hp: HookParams) -> Result<GridPoint, PartitionError> {
    let nat = lambda_natural(lambda, hp.p, hp.q)?;
    let (rho, _) = weyl_vectors(hp);
    let coords = nat
        .iter()
        .zip(&rho.coords)
        .map(|(&n, r)| Rational::from_integer((2 * n as i64).into()) + r)
        .collect();
    Ok(GridPoint::new(hp, Space::A, coords))
}

/// Applies a signed permutation within the bosonic and fermionic blocks.
/// `perm` lists source indices for each block and `signs` flips coordinates.
pub fn act(point: &GridPoint, perm: &[usize], signs: &[bool]) -> GridPoint {
    assert_eq!(point.space, Space::A);
    let p = point.hp.p;
    let coords = perm
        .iter()
        .zip(signs)
        .enumerate()
        .map(|(k, (&src, &flip))| {
            assert_eq!(k < p, src < p, "signed permutations preserve the blocks");
            let v = point.coords[src].clone();
            if flip && !v.is_zero() {
                -v
            } else {
                v
            }
        })
        .collect();
    GridPoint::new(point.hp, Space::A, coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(p: usize, q: usize) -> HookParams {
        HookParams::new(p, q).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_vectors(hp(1, 1)).0.coords, ints(&[-1, 1]));
        assert_eq!(weyl_vectors(hp(2, 1)).0.coords, ints(&[1, -1, 1]));
        assert_eq!(weyl_vectors(hp(2, 2)).0.coords, ints(&[-1, -3, 3, 1]));
        assert_eq!(weyl_vectors(hp(2, 2)).0.to_string(), "(-1,-3;3,1)");
    }

    #[test]
    fn restriction_of_rho_h() {
        for p in 1..=3 {
            for q in 1..=3 {
                let (rho, rho_h) = weyl_vectors(hp(p, q));
                assert_eq!(restrict(&rho_h), rho);
            }
        }
    }

    #[test]
    fn grid_examples() {
        let h = hp(1, 1);
        let g = |s: &str| grid_point(&s.parse().unwrap(), h).unwrap().coords;
        assert_eq!(g(""), ints(&[-1, 1]));
        assert_eq!(g("1"), ints(&[1, 1]));
        assert_eq!(g("1,1"), ints(&[1, 3]));
        assert!(grid_point(&"2,2".parse().unwrap(), h).is_err());
        let g21 = grid_point(&"1".parse().unwrap(), hp(2, 1)).unwrap();
        assert_eq!(g21.coords, ints(&[3, -1, 1]));
    }

    #[test]
    fn signed_permutation() {
        let g = GridPoint::new(hp(2, 1), Space::A, ints(&[3, -1, 1]));
        assert_eq!(act(&g, &[1, 0, 2], &[true, false, true]).coords, ints(&[1, 3, -1]));
    }
}
