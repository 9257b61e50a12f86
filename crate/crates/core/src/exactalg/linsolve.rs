//! Exact linear solving by fraction-free (Bareiss) elimination.
//!
//! Rows whose entries are all rational are first scaled to integers, so on
//! rational input every intermediate entry is an integer minor of the
//! augmented matrix and each Bareiss division is exact.

use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::{ExactScalar, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolveOutcome {
    Unique(Vec<ExactScalar>),
    Inconsistent,
    /// Consistent with a positive-dimensional solution set: one particular
    /// solution and a basis of the nullspace of `A`.
    Underdetermined {
        particular: Vec<ExactScalar>,
        nullspace: Vec<Vec<ExactScalar>>,
    },
}

impl LinearSolveOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            LinearSolveOutcome::Unique(_) => "Unique",
            LinearSolveOutcome::Inconsistent => "Inconsistent",
            LinearSolveOutcome::Underdetermined { .. } => "Underdetermined",
        }
    }
}

fn integerize(row: &mut [ExactScalar]) {
    let mut lcm = BigInt::one();
    for e in row.iter() {
        match e {
            ExactScalar::Rational(r) => lcm = lcm.lcm(r.denom()),
            ExactScalar::Function(_) => return,
        }
    }
    if lcm.is_one() {
        return;
    }
    let s = ExactScalar::Rational(Rational::from_integer(lcm));
    for e in row.iter_mut() {
        *e = &*e * &s;
    }
}

/// Solves `A x = b` exactly. `A` is given by rows; every row must have the
/// same length and `b.len()` must equal the number of rows.
pub fn solve_exact(a: &[Vec<ExactScalar>], b: &[ExactScalar]) -> LinearSolveOutcome {
    assert_eq!(a.len(), b.len(), "row count of A must match b");
    let ncols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == ncols), "ragged matrix");

    let mut m: Vec<Vec<ExactScalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            integerize(&mut r);
            r
        })
        .collect();
    let nrows = m.len();

    let mut prev = ExactScalar::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..nrows {
            let factor = m[i][col].clone();
            for j in col + 1..=ncols {
                let v = &(&m[r][col] * &m[i][j]) - &(&factor * &m[r][j]);
                m[i][j] = &v / &prev;
            }
            m[i][col] = ExactScalar::zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    let rank = r;
    if m[rank..].iter().any(|row| !row[ncols].is_zero()) {
        return LinearSolveOutcome::Inconsistent;
    }

    let back_substitute = |rhs_col: Option<usize>, free: Option<usize>| -> Vec<ExactScalar> {
        let mut x = vec![ExactScalar::zero(); ncols];
        if let Some(f) = free {
            x[f] = ExactScalar::one();
        }
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = match rhs_col {
                Some(c) => m[row][c].clone(),
                None => ExactScalar::zero(),
            };
            for j in pc + 1..ncols {
                if !x[j].is_zero() {
                    acc -= &(&m[row][j] * &x[j]);
                }
            }
            x[pc] = &acc / &m[row][pc];
        }
        x
    };

    if rank == ncols {
        return LinearSolveOutcome::Unique(back_substitute(Some(ncols), None));
    }
    let particular = back_substitute(Some(ncols), None);
    let nullspace = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| back_substitute(None, Some(f)))
        .collect();
    LinearSolveOutcome::Underdetermined {
        particular,
        nullspace,
    }
}

/// `A x` for checking solutions.
pub fn mat_vec(a: &[Vec<ExactScalar>], x: &[ExactScalar]) -> Vec<ExactScalar> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(ExactScalar::zero(), |acc, (u, v)| &acc + &(u * v))
        })
        .collect()
}
