//! Sparse multivariate polynomials over [`ExactScalar`] in a named, ordered
//! variable list.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{parse_rational, ExactScalar, Rational};
use super::AlgebraError;

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographic with earlier variables dominant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl SparsePoly {
    pub fn zero(vars: &[String]) -> Self {
        SparsePoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: ExactScalar) -> Self {
        let mut p = SparsePoly::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(vars: &[String]) -> Self {
        SparsePoly::constant(vars, ExactScalar::one())
    }

    pub fn var(vars: &[String], name: &str) -> Result<Self, AlgebraError> {
        let idx = index_of(vars, name)?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = SparsePoly::zero(vars);
        p.add_term(Monomial(e), ExactScalar::one());
        Ok(p)
    }

    pub fn from_terms(
        vars: &[String],
        terms: impl IntoIterator<Item = (Vec<u32>, ExactScalar)>,
    ) -> Result<Self, AlgebraError> {
        let mut p = SparsePoly::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(AlgebraError::VariableMismatch(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    vars.len()
                )));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> ExactScalar {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn homogeneous_part(&self, d: u32) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `true` iff every coefficient is a plain rational.
    pub fn has_rational_coefficients(&self) -> bool {
        self.terms.values().all(ExactScalar::is_rational)
    }

    fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &SparsePoly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable lists");
    }

    pub fn scale(&self, c: &ExactScalar) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(&self.vars);
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::one(&self.vars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Evaluates at a point given in variable order.
    pub fn eval(&self, point: &[ExactScalar]) -> Result<ExactScalar, AlgebraError> {
        if point.len() != self.vars.len() {
            return Err(AlgebraError::VariableMismatch(format!(
                "point of arity {} for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut total = ExactScalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Evaluation at a rational point.
    pub fn eval_rational(&self, point: &[Rational]) -> Result<ExactScalar, AlgebraError> {
        let pt: Vec<ExactScalar> = point.iter().cloned().map(ExactScalar::Rational).collect();
        self.eval(&pt)
    }

    /// Composes with `assignment`, whose polynomials all live over `target`.
    /// Unassigned variables pass through and must appear in `target`.
    pub fn substitute(
        &self,
        target: &[String],
        assignment: &BTreeMap<String, SparsePoly>,
    ) -> Result<SparsePoly, AlgebraError> {
        for (name, image) in assignment {
            index_of(&self.vars, name)?;
            if image.vars != target {
                return Err(AlgebraError::VariableMismatch(format!(
                    "image of {name} is over {:?}, expected {:?}",
                    image.vars, target
                )));
            }
        }
        let images: Vec<SparsePoly> = self
            .vars
            .iter()
            .map(|v| match assignment.get(v) {
                Some(img) => Ok(img.clone()),
                None => SparsePoly::var(target, v),
            })
            .collect::<Result<_, _>>()?;
        // powers are cached per variable
        let mut powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .map(|img| vec![SparsePoly::one(target), img.clone()])
            .collect();
        let mut out = SparsePoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = SparsePoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Applies `f` to every exponent vector; colliding images are summed.
    pub fn map_exponents(&self, f: impl Fn(&[u32]) -> Vec<u32>) -> SparsePoly {
        let mut out = SparsePoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(Monomial(f(&m.0)), c.clone());
        }
        out
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> SparsePoly {
        self.map_exponents(|e| {
            let mut e = e.to_vec();
            e.swap(i, j);
            e
        })
    }

    /// Serializable record in canonical term order.
    pub fn to_record(&self) -> PolyRecord {
        PolyRecord {
            variables: self.vars.clone(),
            terms: self
                .terms()
                .map(|(m, c)| TermRecord {
                    exponents: m.0.clone(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_record(record: &PolyRecord) -> Result<Self, AlgebraError> {
        SparsePoly::from_terms(
            &record.variables,
            record
                .terms
                .iter()
                .map(|t| (t.exponents.clone(), t.coefficient.clone())),
        )
    }

    /// Parses the canonical text form written by `Display` (rational
    /// coefficients only).
    pub fn parse(text: &str, vars: &[String]) -> Result<Self, AlgebraError> {
        let bad = |why: &str| AlgebraError::ParsePoly(format!("{why}: {text:?}"));
        let t = text.trim();
        if t == "0" {
            return Ok(SparsePoly::zero(vars));
        }
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let mut rest = t;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let cut = match (plus, minus) {
                (Some(a), Some(b)) => Some((a.min(b), a > b)),
                (Some(a), None) => Some((a, false)),
                (None, Some(b)) => Some((b, true)),
                (None, None) => None,
            };
            match cut {
                Some((at, next_negative)) => {
                    pieces.push((negative, &rest[..at]));
                    rest = &rest[at + 3..];
                    negative = next_negative;
                }
                None => {
                    pieces.push((negative, rest));
                    break;
                }
            }
        }
        let mut out = SparsePoly::zero(vars);
        for (neg, piece) in pieces {
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; vars.len()];
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if let Some(i) = vars.iter().position(|v| v == factor) {
                    exps[i] += 1;
                    continue;
                }
                if let Some((base, e)) = factor.rsplit_once('^') {
                    if let Some(i) = vars.iter().position(|v| v == base) {
                        exps[i] += e.parse::<u32>().map_err(|_| bad("bad exponent"))?;
                        continue;
                    }
                }
                coeff *= parse_rational(factor).map_err(|_| bad("unknown factor"))?;
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial(exps), ExactScalar::Rational(coeff));
        }
        Ok(out)
    }
}

fn index_of(vars: &[String], name: &str) -> Result<usize, AlgebraError> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| AlgebraError::VariableMismatch(format!("unknown variable {name}")))
}

impl std::ops::Add<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Sub<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl std::ops::Mul<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.assert_same_vars(rhs);
        let mut out = SparsePoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            let is_const = m.degree() == 0;
            if is_const || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    pub coefficient: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub variables: Vec<String>,
    pub terms: Vec<TermRecord>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::rat;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::Rational(rat(n, d))
    }

    #[test]
    fn substitute_examples() {
        let xv = names(&["x"]);
        let tv = names(&["t"]);
        let x = SparsePoly::var(&xv, "x").unwrap();
        let t = SparsePoly::var(&tv, "t").unwrap();
        let f = &x * &x;
        let a = BTreeMap::from([("x".to_string(), t.scale(&q(1, 2)))]);
        let g = f.substitute(&tv, &a).unwrap();
        assert_eq!(g, (&t * &t).scale(&q(1, 4)));

        let xy = names(&["x", "y"]);
        let f = &SparsePoly::var(&xy, "x").unwrap() + &SparsePoly::var(&xy, "y").unwrap();
        let a = BTreeMap::from([
            ("x".to_string(), SparsePoly::constant(&xy, q(1, 1))),
            ("y".to_string(), SparsePoly::constant(&xy, q(-1, 1))),
        ]);
        assert!(f.substitute(&xy, &a).unwrap().is_zero());

        let uvy = names(&["u", "v", "y"]);
        let f = &SparsePoly::var(&xy, "x").unwrap() * &SparsePoly::var(&xy, "y").unwrap();
        let uv = &SparsePoly::var(&uvy, "u").unwrap() + &SparsePoly::var(&uvy, "v").unwrap();
        let g = f
            .substitute(&uvy, &BTreeMap::from([("x".to_string(), uv)]))
            .unwrap();
        assert_eq!(g.to_string(), "u*y + v*y");
    }

    #[test]
    fn substitute_rejects_mismatched_lists() {
        let xy = names(&["x", "y"]);
        let f = SparsePoly::var(&xy, "y").unwrap();
        let tv = names(&["t"]);
        // y is unassigned but absent from the target list
        let a = BTreeMap::from([("x".to_string(), SparsePoly::var(&tv, "t").unwrap())]);
        assert!(matches!(f.substitute(&tv, &a), Err(AlgebraError::VariableMismatch(_))));
        let a = BTreeMap::from([("x".to_string(), SparsePoly::var(&xy, "x").unwrap())]);
        assert!(f.substitute(&tv, &a).is_err());
        assert!(SparsePoly::from_terms(&xy, [(vec![1], q(1, 1))]).is_err());
    }

    #[test]
    fn display_is_graded_lex_descending() {
        let v = names(&["x1", "x2", "y1"]);
        let p = SparsePoly::from_terms(
            &v,
            [
                (vec![0, 0, 0], q(1, 4)),
                (vec![2, 0, 0], q(-1, 4)),
                (vec![0, 2, 0], q(-1, 4)),
                (vec![0, 0, 2], q(1, 4)),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "-1/4*x1^2 - 1/4*x2^2 + 1/4*y1^2 + 1/4");
        assert_eq!(SparsePoly::parse(&p.to_string(), &v).unwrap(), p);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.homogeneous_part(0).to_string(), "1/4");
    }

    #[test]
    fn parse_handles_signed_variable_names() {
        let v = names(&["x+1", "x-1", "y+1", "y-1"]);
        let p = SparsePoly::from_terms(
            &v,
            [(vec![2, 0, 0, 0], q(1, 1)), (vec![0, 1, 1, 0], q(-3, 2)), (vec![0, 0, 0, 0], q(-1, 1))],
        )
        .unwrap();
        let s = p.to_string();
        assert_eq!(s, "x+1^2 - 3/2*x-1*y+1 - 1");
        assert_eq!(SparsePoly::parse(&s, &v).unwrap(), p);
        assert_eq!(SparsePoly::parse("0", &v).unwrap(), SparsePoly::zero(&v));
    }

    #[test]
    fn eval_and_zero_cancellation() {
        let v = names(&["x", "y"]);
        let x = SparsePoly::var(&v, "x").unwrap();
        let y = SparsePoly::var(&v, "y").unwrap();
        let f = &(&x + &y) * &(&x - &y);
        let g = &(&x * &x) - &(&y * &y);
        assert_eq!(f, g);
        assert_eq!(
            f.eval_rational(&[rat(3, 1), rat(1, 2)]).unwrap(),
            q(35, 4)
        );
        assert!((&f - &g).is_zero());
    }

    #[test]
    fn record_round_trip() {
        let v = names(&["x", "y"]);
        let p = SparsePoly::from_terms(&v, [(vec![1, 1], q(-2, 3)), (vec![0, 0], q(5, 1))]).unwrap();
        let json = serde_json::to_string(&p.to_record()).unwrap();
        assert_eq!(
            json,
            r#"{"variables":["x","y"],"terms":[{"exponents":[1,1],"coefficient":{"num":"-2","den":"3"}},{"exponents":[0,0],"coefficient":{"num":"5","den":"1"}}]}"#
        );
        let back: PolyRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(SparsePoly::from_record(&back).unwrap(), p);
    }
}
