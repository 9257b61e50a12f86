//! Exact scalars: big rationals, and rational functions in one formal
//! parameter θ over the rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::AlgebraError;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"` or `"a"`; no floating point forms are accepted.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let t = s.trim();
    let bad = || AlgebraError::ParseScalar(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Dense univariate polynomial in θ, coefficients low degree first, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn theta() -> Self {
        UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UniPoly::default();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::default(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        UniPoly::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "θ")
    }
}

/// `num(θ)/den(θ)` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: UniPoly::constant(Rational::one()),
            });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading().unwrap().recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }
}

/// An exact scalar. Canonical: a value whose θ-dependence cancels is always
/// stored as `Rational`, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ExactScalar {
    Rational(Rational),
    Function(RatFunc),
}

impl ExactScalar {
    pub fn theta() -> Self {
        ExactScalar::Function(RatFunc {
            num: UniPoly::theta(),
            den: UniPoly::constant(Rational::one()),
        })
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar::Rational(int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        ExactScalar::Rational(rat(n, d))
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        if f.den.degree() == Some(0) {
            if let Some(c) = f.num.as_constant() {
                return ExactScalar::Rational(c);
            }
        }
        ExactScalar::Function(f)
    }

    /// Builds `num/den`; errors if `den` is the zero polynomial.
    pub fn from_polys(num: UniPoly, den: UniPoly) -> Result<Self, AlgebraError> {
        RatFunc::new(num, den).map(ExactScalar::from_ratfunc)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            ExactScalar::Function(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ExactScalar::Rational(_))
    }

    fn to_ratfunc(&self) -> RatFunc {
        match self {
            ExactScalar::Rational(r) => RatFunc {
                num: UniPoly::constant(r.clone()),
                den: UniPoly::constant(Rational::one()),
            },
            ExactScalar::Function(f) => f.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        match self {
            ExactScalar::Rational(r) if r.is_zero() => Err(AlgebraError::DivisionByZero),
            ExactScalar::Rational(r) => Ok(ExactScalar::Rational(r.recip())),
            ExactScalar::Function(f) => ExactScalar::from_polys(f.den.clone(), f.num.clone()),
        }
    }

    pub fn checked_div(&self, rhs: &ExactScalar) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = ExactScalar::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Specializes θ to `theta0`.
    pub fn eval(&self, theta0: &Rational) -> Result<Rational, AlgebraError> {
        match self {
            ExactScalar::Rational(r) => Ok(r.clone()),
            ExactScalar::Function(f) => {
                let d = f.den.eval(theta0);
                if d.is_zero() {
                    return Err(AlgebraError::Pole(theta0.clone()));
                }
                Ok(f.num.eval(theta0) / d)
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, ExactScalar::Rational(r) if r.is_negative())
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::from_int(n)
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        ExactScalar::Rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        matches!(self, ExactScalar::Rational(r) if r.is_zero())
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        ExactScalar::Rational(Rational::one())
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        if let (ExactScalar::Rational(a), ExactScalar::Rational(b)) = (self, rhs) {
            return ExactScalar::Rational(a + b);
        }
        let (a, b) = (self.to_ratfunc(), rhs.to_ratfunc());
        let num = &(&a.num * &b.den) + &(&b.num * &a.den);
        ExactScalar::from_polys(num, &a.den * &b.den).expect("nonzero denominators")
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Function(f) => ExactScalar::Function(RatFunc {
                num: -&f.num,
                den: f.den.clone(),
            }),
        }
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self + &(-rhs)
    }
}

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        match (self, rhs) {
            (ExactScalar::Rational(a), ExactScalar::Rational(b)) => ExactScalar::Rational(a * b),
            (ExactScalar::Rational(a), _) | (_, ExactScalar::Rational(a)) if a.is_zero() => {
                ExactScalar::zero()
            }
            _ => {
                let (a, b) = (self.to_ratfunc(), rhs.to_ratfunc());
                ExactScalar::from_polys(&a.num * &b.num, &a.den * &b.den)
                    .expect("nonzero denominators")
            }
        }
    }
}

/// Panics on division by zero, like the rational division it wraps; use
/// [`ExactScalar::checked_div`] when the divisor may vanish.
impl Div<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar { (&self).$m(&rhs) }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{r}"),
            ExactScalar::Function(rf) if rf.den.degree() == Some(0) => write!(f, "({})", rf.num),
            ExactScalar::Function(rf) => write!(f, "({})/({})", rf.num, rf.den),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRecord {
    Rational { num: String, den: String },
    Function { num_poly: Vec<String>, den_poly: Vec<String> },
}

fn rational_strings(r: &Rational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

fn poly_strings(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let record = match self {
            ExactScalar::Rational(r) => {
                let (num, den) = rational_strings(r);
                ScalarRecord::Rational { num, den }
            }
            ExactScalar::Function(f) => ScalarRecord::Function {
                num_poly: poly_strings(&f.num),
                den_poly: poly_strings(&f.den),
            },
        };
        record.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match ScalarRecord::deserialize(deserializer)? {
            ScalarRecord::Rational { num, den } => {
                parse_rational(&format!("{num}/{den}")).map(ExactScalar::Rational).map_err(D::Error::custom)
            }
            ScalarRecord::Function { num_poly, den_poly } => {
                let parse = |v: &[String]| -> Result<UniPoly, D::Error> {
                    v.iter()
                        .map(|s| parse_rational(s).map_err(D::Error::custom))
                        .collect::<Result<Vec<_>, _>>()
                        .map(UniPoly::from_coeffs)
                };
                ExactScalar::from_polys(parse(&num_poly)?, parse(&den_poly)?).map_err(D::Error::custom)
            }
        }
    }
}
