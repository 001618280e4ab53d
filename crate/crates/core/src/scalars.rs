//! Exact scalars: big rationals and polynomials in the central parameter `r`.
//!
//! Everything downstream is exact. The central charge `r` is carried
//! symbolically as a [`CentralPoly`] and only specialized on output.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `2^-k` for `k >= 0`.
pub fn inv_pow2(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k)
}

/// Parses `"p/q"` or `"p"`, with optional surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let t = s.trim();
    let bad = || ParseError::Rational(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

/// Canonical `"p/q"` form, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `serde(with = ...)` adaptor: rationals travel as strings. Integers and
/// JSON numbers without a fractional part are accepted on input.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        RationalRepr::deserialize(d)?
            .into_rational()
            .map_err(serde::de::Error::custom)
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RationalRepr {
        Int(i64),
        Str(String),
    }

    impl RationalRepr {
        pub(crate) fn into_rational(self) -> Result<Rational, ParseError> {
            match self {
                RationalRepr::Int(n) => Ok(int(n)),
                RationalRepr::Str(s) => parse_rational(&s),
            }
        }
    }
}

/// A polynomial in `r` with exact rational coefficients, lowest power first.
///
/// Normalized: never carries a trailing zero coefficient, so the zero
/// polynomial is the empty list and structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CentralPoly {
    coeffs: Vec<Rational>,
}

impl CentralPoly {
    pub fn zero() -> Self {
        CentralPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `r` itself.
    pub fn r() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * r^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CentralPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `r^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CentralPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Horner evaluation at `r = r0`.
    pub fn eval(&self, r0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * r0 + c)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, ParseError> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::from_coeffs)
    }

    fn add_ref(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }
}

impl From<Rational> for CentralPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for CentralPoly {
    type Output = CentralPoly;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a CentralPoly> for &'a CentralPoly {
    type Output = CentralPoly;
    fn add(self, rhs: Self) -> CentralPoly {
        self.add_ref(rhs)
    }
}

impl AddAssign<&CentralPoly> for CentralPoly {
    fn add_assign(&mut self, rhs: &CentralPoly) {
        *self = self.add_ref(rhs);
    }
}

impl Neg for CentralPoly {
    type Output = CentralPoly;
    fn neg(self) -> Self {
        CentralPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for CentralPoly {
    type Output = CentralPoly;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&-rhs)
    }
}

impl<'a> Sub<&'a CentralPoly> for &'a CentralPoly {
    type Output = CentralPoly;
    fn sub(self, rhs: Self) -> CentralPoly {
        self.add_ref(&-rhs.clone())
    }
}

impl Mul for CentralPoly {
    type Output = CentralPoly;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a CentralPoly> for &'a CentralPoly {
    type Output = CentralPoly;
    fn mul(self, rhs: Self) -> CentralPoly {
        self.mul_ref(rhs)
    }
}

impl MulAssign<&CentralPoly> for CentralPoly {
    fn mul_assign(&mut self, rhs: &CentralPoly) {
        *self = self.mul_ref(rhs);
    }
}

/// Human-readable form, highest power first: `1/4 r^2 - 3 r + 1`.
impl fmt::Display for CentralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{} ", format_rational(&mag))?;
                    }
                    if k == 1 {
                        f.write_str("r")?;
                    } else {
                        write!(f, "r^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for CentralPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CentralPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<serde_rational::RationalRepr>::deserialize(d)?;
        items
            .into_iter()
            .map(|x| x.into_rational())
            .collect::<Result<Vec<_>, _>>()
            .map(CentralPoly::from_coeffs)
            .map_err(serde::de::Error::custom)
    }
}
