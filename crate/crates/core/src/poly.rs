//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! `coeffs[i]` is the coefficient of `x^i`. The representation is kept
//! normalized: no trailing zero coefficients, and the zero polynomial is the
//! empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominationPolynomial {
    coeffs: Vec<BigInt>,
}

impl DominationPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c * x^degree`
    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `(1 + x)^k` with exact binomial coefficients.
    pub fn binomial_power(k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        coeffs.push(c.clone());
        for i in 0..k {
            c = c * BigInt::from(k - i) / BigInt::from(i + 1);
            coeffs.push(c.clone());
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }
}

impl Add for &DominationPolynomial {
    type Output = DominationPolynomial;

    fn add(self, rhs: &DominationPolynomial) -> DominationPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        DominationPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &DominationPolynomial {
    type Output = DominationPolynomial;

    fn sub(self, rhs: &DominationPolynomial) -> DominationPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        DominationPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &DominationPolynomial {
    type Output = DominationPolynomial;

    fn mul(self, rhs: &DominationPolynomial) -> DominationPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DominationPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        DominationPolynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for DominationPolynomial {
            type Output = DominationPolynomial;
            fn $method(self, rhs: DominationPolynomial) -> DominationPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Product for DominationPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for DominationPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, i: usize) -> fmt::Result {
    let mag = c.abs();
    match i {
        0 => write!(f, "{mag}"),
        _ => {
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                1 => write!(f, "x"),
                _ => write!(f, "x^{i}"),
            }
        }
    }
}

/// Ascending degree, terms joined by `" + "`, e.g. `2x + 6x^2 + 4x^3 + x^4`.
impl fmt::Display for DominationPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write_term(f, c, i)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn parse_term(term: &str) -> Result<(BigInt, usize)> {
    let bad = || Error::Parse(format!("malformed polynomial term '{term}'"));
    let Some(xpos) = term.find('x') else {
        return term.parse::<BigInt>().map(|c| (c, 0)).map_err(|_| bad());
    };
    let (coef, rest) = term.split_at(xpos);
    let coef = coef.trim_end_matches('*').trim();
    let c = if coef.is_empty() {
        BigInt::one()
    } else {
        coef.parse::<BigInt>().map_err(|_| bad())?
    };
    let rest = rest[1..].trim();
    let deg = if rest.is_empty() {
        1
    } else {
        let e = rest.strip_prefix('^').ok_or_else(bad)?.trim();
        e.parse::<usize>().map_err(|_| bad())?
    };
    Ok((c, deg))
}

impl FromStr for DominationPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split into signed terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        for ch in compact.chars() {
            match ch {
                '+' | '-' => {
                    if !current.is_empty() {
                        terms.push((negative, std::mem::take(&mut current)));
                        negative = false;
                    } else if !terms.is_empty() || negative {
                        return Err(Error::Parse(format!("dangling sign in '{s}'")));
                    }
                    negative ^= ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("trailing sign in '{s}'")));
        }
        terms.push((negative, current));

        let mut p = Self::zero();
        for (neg, term) in terms {
            let (c, deg) = parse_term(&term)?;
            if p.coeffs.len() <= deg {
                p.coeffs.resize(deg + 1, BigInt::zero());
            }
            if neg {
                p.coeffs[deg] -= c;
            } else {
                p.coeffs[deg] += c;
            }
        }
        p.normalize();
        Ok(p)
    }
}
