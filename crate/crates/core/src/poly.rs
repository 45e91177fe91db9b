//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! A [`Poly`] is always kept in canonical form: the coefficient vector has no
//! trailing zeros, and the zero polynomial is the empty vector. Equality is
//! therefore structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * x^exp`
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Poly { coeffs }
    }

    /// Builds a polynomial from coefficients indexed by exponent, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^exp`; zero beyond the degree.
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }

    /// `p(-x)`: odd-degree coefficients change sign.
    pub fn substitute_neg(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Poly { coeffs }
    }

    /// Composition `self(s(x))`.
    pub fn compose(&self, s: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * s) + &Poly::constant(c.clone())
        })
    }

    /// `den^clear * self(num / den)`, expanded as a polynomial.
    ///
    /// Every term `a_j (num/den)^j` becomes `a_j num^j den^(clear - j)`, so
    /// `clear` must be at least the degree of `self`.
    pub fn substitute_fraction(&self, num: &Poly, den: &Poly, clear: u32) -> Poly {
        let deg = self.degree().unwrap_or(0);
        assert!(
            deg <= clear as usize,
            "clearing exponent {clear} below degree {deg}"
        );
        let mut acc = Poly::zero();
        let mut num_pow = Poly::one();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = &(&num_pow * &den.pow(clear - j as u32)) * &Poly::constant(c.clone());
                acc += &term;
            }
            num_pow = &num_pow * num;
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Lowest exponent where `self` and `other` differ, with both coefficients.
    pub fn first_difference(&self, other: &Poly) -> Option<(usize, BigInt, BigInt)> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find_map(|i| {
            let (a, b) = (self.coeff(i), other.coeff(i));
            (a != b).then_some((i, a, b))
        })
    }

    /// Renders with a chosen variable name, e.g. `t` for Narayana polynomials.
    pub fn display_with(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (exp, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match (exp, mag.is_one()) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push(var),
                (1, false) => out.push_str(&format!("{mag}*{var}")),
                (_, true) => out.push_str(&format!("{var}^{exp}")),
                (_, false) => out.push_str(&format!("{mag}*{var}^{exp}")),
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('x'))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl From<BigInt> for Poly {
    fn from(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        // Integer coefficients have no zero divisors, so the leading term survives.
        Poly { coeffs }
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

/// `C(n, k)`, zero when `k` is outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // acc * (n - i) / (i + 1) stays integral at every step: it is C(n, i + 1).
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("empty polynomial expression")]
    Empty,
    #[error("unexpected character {found:?} at position {pos}")]
    UnexpectedChar { pos: usize, found: char },
    #[error("expected a term at position {pos}")]
    ExpectedTerm { pos: usize },
    #[error("mixed variables {first:?} and {second:?}")]
    MixedVariables { first: char, second: char },
    #[error("exponent too large at position {pos}")]
    ExponentOverflow { pos: usize },
}

struct PolyParser {
    chars: Vec<(usize, char)>,
    idx: usize,
    var: Option<char>,
}

impl PolyParser {
    fn new(src: &str) -> Self {
        PolyParser {
            chars: src
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            idx: 0,
            var: None,
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.idx).copied()
    }

    fn end_pos(&self) -> usize {
        self.chars.last().map_or(0, |(p, c)| p + c.len_utf8())
    }

    fn pos(&self) -> usize {
        self.peek().map_or_else(|| self.end_pos(), |(p, _)| p)
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some((_, c)) = self.peek().filter(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
            self.idx += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    fn variable(&mut self) -> Result<bool, PolyParseError> {
        match self.peek() {
            Some((_, c)) if c.is_ascii_alphabetic() => {
                match self.var {
                    Some(v) if v != c => {
                        return Err(PolyParseError::MixedVariables {
                            first: v,
                            second: c,
                        })
                    }
                    _ => self.var = Some(c),
                }
                self.idx += 1;
                Ok(true)
            }
            _ => Ok(false),
        }
    }

    fn term(&mut self) -> Result<Poly, PolyParseError> {
        let start = self.pos();
        let coeff = self.digits();
        if coeff.is_some() && matches!(self.peek(), Some((_, '*'))) {
            self.idx += 1;
            if !self.variable()? {
                return Err(PolyParseError::ExpectedTerm { pos: self.pos() });
            }
        } else if !self.variable()? {
            if coeff.is_none() {
                return Err(PolyParseError::ExpectedTerm { pos: start });
            }
            let c: BigInt = coeff.unwrap().parse().expect("ascii digits");
            return Ok(Poly::constant(c));
        }
        let mut exp = 1usize;
        if matches!(self.peek(), Some((_, '^'))) {
            self.idx += 1;
            let pos = self.pos();
            let digits = self.digits().ok_or(PolyParseError::ExpectedTerm { pos })?;
            exp = digits
                .parse()
                .ok()
                .filter(|&e: &usize| e <= 1 << 20)
                .ok_or(PolyParseError::ExponentOverflow { pos })?;
        }
        let c: BigInt = coeff.map_or_else(BigInt::one, |s| s.parse().expect("ascii digits"));
        Ok(Poly::monomial(c, exp))
    }

    fn parse(mut self) -> Result<Poly, PolyParseError> {
        if self.chars.is_empty() {
            return Err(PolyParseError::Empty);
        }
        let mut acc = Poly::zero();
        let mut first = true;
        loop {
            let mut negative = false;
            // a leading sign is optional on the first term, required afterwards
            let mut saw_sign = false;
            while let Some((_, c @ ('+' | '-'))) = self.peek() {
                if saw_sign && !first {
                    break;
                }
                negative ^= c == '-';
                saw_sign = true;
                self.idx += 1;
            }
            if !first && !saw_sign {
                let (pos, found) = self.peek().expect("loop continues only with input left");
                return Err(PolyParseError::UnexpectedChar { pos, found });
            }
            let term = self.term()?;
            acc += &if negative { -term } else { term };
            first = false;
            if self.peek().is_none() {
                return Ok(acc);
            }
        }
    }
}

impl FromStr for Poly {
    type Err = PolyParseError;

    /// Accepts sparse sums like `1 + 2*x - x^3`, any single-letter variable,
    /// `2x` as shorthand for `2*x`, and unary minus.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyParser::new(s).parse()
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
