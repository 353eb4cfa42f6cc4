//! Sparse multivariate polynomials with exact rational coefficients,
//! projective points, and the text grammar for polynomial input.
//!
//! Grammar (whitespace insignificant, variables named `x0..x{nvars-1}`):
//!
//! ```text
//! expression = ["+"|"-"] term (("+"|"-") term)*
//! term       = rational ("*" factor)* | factor ("*" factor)*
//! factor     = variable ["^" natural]
//! rational   = natural ["/" positive natural]
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Exponent-vector -> nonzero rational coefficient. Exponent vectors are
/// dense and of length `nvars`; coefficients stay in lowest terms with
/// positive denominators (BigRational's canonical form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The monomial `x_i^e`.
    pub fn var_pow(nvars: usize, i: usize, e: u32) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = e;
        let mut p = Self::zero(nvars);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        use std::collections::btree_map::Entry;
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut sum = Rational::zero();
        for (exps, c) in self.terms() {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            sum += term;
        }
        sum
    }

    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, c) in self.terms() {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            let power = e[i];
            e[i] -= 1;
            out.add_term(e, c * Rational::from_integer(BigInt::from(power)));
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    /// The common total degree if the polynomial is homogeneous and
    /// nonzero; `None` otherwise.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        if degrees.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Homogenization with a fresh variable prepended at index 0.
    pub fn homogenize(&self) -> MultiPoly {
        let d = self.total_degree().unwrap_or(0);
        let mut out = MultiPoly::zero(self.nvars + 1);
        for (exps, c) in self.terms() {
            let deg: u32 = exps.iter().sum();
            let mut e = Vec::with_capacity(self.nvars + 1);
            e.push(d - deg);
            e.extend_from_slice(exps);
            out.add_term(e, c.clone());
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{i}")
                    } else {
                        format!("x{i}^{e}")
                    }
                })
                .collect();
            let mono = mono.join("*");
            let sign_neg = c < &Rational::zero();
            let abs = if sign_neg { -c } else { c.clone() };
            let coeff = if abs.is_one() && !mono.is_empty() {
                String::new()
            } else if mono.is_empty() {
                format!("{abs}")
            } else {
                format!("{abs}*")
            };
            if first {
                if sign_neg {
                    write!(f, "-{coeff}{mono}")?;
                } else {
                    write!(f, "{coeff}{mono}")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - {coeff}{mono}")?;
            } else {
                write!(f, " + {coeff}{mono}")?;
            }
        }
        Ok(())
    }
}

/// A point of projective space: exact rational coordinates, not all zero,
/// defined up to a scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    coords: Vec<Rational>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::domain("projective point must have a nonzero coordinate"));
        }
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Projective equality: all 2x2 minors of the coordinate matrix vanish.
    pub fn proj_eq(&self, other: &ProjPoint) -> bool {
        if self.len() != other.len() {
            return false;
        }
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                let minor = &self.coords[i] * &other.coords[j]
                    - &self.coords[j] * &other.coords[i];
                if !minor.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Parse comma-separated rationals, e.g. `1,-1/2,0,3`.
    pub fn parse(text: &str) -> Result<Self> {
        let coords: Result<Vec<Rational>> = text
            .split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<BigRational>().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("invalid rational coordinate '{part}'"),
                })
            })
            .collect();
        ProjPoint::new(coords?)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, nvars: usize) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            nvars,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn natural(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<u64>()
            .map_err(|_| self.err("number too large"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.natural()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let denom = self.natural()?;
            if denom == 0 {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(BigInt::from(numer), BigInt::from(denom)))
        } else {
            Ok(Rational::from_integer(BigInt::from(numer)))
        }
    }

    /// variable ["^" natural]
    fn factor(&mut self) -> Result<(usize, u32)> {
        match self.bump() {
            Some(b'x') => {}
            _ => return Err(self.err("expected a variable 'x<index>'")),
        }
        let idx = self.natural()? as usize;
        if idx >= self.nvars {
            return Err(self.err(format!(
                "unknown variable x{idx} (only x0..x{} are defined)",
                self.nvars - 1
            )));
        }
        let exp = if self.peek() == Some(b'^') {
            self.bump();
            let e = self.natural()?;
            u32::try_from(e).map_err(|_| self.err("exponent overflow"))?
        } else {
            1
        };
        Ok((idx, exp))
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.nvars];
        let mut saw_anything = false;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.rational()?;
                saw_anything = true;
                if self.peek() == Some(b'*') {
                    self.bump();
                    self.term_factors(&mut exps)?;
                }
            }
            Some(b'x') => {
                self.term_factors(&mut exps)?;
                saw_anything = true;
            }
            _ => {}
        }
        if !saw_anything {
            return Err(self.err("expected a coefficient or a variable"));
        }
        let mut p = MultiPoly::zero(self.nvars);
        p.add_term(exps, coeff);
        Ok(p)
    }

    fn term_factors(&mut self, exps: &mut [u32]) -> Result<()> {
        loop {
            let (idx, exp) = self.factor()?;
            exps[idx] = exps[idx]
                .checked_add(exp)
                .ok_or_else(|| self.err("exponent overflow"))?;
            if self.peek() == Some(b'*') {
                self.bump();
            } else {
                return Ok(());
            }
        }
    }

    fn expression(&mut self) -> Result<MultiPoly> {
        let mut result = MultiPoly::zero(self.nvars);
        let mut sign = match self.peek() {
            Some(b'+') => {
                self.bump();
                false
            }
            Some(b'-') => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            result = if sign {
                result.sub(&term)
            } else {
                result.add(&term)
            };
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    sign = false;
                }
                Some(b'-') => {
                    self.bump();
                    sign = true;
                }
                None => return Ok(result),
                Some(c) => {
                    return Err(self.err(format!("unexpected character '{}'", c as char)))
                }
            }
        }
    }
}

/// Parse a polynomial in variables `x0..x{nvars-1}` from the module grammar.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MultiPoly> {
    if nvars == 0 {
        return Err(Error::domain("nvars must be positive"));
    }
    Parser::new(text, nvars).expression()
}
