//! The Chow ring of the Grassmannian of lines `G(1, n)`.
//!
//! Schubert classes `s[a,b]` with `0 <= b <= a <= n-1` form a basis.
//! Multiplication is provided for the factors that actually occur in the
//! incidence-ring computation: powers of `s[1,0]` (Pieri), special classes
//! `s[c,0]`, and the shift class `s[1,1]`. A genuinely general product of
//! two two-row classes is rejected rather than guessed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::catalan::catalan_closed;
use crate::error::{Error, Result};

/// The index `(a, b)` of a Schubert class `s[a,b]`, `0 <= b <= a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertIndex {
    pub a: u32,
    pub b: u32,
}

impl SchubertIndex {
    pub fn new(a: u32, b: u32) -> Self {
        SchubertIndex { a, b }
    }

    /// Codimension of the class: `a + b`.
    pub fn grade(&self) -> u32 {
        self.a + self.b
    }

    /// Whether the class is nonzero and storable in `A(G(1,n))`.
    pub fn valid_for(&self, n: u32) -> bool {
        self.b <= self.a && self.a < n
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[{},{}]", self.a, self.b)
    }
}

/// An integer combination of Schubert classes of `G(1, n)`.
///
/// Indices with `a >= n` or `b > a` denote the zero class and are never
/// stored; zero coefficients are pruned eagerly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowElement {
    n: u32,
    terms: BTreeMap<SchubertIndex, BigInt>,
}

impl ChowElement {
    pub fn zero(n: u32) -> Self {
        ChowElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_class(n, SchubertIndex::new(0, 0), BigInt::one())
    }

    /// A single class with a coefficient; invalid indices normalize to zero.
    pub fn from_class(n: u32, idx: SchubertIndex, coeff: BigInt) -> Self {
        let mut e = Self::zero(n);
        e.add_term(idx, coeff);
        e
    }

    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SchubertIndex, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of `idx` (zero if absent).
    pub fn coeff(&self, idx: SchubertIndex) -> BigInt {
        self.terms.get(&idx).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, idx: SchubertIndex, coeff: BigInt) {
        if coeff.is_zero() || !idx.valid_for(self.n) {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    /// Componentwise sum; the ambients must match.
    pub fn add(&self, other: &ChowElement) -> Result<ChowElement> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.add_term(*idx, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> ChowElement {
        if c.is_zero() {
            return ChowElement::zero(self.n);
        }
        ChowElement {
            n: self.n,
            terms: self.terms.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// Keep only terms of codimension `g`.
    pub fn grade_component(&self, g: u32) -> ChowElement {
        ChowElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| i.grade() == g)
                .map(|(i, v)| (*i, v.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            if first {
                if c == &BigInt::one() {
                    write!(f, "{idx}")?;
                } else {
                    write!(f, "{c}*{idx}")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                let pos = -c;
                if pos == BigInt::one() {
                    write!(f, " - {idx}")?;
                } else {
                    write!(f, " - {pos}*{idx}")?;
                }
            } else if c == &BigInt::one() {
                write!(f, " + {idx}")?;
            } else {
                write!(f, " + {c}*{idx}")?;
            }
        }
        Ok(())
    }
}

fn check_index(n: u32, idx: SchubertIndex) -> Result<()> {
    if n < 2 || !idx.valid_for(n) {
        return Err(Error::InvalidIndex {
            n,
            a: idx.a,
            b: idx.b,
        });
    }
    Ok(())
}

/// Pieri's formula for `s[a,b] * s[1,0]` in `G(1, n)`.
pub fn pieri_sigma1(n: u32, idx: SchubertIndex) -> Result<ChowElement> {
    check_index(n, idx)?;
    let (a, b) = (idx.a, idx.b);
    let mut out = ChowElement::zero(n);
    if b < a && a <= n - 2 {
        out.add_term(SchubertIndex::new(a + 1, b), BigInt::one());
        out.add_term(SchubertIndex::new(a, b + 1), BigInt::one());
    } else if b < a && a == n - 1 {
        out.add_term(SchubertIndex::new(a, b + 1), BigInt::one());
    } else if b + 1 > a && a <= n - 2 {
        out.add_term(SchubertIndex::new(a + 1, b), BigInt::one());
    }
    // b = a = n-1: the product is zero
    Ok(out)
}

/// `e * s[1,0]` by linearity.
pub fn mul_sigma1(e: &ChowElement) -> Result<ChowElement> {
    let mut out = ChowElement::zero(e.ambient());
    for (idx, c) in e.terms() {
        let p = pieri_sigma1(e.ambient(), *idx)?;
        out = out.add(&p.scale(c))?;
    }
    Ok(out)
}

/// `s[a,b] * s[1,0]^m` by `m` successive Pieri steps.
///
/// The brute-force oracle for [`mul_sigma1_power_closed`].
pub fn mul_sigma1_power_iter(n: u32, idx: SchubertIndex, m: u32) -> Result<ChowElement> {
    check_index(n, idx)?;
    let mut e = ChowElement::from_class(n, idx, BigInt::one());
    for _ in 0..m {
        e = mul_sigma1(&e)?;
    }
    Ok(e)
}

/// `s[a,b] * s[1,0]^m` in closed form: the sum over `i` with
/// `0 <= i <= m` and `b+i <= a+m-i <= n-1` of
/// `C_{a-b+1}(m-i, i) * s[a+m-i, b+i]`.
pub fn mul_sigma1_power_closed(n: u32, idx: SchubertIndex, m: u32) -> Result<ChowElement> {
    check_index(n, idx)?;
    let (a, b) = (idx.a, idx.b);
    let mut out = ChowElement::zero(n);
    for i in 0..=m {
        let upper = a + m - i;
        let lower = b + i;
        if lower <= upper && upper < n {
            let c = catalan_closed((a - b + 1) as u64, (m - i) as u64, i as u64)?;
            out.add_term(SchubertIndex::new(upper, lower), c);
        }
    }
    Ok(out)
}

/// The degree map of `A(G(1, n))`: the coefficient of the point class
/// `s[n-1, n-1]`; every lower-grade term contributes zero.
pub fn degree_grassmannian(e: &ChowElement) -> BigInt {
    let n = e.ambient();
    e.coeff(SchubertIndex::new(n - 1, n - 1))
}

/// `s[a,b] * s[c,0]`: sum of `s[x,y]` over `x + y = a + b + c` with
/// `x >= a >= y >= b` and `x <= n-1`.
fn mul_special(n: u32, idx: SchubertIndex, c: u32) -> ChowElement {
    let (a, b) = (idx.a, idx.b);
    let mut out = ChowElement::zero(n);
    for y in b..=a {
        let total = a + b + c;
        if total < y {
            continue;
        }
        let x = total - y;
        if x >= a && x >= y && x < n {
            out.add_term(SchubertIndex::new(x, y), BigInt::one());
        }
    }
    out
}

/// `s[a,b] * s[1,1] = s[a+1, b+1]` (zero when `a + 1 > n - 1`).
fn mul_shift(n: u32, idx: SchubertIndex) -> ChowElement {
    ChowElement::from_class(
        n,
        SchubertIndex::new(idx.a + 1, idx.b + 1),
        BigInt::one(),
    )
}

fn term_product(n: u32, i1: SchubertIndex, i2: SchubertIndex) -> Result<ChowElement> {
    if i2.b == 0 {
        Ok(mul_special(n, i1, i2.a))
    } else if i1.b == 0 {
        Ok(mul_special(n, i2, i1.a))
    } else if i2 == SchubertIndex::new(1, 1) {
        Ok(mul_shift(n, i1))
    } else if i1 == SchubertIndex::new(1, 1) {
        Ok(mul_shift(n, i2))
    } else {
        Err(Error::UnsupportedProduct {
            a: i1.a,
            b: i1.b,
            c: i2.a,
            d: i2.b,
        })
    }
}

/// Product of two elements, restricted to the factor shapes the incidence
/// ring needs: each term pair must involve a special class `s[c,0]` or the
/// class `s[1,1]`. Anything else is rejected.
pub fn chow_mul(e1: &ChowElement, e2: &ChowElement) -> Result<ChowElement> {
    if e1.ambient() != e2.ambient() {
        return Err(Error::AmbientMismatch(e1.ambient(), e2.ambient()));
    }
    let n = e1.ambient();
    let mut out = ChowElement::zero(n);
    for (i1, c1) in e1.terms() {
        for (i2, c2) in e2.terms() {
            let p = term_product(n, *i1, *i2)?;
            out = out.add(&p.scale(&(c1 * c2)))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: u32, b: u32) -> SchubertIndex {
        SchubertIndex::new(a, b)
    }

    #[test]
    fn pieri_cases_n3() {
        let e = pieri_sigma1(3, s(2, 1)).unwrap();
        assert_eq!(e, ChowElement::from_class(3, s(2, 2), BigInt::one()));

        let e = pieri_sigma1(3, s(2, 2)).unwrap();
        assert!(e.is_zero());

        let e = pieri_sigma1(3, s(1, 1)).unwrap();
        assert_eq!(e, ChowElement::from_class(3, s(2, 1), BigInt::one()));
    }

    #[test]
    fn pieri_rejects_invalid_index() {
        assert!(pieri_sigma1(3, s(3, 0)).is_err());
        assert!(pieri_sigma1(3, s(1, 2)).is_err());
    }

    #[test]
    fn sigma1_cube_n3() {
        let e = mul_sigma1_power_iter(3, s(0, 0), 3).unwrap();
        assert_eq!(e, ChowElement::from_class(3, s(2, 1), BigInt::from(2)));
    }

    #[test]
    fn sigma1_power_identity() {
        let e = mul_sigma1_power_iter(3, s(0, 0), 0).unwrap();
        assert_eq!(e, ChowElement::one(3));
        let e = mul_sigma1_power_closed(5, s(3, 2), 0).unwrap();
        assert_eq!(e, ChowElement::from_class(5, s(3, 2), BigInt::one()));
    }

    #[test]
    fn sigma1_sixth_power_n4_catalan() {
        let e = mul_sigma1_power_iter(4, s(0, 0), 6).unwrap();
        assert_eq!(e.coeff(s(3, 3)), BigInt::from(5));
    }

    #[test]
    fn closed_form_examples() {
        let e = mul_sigma1_power_closed(3, s(1, 0), 2).unwrap();
        assert_eq!(e, ChowElement::from_class(3, s(2, 1), BigInt::from(2)));
        let e = mul_sigma1_power_closed(3, s(1, 0), 3).unwrap();
        assert_eq!(e, ChowElement::from_class(3, s(2, 2), BigInt::from(2)));
    }

    #[test]
    fn closed_matches_iter() {
        for n in 2..=6u32 {
            for a in 0..n {
                for b in 0..=a {
                    for m in 0..=2 * n {
                        assert_eq!(
                            mul_sigma1_power_closed(n, s(a, b), m).unwrap(),
                            mul_sigma1_power_iter(n, s(a, b), m).unwrap(),
                            "n={n} a={a} b={b} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degree_examples() {
        let e = ChowElement::from_class(3, s(2, 2), BigInt::from(2));
        assert_eq!(degree_grassmannian(&e), BigInt::from(2));
        let e = ChowElement::from_class(3, s(2, 1), BigInt::one());
        assert_eq!(degree_grassmannian(&e), BigInt::zero());
        // deg s1^(2n-2) = Catalan number C_1(n-1, n-1)
        let e = mul_sigma1_power_iter(5, s(0, 0), 8).unwrap();
        assert_eq!(degree_grassmannian(&e), BigInt::from(14));
    }

    #[test]
    fn add_scale_basics() {
        let e = ChowElement::from_class(3, s(2, 1), BigInt::one());
        let neg = e.scale(&BigInt::from(-1));
        assert!(e.add(&neg).unwrap().is_zero());

        let mut f = ChowElement::from_class(3, s(2, 0), BigInt::one());
        f.add_term(s(1, 1), BigInt::one());
        let g = f.scale(&BigInt::from(3));
        assert_eq!(g.coeff(s(2, 0)), BigInt::from(3));
        assert_eq!(g.coeff(s(1, 1)), BigInt::from(3));

        assert_eq!(e.add(&ChowElement::zero(3)).unwrap(), e);
        assert!(e.add(&ChowElement::zero(4)).is_err());
    }

    #[test]
    fn mul_special_agrees_with_pieri() {
        for n in 2..=5u32 {
            for a in 0..n {
                for b in 0..=a {
                    assert_eq!(
                        mul_special(n, s(a, b), 1),
                        pieri_sigma1(n, s(a, b)).unwrap(),
                        "n={n} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn shift_rule_spot_checks() {
        // s[1,1]^2 = s[2,2]; degree of s1^4 in G(1,3) is 2
        let s11 = ChowElement::from_class(3, s(1, 1), BigInt::one());
        let sq = chow_mul(&s11, &s11).unwrap();
        assert_eq!(sq, ChowElement::from_class(3, s(2, 2), BigInt::one()));
    }

    #[test]
    fn general_product_rejected() {
        let e1 = ChowElement::from_class(5, s(2, 1), BigInt::one());
        let e2 = ChowElement::from_class(5, s(3, 1), BigInt::one());
        assert!(matches!(
            chow_mul(&e1, &e2),
            Err(Error::UnsupportedProduct { .. })
        ));
    }

    #[test]
    fn grading_of_pieri_products() {
        for n in 2..=5u32 {
            for a in 0..n {
                for b in 0..=a {
                    for m in 0..=4u32 {
                        let e = mul_sigma1_power_iter(n, s(a, b), m).unwrap();
                        for (idx, _) in e.terms() {
                            assert_eq!(idx.grade(), a + b + m);
                        }
                    }
                }
            }
        }
    }
}
