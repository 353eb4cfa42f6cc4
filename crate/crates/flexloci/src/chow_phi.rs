//! The Chow ring of the incidence variety `Phi` of pairs (point, line),
//! presented as `A(G(1,n))[z] / (z^2 - s1*z + s[1,1])` where `z` is the
//! pull-back of the hyperplane class.
//!
//! Elements are kept in the reduced form `c0 + c1*z`, so the degree map
//! is a coefficient read-off on `c1`. The total Chern class of the bundle
//! of relative principal parts is the product of the `k` linear factors
//! `1 + j*s1 + (d-2j)*z`, and the degree of the k-flex locus is obtained
//! by pairing its top-grade part against the right power of `z`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::schubert::{
    chow_mul, degree_grassmannian, ChowElement, SchubertIndex,
};

/// A reduced element `c0 + c1*z` of the incidence Chow ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiElement {
    n: u32,
    c0: ChowElement,
    c1: ChowElement,
}

impl PhiElement {
    pub fn zero(n: u32) -> Self {
        PhiElement {
            n,
            c0: ChowElement::zero(n),
            c1: ChowElement::zero(n),
        }
    }

    pub fn one(n: u32) -> Self {
        PhiElement {
            n,
            c0: ChowElement::one(n),
            c1: ChowElement::zero(n),
        }
    }

    /// The hyperplane pull-back `z`.
    pub fn zeta(n: u32) -> Self {
        PhiElement {
            n,
            c0: ChowElement::zero(n),
            c1: ChowElement::one(n),
        }
    }

    pub fn from_parts(c0: ChowElement, c1: ChowElement) -> Result<Self> {
        if c0.ambient() != c1.ambient() {
            return Err(Error::AmbientMismatch(c0.ambient(), c1.ambient()));
        }
        Ok(PhiElement {
            n: c0.ambient(),
            c0,
            c1,
        })
    }

    pub fn from_chow(c0: ChowElement) -> Self {
        let n = c0.ambient();
        PhiElement {
            n,
            c0,
            c1: ChowElement::zero(n),
        }
    }

    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn c0(&self) -> &ChowElement {
        &self.c0
    }

    pub fn c1(&self) -> &ChowElement {
        &self.c1
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn add(&self, other: &PhiElement) -> Result<PhiElement> {
        Ok(PhiElement {
            n: self.n,
            c0: self.c0.add(&other.c0)?,
            c1: self.c1.add(&other.c1)?,
        })
    }

    pub fn scale(&self, c: &BigInt) -> PhiElement {
        PhiElement {
            n: self.n,
            c0: self.c0.scale(c),
            c1: self.c1.scale(c),
        }
    }
}

/// Product in the incidence ring, reduced by `z^2 -> s1*z - s[1,1]`:
///
/// `(c0 + c1 z)(e0 + e1 z) = (c0 e0 - c1 e1 s[1,1]) + (c0 e1 + c1 e0 + c1 e1 s1) z`
pub fn phi_mul(e1: &PhiElement, e2: &PhiElement) -> Result<PhiElement> {
    if e1.n != e2.n {
        return Err(Error::AmbientMismatch(e1.n, e2.n));
    }
    let n = e1.n;
    let sigma1 = ChowElement::from_class(n, SchubertIndex::new(1, 0), BigInt::one());
    let sigma11 = ChowElement::from_class(n, SchubertIndex::new(1, 1), BigInt::one());

    let c1e1 = chow_mul(&e1.c1, &e2.c1)?;
    let c0 = chow_mul(&e1.c0, &e2.c0)?
        .add(&chow_mul(&c1e1, &sigma11)?.scale(&BigInt::from(-1)))?;
    let c1 = chow_mul(&e1.c0, &e2.c1)?
        .add(&chow_mul(&e1.c1, &e2.c0)?)?
        .add(&chow_mul(&c1e1, &sigma1)?)?;
    PhiElement::from_parts(c0, c1)
}

/// Total Chern class of the rank-`k` bundle of relative principal parts
/// twisted by degree `d`: the fully reduced product
/// `prod_{j=0}^{k-1} (1 + j*s1 + (d-2j)*z)`.
pub fn chern_total(n: u32, d: i64, k: i64) -> Result<PhiElement> {
    if n < 2 {
        return Err(Error::domain("ambient n must be >= 2"));
    }
    if d < 1 || k < 1 {
        return Err(Error::domain("d and k must be >= 1"));
    }
    let mut acc = PhiElement::one(n);
    for j in 0..k {
        let c0 = ChowElement::one(n).add(&ChowElement::from_class(
            n,
            SchubertIndex::new(1, 0),
            BigInt::from(j),
        ))?;
        let c1 = ChowElement::one(n).scale(&BigInt::from(d - 2 * j));
        let factor = PhiElement::from_parts(c0, c1)?;
        acc = phi_mul(&acc, &factor)?;
    }
    Ok(acc)
}

/// Keep the grade-`g` homogeneous part: terms of `c0` with `a+b = g` and
/// terms of `c1` with `a+b = g-1` (the `z` factor carries grade one).
pub fn top_grade_component(e: &PhiElement, g: u32) -> PhiElement {
    let c0 = e.c0.grade_component(g);
    let c1 = if g >= 1 {
        e.c1.grade_component(g - 1)
    } else {
        ChowElement::zero(e.n)
    };
    PhiElement { n: e.n, c0, c1 }
}

/// The degree map of the incidence ring on reduced elements:
/// `deg(c0 + c1 z) = deg_G(c1)`. Pushforward to the Grassmannian kills
/// `c0` and sends `z` to 1.
pub fn degree_phi(e: &PhiElement) -> BigInt {
    degree_grassmannian(&e.c1)
}

/// `z^m` in reduced form, by repeated multiplication.
pub fn zeta_power(n: u32, m: u32) -> Result<PhiElement> {
    let z = PhiElement::zeta(n);
    let mut acc = PhiElement::one(n);
    for _ in 0..m {
        acc = phi_mul(&acc, &z)?;
    }
    Ok(acc)
}

/// Degree of the k-flex locus by the Chern route:
/// `deg(c_k * z^(2n-1-k))` over the incidence variety.
///
/// The pairing multiplies the top-grade Chern part by `z` one factor at a
/// time so every Schubert product stays within the supported shapes.
pub fn degree_vk_chern(n: u32, d: i64, k: i64) -> Result<BigInt> {
    let n_i = n as i64;
    if n < 2 {
        return Err(Error::domain("ambient n must be >= 2"));
    }
    if k < n_i + 1 || k > (d + 1).min(2 * n_i - 1) {
        return Err(Error::Domain(format!(
            "k = {k} out of range: the Chern route needs n+1 <= k <= min(d+1, 2n-1) = {} \
             (k <= n gives the whole hypersurface, larger k an empty locus)",
            (d + 1).min(2 * n_i - 1)
        )));
    }
    let total = chern_total(n, d, k)?;
    let mut c = top_grade_component(&total, k as u32);
    let z = PhiElement::zeta(n);
    for _ in 0..(2 * n_i - 1 - k) {
        c = phi_mul(&c, &z)?;
    }
    Ok(degree_phi(&c))
}
