//! Closed-form quantities for the k-flex locus of a general degree-d
//! hypersurface in projective n-space: the coefficient sequences
//! `lambda_m(d,k)` / `mu_l(d,k)`, the degree `N_k(n,d)` by two independent
//! summations, dimension and emptiness classification, ruled-locus data,
//! line counts, and the aggregated [`FlexReport`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use itertools::Itertools;

use crate::catalan::{binomial, catalan_closed};
use crate::chow_phi::degree_vk_chern;
use crate::error::{Error, Result};

/// Coefficients of `P_{d,k}(X) = d * prod_{j=1}^{k-1} (jX + (d-2j))`,
/// indexed by the power of `X`; always of length exactly `k`.
pub type Coefficients1D = Vec<BigInt>;

/// `lambda_m(d, k)` for `m = 0..k-1`, by iterated convolution of the
/// linear factors.
pub fn lambda_coeffs(d: i64, k: i64) -> Result<Coefficients1D> {
    if d < 1 || k < 1 {
        return Err(Error::domain("lambda_coeffs needs d >= 1 and k >= 1"));
    }
    let mut coeffs: Vec<BigInt> = vec![BigInt::from(d)];
    for j in 1..k {
        // multiply by jX + (d - 2j)
        let constant = BigInt::from(d - 2 * j);
        let linear = BigInt::from(j);
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (m, c) in coeffs.iter().enumerate() {
            next[m] += c * &constant;
            next[m + 1] += c * &linear;
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// `mu_l(d, k) = lambda_{k-1-l}(d, k)`: the reversal of [`lambda_coeffs`].
pub fn mu_coeffs(d: i64, k: i64) -> Result<Coefficients1D> {
    let mut coeffs = lambda_coeffs(d, k)?;
    coeffs.reverse();
    Ok(coeffs)
}

/// `mu_l(d, k)` straight from its defining elementary-symmetric sum
/// `d (k-1)! * sum over l-subsets of {1..k-1} of prod (d-2i)/i`,
/// evaluated in exact rationals and verified integral.
///
/// Exists solely as an independent oracle for [`mu_coeffs`].
pub fn mu_direct(d: i64, k: i64, l: u32) -> Result<BigInt> {
    if d < 1 || k < 1 {
        return Err(Error::domain("mu_direct needs d >= 1 and k >= 1"));
    }
    if (l as i64) > k - 1 {
        return Err(Error::domain("mu_direct needs 0 <= l <= k-1"));
    }
    let mut sum = BigRational::zero();
    for subset in (1..k).combinations(l as usize) {
        let mut prod = BigRational::one();
        for i in subset {
            prod *= BigRational::new(BigInt::from(d - 2 * i), BigInt::from(i));
        }
        sum += prod;
    }
    let mut factorial = BigInt::one();
    for i in 1..k {
        factorial *= BigInt::from(i);
    }
    let value = sum * BigRational::from_integer(BigInt::from(d) * factorial);
    if !value.is_integer() {
        return Err(Error::Internal(format!(
            "mu_direct({d}, {k}, {l}) is not an integer: {value}"
        )));
    }
    Ok(value.to_integer())
}

/// `N_k(n, d)` by the lambda summation:
/// `sum_{m=n-1}^{k-1} lambda_m(d,k) * (binom(m, n-1) - binom(m, n))`.
///
/// Returns the raw formula value regardless of emptiness; interpreting it
/// is [`classify_locus`]'s job.
pub fn n_k_lambda(n: i64, d: i64, k: i64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::domain("n_k_lambda needs n >= 2"));
    }
    let lambda = lambda_coeffs(d, k)?;
    let mut sum = BigInt::zero();
    for m in (n - 1)..k {
        sum += &lambda[m as usize] * (binomial(m, n - 1) - binomial(m, n));
    }
    Ok(sum)
}

/// `N_k(n, d)` by the mu / Catalan-triangle summation:
/// `sum_{l=0}^{k-n} mu_l(d,k) * C_1(n-1, k-n-l)`.
pub fn n_k_mu(n: i64, d: i64, k: i64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::domain("n_k_mu needs n >= 2"));
    }
    if k <= n {
        return Err(Error::domain("n_k_mu needs k >= n+1"));
    }
    let mu = mu_coeffs(d, k)?;
    let mut sum = BigInt::zero();
    for l in 0..=(k - n) {
        let c = catalan_closed(1, (n - 1) as u64, (k - n - l) as u64)?;
        sum += &mu[l as usize] * c;
    }
    Ok(sum)
}

/// Nature of the k-flex locus of a general hypersurface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocusClass {
    /// `k <= n`: every point is a k-flex point.
    WholeHypersurface,
    /// A proper subvariety of the stated dimension.
    Proper(i64),
    Empty,
}

/// Classify the k-flex locus. `k > d+1` is folded to the stabilized value
/// `k' = d+1` (the stratification is constant from there on).
pub fn classify_locus(n: i64, d: i64, k: i64) -> Result<LocusClass> {
    if n < 2 || d < 1 || k < 1 {
        return Err(Error::domain("classify_locus needs n >= 2, d >= 1, k >= 1"));
    }
    let k_eff = k.min(d + 1);
    if k_eff <= n {
        return Ok(LocusClass::WholeHypersurface);
    }
    if k_eff > 2 * n - 1 || (k_eff == 2 * n - 1 && k_eff == d + 1) {
        return Ok(LocusClass::Empty);
    }
    Ok(LocusClass::Proper(2 * n - k_eff - 1))
}

/// Dimension of the incidence variety of triples (hypersurface, point,
/// line with contact order >= k): `binom(n+d, n) - 1 + 2n - min(k, d+1) - 1`.
pub fn dim_gamma_k(n: i64, d: i64, k: i64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::domain("dim_gamma_k needs n >= 2"));
    }
    Ok(binomial(n + d, n) - 1 + 2 * n - k.min(d + 1) - 1)
}

/// Dimension class and degree of the ruled locus (the union of lines
/// contained in a general degree-d hypersurface).
pub fn ruled_locus(n: i64, d: i64) -> Result<(LocusClass, BigInt)> {
    if n < 2 || d < 1 {
        return Err(Error::domain("ruled_locus needs n >= 2 and d >= 1"));
    }
    if d >= 2 * n - 2 {
        return Ok((LocusClass::Empty, BigInt::zero()));
    }
    Ok((LocusClass::Proper(2 * n - d - 2), n_k_lambda(n, d, d + 1)?))
}

/// Number of lines on a general hypersurface of degree `2n - 3`:
/// `N_{2n-2}(n, 2n-3)`. 27 lines on the cubic surface for n = 3.
pub fn lines_on_general_hypersurface(n: i64) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::domain(
            "lines_on_general_hypersurface needs n >= 3 (n = 2 gives degree 1)",
        ));
    }
    n_k_lambda(n, 2 * n - 3, 2 * n - 2)
}

/// Closed degree of the classical flex locus (`k = n+1`):
/// `d^2 * sum_{i=1}^n n!/i - d * (n+1)!`.
pub fn flex_degree_closed(n: i64, d: i64) -> Result<BigInt> {
    if n < 2 || d < n {
        return Err(Error::domain("flex_degree_closed needs d >= n >= 2"));
    }
    let mut n_factorial = BigInt::one();
    for i in 1..=n {
        n_factorial *= BigInt::from(i);
    }
    let mut harmonic_sum = BigInt::zero();
    for i in 1..=n {
        harmonic_sum += &n_factorial / BigInt::from(i);
    }
    let d_big = BigInt::from(d);
    Ok(&d_big * &d_big * harmonic_sum - d_big * n_factorial * BigInt::from(n + 1))
}

/// One computed degree route inside a [`FlexReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RouteValue {
    Value(BigInt),
    /// Route not applicable / failed; carries a short note.
    NotRun(String),
}

impl RouteValue {
    pub fn value(&self) -> Option<&BigInt> {
        match self {
            RouteValue::Value(v) => Some(v),
            RouteValue::NotRun(_) => None,
        }
    }
}

/// Everything known about the k-flex locus of a general (n, d) hypersurface
/// for a requested k, including the three independent degree routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlexReport {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    /// `min(k, d+1)`: the stratification stabilizes beyond `d+1`.
    pub effective_k: i64,
    pub stabilized: bool,
    pub locus: LocusClass,
    pub degree_geometric: BigInt,
    pub route_lambda: RouteValue,
    pub route_mu: RouteValue,
    pub route_chern: RouteValue,
    pub routes_agree: bool,
    /// Raw formula value when the locus is empty but the formula is defined.
    pub formula_value_when_empty: Option<BigInt>,
}

/// Aggregate classification and all applicable degree routes for (n, d, k).
pub fn build_report(n: i64, d: i64, k: i64) -> Result<FlexReport> {
    if n < 2 || d < 1 || k < 1 {
        return Err(Error::domain("build_report needs n >= 2, d >= 1, k >= 1"));
    }
    let k_eff = k.min(d + 1);
    let locus = classify_locus(n, d, k)?;

    let route_lambda = match n_k_lambda(n, d, k_eff) {
        Ok(v) => RouteValue::Value(v),
        Err(e) => RouteValue::NotRun(e.to_string()),
    };
    let route_mu = if k_eff > n {
        match n_k_mu(n, d, k_eff) {
            Ok(v) => RouteValue::Value(v),
            Err(e) => RouteValue::NotRun(e.to_string()),
        }
    } else {
        RouteValue::NotRun("mu route needs k >= n+1".into())
    };
    let route_chern = if k_eff > n && k_eff <= (2 * n - 1).min(d + 1) {
        match degree_vk_chern(n as u32, d, k_eff) {
            Ok(v) => RouteValue::Value(v),
            Err(e) => RouteValue::NotRun(e.to_string()),
        }
    } else {
        RouteValue::NotRun("Chern route needs n+1 <= k <= min(d+1, 2n-1)".into())
    };

    let values: Vec<&BigInt> = [&route_lambda, &route_mu, &route_chern]
        .iter()
        .filter_map(|r| r.value())
        .collect();
    let routes_agree = !values.is_empty() && values.windows(2).all(|w| w[0] == w[1]);

    let (degree_geometric, formula_value_when_empty) = match locus {
        LocusClass::WholeHypersurface => (BigInt::from(d), None),
        LocusClass::Proper(_) => (
            route_lambda
                .value()
                .cloned()
                .unwrap_or_else(BigInt::zero),
            None,
        ),
        LocusClass::Empty => (BigInt::zero(), route_lambda.value().cloned()),
    };

    Ok(FlexReport {
        n,
        d,
        k,
        effective_k: k_eff,
        stabilized: k > d + 1,
        locus,
        degree_geometric,
        route_lambda,
        route_mu,
        route_chern,
        routes_agree,
        formula_value_when_empty,
    })
}

/// Signs of the `lambda_m(d, k)` coefficients, recorded because the
/// sequence turns negative once some factor `d - 2j` does (roughly for
/// `d < 2(k-1)`), despite often being quoted as nonnegative.
pub fn lambda_sign_data(d: i64, k: i64) -> Result<Vec<i8>> {
    Ok(lambda_coeffs(d, k)?
        .iter()
        .map(|c| {
            if c.is_zero() {
                0
            } else if c.is_negative() {
                -1
            } else {
                1
            }
        })
        .collect())
}
