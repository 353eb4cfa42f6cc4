//! Contact orders of lines with explicit hypersurfaces: Taylor
//! coefficients of the restriction of a form to a line, the k-flex test,
//! the submersion witness hypersurface, and its Jacobian rank check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::catalan::binomial;
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, ProjPoint, Rational};

/// Vanishing order of a restriction to a line. `Finite(0)` means the base
/// point is off the hypersurface; `Infinite` means the line is contained
/// in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContactOrder {
    Finite(u32),
    Infinite,
}

impl ContactOrder {
    pub fn at_least(&self, k: u32) -> bool {
        match self {
            ContactOrder::Finite(ord) => *ord >= k,
            ContactOrder::Infinite => true,
        }
    }
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Coefficients of `t^l` in `f(x + t y)`, length `deg f + 1`.
/// No homogeneity requirement; used both by the projective contact order
/// and by the affine witness computation.
fn restrict_to_line(f: &MultiPoly, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let deg = f.total_degree().unwrap_or(0) as usize;
    let mut acc = vec![Rational::zero(); deg + 1];
    for (exps, c) in f.terms() {
        // expand prod_i (x_i + t y_i)^(e_i) as a univariate in t
        let mut uni = vec![c.clone()];
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut factor = Vec::with_capacity(e as usize + 1);
            for s in 0..=e {
                let mut v = Rational::from_integer(binomial(e as i64, s as i64));
                for _ in 0..(e - s) {
                    v *= &x[i];
                }
                for _ in 0..s {
                    v *= &y[i];
                }
                factor.push(v);
            }
            let mut next = vec![Rational::zero(); uni.len() + factor.len() - 1];
            for (a, ua) in uni.iter().enumerate() {
                if ua.is_zero() {
                    continue;
                }
                for (b, fb) in factor.iter().enumerate() {
                    next[a + b] += ua * fb;
                }
            }
            uni = next;
        }
        for (l, v) in uni.into_iter().enumerate() {
            acc[l] += v;
        }
    }
    acc
}

fn check_line_inputs(f: &MultiPoly, p: &ProjPoint, q: &ProjPoint) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if p.len() != f.nvars() || q.len() != f.nvars() {
        return Err(Error::domain(format!(
            "points must have {} coordinates",
            f.nvars()
        )));
    }
    if p.proj_eq(q) {
        return Err(Error::CoincidentPoints);
    }
    Ok(d)
}

/// Taylor coefficients `(F_0, ..., F_d)` of `f(x + t y)`: the `t^l`
/// coefficient of the restriction scaled by `l!`.
pub fn taylor_coeffs(f: &MultiPoly, x: &ProjPoint, y: &ProjPoint) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if x.len() != f.nvars() || y.len() != f.nvars() {
        return Err(Error::domain(format!(
            "points must have {} coordinates",
            f.nvars()
        )));
    }
    let coeffs = restrict_to_line(f, x.coords(), y.coords());
    Ok((0..=d)
        .map(|l| &coeffs[l as usize] * Rational::from_integer(factorial(l)))
        .collect())
}

/// The same `F_l` via the differential-operator expansion
/// `F_l = sum over multi-indices b with |b| = l of (l!/b!) (d^b f)(x) y^b`.
///
/// Independent oracle for [`taylor_coeffs`]; exercised by the
/// verification suite.
pub fn taylor_coeffs_via_derivatives(
    f: &MultiPoly,
    x: &ProjPoint,
    y: &ProjPoint,
) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if x.len() != f.nvars() || y.len() != f.nvars() {
        return Err(Error::domain(format!(
            "points must have {} coordinates",
            f.nvars()
        )));
    }
    let mut out = Vec::with_capacity(d as usize + 1);
    for l in 0..=d {
        let mut sum = Rational::zero();
        let mut beta = vec![0u32; f.nvars()];
        derivative_sum(f, x.coords(), y.coords(), l, 0, &mut beta, &mut sum);
        out.push(sum);
    }
    Ok(out)
}

fn derivative_sum(
    f: &MultiPoly,
    x: &[Rational],
    y: &[Rational],
    remaining: u32,
    var: usize,
    beta: &mut Vec<u32>,
    sum: &mut Rational,
) {
    if var == beta.len() {
        if remaining != 0 {
            return;
        }
        let total: u32 = beta.iter().sum();
        let mut df = f.clone();
        let mut multinomial = factorial(total);
        for (i, &b) in beta.iter().enumerate() {
            for _ in 0..b {
                df = df.partial_derivative(i);
            }
            multinomial /= factorial(b);
        }
        if df.is_zero() {
            return;
        }
        let mut term = df.eval(x) * Rational::from_integer(multinomial);
        for (i, &b) in beta.iter().enumerate() {
            for _ in 0..b {
                term *= &y[i];
            }
        }
        *sum += term;
        return;
    }
    for b in 0..=remaining {
        beta[var] = b;
        derivative_sum(f, x, y, remaining - b, var + 1, beta, sum);
    }
    beta[var] = 0;
}

/// Contact order of the line through `p` and `q` with the hypersurface
/// `f = 0` at `p`: the vanishing order in `t` of `f(p + t q)`, or
/// `Infinite` if the restriction is identically zero.
pub fn contact_order(f: &MultiPoly, p: &ProjPoint, q: &ProjPoint) -> Result<ContactOrder> {
    check_line_inputs(f, p, q)?;
    let coeffs = restrict_to_line(f, p.coords(), q.coords());
    for (l, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            return Ok(ContactOrder::Finite(l as u32));
        }
    }
    Ok(ContactOrder::Infinite)
}

/// Whether the first `k` Taylor coefficients `F_0, ..., F_{k-1}` vanish,
/// i.e. the line is a k-flex line at `p`.
pub fn is_kflex_line(f: &MultiPoly, p: &ProjPoint, q: &ProjPoint, k: u32) -> Result<bool> {
    if k < 1 {
        return Err(Error::domain("is_kflex_line needs k >= 1"));
    }
    let d = check_line_inputs(f, p, q)?;
    let taylor = taylor_coeffs(f, p, q)?;
    // coefficients beyond degree d vanish identically
    let upto = k.min(d + 1);
    Ok(taylor[..upto as usize].iter().all(|c| c.is_zero()))
}

/// The affine witness hypersurface of the submersion argument:
/// `x1 + x2*xn^2 + ... + x_{n-1}*xn^(2n-4) + xn^(2n-1)` in variables
/// `x0..x{n-1}` standing for `x1..xn`.
pub fn submersion_witness(n: u32) -> Result<MultiPoly> {
    if n < 2 {
        return Err(Error::domain("submersion_witness needs n >= 2"));
    }
    let nv = n as usize;
    let mut f = MultiPoly::zero(nv);
    for j in 1..n {
        let mut exps = vec![0u32; nv];
        exps[(j - 1) as usize] = 1;
        exps[nv - 1] += 2 * j - 2;
        f.add_term(exps, Rational::one());
    }
    let mut exps = vec![0u32; nv];
    exps[nv - 1] = 2 * n - 1;
    f.add_term(exps, Rational::one());
    Ok(f)
}

/// Vanishing order of `f(point + t * dir)` for an affine (not necessarily
/// homogeneous) polynomial.
pub fn affine_contact_order(
    f: &MultiPoly,
    point: &[Rational],
    dir: &[Rational],
) -> Result<ContactOrder> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if point.len() != f.nvars() || dir.len() != f.nvars() {
        return Err(Error::domain(format!(
            "point and direction must have {} coordinates",
            f.nvars()
        )));
    }
    let coeffs = restrict_to_line(f, point, dir);
    for (l, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            return Ok(ContactOrder::Finite(l as u32));
        }
    }
    Ok(ContactOrder::Infinite)
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination after
/// clearing denominators row by row.
pub fn rank_fraction_free(matrix: &[Vec<Rational>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();

    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let pivot_value = m[rank][col].clone();
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let v = (&m[r][c] * &pivot_value - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot_value;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Product of two polynomials-in-t with multivariate coefficients.
fn tpoly_mul(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let nv = a[0].nvars();
    let mut out = vec![MultiPoly::zero(nv); a.len() + b.len() - 1];
    for (i, pa) in a.iter().enumerate() {
        if pa.is_zero() {
            continue;
        }
        for (j, pb) in b.iter().enumerate() {
            if pb.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&pa.mul(pb));
        }
    }
    out
}

/// Jacobian at the origin of the equations `f_0 = ... = 0` cut out by the
/// Taylor coefficients of the witness along the local line parametrization,
/// in the variables `(x1, y1, ..., x_{n-1}, y_{n-1}, x_n)`.
fn jacobian_matrix(n: u32, truncated: bool) -> Result<Vec<Vec<Rational>>> {
    if n < 2 {
        return Err(Error::domain("jacobian rank check needs n >= 2"));
    }
    let nv = (2 * n - 1) as usize;
    let x_var = |j: u32| 2 * (j - 1) as usize; // x_j for j = 1..n-1
    let y_var = |j: u32| 2 * (j - 1) as usize + 1; // y_j for j = 1..n-1
    let xn_var = nv - 1;

    // (X_n + t)^e as a polynomial in t
    let xn_plus_t_pow = |e: u32| -> Vec<MultiPoly> {
        (0..=e)
            .map(|s| {
                MultiPoly::var_pow(nv, xn_var, e - s)
                    .scale(&Rational::from_integer(binomial(e as i64, s as i64)))
            })
            .collect()
    };

    let t_degree = (2 * n - 1) as usize;
    let mut expansion = vec![MultiPoly::zero(nv); t_degree + 1];
    let accumulate = |expansion: &mut Vec<MultiPoly>, term: Vec<MultiPoly>| {
        for (i, p) in term.into_iter().enumerate() {
            expansion[i] = expansion[i].add(&p);
        }
    };

    // sum_{j=1}^{n-1} (X_j + t Y_j) (X_n + t)^(2j-2)
    for j in 1..n {
        let linear = vec![
            MultiPoly::var_pow(nv, x_var(j), 1),
            MultiPoly::var_pow(nv, y_var(j), 1),
        ];
        accumulate(&mut expansion, tpoly_mul(&linear, &xn_plus_t_pow(2 * j - 2)));
    }
    if !truncated {
        accumulate(&mut expansion, xn_plus_t_pow(2 * n - 1));
    }

    let row_count = if truncated { 2 * n - 2 } else { 2 * n - 1 } as usize;
    let mut matrix = Vec::with_capacity(row_count);
    for (i, coeff) in expansion.iter().take(row_count).enumerate() {
        // f_i = i! * (t^i coefficient); take its linear part at the origin
        let scale = Rational::from_integer(factorial(i as u32));
        let mut row = vec![Rational::zero(); nv];
        for (exps, c) in coeff.terms() {
            if exps.iter().sum::<u32>() != 1 {
                continue;
            }
            let var = exps.iter().position(|&e| e == 1).unwrap();
            row[var] = c * &scale;
        }
        matrix.push(row);
    }
    Ok(matrix)
}

/// Jacobian of the full witness; its rank must be the maximal `2n - 1`.
pub fn jacobian_rank_check(n: u32) -> Result<(Vec<Vec<Rational>>, usize)> {
    let m = jacobian_matrix(n, false)?;
    let rank = rank_fraction_free(&m);
    Ok((m, rank))
}

/// Jacobian of the truncated witness (top monomial dropped); rank `2n - 2`.
pub fn jacobian_rank_check_truncated(n: u32) -> Result<(Vec<Vec<Rational>>, usize)> {
    let m = jacobian_matrix(n, true)?;
    let rank = rank_fraction_free(&m);
    Ok((m, rank))
}
