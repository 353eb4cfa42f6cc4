//! Binomial coefficients and Catalan trapezoid numbers `C_a(u, v)`.
//!
//! The trapezoid of order `a` generalizes the Catalan triangle (`a = 1`).
//! Both a closed binomial formula and the additive recurrence are provided;
//! they must agree everywhere, which the test suite checks exhaustively.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient with the zero convention for out-of-range
/// arguments: `binomial(n, k) = 0` whenever `k < 0`, `n < 0` or `k > n`.
///
/// The summation formulas of this crate rely on that convention silently.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// `C_a(u, v)` by the closed formula:
/// `binom(u+v, v)` for `0 <= v < a`,
/// `binom(u+v, v) - binom(u+v, v-a)` for `a <= v <= u+a-1`,
/// and `0` otherwise.
pub fn catalan_closed(a: u64, u: u64, v: u64) -> Result<BigInt> {
    if a == 0 {
        return Err(Error::ZeroTrapezoidOrder);
    }
    let (ui, vi) = (u as i64, v as i64);
    let ai = a as i64;
    if vi < ai {
        Ok(binomial(ui + vi, vi))
    } else if vi < ui + ai {
        Ok(binomial(ui + vi, vi) - binomial(ui + vi, vi - ai))
    } else {
        Ok(BigInt::zero())
    }
}

/// `C_a(u, v)` by the recurrence `C_a(u, v) = C_a(u-1, v) + C_a(u, v-1)`
/// with base cases `C_a(u, 0) = 1`, `C_a(0, v) = 1` for `v < a`, and
/// `C_a(u, v) = 0` for `v > u + a - 1`.
///
/// Computed row by row; serves as an independent oracle for
/// [`catalan_closed`].
pub fn catalan_recursive(a: u64, u: u64, v: u64) -> Result<BigInt> {
    if a == 0 {
        return Err(Error::ZeroTrapezoidOrder);
    }
    if v > u + a - 1 {
        return Ok(BigInt::zero());
    }
    let width = (v + 1) as usize;
    let mut row: Vec<BigInt> = (0..width)
        .map(|col| {
            if (col as u64) < a {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    for uu in 1..=u {
        let mut next = vec![BigInt::zero(); width];
        next[0] = BigInt::one();
        for col in 1..width {
            if col as u64 > uu + a - 1 {
                break;
            }
            next[col] = &row[col] + &next[col - 1];
        }
        row = next;
    }
    Ok(row.pop().unwrap())
}
