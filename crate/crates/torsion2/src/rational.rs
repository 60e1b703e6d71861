//! Exact rational numbers.
//!
//! The field ℚ is represented by [`num_rational::BigRational`], which keeps
//! every value reduced with a positive denominator — exactly the invariants
//! the rest of the crate relies on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d = 0; use only with literal denominators.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as −1, 0 or +1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// r^k for a (possibly negative) exponent; r must be nonzero when k < 0.
pub fn pow_i64(r: &Rational, k: i64) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let mut base = if k < 0 { r.recip() } else { r.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            let sq = &base * &base;
            base = sq;
        }
    }
    acc
}
