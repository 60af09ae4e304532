//! Exact scalar fields used for weights, coweights and invariant forms.
//!
//! Everything in this crate is exact. The trait is implemented for
//! arbitrary-precision rationals and for `i64` rationals; the latter is
//! handy for small unit computations but panics on overflow.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Num + Signed + Clone + Debug + Display + Ord + Hash + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn from_frac(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }

    fn is_integral(&self) -> bool;

    fn to_big(&self) -> BigRational;

    /// Exact conversion; `None` if the value does not fit.
    fn from_big(r: &BigRational) -> Option<Self>;

    /// The value as an `i64` when it is an integer that fits.
    fn to_i64_exact(&self) -> Option<i64> {
        let r = self.to_big();
        if r.is_integer() {
            r.numer().to_i64()
        } else {
            None
        }
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_big(&self) -> BigRational {
        self.clone()
    }

    fn from_big(r: &BigRational) -> Option<Self> {
        Some(r.clone())
    }
}

impl Scalar for Rational64 {
    fn from_int(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn from_big(r: &BigRational) -> Option<Self> {
        Some(Rational64::new(r.numer().to_i64()?, r.denom().to_i64()?))
    }
}

pub fn int<T: Scalar>(n: i64) -> T {
    T::from_int(n)
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rat<T: Scalar>(x: &T) -> String {
    let r = x.to_big();
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Floor of `sqrt(n)` for a nonnegative big integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// Rational bracket `lo <= sqrt(x) <= hi` with error at most `1/scale`.
pub fn sqrt_bracket(x: &BigRational, scale: u64) -> (BigRational, BigRational) {
    assert!(!x.is_negative(), "sqrt of a negative number");
    if x.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let s = BigInt::from(scale);
    // floor(sqrt(x) * s) = floor(sqrt(num * s^2 / den))
    let scaled = (x.numer() * &s * &s).div_floor(x.denom());
    let r = isqrt(&scaled);
    let lo = BigRational::new(r.clone(), s.clone());
    let hi = BigRational::new(r + BigInt::one(), s);
    (lo, hi)
}

pub fn sqrt_upper(x: &BigRational) -> BigRational {
    sqrt_bracket(x, 1_000_000).1
}

pub fn sqrt_lower(x: &BigRational) -> BigRational {
    sqrt_bracket(x, 1_000_000).0
}
