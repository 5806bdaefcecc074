//! Objective values.
//!
//! Float objectives compare with a relative slack of [`REL_TOL`]; exact rational
//! objectives compare exactly.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Relative tolerance applied wherever an exact inequality is checked on floats.
pub const REL_TOL: f64 = 1e-9;

pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_usize(n: usize) -> Self;
    /// Exact conversion for rationals (every finite double is a dyadic rational).
    fn from_f64(x: f64) -> Option<Self>;
    fn to_f64(&self) -> f64;

    /// Round-off allowance when comparing against `self`: `REL_TOL * |self|` for
    /// floats, zero for exact values.
    fn slack(&self) -> Self;

    /// `p/q` for rationals, shortest round-trip decimal for floats.
    fn to_exact_string(&self) -> String;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    /// `self >= other` up to the slack of the larger magnitude.
    fn ge_tol(&self, other: &Self) -> bool {
        let scale = if abs_ge(self, other) { self.slack() } else { other.slack() };
        self.clone() + scale >= *other
    }

    /// `|self - other|` within slack.
    fn eq_tol(&self, other: &Self) -> bool {
        self.ge_tol(other) && other.ge_tol(self)
    }
}

fn abs_ge<V: Scalar>(a: &V, b: &V) -> bool {
    let a = if a.is_negative() { V::zero() - a.clone() } else { a.clone() };
    let b = if b.is_negative() { V::zero() - b.clone() } else { b.clone() };
    a >= b
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_usize(n: usize) -> Self {
        n as f64
    }
    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn slack(&self) -> Self {
        REL_TOL * self.abs()
    }
    fn to_exact_string(&self) -> String {
        format!("{self:?}")
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_usize(n: usize) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_f64(x: f64) -> Option<Self> {
        Rational::from_float(x)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            if Signed::is_negative(self) {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }
    fn slack(&self) -> Self {
        Zero::zero()
    }
    fn to_exact_string(&self) -> String {
        format_rational(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q`, an integer, or a finite decimal literal such as `0.125`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Ok(p) = s.parse::<BigInt>() {
        return Some(Rational::from_integer(p));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.')?;
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || int.len() + frac.len() == 0 {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(digits, denom);
    Some(if neg { -r } else { r })
}

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rational_pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("32/15"), Some(rational(32, 15)));
        assert_eq!(parse_rational("6/4"), Some(rational(3, 2)));
        assert_eq!(parse_rational("7"), Some(rational(7, 1)));
        assert_eq!(parse_rational("0.125"), Some(rational(1, 8)));
        assert_eq!(parse_rational("-1.5"), Some(rational(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(format_rational(&rational(64, 1)), "64");
        assert_eq!(format_rational(&rational(64, 30)), "32/15");
    }

    #[test]
    fn float_tolerance() {
        assert!(1.0f64.ge_tol(&(1.0 + 1e-12)));
        assert!(!1.0f64.ge_tol(&(1.0 + 1e-6)));
        assert!(0.0f64.eq_tol(&0.0));
        let third = rational(1, 3);
        assert!(!third.ge_tol(&rational(1_000_000_001, 3_000_000_000)));
    }
}
