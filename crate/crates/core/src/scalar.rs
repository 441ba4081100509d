//! Scalar backends for the ground field.
//!
//! Two backends ship: [`Rational`] (arbitrary precision, exact equality) and
//! `f64` (numeric, every equality test goes through an explicit tolerance).
//! Everything else in the crate is generic over [`Scalar`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Default tolerance for numeric-mode predicates.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Default denominator bound used when rationalizing numeric candidates.
pub const DEFAULT_MAX_DENOMINATOR: u64 = 1_000_000;

/// A characteristic-zero scalar field backend.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// True when field operations are exact and equality is decidable.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Closest backend value to `x`. The exact backend returns the best
    /// rational approximation with denominator at most `max_denominator`.
    fn from_f64_approx(x: f64, max_denominator: u64) -> Self;

    /// Zero test: exact for exact backends, `|x| <= tol` otherwise.
    fn is_negligible(&self, tol: f64) -> bool;

    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).is_negligible(tol)
    }

    /// Parse a decimal or `p/q` literal.
    fn parse_literal(s: &str) -> Option<Self>;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_f64_approx(x: f64, _max_denominator: u64) -> Self {
        x
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    fn parse_literal(s: &str) -> Option<Self> {
        if let Ok(v) = s.trim().parse::<f64>() {
            return Some(v);
        }
        Rational::parse_literal(s).map(|r| Scalar::to_f64(&r))
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_f64_approx(x: f64, max_denominator: u64) -> Self {
        rationalize(x, max_denominator)
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn parse_literal(s: &str) -> Option<Self> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        if let Some((num, den)) = s.split_once('/') {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            return Some(BigRational::new(num, den));
        }
        parse_decimal(s)
    }
}

/// `"-12.375"` or `"1e-3"` as an exact rational.
fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(all);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}

/// Best rational approximation of `x` with denominator at most `max_denominator`
/// (continued-fraction convergents plus the final semiconvergent).
pub fn rationalize(x: f64, max_denominator: u64) -> Rational {
    if !x.is_finite() {
        return Rational::zero();
    }
    let exact = match BigRational::from_float(x) {
        Some(r) => r,
        None => return Rational::zero(),
    };
    let max_den = BigInt::from(max_denominator.max(1));
    if exact.denom() <= &max_den {
        return exact;
    }

    // Convergent recurrences p_k = a_k p_{k-1} + p_{k-2}, same for q.
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut n = exact.numer().clone();
    let mut d = exact.denom().clone();
    loop {
        let (a, r) = n.div_mod_floor(&d);
        let q2 = &q0 + &a * &q1;
        if q2 > max_den {
            break;
        }
        let p2 = &p0 + &a * &p1;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        if r.is_zero() {
            break;
        }
        n = std::mem::replace(&mut d, r);
    }
    let k = (&max_den - &q0) / &q1;
    let bound1 = BigRational::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let bound2 = BigRational::new(p1, q1);
    if (&bound2 - &exact).abs() <= (&bound1 - &exact).abs() {
        bound2
    } else {
        bound1
    }
}
