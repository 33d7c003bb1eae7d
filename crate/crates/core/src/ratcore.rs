//! Reduced-fraction construction and the exact comparison predicates the
//! rest of the crate is built on.
//!
//! The central primitive is [`cmp_sqrt`]: it orders a non-negative
//! rational against `√A` by cross-multiplying `num²` with `A·den²`, so no
//! square root is ever evaluated. Every enclosure, side label, and
//! certificate elsewhere in the crate reduces to this predicate.

use std::cmp::Ordering;

use num_rational::Ratio;
use num_traits::RefNum;

use crate::{small, Error, Result, Scalar};

/// Which side of `√A` a value lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Below,
    Exact,
    Above,
}

impl Side {
    pub fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => Side::Below,
            Ordering::Equal => Side::Exact,
            Ordering::Greater => Side::Above,
        }
    }

    /// Lowercase label used by text, CSV, and JSON output.
    pub fn label(self) -> &'static str {
        match self {
            Side::Below => "below",
            Side::Exact => "exact",
            Side::Above => "above",
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Builds the unique reduced fraction with positive denominator.
pub fn reduce<T>(num: T, den: T) -> Result<Ratio<T>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Ratio::new(num, den))
}

/// Orders a non-negative rational against `√a`, exactly.
///
/// Returns the sign of `r − √a`, obtained by comparing `num²` with
/// `a·den²`; both `r < 0` and `a < 0` are rejected.
pub fn cmp_sqrt<T>(r: &Ratio<T>, a: &T) -> Result<Ordering>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    if r.numer().is_negative() {
        return Err(Error::Negative(r.to_string()));
    }
    if a.is_negative() {
        return Err(Error::Negative(a.to_string()));
    }
    let lhs = r.numer() * r.numer();
    let rhs = a * &(r.denom() * r.denom());
    Ok(lhs.cmp(&rhs))
}

/// [`cmp_sqrt`] expressed as a [`Side`] label.
pub fn side_of<T>(r: &Ratio<T>, a: &T) -> Result<Side>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    cmp_sqrt(r, a).map(Side::from_ordering)
}

/// Floor of the square root: the unique `s` with `s² ≤ n < (s+1)²`.
///
/// Newton's iteration seeded from the next power of two above `√n`; the
/// seed keeps the descent short and the stop rule (`next ≥ current`) is
/// the classical one that lands exactly on the floor.
pub fn isqrt<T>(n: &T) -> Result<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    if n.is_negative() {
        return Err(Error::Negative(n.to_string()));
    }
    if n.is_zero() {
        return Ok(T::zero());
    }
    let two: T = small(2);
    // Smallest power of two whose square exceeds n.
    let mut seed = T::one();
    let mut seed_sq = T::one();
    while seed_sq <= *n {
        seed = &seed * &two;
        seed_sq = &seed * &seed;
    }
    let mut cur = seed;
    loop {
        let next = (&cur + n / &cur) / &two;
        if next >= cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Returns the exact root when `a` is a perfect square.
pub fn is_perfect_square<T>(a: &T) -> Option<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    if a.is_negative() {
        return None;
    }
    let root = isqrt(a).expect("non-negative by the check above");
    if &(&root * &root) == a {
        Some(root)
    } else {
        None
    }
}

/// A base-60 positional value: an integer part plus fraction digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexagesimalDigits<T> {
    integer_part: T,
    fraction_digits: Vec<T>,
}

impl<T> SexagesimalDigits<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    /// Validates that every digit lies in `0..=59`.
    pub fn new(integer_part: T, fraction_digits: Vec<T>) -> Result<Self> {
        if integer_part.is_negative() {
            return Err(Error::Negative(integer_part.to_string()));
        }
        let sixty: T = small(60);
        for d in &fraction_digits {
            if d.is_negative() || *d >= sixty {
                return Err(Error::DigitOutOfRange(d.to_string()));
            }
        }
        Ok(Self {
            integer_part,
            fraction_digits,
        })
    }

    pub fn integer_part(&self) -> &T {
        &self.integer_part
    }

    pub fn fraction_digits(&self) -> &[T] {
        &self.fraction_digits
    }

    /// Exact value of the expansion: `i + d₁/60 + d₂/60² + …`.
    pub fn to_rational(&self) -> Ratio<T> {
        let sixty: T = small(60);
        let mut value = Ratio::from_integer(self.integer_part.clone());
        let mut place = T::one();
        for d in &self.fraction_digits {
            place = &place * &sixty;
            value = value + Ratio::new(d.clone(), place.clone());
        }
        value
    }
}

/// Renders `r` rounded to `digits` decimal places, by exact long division.
///
/// Rounding is half away from zero. With `digits = 0` the decimal point is
/// omitted. The sign is dropped when the rounded magnitude is zero.
pub fn decimal_string<T>(r: &Ratio<T>, digits: usize) -> String
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    let ten: T = small(10);
    let scale = num_traits::pow(ten, digits);
    let magnitude = r.numer().abs();
    let scaled = &magnitude * &scale;
    let (mut quot, rem) = scaled.div_rem(r.denom());
    if &(&rem + &rem) >= r.denom() {
        quot = quot + T::one();
    }
    let (int_part, frac_part) = quot.div_rem(&scale);
    let sign = if r.numer().is_negative() && !quot.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>width$}", width = digits)
    }
}
