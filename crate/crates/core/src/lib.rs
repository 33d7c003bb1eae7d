//! Exact rational approximation of square roots.
//!
//! Everything here runs on arbitrary-precision integers and reduced
//! fractions; no floating point is used anywhere. The toolkit covers the
//! classical iterative schemes: side-and-diagonal numbers ([`theon`]),
//! Heron's method and the arithmetic-harmonic mean ([`classical`]),
//! periodic continued fractions ([`cfrac`]), Pell-Fermat equations
//! ([`pell`]), and the Pythagorean-triple identities they generate
//! ([`pythag`]).
//!
//! All algorithms are generic over the integer scalar via the [`Scalar`]
//! trait, so they run on `i64`/`i128` for desk-scale work and on
//! [`BigInt`] when iterates outgrow machine words. The crate-root aliases
//! [`Int`] and [`Rational`] fix the default arbitrary-precision types.

use std::fmt;

use num_traits::{FromPrimitive, NumRef, RefNum, Signed, ToPrimitive};

pub mod cfrac;
pub mod classical;
pub mod pell;
pub mod pythag;
pub mod ratcore;
pub mod theon;

pub use num_bigint::BigInt;
pub use num_rational::Ratio;

/// Default arbitrary-precision integer.
pub type Int = BigInt;

/// Default reduced fraction over [`Int`].
pub type Rational = Ratio<Int>;

/// Integer scalar the toolkit is generic over.
///
/// Satisfied by the signed primitives and by [`BigInt`]. Generic items
/// additionally require `for<'a> &'a T: RefNum<T>` so that big integers
/// can be combined by reference without cloning.
pub trait Scalar:
    num_integer::Integer
    + Signed
    + NumRef
    + Clone
    + FromPrimitive
    + ToPrimitive
    + fmt::Debug
    + fmt::Display
where
    for<'a> &'a Self: RefNum<Self>,
{
}

impl<T> Scalar for T
where
    T: num_integer::Integer
        + Signed
        + NumRef
        + Clone
        + FromPrimitive
        + ToPrimitive
        + fmt::Debug
        + fmt::Display,
    for<'a> &'a T: RefNum<T>,
{
}

/// Errors shared by every module.
///
/// Offending values are carried as rendered strings so the type stays
/// independent of the scalar parameter.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("expected a non-negative value, got {0}")]
    Negative(String),
    #[error("expected a positive value, got {0}")]
    NonPositive(String),
    #[error("radicand {0} is a perfect square: the iteration is constant at its root {1}")]
    PerfectSquare(String, String),
    #[error("radicand must be at least 2, got {0}")]
    RadicandTooSmall(String),
    #[error("sexagesimal digit {0} is out of range (digits run 0..=59)")]
    DigitOutOfRange(String),
    #[error("residue {0} is not supported (supported residues: 1, -1, -2)")]
    UnsupportedResidue(String),
    #[error("the 2^-n error bound is only certified for radicands 2 and 3, got {0}")]
    UncertifiedRadicand(String),
    #[error("this step rule applies to radicand 2 only, got {0}")]
    RadicandNotTwo(String),
    #[error("the step map has a pole at -1")]
    PoleAtMinusOne,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn small<T: FromPrimitive>(v: i32) -> T {
    T::from_i32(v).expect("small constant fits every scalar")
}
