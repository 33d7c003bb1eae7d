//! Pythagorean triples generated by Pell pairs for radicand 2, plus the
//! one-parameter family Proclus attributes to Pythagoras.

use num_traits::RefNum;

use crate::{small, Error, Result, Scalar};

/// A triple with `a² + b² = c²`, checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T> Triple<T>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    fn checked(a: T, b: T, c: T) -> Self {
        assert_eq!(
            &(&a * &a) + &(&b * &b),
            &c * &c,
            "triple identity must hold"
        );
        Self { a, b, c }
    }
}

/// From a pair with `x² − 2y² = −1`, the triple
/// `((x−1)/2, (x+1)/2, y)`; such an `x` is always odd.
///
/// The unit pair `(1, 1)` is accepted and yields the degenerate
/// `(0, 1, 1)`.
pub fn triple_from_negative_pell<T>(x: &T, y: &T) -> Result<Triple<T>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    let residue = &(x * x) - &(&small::<T>(2) * &(y * y));
    if residue != small(-1) {
        return Err(Error::Precondition(format!(
            "({x}, {y}) does not satisfy x² − 2y² = −1 (residue {residue})"
        )));
    }
    let two: T = small(2);
    let a = (x - &T::one()) / &two;
    let b = (x + &T::one()) / &two;
    Ok(Triple::checked(a, b, y.clone()))
}

/// From a pair with `x² − 2y² = +1`, the perfect square `(x² − 1)/2`,
/// which equals `y²`.
pub fn square_from_positive_pell<T>(x: &T, y: &T) -> Result<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    let residue = &(x * x) - &(&small::<T>(2) * &(y * y));
    if !residue.is_one() {
        return Err(Error::Precondition(format!(
            "({x}, {y}) does not satisfy x² − 2y² = 1 (residue {residue})"
        )));
    }
    let square = &(&(x * x) - &T::one()) / &small(2);
    assert_eq!(square, y * y, "the half of x² − 1 must be y²");
    Ok(square)
}

/// The family `(2n+1, 2n²+2n, 2n²+2n+1)` for `n ≥ 1`; its hypotenuse
/// always exceeds the even leg by one.
pub fn pythagoras_family<T>(n: &T) -> Result<Triple<T>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    if !n.is_positive() {
        return Err(Error::NonPositive(n.to_string()));
    }
    let two: T = small(2);
    let odd_leg = &(&two * n) + &T::one();
    let even_leg = &(&two * &(n * n)) + &(&two * n);
    let hypotenuse = &even_leg + &T::one();
    Ok(Triple::checked(odd_leg, even_leg, hypotenuse))
}
