//! Heron's averaging iteration and the arithmetic-harmonic mean pair,
//! both in exact rationals.
//!
//! Heron refines a single iterate, `x' = (x + A/x)/2`, and after the
//! first step always sits above `√A`. The AHM pair keeps two bounds,
//! `a' = (a+b)/2` and `b' = 2ab/(a+b)`; their product never changes, so
//! the nested intervals squeeze `√(a·b)`. Iterates are never truncated;
//! numerators and denominators grow as fast as the algebra says they do.

use num_rational::Ratio;
use num_traits::RefNum;

use crate::ratcore::isqrt;
use crate::{small, Error, Result, Scalar};

/// Heron iterate with its radicand and step index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeronState<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    radicand: T,
    index: usize,
    value: Ratio<T>,
}

impl<T> HeronState<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    pub fn new(radicand: T, seed: Ratio<T>) -> Result<Self> {
        if !seed.numer().is_positive() {
            return Err(Error::NonPositive(seed.to_string()));
        }
        if radicand < T::one() {
            return Err(Error::RadicandTooSmall(radicand.to_string()));
        }
        Ok(Self {
            radicand,
            index: 0,
            value: seed,
        })
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn value(&self) -> &Ratio<T> {
        &self.value
    }

    pub fn step(&self) -> Self {
        Self {
            radicand: self.radicand.clone(),
            index: self.index + 1,
            value: heron_step(&self.value, &self.radicand)
                .expect("state iterates stay positive"),
        }
    }
}

/// One nested AHM interval: `lower ≤ √(product) ≤ upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AhmState<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    index: usize,
    upper: Ratio<T>,
    lower: Ratio<T>,
}

/// One averaging step: `(x + A/x)/2`, reduced.
pub fn heron_step<T>(x: &Ratio<T>, radicand: &T) -> Result<Ratio<T>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    if !x.numer().is_positive() {
        return Err(Error::NonPositive(x.to_string()));
    }
    if *radicand < T::one() {
        return Err(Error::RadicandTooSmall(radicand.to_string()));
    }
    let a = Ratio::from_integer(radicand.clone());
    let half = Ratio::new(T::one(), small(2));
    Ok((x + a / x) * half)
}

/// Seed that starts strictly above `√A` for non-square `A`: `⌊√A⌋ + 1`.
pub fn default_heron_seed<T>(radicand: &T) -> Result<Ratio<T>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    if *radicand < T::one() {
        return Err(Error::RadicandTooSmall(radicand.to_string()));
    }
    Ok(Ratio::from_integer(isqrt(radicand)? + T::one()))
}

/// The first `count` Heron iterates, starting from `seed`
/// (or from [`default_heron_seed`] when none is given).
pub fn heron_sequence<T>(
    radicand: &T,
    seed: Option<Ratio<T>>,
    count: usize,
) -> Result<Vec<Ratio<T>>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    let seed = match seed {
        Some(x0) => x0,
        None => default_heron_seed(radicand)?,
    };
    if !seed.numer().is_positive() {
        return Err(Error::NonPositive(seed.to_string()));
    }
    let mut out = Vec::with_capacity(count);
    let mut current = seed;
    for _ in 0..count {
        out.push(current.clone());
        current = heron_step(&current, radicand)?;
    }
    Ok(out)
}

impl<T> AhmState<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    /// Builds the starting interval; the two values may come in either
    /// order and are sorted here so the nesting invariant is
    /// unconditional.
    pub fn new(first: Ratio<T>, second: Ratio<T>) -> Result<Self> {
        if !first.numer().is_positive() {
            return Err(Error::NonPositive(first.to_string()));
        }
        if !second.numer().is_positive() {
            return Err(Error::NonPositive(second.to_string()));
        }
        let (lower, upper) = if first <= second {
            (first, second)
        } else {
            (second, first)
        };
        Ok(Self {
            index: 0,
            upper,
            lower,
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn upper(&self) -> &Ratio<T> {
        &self.upper
    }

    pub fn lower(&self) -> &Ratio<T> {
        &self.lower
    }

    /// The invariant product `a·b`; bit-identical across steps.
    pub fn product(&self) -> Ratio<T> {
        &self.upper * &self.lower
    }

    /// Replaces the bounds by their arithmetic and harmonic means.
    pub fn step(&self) -> Self {
        let half = Ratio::new(T::one(), small::<T>(2));
        let sum = &self.upper + &self.lower;
        let arithmetic = &sum * &half;
        let two_product = &self.product() * &Ratio::from_integer(small::<T>(2));
        let harmonic = two_product / sum;
        debug_assert!(harmonic <= arithmetic);
        Self {
            index: self.index + 1,
            upper: arithmetic,
            lower: harmonic,
        }
    }
}

/// The first `count` nested AHM intervals after the seeds, as
/// `(lower, upper)` pairs.
pub fn ahm_enclosure<T>(
    first: Ratio<T>,
    second: Ratio<T>,
    count: usize,
) -> Result<Vec<(Ratio<T>, Ratio<T>)>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    let mut state = AhmState::new(first, second)?;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        state = state.step();
        out.push((state.lower.clone(), state.upper.clone()));
    }
    Ok(out)
}
