//! Side-and-diagonal iteration for `√A`.
//!
//! One step maps the integer pair `(x, y)` to `(x + y, y + A·x)`; the
//! ratio `y/x` then alternates around `√A`, tightening by a constant
//! factor per step. This module exposes the raw state, the reduced
//! convergents with their side labels and Pell residues, the interleaved
//! enclosure chains, and two exact certificates: the `2⁻ⁿ` error bound
//! for radicands 2 and 3, and the contraction identity behind it.

use num_rational::Ratio;
use num_traits::{One, RefNum};

use crate::ratcore::{cmp_sqrt, is_perfect_square, side_of, Side};
use crate::{small, Error, Result, Scalar};

/// Raw (unreduced) iteration state: radicand, step index, side `x`,
/// diagonal `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideDiagonalState<T> {
    radicand: T,
    index: usize,
    side: T,
    diagonal: T,
}

/// A reduced ratio `y/x` together with its position, its side of `√A`,
/// and the exact residue `num² − A·den²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    value: Ratio<T>,
    index: usize,
    side: Side,
    residue: T,
}

/// The convergents of one run split into the increasing chain below `√A`
/// and the decreasing chain above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnclosureChain<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    radicand: T,
    below: Vec<Convergent<T>>,
    above: Vec<Convergent<T>>,
}

/// Rejects radicands the iteration degenerates on: anything below 2 and
/// perfect squares (those belong to [`fixed_point`]).
pub(crate) fn validate_radicand<T>(a: &T) -> Result<()>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    if *a < small(2) {
        return Err(Error::RadicandTooSmall(a.to_string()));
    }
    if let Some(root) = is_perfect_square(a) {
        return Err(Error::PerfectSquare(a.to_string(), root.to_string()));
    }
    Ok(())
}

impl<T> SideDiagonalState<T>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    /// Starts from the classical unit seeds `x = y = 1`.
    pub fn new(radicand: T) -> Result<Self> {
        Self::with_seeds(radicand, T::one(), T::one())
    }

    pub fn with_seeds(radicand: T, side: T, diagonal: T) -> Result<Self> {
        validate_radicand(&radicand)?;
        if side < T::one() {
            return Err(Error::NonPositive(side.to_string()));
        }
        if diagonal < T::one() {
            return Err(Error::NonPositive(diagonal.to_string()));
        }
        Ok(Self {
            radicand,
            index: 0,
            side,
            diagonal,
        })
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// The lateral number `xₙ`.
    pub fn side(&self) -> &T {
        &self.side
    }

    /// The diagonal number `yₙ`.
    pub fn diagonal(&self) -> &T {
        &self.diagonal
    }

    /// One iteration: `x' = x + y`, `y' = y + A·x`.
    pub fn step(&self) -> Self {
        Self {
            radicand: self.radicand.clone(),
            index: self.index + 1,
            side: &self.side + &self.diagonal,
            diagonal: &self.diagonal + &(&self.radicand * &self.side),
        }
    }

    /// The reduced ratio `y/x` with side and residue attached.
    pub fn convergent(&self) -> Convergent<T> {
        Convergent::classify(
            Ratio::new(self.diagonal.clone(), self.side.clone()),
            self.index,
            &self.radicand,
        )
    }

    /// Residue of the raw, unreduced pair: `y² − A·x²`.
    pub fn raw_residue(&self) -> T {
        &(&self.diagonal * &self.diagonal) - &(&self.radicand * &(&self.side * &self.side))
    }

    /// Checks the one-step residue law `d' = −(A−1)·d` on raw values.
    ///
    /// For `A = 2` this is the ±1 alternation of the classical tables.
    /// The check recomputes both sides, so it guards the step rule
    /// against regressions rather than assuming the algebra.
    pub fn residue_step_identity_holds(&self) -> bool {
        let before = self.raw_residue();
        let after = self.step().raw_residue();
        let factor = &self.radicand - &T::one();
        after == -(&factor * &before)
    }
}

impl<T> Convergent<T>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    fn classify(value: Ratio<T>, index: usize, radicand: &T) -> Self {
        let side = side_of(&value, radicand).expect("convergents are non-negative");
        let residue = &(value.numer() * value.numer())
            - &(radicand * &(value.denom() * value.denom()));
        debug_assert!(
            side != Side::Exact || residue.is_zero(),
            "side and residue must agree"
        );
        Self {
            value,
            index,
            side,
            residue,
        }
    }

    pub fn value(&self) -> &Ratio<T> {
        &self.value
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Exact `num² − A·den²` of the reduced value; negative exactly when
    /// the convergent sits below `√A`.
    pub fn residue(&self) -> &T {
        &self.residue
    }
}

/// The first `count` convergents of the iteration seeded at
/// `(side0, diagonal0)`.
pub fn sequence<T>(radicand: &T, count: usize, side0: &T, diagonal0: &T) -> Result<Vec<Convergent<T>>>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    let mut state =
        SideDiagonalState::with_seeds(radicand.clone(), side0.clone(), diagonal0.clone())?;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(state.convergent());
        state = state.step();
    }
    Ok(out)
}

/// For a perfect square `A = a²`, the iteration ratio map `r ↦ (r+A)/(r+1)`
/// has `a` as a fixed point; returns it, or `None` when `A` is not a square.
pub fn fixed_point<T>(radicand: &T) -> Option<Ratio<T>>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    let root = is_perfect_square(radicand)?;
    let fixed = Ratio::from_integer(root);
    let image = step_map(radicand, &fixed);
    assert_eq!(image, fixed, "a root must be fixed by the ratio map");
    Some(fixed)
}

/// The ratio map `r ↦ (r + A)/(r + 1)` driving the iteration.
fn step_map<T>(radicand: &T, r: &Ratio<T>) -> Ratio<T>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    let a = Ratio::from_integer(radicand.clone());
    (r + a) / (r + Ratio::one())
}

/// Splits the first `depth` convergents (unit seeds) into the chain below
/// `√A` and the chain above it.
pub fn enclosure_chain<T>(radicand: &T, depth: usize) -> Result<EnclosureChain<T>>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    let convergents = sequence(radicand, depth, &T::one(), &T::one())?;
    let mut below = Vec::new();
    let mut above = Vec::new();
    for c in convergents {
        match c.side() {
            Side::Below => below.push(c),
            Side::Above => above.push(c),
            Side::Exact => unreachable!("non-square radicand admits no exact convergent"),
        }
    }
    debug_assert!(below.windows(2).all(|w| w[0].value() < w[1].value()));
    debug_assert!(above.windows(2).all(|w| w[0].value() > w[1].value()));
    Ok(EnclosureChain {
        radicand: radicand.clone(),
        below,
        above,
    })
}

impl<T> EnclosureChain<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    /// Strictly increasing lower bounds.
    pub fn below(&self) -> &[Convergent<T>] {
        &self.below
    }

    /// Strictly decreasing upper bounds.
    pub fn above(&self) -> &[Convergent<T>] {
        &self.above
    }
}

/// Verifies `|r − √A| < (1/2)ⁿ·(√A − 1)` exactly, for `A ∈ {2, 3}`.
///
/// Rearranged so that `√A` stands alone on one side, the bound becomes a
/// single [`cmp_sqrt`] test against a rational threshold; nothing is ever
/// approximated. The constant-factor contraction to 1/2 holds for
/// radicands 2 and 3 only, so other radicands are rejected rather than
/// certified with a bound that may be false. The bound starts at `n = 1`:
/// with unit seeds it degenerates to an equality at `n = 0`.
pub fn error_certificate<T>(radicand: &T, n: usize, r: &Ratio<T>) -> Result<bool>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    if *radicand != small(2) && *radicand != small(3) {
        return Err(Error::UncertifiedRadicand(radicand.to_string()));
    }
    if n == 0 {
        return Err(Error::Precondition(
            "the error bound applies from step 1 onward".into(),
        ));
    }
    let contraction = Ratio::new(T::one(), num_traits::pow(small::<T>(2), n));
    let one: Ratio<T> = Ratio::one();
    match cmp_sqrt(r, radicand)? {
        std::cmp::Ordering::Less => {
            // √A − r < c(√A − 1)  ⟺  √A < (r − c)/(1 − c)
            let threshold = (r - &contraction) / (&one - &contraction);
            if !threshold.numer().is_positive() {
                return Ok(false);
            }
            Ok(cmp_sqrt(&threshold, radicand)? == std::cmp::Ordering::Greater)
        }
        std::cmp::Ordering::Greater => {
            // r − √A < c(√A − 1)  ⟺  (r + c)/(1 + c) < √A
            let threshold = (r + &contraction) / (&one + &contraction);
            Ok(cmp_sqrt(&threshold, radicand)? == std::cmp::Ordering::Less)
        }
        std::cmp::Ordering::Equal => Ok(true),
    }
}

/// Verifies, symbolically over pairs `p + q·√A`, that
/// `(r + A)/(r + 1) − √A = (√A − 1)(√A − r)/(r + 1)`.
///
/// This identity is what makes each step contract the error; the check
/// exists as a regression guard on the step map. Holds for every `r`
/// except the pole at `r = −1`.
pub fn contraction_identity_holds<T>(radicand: &T, r: &Ratio<T>) -> Result<bool>
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    let minus_one = -Ratio::one();
    if *r == minus_one {
        return Err(Error::PoleAtMinusOne);
    }
    let a = Ratio::from_integer(radicand.clone());
    let denom = r + Ratio::one();

    // Left side: step image minus √A, i.e. (r+A)/(r+1) + (−1)·√A.
    let lhs = (step_map(radicand, r), minus_one.clone());

    // Right side: (√A − 1)(√A − r), expanded over p + q√A, then divided
    // by the rational (r + 1).
    let factor_one = (minus_one.clone(), Ratio::one()); // −1 + 1·√A
    let factor_two = (-r.clone(), Ratio::one()); // −r + 1·√A
    let product = quad_mul(&factor_one, &factor_two, &a);
    let rhs = (product.0 / denom.clone(), product.1 / denom);

    Ok(lhs == rhs)
}

/// Product of two elements `p + q·√A` of the quadratic extension.
fn quad_mul<T>(
    lhs: &(Ratio<T>, Ratio<T>),
    rhs: &(Ratio<T>, Ratio<T>),
    a: &Ratio<T>,
) -> (Ratio<T>, Ratio<T>)
where
    T: Scalar,
    for<'x> &'x T: RefNum<T>,
{
    let rational = &lhs.0 * &rhs.0 + &(&lhs.1 * &rhs.1) * a;
    let coefficient = &lhs.0 * &rhs.1 + &lhs.1 * &rhs.0;
    (rational, coefficient)
}
