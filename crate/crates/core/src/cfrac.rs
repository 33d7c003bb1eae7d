//! Periodic continued fractions of `√A` and their convergents.
//!
//! Expansion uses the integer `(m, d, a)` recurrence: starting from
//! `m₀ = 0, d₀ = 1, a₀ = ⌊√A⌋`, each step takes `m' = d·a − m`,
//! `d' = (A − m'²)/d`, `a' = ⌊(a₀ + m')/d'⌋`. The division defining `d'`
//! is always exact (asserted), and the period closes exactly when a
//! partial quotient reaches `2·a₀`.

use num_rational::Ratio;
use num_traits::RefNum;

use crate::theon;
use crate::{small, Error, Result, Scalar};

/// Guards the period-detection loop; unreachable for valid radicands.
const PERIOD_CAP: usize = 1_000_000;

/// Expansion `[a₀; (p₁, …, pₗ)]` with the repeating block in parentheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion<T> {
    radicand: T,
    a0: T,
    period: Vec<T>,
}

/// Computes the periodic expansion of `√A` for non-square `A ≥ 2`.
pub fn expand<T>(radicand: &T) -> Result<CfExpansion<T>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    theon::validate_radicand(radicand)?;
    let a0 = crate::ratcore::isqrt(radicand)?;
    let twice_a0 = &a0 + &a0;
    let mut m = T::zero();
    let mut d = T::one();
    let mut a = a0.clone();
    let mut period = Vec::new();
    for _ in 0..PERIOD_CAP {
        m = &(&d * &a) - &m;
        let numerator = radicand - &(&m * &m);
        let (next_d, rem) = numerator.div_rem(&d);
        assert!(rem.is_zero(), "d must divide A - m² at every step");
        d = next_d;
        a = (&a0 + &m).div_floor(&d);
        period.push(a.clone());
        if a == twice_a0 {
            return Ok(CfExpansion {
                radicand: radicand.clone(),
                a0,
                period,
            });
        }
    }
    unreachable!("period detection exceeded {PERIOD_CAP} steps");
}

impl<T> CfExpansion<T> {
    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    /// The integer part `⌊√A⌋`.
    pub fn a0(&self) -> &T {
        &self.a0
    }

    /// The repeating block of partial quotients; its last entry is `2·a₀`.
    pub fn period(&self) -> &[T] {
        &self.period
    }
}

impl<T> CfExpansion<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    /// The full partial-quotient stream: `a₀`, then the period repeated.
    pub fn quotients(&self) -> impl Iterator<Item = &T> + '_ {
        std::iter::once(&self.a0).chain(self.period.iter().cycle())
    }

    /// The first `count` convergents `pₖ/qₖ`, via the standard
    /// two-term recurrence; they come out already in lowest terms.
    pub fn convergents(&self, count: usize) -> Vec<Ratio<T>> {
        let mut out = Vec::with_capacity(count);
        let mut prev = (T::zero(), T::one());
        let mut cur = (T::one(), T::zero());
        for a in self.quotients().take(count) {
            let p = a * &cur.0 + &prev.0;
            let q = a * &cur.1 + &prev.1;
            debug_assert!(p.gcd(&q).is_one(), "convergents are reduced");
            out.push(Ratio::new_raw(p.clone(), q.clone()));
            prev = cur;
            cur = (p, q);
        }
        out
    }
}

impl<T: std::fmt::Display> std::fmt::Display for CfExpansion<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}; (", self.a0)?;
        for (i, p) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")]")
    }
}

/// True when the first `count` continued-fraction convergents coincide
/// with the reduced side-and-diagonal convergents from unit seeds.
///
/// The coincidence holds for radicands 2 and 3; it already fails for 5,
/// so other radicands are rejected. The comparison recomputes both lists
/// independently; capped at 20 terms.
pub fn agrees_with_side_diagonal<T>(radicand: &T, count: usize) -> Result<bool>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    if *radicand != small(2) && *radicand != small(3) {
        return Err(Error::UncertifiedRadicand(radicand.to_string()));
    }
    if count > 20 {
        return Err(Error::Precondition(
            "cross-check is a desk-scale comparison, capped at 20 terms".into(),
        ));
    }
    let cf = expand(radicand)?.convergents(count);
    let theon: Vec<_> = theon::sequence(radicand, count, &T::one(), &T::one())?
        .into_iter()
        .map(|c| c.value().clone())
        .collect();
    Ok(cf == theon)
}
