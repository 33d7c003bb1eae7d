//! Pell-Fermat machinery: the Proclus doubling step for radicand 2, a
//! continued-fraction solver for `x² − A·y² = m`, and an exhaustive
//! oracle the solver is checked against.
//!
//! The solver walks the semiconvergent ladder of `√A` (every mediant
//! between consecutive convergents, the convergents included) and keeps
//! the pairs whose residue matches. Solutions with `|m| = 1` always sit
//! on convergents proper, but `m = −2` can land on intermediate
//! fractions — for radicand 2 the solutions 4/3, 24/17, … are exactly
//! such mediants — so the ladder is scanned in full.

use num_traits::RefNum;

use crate::ratcore::is_perfect_square;
use crate::theon::validate_radicand;
use crate::{cfrac, small, Error, Result, Scalar};

/// A pair `(x, y)` with its exact residue `m = x² − A·y²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution<T> {
    radicand: T,
    x: T,
    y: T,
    residue: T,
}

impl<T> PellSolution<T>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    /// The residue is computed here, so the defining identity holds by
    /// construction.
    pub fn new(radicand: T, x: T, y: T) -> Self {
        let residue = &(&x * &x) - &(&radicand * &(&y * &y));
        Self {
            radicand,
            x,
            y,
            residue,
        }
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    /// Numerator role: the diagonal number.
    pub fn x(&self) -> &T {
        &self.x
    }

    /// Denominator role: the side number.
    pub fn y(&self) -> &T {
        &self.y
    }

    pub fn residue(&self) -> &T {
        &self.residue
    }

    /// The Pythagorean doubling step `(x, y) ↦ (x + 2y, x + y)`,
    /// defined for radicand 2; it flips the residue's sign.
    pub fn proclus_step(&self) -> Result<Self> {
        if self.radicand != small(2) {
            return Err(Error::RadicandNotTwo(self.radicand.to_string()));
        }
        let x = &self.x + &(&self.y + &self.y);
        let y = &self.x + &self.y;
        let next = Self::new(self.radicand.clone(), x, y);
        debug_assert_eq!(next.residue, -self.residue.clone());
        Ok(next)
    }
}

/// First `count` solutions of `x² − A·y² = m` in increasing `y`, for
/// `m ∈ {1, −1, −2}` and non-square `A ≥ 2`.
///
/// Matches recur periodically along the ladder, so the scan is capped at
/// `count·(period+1)·4` partial-quotient blocks: if nothing turns up in
/// that window, nothing ever will. For `m = −1` the classical parity law
/// (solvable exactly when the period length is odd) short-circuits the
/// scan.
pub fn solve<T>(radicand: &T, residue: &T, count: usize) -> Result<Vec<PellSolution<T>>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    validate_radicand(radicand)?;
    let minus_one: T = small(-1);
    let minus_two: T = small(-2);
    if !residue.is_one() && *residue != minus_one && *residue != minus_two {
        return Err(Error::UnsupportedResidue(residue.to_string()));
    }
    let mut found = Vec::new();
    if count == 0 {
        return Ok(found);
    }
    let expansion = cfrac::expand(radicand)?;
    let period_len = expansion.period().len();
    if *residue == minus_one && period_len % 2 == 0 {
        return Ok(found);
    }
    let block_budget = count * (period_len + 1) * 4;

    let keep = |x: &T, y: &T, found: &mut Vec<PellSolution<T>>| {
        let candidate = PellSolution::new(radicand.clone(), x.clone(), y.clone());
        if candidate.residue() == residue {
            found.push(candidate);
        }
    };

    let mut prev: (T, T) = (T::one(), T::zero());
    let mut cur: (T, T) = (expansion.a0().clone(), T::one());
    keep(&cur.0, &cur.1, &mut found);
    for quotient in expansion.period().iter().cycle().take(block_budget) {
        if found.len() >= count {
            break;
        }
        // Mediant walk from the previous convergent up to the next one;
        // the t-th stop is (t·p + p_prev)/(t·q + q_prev).
        let mut cand = (&prev.0 + &cur.0, &prev.1 + &cur.1);
        let mut t = T::one();
        loop {
            keep(&cand.0, &cand.1, &mut found);
            if found.len() >= count || t == *quotient {
                break;
            }
            cand = (&cand.0 + &cur.0, &cand.1 + &cur.1);
            t = t + T::one();
        }
        if found.len() >= count {
            break;
        }
        prev = cur;
        cur = cand;
    }
    found.truncate(count);
    Ok(found)
}

/// All positive solutions with `1 ≤ y ≤ y_bound`, by testing whether
/// `A·y² + m` is a perfect square. Independent of the continued-fraction
/// path; intended for desk-scale bounds (about 10⁶).
pub fn brute_force<T>(radicand: &T, residue: &T, y_bound: &T) -> Vec<PellSolution<T>>
where
    T: Scalar,
    for<'a> &'a T: RefNum<T>,
{
    let mut out = Vec::new();
    let mut y = T::one();
    while y <= *y_bound {
        let target = &(radicand * &(&y * &y)) + residue;
        if target.is_positive() {
            if let Some(x) = is_perfect_square(&target) {
                if !x.is_zero() {
                    out.push(PellSolution::new(radicand.clone(), x, y.clone()));
                }
            }
        }
        y = y + T::one();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn big(v: i64) -> Int {
        Int::from(v)
    }

    fn pairs(solutions: &[PellSolution<Int>]) -> Vec<(Int, Int)> {
        solutions
            .iter()
            .map(|s| (s.x().clone(), s.y().clone()))
            .collect()
    }

    fn expected(raw: &[(i64, i64)]) -> Vec<(Int, Int)> {
        raw.iter().map(|&(x, y)| (big(x), big(y))).collect()
    }

    #[test]
    fn proclus_chain_from_unity() {
        let s = PellSolution::new(big(2), big(1), big(1));
        assert_eq!(s.residue(), &big(-1));
        let s = s.proclus_step().unwrap();
        assert_eq!((s.x(), s.y(), s.residue()), (&big(3), &big(2), &big(1)));
        let s = s.proclus_step().unwrap();
        assert_eq!((s.x(), s.y(), s.residue()), (&big(7), &big(5), &big(-1)));
        let s = s.proclus_step().unwrap();
        assert_eq!((s.x(), s.y(), s.residue()), (&big(17), &big(12), &big(1)));
    }

    #[test]
    fn proclus_step_requires_radicand_two() {
        let s = PellSolution::new(big(3), big(2), big(1));
        assert!(matches!(s.proclus_step(), Err(Error::RadicandNotTwo(_))));
    }

    #[test]
    fn solve_negative_unit_for_root_two() {
        let solutions = solve(&big(2), &big(-1), 4).unwrap();
        assert_eq!(
            pairs(&solutions),
            expected(&[(1, 1), (7, 5), (41, 29), (239, 169)])
        );
    }

    #[test]
    fn solve_positive_unit_for_root_three() {
        let solutions = solve(&big(3), &big(1), 4).unwrap();
        assert_eq!(
            pairs(&solutions),
            expected(&[(2, 1), (7, 4), (26, 15), (97, 56)])
        );
    }

    #[test]
    fn solve_negative_unit_for_root_three_is_empty() {
        assert!(solve(&big(3), &big(-1), 5).unwrap().is_empty());
    }

    #[test]
    fn solve_minus_two_for_root_two_lands_on_mediants() {
        // These pairs are not convergents of √2; the semiconvergent walk
        // is what finds them.
        let solutions = solve(&big(2), &big(-2), 4).unwrap();
        assert_eq!(
            pairs(&solutions),
            expected(&[(4, 3), (24, 17), (140, 99), (816, 577)])
        );
    }

    #[test]
    fn solve_minus_two_for_root_three() {
        let solutions = solve(&big(3), &big(-2), 3).unwrap();
        assert_eq!(pairs(&solutions), expected(&[(1, 1), (5, 3), (19, 11)]));
    }

    #[test]
    fn solve_domain_errors() {
        assert!(matches!(
            solve(&big(4), &big(1), 2),
            Err(Error::PerfectSquare(_, _))
        ));
        assert!(matches!(
            solve(&big(2), &big(3), 2),
            Err(Error::UnsupportedResidue(_))
        ));
        assert!(matches!(
            solve(&big(2), &big(-3), 2),
            Err(Error::UnsupportedResidue(_))
        ));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            pairs(&brute_force(&big(2), &big(1), &big(15))),
            expected(&[(3, 2), (17, 12)])
        );
        assert_eq!(
            pairs(&brute_force(&big(3), &big(-2), &big(12))),
            expected(&[(1, 1), (5, 3), (19, 11)])
        );
        assert!(brute_force(&big(5), &big(1), &big(3)).is_empty());
    }

    #[test]
    fn brute_force_excludes_the_degenerate_zero() {
        // A·1² − 2 = 0 would give x = 0; only positive x count.
        let solutions = brute_force(&big(2), &big(-2), &big(2));
        assert!(pairs(&solutions).is_empty());
    }

    #[test]
    fn solver_matches_oracle_at_desk_scale() {
        for a in [2i64, 3, 5, 6, 7, 10] {
            for m in [1i64, -1, -2] {
                let oracle = brute_force(&big(a), &big(m), &big(200));
                let solved = solve(&big(a), &big(m), oracle.len().max(1))
                    .unwrap()
                    .into_iter()
                    .filter(|s| s.y() <= &big(200))
                    .collect::<Vec<_>>();
                assert_eq!(
                    pairs(&solved),
                    pairs(&oracle),
                    "radicand {a}, residue {m}"
                );
            }
        }
    }

    #[test]
    fn solutions_satisfy_the_invariant_and_grow() {
        let solutions = solve(&big(7), &big(1), 4).unwrap();
        for s in &solutions {
            assert_eq!(
                s.x() * s.x() - big(7) * (s.y() * s.y()),
                s.residue().clone()
            );
            assert_eq!(s.residue(), &big(1));
        }
        for pair in solutions.windows(2) {
            assert!(pair[0].y() < pair[1].y());
        }
    }
}
