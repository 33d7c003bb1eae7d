//! Cross-module checks: the same classical numbers must fall out of
//! independent routes (side-and-diagonal iteration, continued fractions,
//! Pell solving, brute-force search), and the exact certificates must
//! hold over desk-scale sweeps.

use rootbound::ratcore::Side;
use rootbound::{cfrac, pell, pythag, theon, Int, Rational};

fn big(v: i64) -> Int {
    Int::from(v)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(big(n), big(d))
}

#[test]
fn continued_fraction_convergents_equal_side_diagonal_ratios() {
    for a in [2i64, 3] {
        assert!(cfrac::agrees_with_side_diagonal(&big(a), 15).unwrap());
        // Same fact, re-derived here rather than trusting the helper.
        let cf = cfrac::expand(&big(a)).unwrap().convergents(15);
        let sd: Vec<_> = theon::sequence(&big(a), 15, &big(1), &big(1))
            .unwrap()
            .into_iter()
            .map(|c| c.value().clone())
            .collect();
        assert_eq!(cf, sd, "radicand {a}");
    }
}

#[test]
fn proclus_iteration_reproduces_the_side_diagonal_convergents() {
    let convergents = theon::sequence(&big(2), 12, &big(1), &big(1)).unwrap();
    let mut solution = pell::PellSolution::new(big(2), big(1), big(1));
    for (n, convergent) in convergents.iter().enumerate() {
        assert_eq!(convergent.value().numer(), solution.x(), "step {n}");
        assert_eq!(convergent.value().denom(), solution.y(), "step {n}");
        let expected_residue = if n % 2 == 0 { big(-1) } else { big(1) };
        assert_eq!(solution.residue(), &expected_residue, "step {n}");
        solution = solution.proclus_step().unwrap();
    }
}

#[test]
fn reduced_residues_for_radicand_three_alternate_plus_one_minus_two() {
    let convergents = theon::sequence(&big(3), 20, &big(1), &big(1)).unwrap();
    for (n, c) in convergents.iter().enumerate() {
        let expected = if n % 2 == 1 { big(1) } else { big(-2) };
        assert_eq!(c.residue(), &expected, "index {n}");
    }
}

#[test]
fn convergent_sides_alternate() {
    for a in [2i64, 3, 5, 6, 7, 8, 10] {
        let convergents = theon::sequence(&big(a), 50, &big(1), &big(1)).unwrap();
        for (n, pair) in convergents.windows(2).enumerate() {
            assert_ne!(pair[0].side(), pair[1].side(), "radicand {a}, step {n}");
            assert_ne!(pair[0].side(), Side::Exact);
        }
    }
}

#[test]
fn enclosure_chains_squeeze_strictly() {
    for a in [2i64, 3, 5, 6, 7, 8, 10] {
        let chain = theon::enclosure_chain(&big(a), 30).unwrap();
        let below = chain.below();
        let above = chain.above();
        for pair in below.windows(2) {
            assert!(pair[0].value() < pair[1].value(), "radicand {a}");
        }
        for pair in above.windows(2) {
            assert!(pair[0].value() > pair[1].value(), "radicand {a}");
        }
        let best_below = below.last().unwrap();
        let best_above = above.last().unwrap();
        assert!(best_below.value() < best_above.value(), "radicand {a}");
        assert!(below.iter().all(|c| c.side() == Side::Below));
        assert!(above.iter().all(|c| c.side() == Side::Above));
    }
}

#[test]
fn error_certificates_hold_through_step_forty() {
    for a in [2i64, 3] {
        let convergents = theon::sequence(&big(a), 41, &big(1), &big(1)).unwrap();
        for (n, convergent) in convergents.iter().enumerate().skip(1) {
            assert!(
                theon::error_certificate(&big(a), n, convergent.value()).unwrap(),
                "radicand {a}, step {n}"
            );
        }
    }
}

#[test]
fn contraction_identity_holds_along_real_runs() {
    for a in [2i64, 3, 5, 7] {
        for c in theon::sequence(&big(a), 12, &big(1), &big(1)).unwrap() {
            assert!(theon::contraction_identity_holds(&big(a), c.value()).unwrap());
        }
    }
}

#[test]
fn raw_residue_recurrence_over_thirty_steps() {
    for a in [2i64, 3, 5, 7] {
        let mut state = theon::SideDiagonalState::new(big(a)).unwrap();
        for n in 0..30 {
            assert!(
                state.residue_step_identity_holds(),
                "radicand {a}, step {n}"
            );
            state = state.step();
        }
    }
}

#[test]
fn negative_residue_convergents_chain_into_triples() {
    let convergents = theon::sequence(&big(2), 16, &big(1), &big(1)).unwrap();
    let mut chained = 0;
    for c in &convergents {
        if c.residue() == &big(-1) {
            let triple =
                pythag::triple_from_negative_pell(c.value().numer(), c.value().denom())
                    .unwrap();
            assert_eq!(&(&triple.a * &triple.a) + &(&triple.b * &triple.b), &triple.c * &triple.c);
            chained += 1;
        } else {
            let square =
                pythag::square_from_positive_pell(c.value().numer(), c.value().denom())
                    .unwrap();
            assert_eq!(square, c.value().denom() * c.value().denom());
        }
    }
    assert_eq!(chained, 8, "half of 16 alternating convergents sit below");
}

#[test]
fn pell_solver_agrees_with_brute_force_at_moderate_scale() {
    let bound = big(300);
    for a in [2i64, 3, 5, 6, 7, 10] {
        for m in [1i64, -1, -2] {
            let oracle = pell::brute_force(&big(a), &big(m), &bound);
            let solved: Vec<_> = pell::solve(&big(a), &big(m), oracle.len() + 2)
                .unwrap()
                .into_iter()
                .filter(|s| s.y() <= &bound)
                .collect();
            let key = |s: &pell::PellSolution<Int>| (s.y().clone(), s.x().clone());
            assert_eq!(
                solved.iter().map(key).collect::<Vec<_>>(),
                oracle.iter().map(key).collect::<Vec<_>>(),
                "radicand {a}, residue {m}"
            );
        }
    }
}

#[test]
fn ahm_intervals_reuse_the_theon_numbers() {
    // The second interval for the (2, 1) pair lands on 17/12, a number
    // the side-and-diagonal table also produces.
    let intervals =
        rootbound::classical::ahm_enclosure(rat(2, 1), rat(1, 1), 2).unwrap();
    assert_eq!(intervals[1].1, rat(17, 12));
    let theon_values: Vec<_> = theon::sequence(&big(2), 4, &big(1), &big(1))
        .unwrap()
        .into_iter()
        .map(|c| c.value().clone())
        .collect();
    assert!(theon_values.contains(&rat(17, 12)));

    let intervals =
        rootbound::classical::ahm_enclosure(rat(3, 1), rat(1, 1), 2).unwrap();
    assert_eq!(intervals[1].1, rat(7, 4));
}
