//! Property-based invariants for the exact arithmetic layer and the
//! iteration schemes.

use std::cmp::Ordering;

use proptest::prelude::*;
use rootbound::classical::{ahm_enclosure, heron_sequence, heron_step, AhmState};
use rootbound::ratcore::{
    cmp_sqrt, decimal_string, is_perfect_square, isqrt, reduce, SexagesimalDigits,
};
use rootbound::{Int, Rational};

fn big(v: i64) -> Int {
    Int::from(v)
}

#[test]
fn cmp_sqrt_never_equal_for_non_square_radicands() {
    // exhaustive small-case sweep
    for a in 2i64..=30 {
        if is_perfect_square(&big(a)).is_some() {
            continue;
        }
        for num in 0i64..=60 {
            for den in 1i64..=40 {
                let r = Rational::new(big(num), big(den));
                assert_ne!(
                    cmp_sqrt(&r, &big(a)).unwrap(),
                    Ordering::Equal,
                    "{num}/{den} vs sqrt({a})"
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn reduce_yields_coprime_parts_with_positive_denominator(
        num in -1_000_000_000i64..1_000_000_000,
        den in (-1_000_000_000i64..1_000_000_000).prop_filter("nonzero", |d| *d != 0),
    ) {
        let r = reduce(big(num), big(den)).unwrap();
        prop_assert!(r.denom() > &big(0));
        prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()), big(1));
        // same value: cross multiplication
        prop_assert_eq!(r.numer() * big(den), r.denom() * big(num));
    }

    #[test]
    fn cmp_sqrt_matches_the_residue_sign(
        num in 0i64..1_000_000,
        den in 1i64..10_000,
        a in 0i64..1_000,
    ) {
        let r = Rational::new(big(num), big(den));
        let ordering = cmp_sqrt(&r, &big(a)).unwrap();
        let residue = big(num) * big(num) - big(a) * big(den) * big(den);
        // reduction cannot change the sign of num² − A·den²
        let expected = residue.cmp(&big(0));
        prop_assert_eq!(ordering, expected);
    }

    #[test]
    fn isqrt_floor_bounds_hold_for_large_values(hi in 0u64..u64::MAX, lo in 0u64..u64::MAX) {
        let n = (Int::from(hi) << 64u32) + Int::from(lo);
        let s = isqrt(&n).unwrap();
        prop_assert!(&s * &s <= n);
        let s1 = &s + 1;
        prop_assert!(&s1 * &s1 > n);
    }

    #[test]
    fn sexagesimal_value_is_monotone_in_every_digit(
        digits in prop::collection::vec(0i64..59, 1..6),
        bump in 0usize..6,
    ) {
        let bump = bump % digits.len();
        let base = SexagesimalDigits::new(big(1), digits.iter().map(|&d| big(d)).collect())
            .unwrap()
            .to_rational();
        let mut bumped_digits = digits.clone();
        bumped_digits[bump] += 1;
        let bumped =
            SexagesimalDigits::new(big(1), bumped_digits.iter().map(|&d| big(d)).collect())
                .unwrap()
                .to_rational();
        prop_assert!(bumped > base);
    }

    #[test]
    fn decimal_rendering_brackets_the_exact_value(
        num in 0i64..1_000_000,
        den in 1i64..10_000,
        digits in 0usize..9,
    ) {
        // The rounded rendering differs from the exact value by at most
        // half an ulp of the requested precision.
        let r = Rational::new(big(num), big(den));
        let rendered = decimal_string(&r, digits);
        let parsed = parse_decimal(&rendered, digits);
        let half_ulp = Rational::new(big(1), big(2) * Int::from(10u32).pow(digits as u32));
        let diff = if parsed >= r { &parsed - &r } else { &r - &parsed };
        prop_assert!(diff <= half_ulp, "{rendered} vs {r}");
    }

    #[test]
    fn heron_error_identity_and_upper_bound(
        p in 1i64..500,
        q in 1i64..500,
        a in 2i64..200,
    ) {
        let x = Rational::new(big(p), big(q));
        let a_int = big(a);
        // quadratic error law e' = e²/(4x²), symbolically in rationals
        let e = &x * &x - Rational::from_integer(a_int.clone());
        let next = heron_step(&x, &a_int).unwrap();
        let e_next = &next * &next - Rational::from_integer(a_int.clone());
        let four_x_sq = Rational::from_integer(big(4)) * &x * &x;
        prop_assert_eq!(e_next, &e * &e / four_x_sq);

        // every iterate after the first stays at or above the root,
        // strictly for non-square radicands
        let iterates = heron_sequence(&a_int, Some(x), 4).unwrap();
        for value in &iterates[1..] {
            let ordering = cmp_sqrt(value, &a_int).unwrap();
            if is_perfect_square(&a_int).is_some() {
                prop_assert_ne!(ordering, Ordering::Less);
            } else {
                prop_assert_eq!(ordering, Ordering::Greater);
            }
        }
    }

    #[test]
    fn ahm_product_nesting_and_mean_ordering(
        product in 2i64..60,
        p in 1i64..50,
        q in 1i64..50,
    ) {
        // pair (b, N·1/b) has integer product N, so root comparisons are exact
        let b = Rational::new(big(p), big(q));
        let a = Rational::from_integer(big(product)) / &b;
        let state = AhmState::new(a, b).unwrap();
        let product_value = state.product();
        prop_assert_eq!(&product_value, &Rational::from_integer(big(product)));

        let intervals = ahm_enclosure(
            state.upper().clone(),
            state.lower().clone(),
            6,
        ).unwrap();
        for pair in intervals.windows(2) {
            prop_assert!(pair[0].0 <= pair[1].0);
            prop_assert!(pair[1].1 <= pair[0].1);
        }
        for (lower, upper) in &intervals {
            // the root of the product never escapes the interval
            prop_assert_ne!(cmp_sqrt(lower, &big(product)).unwrap(), Ordering::Greater);
            prop_assert_ne!(cmp_sqrt(upper, &big(product)).unwrap(), Ordering::Less);
            // AM-GM-HM: lower ≤ √N ≤ upper with the product restored
            prop_assert_eq!(lower * upper, Rational::from_integer(big(product)));
        }
    }
}

fn parse_decimal(rendered: &str, digits: usize) -> Rational {
    let (sign, body) = match rendered.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, rendered),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    assert_eq!(frac_part.len(), if digits == 0 { 0 } else { digits });
    let scale = Int::from(10u32).pow(digits as u32);
    let int_value: Int = int_part.parse().unwrap();
    let frac_value: Int = if frac_part.is_empty() {
        Int::from(0)
    } else {
        frac_part.parse().unwrap()
    };
    Rational::new(
        (int_value * &scale + frac_value) * Int::from(sign),
        scale,
    )
}
