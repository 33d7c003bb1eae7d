//! Exact verification of the classical bounds `265/153 < √3 < 1351/780`
//! and their equivalence with the `26 − 1/52` and `26 − 1/51` forms.

use std::cmp::Ordering;

use rootbound::ratcore::cmp_sqrt;
use rootbound::{Int, Rational};
use serde::Serialize;

/// Outcome of checking a candidate pair of bounds for `√3`.
///
/// `lower_ok` and `upper_ok` are the cross-multiplied comparisons against
/// 3; `equivalence_ok` states that `26 − 1/52` is exactly `15` times the
/// upper bound and `26 − 1/51` exactly `15` times the lower one.
#[derive(Debug, Clone, Serialize)]
pub struct ArchimedesReport {
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub equivalence_ok: bool,
    #[serde(skip)]
    pub lower: Rational,
    #[serde(skip)]
    pub upper: Rational,
}

impl ArchimedesReport {
    pub fn all_ok(&self) -> bool {
        self.lower_ok && self.upper_ok && self.equivalence_ok
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// The bounds the toolkit defends: `265/153` from below, `1351/780`
/// from above.
pub fn classical_bounds() -> (Rational, Rational) {
    (rat(265, 153), rat(1351, 780))
}

pub fn archimedes_report(lower: &Rational, upper: &Rational) -> ArchimedesReport {
    let three = Int::from(3);
    let lower_ok = cmp_sqrt(lower, &three) == Ok(Ordering::Less);
    let upper_ok = cmp_sqrt(upper, &three) == Ok(Ordering::Greater);
    let fifteen = Rational::from_integer(Int::from(15));
    let upper_form = rat(26, 1) - rat(1, 52);
    let lower_form = rat(26, 1) - rat(1, 51);
    let equivalence_ok =
        upper_form == &fifteen * upper && lower_form == &fifteen * lower;
    ArchimedesReport {
        lower_ok,
        upper_ok,
        equivalence_ok,
        lower: lower.clone(),
        upper: upper.clone(),
    }
}

/// Human-readable report with every cross-multiplied comparison spelled
/// out.
pub fn render_text(report: &ArchimedesReport) -> String {
    let three = Int::from(3);
    let mut out = String::new();
    let show = |r: &Rational, relation: &str, ok: bool, out: &mut String| {
        let num_sq = r.numer() * r.numer();
        let three_den_sq = &three * (r.denom() * r.denom());
        out.push_str(&format!(
            "{} {} sqrt(3)    since {}^2 = {} {} {} = 3*{}^2    [{}]\n",
            r,
            relation,
            r.numer(),
            num_sq,
            relation,
            three_den_sq,
            r.denom(),
            if ok { "ok" } else { "FAILED" }
        ));
    };
    show(&report.lower, "<", report.lower_ok, &mut out);
    show(&report.upper, ">", report.upper_ok, &mut out);
    out.push_str(&format!(
        "26 - 1/52 = 15*({}) and 26 - 1/51 = 15*({})    [{}]\n",
        report.upper,
        report.lower,
        if report.equivalence_ok { "ok" } else { "FAILED" }
    ));
    out.push_str(if report.all_ok() { "PASS\n" } else { "FAIL\n" });
    out
}
