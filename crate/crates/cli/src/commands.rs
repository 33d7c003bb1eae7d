//! One function per subcommand; each returns the stdout payload plus the
//! process exit code. Domain failures (square radicands, unsupported
//! residues, bad digits) map to exit 2, usage mistakes to exit 64.

use clap::ValueEnum;
use num_traits::One;
use rootbound::ratcore::SexagesimalDigits;
use rootbound::{cfrac, classical, pell, pythag, theon, Int, Rational};
use serde::Serialize;

use crate::archimedes::{archimedes_report, classical_bounds, render_text};
use crate::output::{
    csv_table, json_envelope, text_table, Format, Record, RECORD_CSV_HEADER,
};

#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Usage(_) => 64,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(msg) | CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<rootbound::Error> for CliError {
    fn from(err: rootbound::Error) -> Self {
        CliError::Domain(err.to_string())
    }
}

pub type CmdResult = Result<(String, i32), CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Theon,
    Heron,
    Ahm,
    Cf,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Theon => "theon",
            Method::Heron => "heron",
            Method::Ahm => "ahm",
            Method::Cf => "cf",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TripletSource {
    /// Successive x² − 2y² = −1 pairs
    Pell2,
    /// The family (2n+1, 2n²+2n, 2n²+2n+1)
    Family,
}

fn require_iterations(iterations: usize) -> Result<(), CliError> {
    if iterations == 0 {
        return Err(CliError::Usage("--iterations must be at least 1".into()));
    }
    Ok(())
}

pub fn check_digits(digits: usize) -> Result<(), CliError> {
    if digits > 1000 {
        return Err(CliError::Usage(
            "--digits is capped at 1000 decimal places".into(),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct RunConfig {
    #[serde(rename = "A")]
    a: String,
    iterations: usize,
    method: &'static str,
    seed_x: String,
    seed_y: String,
    format: &'static str,
    digits: usize,
}

fn record_text_table(records: &[Record]) -> String {
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.index.to_string(),
                r.value_string(),
                r.side.to_string(),
                r.residue.clone().unwrap_or_default(),
                r.decimal.clone(),
            ]
        })
        .collect();
    text_table(&["index", "value", "side", "residue", "decimal"], &rows)
}

fn render_records(format: Format, config: &RunConfig, records: &[Record]) -> String {
    match format {
        Format::Text => record_text_table(records),
        Format::Csv => csv_table(RECORD_CSV_HEADER, records.iter().map(Record::csv_row)),
        Format::Json => json_envelope(config, records),
    }
}

/// Resolved seeds and the record stream for one approximation method.
fn method_records(
    a: &Int,
    method: Method,
    iterations: usize,
    x0: Option<&Int>,
    y0: Option<&Int>,
    digits: usize,
) -> Result<(Vec<Record>, Int, Int), CliError> {
    let one = Int::one();
    match method {
        Method::Theon => {
            let sx = x0.unwrap_or(&one).clone();
            let sy = y0.unwrap_or(&one).clone();
            let seq = theon::sequence(a, iterations, &sx, &sy)?;
            let records = seq
                .iter()
                .map(|c| Record::measure("theon", c.index(), c.value(), a, digits))
                .collect();
            Ok((records, sx, sy))
        }
        Method::Heron => {
            let sx = x0.unwrap_or(&one).clone();
            let seed = Rational::from_integer(sx.clone());
            let seq = classical::heron_sequence(a, Some(seed), iterations)?;
            let records = seq
                .iter()
                .enumerate()
                .map(|(i, x)| Record::measure("heron", i, x, a, digits))
                .collect();
            Ok((records, sx.clone(), y0.unwrap_or(&sx).clone()))
        }
        Method::Ahm => {
            // Default pair (A, 1): its product is A, so the intervals
            // squeeze √A.
            let lower = x0.unwrap_or(&one).clone();
            let upper = y0.unwrap_or(a).clone();
            let intervals = classical::ahm_enclosure(
                Rational::from_integer(upper.clone()),
                Rational::from_integer(lower.clone()),
                iterations,
            )?;
            let mut records = Vec::with_capacity(2 * intervals.len());
            for (i, (lo, hi)) in intervals.iter().enumerate() {
                records.push(Record::measure("ahm", i + 1, lo, a, digits));
                records.push(Record::measure("ahm", i + 1, hi, a, digits));
            }
            Ok((records, lower, upper))
        }
        Method::Cf => {
            let expansion = cfrac::expand(a)?;
            let records = expansion
                .convergents(iterations)
                .iter()
                .enumerate()
                .map(|(k, c)| Record::measure("cf", k, c, a, digits))
                .collect();
            let sx = x0.unwrap_or(&one).clone();
            let sy = y0.unwrap_or(&one).clone();
            Ok((records, sx, sy))
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn approx(
    a: &Int,
    method: Method,
    iterations: usize,
    x0: Option<&Int>,
    y0: Option<&Int>,
    format: Format,
    digits: usize,
) -> CmdResult {
    require_iterations(iterations)?;
    let (records, seed_x, seed_y) = method_records(a, method, iterations, x0, y0, digits)?;
    let config = RunConfig {
        a: a.to_string(),
        iterations,
        method: method.name(),
        seed_x: seed_x.to_string(),
        seed_y: seed_y.to_string(),
        format: format.name(),
        digits,
    };
    Ok((render_records(format, &config, &records), 0))
}

pub fn enclose(a: &Int, iterations: usize, format: Format, digits: usize) -> CmdResult {
    require_iterations(iterations)?;
    let chain = theon::enclosure_chain(a, iterations)?;
    let to_records = |side: &[theon::Convergent<Int>]| -> Vec<Record> {
        side.iter()
            .map(|c| Record::measure("theon", c.index(), c.value(), a, digits))
            .collect()
    };
    let mut records = to_records(chain.below());
    records.extend(to_records(chain.above()));
    let config = RunConfig {
        a: a.to_string(),
        iterations,
        method: "theon",
        seed_x: "1".into(),
        seed_y: "1".into(),
        format: format.name(),
        digits,
    };
    let payload = match format {
        Format::Text => {
            let join = |side: &[theon::Convergent<Int>], sep: &str| {
                side.iter()
                    .map(|c| {
                        let v = c.value();
                        if v.denom().is_one() {
                            v.numer().to_string()
                        } else {
                            format!("{}/{}", v.numer(), v.denom())
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(sep)
            };
            format!(
                "below: {}\nabove: {}\n",
                join(chain.below(), " < "),
                join(chain.above(), " > ")
            )
        }
        Format::Csv => csv_table(RECORD_CSV_HEADER, records.iter().map(Record::csv_row)),
        Format::Json => json_envelope(&config, &records),
    };
    Ok((payload, 0))
}

#[derive(Serialize)]
struct CfConfig {
    #[serde(rename = "A")]
    a: String,
    count: usize,
    a0: String,
    period: Vec<String>,
    format: &'static str,
    digits: usize,
}

pub fn cf(a: &Int, count: usize, format: Format, digits: usize) -> CmdResult {
    let expansion = cfrac::expand(a)?;
    let records: Vec<Record> = expansion
        .convergents(count)
        .iter()
        .enumerate()
        .map(|(k, c)| Record::measure("cf", k, c, a, digits))
        .collect();
    let config = CfConfig {
        a: a.to_string(),
        count,
        a0: expansion.a0().to_string(),
        period: expansion.period().iter().map(Int::to_string).collect(),
        format: format.name(),
        digits,
    };
    let payload = match format {
        Format::Text => {
            let mut out = format!("{expansion}\n");
            if !records.is_empty() {
                out.push_str(&record_text_table(&records));
            }
            out
        }
        Format::Csv => csv_table(RECORD_CSV_HEADER, records.iter().map(Record::csv_row)),
        Format::Json => json_envelope(&config, &records),
    };
    Ok((payload, 0))
}

#[derive(Serialize)]
struct PellConfig {
    #[serde(rename = "A")]
    a: String,
    m: String,
    count: usize,
    format: &'static str,
}

#[derive(Serialize)]
struct PellRecord {
    index: usize,
    x: String,
    y: String,
    residue: String,
    ok: bool,
}

pub fn pell_cmd(a: &Int, m: &Int, count: usize, format: Format) -> CmdResult {
    let solutions = pell::solve(a, m, count)?;
    if solutions.is_empty() {
        eprintln!("no solutions: x^2 - {a}*y^2 = {m} has no positive solutions");
    }
    let records: Vec<PellRecord> = solutions
        .iter()
        .enumerate()
        .map(|(i, s)| {
            // verification column: recompute the residue from scratch
            let ok = s.x() * s.x() - a * (s.y() * s.y()) == *m;
            PellRecord {
                index: i + 1,
                x: s.x().to_string(),
                y: s.y().to_string(),
                residue: s.residue().to_string(),
                ok,
            }
        })
        .collect();
    let config = PellConfig {
        a: a.to_string(),
        m: m.to_string(),
        count,
        format: format.name(),
    };
    let payload = match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.index.to_string(),
                        r.x.clone(),
                        r.y.clone(),
                        r.residue.clone(),
                        r.ok.to_string(),
                    ]
                })
                .collect();
            text_table(&["index", "x", "y", "residue", "ok"], &rows)
        }
        Format::Csv => csv_table(
            "index,x,y,residue,ok",
            records.iter().map(|r| {
                format!("{},{},{},{},{}", r.index, r.x, r.y, r.residue, r.ok)
            }),
        ),
        Format::Json => json_envelope(&config, &records),
    };
    Ok((payload, 0))
}

#[derive(Serialize)]
struct TripletsConfig {
    source: &'static str,
    count: usize,
    format: &'static str,
}

#[derive(Serialize)]
struct TripleRecord {
    index: usize,
    a: String,
    b: String,
    c: String,
}

pub fn triplets(source: TripletSource, count: usize, format: Format) -> CmdResult {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let triples: Vec<pythag::Triple<Int>> = match source {
        TripletSource::Family => {
            let mut out = Vec::with_capacity(count);
            for n in 1..=count {
                out.push(pythag::pythagoras_family(&Int::from(n))?);
            }
            out
        }
        TripletSource::Pell2 => {
            let pairs = pell::solve(&Int::from(2), &Int::from(-1), count)?;
            let mut out = Vec::with_capacity(pairs.len());
            for s in &pairs {
                out.push(pythag::triple_from_negative_pell(s.x(), s.y())?);
            }
            out
        }
    };
    let records: Vec<TripleRecord> = triples
        .iter()
        .enumerate()
        .map(|(i, t)| TripleRecord {
            index: i + 1,
            a: t.a.to_string(),
            b: t.b.to_string(),
            c: t.c.to_string(),
        })
        .collect();
    let config = TripletsConfig {
        source: match source {
            TripletSource::Pell2 => "pell2",
            TripletSource::Family => "family",
        },
        count,
        format: format.name(),
    };
    let payload = match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| vec![r.index.to_string(), r.a.clone(), r.b.clone(), r.c.clone()])
                .collect();
            text_table(&["index", "a", "b", "c"], &rows)
        }
        Format::Csv => csv_table(
            "index,a,b,c",
            records
                .iter()
                .map(|r| format!("{},{},{},{}", r.index, r.a, r.b, r.c)),
        ),
        Format::Json => json_envelope(&config, &records),
    };
    Ok((payload, 0))
}

pub fn compare(a: &Int, iterations: usize, format: Format, digits: usize) -> CmdResult {
    require_iterations(iterations)?;
    let one = Int::one();
    let theon_seq = theon::sequence(a, iterations + 1, &one, &one)?;
    let heron_seq = classical::heron_sequence(
        a,
        Some(Rational::from_integer(one.clone())),
        iterations + 1,
    )?;
    let ahm_intervals = classical::ahm_enclosure(
        Rational::from_integer(a.clone()),
        Rational::from_integer(one.clone()),
        iterations,
    )?;
    let cf_seq = cfrac::expand(a)?.convergents(iterations + 1);

    // Row k holds the k-th iterate of every method; the seed entries at
    // index 0 are skipped.
    let mut entries: Vec<(Rational, Record)> = Vec::with_capacity(4 * iterations);
    for k in 1..=iterations {
        let theon_value = theon_seq[k].value();
        entries.push((
            theon_value.clone(),
            Record::measure("theon", k, theon_value, a, digits),
        ));
        entries.push((
            heron_seq[k].clone(),
            Record::measure("heron", k, &heron_seq[k], a, digits),
        ));
        let (lo, hi) = &ahm_intervals[k - 1];
        entries.push((lo.clone(), Record::measure("ahm", k, lo, a, digits)));
        entries.push((hi.clone(), Record::measure("ahm", k, hi, a, digits)));
        entries.push((
            cf_seq[k].clone(),
            Record::measure("cf", k, &cf_seq[k], a, digits),
        ));
    }
    let records: Vec<Record> = entries.iter().map(|(_, r)| r.clone()).collect();
    let config = RunConfig {
        a: a.to_string(),
        iterations,
        method: "all",
        seed_x: "1".into(),
        seed_y: "1".into(),
        format: format.name(),
        digits,
    };
    let payload = match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|(value, r)| {
                    let abs_residue = r
                        .residue
                        .as_deref()
                        .unwrap_or("")
                        .trim_start_matches('-')
                        .to_string();
                    vec![
                        r.index.to_string(),
                        r.method.to_string(),
                        r.value_string(),
                        r.side.to_string(),
                        abs_residue,
                        value.denom().bits().to_string(),
                        r.decimal.clone(),
                    ]
                })
                .collect();
            text_table(
                &["index", "method", "value", "side", "|residue|", "den_bits", "decimal"],
                &rows,
            )
        }
        Format::Csv => csv_table(RECORD_CSV_HEADER, records.iter().map(Record::csv_row)),
        Format::Json => json_envelope(&config, &records),
    };
    Ok((payload, 0))
}

pub fn verify_archimedes(format: Format) -> CmdResult {
    let (lower, upper) = classical_bounds();
    let report = archimedes_report(&lower, &upper);
    let code = if report.all_ok() { 0 } else { 1 };
    let payload = match format {
        Format::Text => render_text(&report),
        Format::Csv => format!(
            "lower_ok,upper_ok,equivalence_ok\n{},{},{}\n",
            report.lower_ok, report.upper_ok, report.equivalence_ok
        ),
        Format::Json => {
            let mut out =
                serde_json::to_string_pretty(&report).expect("report serializes");
            out.push('\n');
            out
        }
    };
    Ok((payload, code))
}

#[derive(Serialize)]
struct SexagesimalConfig {
    integer_part: String,
    fraction_digits: Vec<String>,
    format: &'static str,
    digits: usize,
}

#[derive(Serialize)]
struct SexagesimalRecord {
    value_num: String,
    value_den: String,
    decimal: String,
}

pub fn sexagesimal(values: &[Int], format: Format, digits: usize) -> CmdResult {
    let (integer_part, fraction) = values
        .split_first()
        .ok_or_else(|| CliError::Usage("expected at least the integer digit".into()))?;
    let expansion = SexagesimalDigits::new(integer_part.clone(), fraction.to_vec())?;
    let value = expansion.to_rational();
    let record = SexagesimalRecord {
        value_num: value.numer().to_string(),
        value_den: value.denom().to_string(),
        decimal: rootbound::ratcore::decimal_string(&value, digits),
    };
    let config = SexagesimalConfig {
        integer_part: integer_part.to_string(),
        fraction_digits: fraction.iter().map(Int::to_string).collect(),
        format: format.name(),
        digits,
    };
    let payload = match format {
        Format::Text => format!(
            "exact: {}/{}\ndecimal: {}\n",
            record.value_num, record.value_den, record.decimal
        ),
        Format::Csv => csv_table(
            "num,den,decimal",
            std::iter::once(format!(
                "{},{},{}",
                record.value_num, record.value_den, record.decimal
            )),
        ),
        Format::Json => json_envelope(&config, std::slice::from_ref(&record)),
    };
    Ok((payload, 0))
}
