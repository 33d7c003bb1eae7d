//! Wire formats shared by every subcommand: the record schema, the CSV
//! table layout, and the `{config, records}` JSON envelope.
//!
//! Numerators, denominators, and residues are rendered as decimal strings
//! in JSON so arbitrary-precision values survive any parser. The decimal
//! column is always derived from the exact fraction by long division,
//! never from intermediate floating point.

use clap::ValueEnum;
use rootbound::ratcore::{decimal_string, side_of};
use rootbound::{Int, Rational};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// One approximant: a reduced fraction with its position, side of `√A`,
/// exact residue, and rounded decimal rendering.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub method: &'static str,
    pub index: usize,
    pub value_num: String,
    pub value_den: String,
    pub side: &'static str,
    pub residue: Option<String>,
    pub decimal: String,
}

impl Record {
    /// Builds the record for `value` measured against `√radicand`.
    pub fn measure(
        method: &'static str,
        index: usize,
        value: &Rational,
        radicand: &Int,
        digits: usize,
    ) -> Self {
        let side = side_of(value, radicand)
            .expect("approximants are non-negative")
            .label();
        let residue =
            value.numer() * value.numer() - radicand * (value.denom() * value.denom());
        Record {
            method,
            index,
            value_num: value.numer().to_string(),
            value_den: value.denom().to_string(),
            side,
            residue: Some(residue.to_string()),
            decimal: decimal_string(value, digits),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.method,
            self.index,
            self.value_num,
            self.value_den,
            self.side,
            self.residue.as_deref().unwrap_or(""),
            self.decimal
        )
    }

    pub fn value_string(&self) -> String {
        if self.value_den == "1" {
            self.value_num.clone()
        } else {
            format!("{}/{}", self.value_num, self.value_den)
        }
    }
}

/// The fixed CSV header for record streams.
pub const RECORD_CSV_HEADER: &str = "method,index,num,den,side,residue,decimal";

#[derive(Serialize)]
struct Envelope<'a, C: Serialize, R: Serialize> {
    config: &'a C,
    records: &'a [R],
}

/// The `{config, records}` JSON document, pretty-printed.
pub fn json_envelope<C: Serialize, R: Serialize>(config: &C, records: &[R]) -> String {
    let envelope = Envelope { config, records };
    let mut out = serde_json::to_string_pretty(&envelope).expect("serialization is infallible");
    out.push('\n');
    out
}

pub fn csv_table<I: IntoIterator<Item = String>>(header: &str, rows: I) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// Space-padded text table; column widths follow the data.
pub fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let render = |cells: Vec<String>, widths: &[usize], out: &mut String| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    render(header.iter().map(|s| s.to_string()).collect(), &widths, &mut out);
    for row in rows {
        render(row.clone(), &widths, &mut out);
    }
    out
}
