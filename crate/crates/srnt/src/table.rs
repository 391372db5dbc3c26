//! Parameter tables in text, CSV and JSON.
//!
//! Columns are `n k c s ℓ λ₁ λ₂ m₁ m₂ K₁ K₂`. CSV and JSON use the ASCII
//! names `n,k,c,s,ell,lambda1,lambda2,m1,m2,K1,K2`. Krein parameters are
//! integers when integral and `"p/q"` otherwise.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use srnt_core::enumerate::EnumerationRow;
use srnt_core::{Int, ParamSet, Rational};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

/// An exact rational that serializes as an integer when it is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactValue(pub Rational);

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for ExactValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<Int>().map_err(|e| format!("`{s}`: {e}"));
        let r = match s.split_once('/') {
            Some((p, q)) => Rational::new(parse(p)?, parse(q)?).map_err(|e| e.to_string())?,
            None => Rational::from_int(parse(s)?),
        };
        Ok(ExactValue(r))
    }
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self.0.to_integer() {
            Some(n) => ser.serialize_i128(n),
            None => ser.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExactValue {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExactValue;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a fraction \"p/q\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactValue, E> {
                Ok(ExactValue(Rational::from_int(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactValue, E> {
                Ok(ExactValue(Rational::from_int(v.into())))
            }
            fn visit_i128<E: de::Error>(self, v: i128) -> Result<ExactValue, E> {
                Ok(ExactValue(Rational::from_int(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactValue, E> {
                v.parse().map_err(E::custom)
            }
        }
        de.deserialize_any(V)
    }
}

/// One row of a parameter table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: Int,
    pub k: Int,
    pub c: Int,
    pub s: Int,
    pub ell: Int,
    pub lambda1: Int,
    pub lambda2: Int,
    pub m1: Int,
    pub m2: Int,
    #[serde(rename = "K1")]
    pub krein1: ExactValue,
    #[serde(rename = "K2")]
    pub krein2: ExactValue,
}

impl From<&ParamSet> for TableRow {
    fn from(p: &ParamSet) -> Self {
        TableRow {
            n: p.n,
            k: p.k,
            c: p.c,
            s: p.s,
            ell: p.ell,
            lambda1: p.q,
            lambda2: p.lambda2,
            m1: p.m1,
            m2: p.m2,
            krein1: ExactValue(p.krein1),
            krein2: ExactValue(p.krein2),
        }
    }
}

impl From<&EnumerationRow> for TableRow {
    fn from(r: &EnumerationRow) -> Self {
        TableRow::from(&r.params)
    }
}

impl TableRow {
    pub(crate) fn cells(&self) -> [String; 11] {
        [
            self.n.to_string(),
            self.k.to_string(),
            self.c.to_string(),
            self.s.to_string(),
            self.ell.to_string(),
            self.lambda1.to_string(),
            self.lambda2.to_string(),
            self.m1.to_string(),
            self.m2.to_string(),
            self.krein1.to_string(),
            self.krein2.to_string(),
        ]
    }
}

pub const CSV_HEADER: [&str; 11] = [
    "n", "k", "c", "s", "ell", "lambda1", "lambda2", "m1", "m2", "K1", "K2",
];

pub const TEXT_HEADER: [&str; 11] = ["n", "k", "c", "s", "ℓ", "λ₁", "λ₂", "m₁", "m₂", "K₁", "K₂"];

/// Right-aligned columns; an optional leading label column.
pub fn render_text(rows: &[TableRow], labels: Option<(&str, &[&str])>) -> String {
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
    let mut header: Vec<String> = TEXT_HEADER.iter().map(|s| s.to_string()).collect();
    if let Some((title, _)) = labels {
        header.insert(0, title.to_string());
    }
    grid.push(header);
    for (i, row) in rows.iter().enumerate() {
        let mut cells = row.cells().to_vec();
        if let Some((_, names)) = labels {
            cells.insert(0, names.get(i).copied().unwrap_or("").to_string());
        }
        grid.push(cells);
    }
    let cols = grid[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{:>w$}", cell, w = w))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_csv(rows: &[TableRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record(CSV_HEADER)
            .map_err(|e| CliError::Output(e.to_string()))?;
    }
    for row in rows {
        w.serialize(row)
            .map_err(|e| CliError::Output(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

pub fn render_json(rows: &[TableRow]) -> Result<String, CliError> {
    serde_json::to_string_pretty(rows).map_err(|e| CliError::Output(e.to_string()))
}

pub fn render(rows: &[TableRow], format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Text => Ok(render_text(rows, None)),
        OutputFormat::Csv => render_csv(rows),
        OutputFormat::Json => render_json(rows).map(|mut s| {
            s.push('\n');
            s
        }),
    }
}

pub fn parse_csv(text: &str) -> Result<Vec<TableRow>, String> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())
}

pub fn parse_json(text: &str) -> Result<Vec<TableRow>, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use srnt_core::derive_from_kc;

    fn row(k: Int, c: Int) -> TableRow {
        TableRow::from(&derive_from_kc(k, c).unwrap().params.unwrap())
    }

    #[test]
    fn text_layout() {
        let text = render_text(&[row(3, 1), row(22, 6)], None);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), TEXT_HEADER);
        assert_eq!(
            lines[2].split_whitespace().collect::<Vec<_>>(),
            ["100", "22", "6", "10", "77", "2", "-8", "77", "22", "1200", "0"]
        );
    }

    #[test]
    fn csv_header_is_ascii() {
        let csv = render_csv(&[row(3, 1)]).unwrap();
        assert_eq!(
            csv.lines().next().unwrap(),
            "n,k,c,s,ell,lambda1,lambda2,m1,m2,K1,K2"
        );
        assert_eq!(csv.lines().nth(1).unwrap(), "10,3,1,3,6,1,-2,5,4,4,1");
        assert_eq!(render_csv(&[]).unwrap().lines().count(), 1);
    }

    #[test]
    fn fractions_round_trip() {
        let mut r = row(3, 1);
        r.krein1 = ExactValue(Rational::new(-7, 16).unwrap());
        let json = render_json(&[r]).unwrap();
        assert!(json.contains("\"K1\": \"-7/16\""));
        assert_eq!(parse_json(&json).unwrap(), vec![r]);
        assert_eq!(parse_csv(&render_csv(&[r]).unwrap()).unwrap(), vec![r]);
    }
}
