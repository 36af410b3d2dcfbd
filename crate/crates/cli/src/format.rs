//! Renderers for triangles and sequences, and the b-file parser.

use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
    Bfile,
}

/// A JSON number with the exact digits of `v`.
pub fn json_int(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

pub fn json_ints(vs: &[BigInt]) -> Value {
    Value::Array(vs.iter().map(json_int).collect())
}

/// Right-aligned grid with a header of `k` indices and a left column of `n`.
/// Only `0 <= k <= n` is printed, so rows have no trailing blanks.
pub fn render_table(rows: &[Vec<BigInt>]) -> String {
    let Some(last) = rows.len().checked_sub(1) else {
        return String::new();
    };
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .chain(std::iter::once(last.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = "n\\k";
    let lw = label.len().max(last.to_string().len());
    let mut out = format!("{label:>lw$} |");
    for k in 0..=last {
        out.push_str(&format!(" {k:>width$}"));
    }
    out.push('\n');
    out.push_str(&"-".repeat(lw + 1));
    out.push('+');
    out.push_str(&"-".repeat((last + 1) * (width + 1)));
    out.push('\n');
    for (n, row) in rows.iter().enumerate() {
        out.push_str(&format!("{n:>lw$} |"));
        for v in row {
            out.push_str(&format!(" {:>width$}", v.to_string()));
        }
        out.push('\n');
    }
    out
}

pub fn render_triangle_csv(rows: &[Vec<BigInt>]) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, row) in rows.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            out.push_str(&format!("{n},{k},{v}\n"));
        }
    }
    out
}

/// Entries read row by row, numbered from `offset`.
pub fn render_triangle_bfile(rows: &[Vec<BigInt>], offset: i64) -> String {
    let flat: Vec<BigInt> = rows.iter().flatten().cloned().collect();
    render_bfile(&flat, offset)
}

/// One `index value` line per term.
pub fn render_bfile(terms: &[BigInt], offset: i64) -> String {
    let mut out = String::new();
    for (i, v) in terms.iter().enumerate() {
        out.push_str(&format!("{} {v}\n", offset + i as i64));
    }
    out
}

pub fn render_sequence_table(terms: &[BigInt], offset: i64) -> String {
    let last = offset + terms.len() as i64 - 1;
    let iw = offset.to_string().len().max(last.to_string().len());
    let mut out = String::new();
    for (i, v) in terms.iter().enumerate() {
        out.push_str(&format!("{:>iw$}  {v}\n", offset + i as i64));
    }
    out
}

pub fn render_sequence_csv(terms: &[BigInt], offset: i64) -> String {
    let mut out = String::from("n,value\n");
    for (i, v) in terms.iter().enumerate() {
        out.push_str(&format!("{},{v}\n", offset + i as i64));
    }
    out
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("b-file line {line}: {reason}")]
pub struct BfileError {
    pub line: usize,
    pub reason: String,
}

/// Parse `index value` lines. Lines starting with `#` are comments. Every
/// other line must hold exactly two tokens separated by one space, and the
/// text must end with a newline.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, BfileError> {
    let err = |line: usize, reason: &str| BfileError {
        line,
        reason: reason.to_string(),
    };
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(err(text.lines().count(), "missing final newline"));
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let no = i + 1;
        if line.starts_with('#') {
            continue;
        }
        let mut parts = line.split(' ');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(no, "expected exactly two space-separated tokens"));
        };
        let idx = a
            .parse::<i64>()
            .map_err(|_| err(no, "index is not an integer"))?;
        if b.is_empty() || b.starts_with('+') {
            return Err(err(no, "value is not an integer"));
        }
        let val = b
            .parse::<BigInt>()
            .map_err(|_| err(no, "value is not an integer"))?;
        out.push((idx, val));
    }
    Ok(out)
}
