//! The plat text format.
//!
//! ```text
//! plat m=3 n=6 closure=standard
//! -3 -4
//! -4 -3 -4
//! ...
//! ```
//!
//! A `#` starts a comment running to the end of the line; blank lines are
//! ignored. Serialization emits exactly the header and the n-1 rows, each
//! line terminated by `\n`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::plat::{Closure, PlatGrid, ValidationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("SyntaxError: line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Invalid(#[from] ValidationError),
}

/// The fields of a plat file before shape validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPlat {
    pub m: usize,
    pub n: usize,
    pub closure: Closure,
    pub rows: Vec<Vec<i64>>,
}

impl RawPlat {
    pub fn into_grid(self) -> Result<PlatGrid, ValidationError> {
        PlatGrid::new(self.m, self.n, self.closure, self.rows)
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Parses the header and rows without checking the grid shape.
pub fn parse_raw(text: &str) -> Result<RawPlat, FormatError> {
    let mut header: Option<(usize, usize, Closure)> = None;
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if header.is_none() {
            header = Some(parse_header(body, lineno)?);
            continue;
        }
        let row = body
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| syntax(lineno, format!("bad coefficient `{tok}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let (m, n, closure) = header.ok_or_else(|| syntax(1, "missing `plat m=<int> n=<int> closure=<standard|even>` header"))?;
    Ok(RawPlat { m, n, closure, rows })
}

fn parse_header(body: &str, line: usize) -> Result<(usize, usize, Closure), FormatError> {
    let mut tokens = body.split_whitespace();
    if tokens.next() != Some("plat") {
        return Err(syntax(line, "header must start with `plat`"));
    }
    let mut m = None;
    let mut n = None;
    let mut closure = None;
    for tok in tokens {
        let (key, value) = tok.split_once('=').ok_or_else(|| syntax(line, format!("expected key=value, found `{tok}`")))?;
        match key {
            "m" => m = Some(value.parse::<usize>().map_err(|_| syntax(line, format!("bad width `{value}`")))?),
            "n" => n = Some(value.parse::<usize>().map_err(|_| syntax(line, format!("bad length `{value}`")))?),
            "closure" => {
                closure = Some(Closure::from_keyword(value).ok_or_else(|| syntax(line, format!("unknown closure `{value}`")))?)
            }
            _ => return Err(syntax(line, format!("unknown header key `{key}`"))),
        }
    }
    match (m, n, closure) {
        (Some(m), Some(n), Some(c)) => Ok((m, n, c)),
        _ => Err(syntax(line, "header needs m, n and closure")),
    }
}

/// Parses and validates a plat file.
pub fn parse_plat(text: &str) -> Result<PlatGrid, FormatError> {
    Ok(parse_raw(text)?.into_grid()?)
}

pub fn serialize_plat(grid: &PlatGrid) -> String {
    let mut out = String::new();
    writeln!(out, "plat m={} n={} closure={}", grid.m(), grid.n(), grid.closure().keyword()).unwrap();
    for row in grid.rows() {
        let line: Vec<String> = row.iter().map(|a| a.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
