//! Plain-text table and permutation formats.
//!
//! A table file holds the order `n` on its first line followed by `n` lines
//! of `n` whitespace-separated entries; line `a + 2` lists `a∘0 … a∘(n-1)`.
//! Blank lines and `#` comments are ignored.
//!
//! A permutation is either one line of `n` images or cycle notation such as
//! `(2 3)(5 7)`; commas inside cycles are accepted, so `(2,3)` also parses.

use thiserror::Error;

use crate::perm::{Permutation, PermutationError};
use crate::table::{GroupTable, ValidationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing order line")]
    MissingOrder,
    #[error("line {line}: `{token}` is not a non-negative integer")]
    BadToken { line: usize, token: String },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("invalid table: {0}")]
    Invalid(#[from] ValidationError),
    #[error("malformed permutation `{0}`")]
    BadPermutation(String),
    #[error("permutation has {found} images, expected {expected}")]
    PermutationLength { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    Permutation(#[from] PermutationError),
}

/// Raw rows of a table file, checked for shape but not for group axioms.
pub fn parse_table_rows(text: &str) -> Result<Vec<Vec<usize>>, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (order_line, order_text) = lines.next().ok_or(FormatError::MissingOrder)?;
    let n: usize = parse_token(order_line, order_text)?;
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        let row = text
            .split_whitespace()
            .map(|tok| parse_token(line, tok))
            .collect::<Result<Vec<usize>, _>>()?;
        if row.len() != n {
            return Err(FormatError::RowLength { line, expected: n, found: row.len() });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(FormatError::RowCount { expected: n, found: rows.len() });
    }
    Ok(rows)
}

pub fn parse_table(text: &str) -> Result<GroupTable, FormatError> {
    let rows = parse_table_rows(text)?;
    Ok(GroupTable::from_rows(&rows)?)
}

pub fn write_table(t: &GroupTable) -> String {
    let mut out = format!("{}\n", t.order());
    for row in t.rows() {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a permutation of `0..n` in image or cycle notation.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation, FormatError> {
    let text = text.trim();
    if text.starts_with('(') {
        return parse_cycles(text, n);
    }
    let images = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|tok| parse_token(1, tok))
        .collect::<Result<Vec<usize>, _>>()?;
    if images.len() != n {
        return Err(FormatError::PermutationLength { expected: n, found: images.len() });
    }
    Ok(Permutation::from_images(images)?)
}

fn parse_cycles(text: &str, n: usize) -> Result<Permutation, FormatError> {
    let bad = || FormatError::BadPermutation(text.to_string());
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = open.find(')').ok_or_else(bad)?;
        let cycle = open[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|tok| parse_token(1, tok))
            .collect::<Result<Vec<usize>, _>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(Permutation::from_cycles(n, &cycles)?)
}

fn parse_token(line: usize, token: &str) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::BadToken { line, token: token.to_string() })
}
