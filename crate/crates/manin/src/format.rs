//! The plain-text presentation format and the AmS-TeX report.
//!
//! A presentation file holds, one logical line each: `n`; the `n` rows of the
//! `S₂` action matrix (row `i` is `e_i^(12)`); the relation count `m`,
//! optionally followed by a comment; then `m` rows of `3n²` integers. Blank
//! lines may appear anywhere before the last relation row, and anything after
//! it is ignored.

use std::fmt::Write as _;

use manin_core::exactlin::RatMatrix;
use manin_core::operad::{validate_presentation, Validated};
use manin_core::{CosetRep, E3Index, IntVector, OperadPresentation};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FormatError {
    #[error("line {line}: `{token}` is not an integer")]
    NonInteger { line: usize, token: String },
    #[error("line {line}: `{token}` is not a valid count")]
    BadCount { line: usize, token: String },
    #[error("line {line}: expected {expected} integers, found {found}")]
    TokenCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} relation rows, found {found} before end of input")]
    MissingRelations { expected: usize, found: usize },
    #[error("unexpected end of input while reading {what}")]
    UnexpectedEof { what: &'static str },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        source: manin_core::Error,
    },
    #[error("action matrix has non-integer entries")]
    NonIntegerAction,
}

impl FormatError {
    /// Whether the text was well-formed but described an invalid presentation.
    pub fn is_invalid_presentation(&self) -> bool {
        matches!(self, FormatError::Invalid { .. })
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::NonInteger { line, .. }
            | FormatError::BadCount { line, .. }
            | FormatError::TokenCount { line, .. }
            | FormatError::Invalid { line, .. } => Some(*line),
            _ => None,
        }
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    /// Next non-blank line with its 1-based number.
    fn next_logical(&mut self) -> Option<(usize, &'a str)> {
        self.inner
            .by_ref()
            .map(|(i, l)| (i + 1, l))
            .find(|(_, l)| !l.trim().is_empty())
    }
}

fn integers(line: usize, text: &str, expected: usize) -> Result<Vec<BigInt>, FormatError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != expected {
        return Err(FormatError::TokenCount {
            line,
            expected,
            found: tokens.len(),
        });
    }
    tokens
        .iter()
        .map(|t| {
            t.parse::<BigInt>().map_err(|_| FormatError::NonInteger {
                line,
                token: t.to_string(),
            })
        })
        .collect()
}

fn count(line: usize, token: &str) -> Result<usize, FormatError> {
    token.parse::<usize>().map_err(|_| {
        if token.parse::<BigInt>().is_ok() {
            FormatError::BadCount {
                line,
                token: token.to_string(),
            }
        } else {
            FormatError::NonInteger {
                line,
                token: token.to_string(),
            }
        }
    })
}

/// Parses a presentation file and closes its relations under `S₃`.
pub fn parse_validated(text: &str, label: &str) -> Result<Validated, FormatError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
    };

    let (header_line, header) = lines.next_logical().ok_or(FormatError::UnexpectedEof {
        what: "the generator count",
    })?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 1 {
        return Err(FormatError::TokenCount {
            line: header_line,
            expected: 1,
            found: tokens.len(),
        });
    }
    let n = count(header_line, tokens[0])?;

    let mut matrix = Vec::with_capacity(n);
    let mut matrix_line = header_line;
    for i in 0..n {
        let (line, text) = lines.next_logical().ok_or(FormatError::UnexpectedEof {
            what: "the action matrix",
        })?;
        if i == 0 {
            matrix_line = line;
        }
        matrix.push(integers(line, text, n)?);
    }

    let (count_line, text) = lines.next_logical().ok_or(FormatError::UnexpectedEof {
        what: "the relation count",
    })?;
    let first = text.split_whitespace().next().expect("line is not blank");
    let m = count(count_line, first)?;

    let d = 3 * n * n;
    let mut rows = Vec::with_capacity(m);
    for found in 0..m {
        let (line, text) = lines
            .next_logical()
            .ok_or(FormatError::MissingRelations { expected: m, found })?;
        rows.push(IntVector::new(integers(line, text, d)?));
    }

    let action = RatMatrix::from_int_rows(&matrix).map_err(|source| FormatError::Invalid {
        line: matrix_line,
        source,
    })?;
    validate_presentation(n, action, &rows, label).map_err(|source| FormatError::Invalid {
        line: matrix_line,
        source,
    })
}

pub fn parse_operad(text: &str) -> Result<OperadPresentation, FormatError> {
    parse_validated(text, "").map(|v| v.presentation)
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes `p` in the presentation format, with `comment` after the relation
/// count.
pub fn write_operad(p: &OperadPresentation, comment: &str) -> Result<String, FormatError> {
    let action = p
        .action()
        .to_int_rows()
        .ok_or(FormatError::NonIntegerAction)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", p.n());
    for row in &action {
        let _ = writeln!(out, "{}", join(row));
    }
    let comment = comment.trim();
    if comment.is_empty() {
        let _ = writeln!(out, "{}", p.relations().dim());
    } else {
        let _ = writeln!(out, "{} {}", p.relations().dim(), comment);
    }
    for row in p.relations().rows() {
        let _ = writeln!(out, "{}", join(row.iter()));
    }
    Ok(out)
}

/// One relation as a signed sum of `c(ρ)\otimes_{S_2}(a_p\otimes a_q)`.
pub fn amx_relation(n: usize, row: &IntVector) -> String {
    let mut out = String::from("$");
    for (i, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let idx = E3Index::from_flat(n, i).expect("row has length 3n²");
        let sign = if c.is_negative() { '-' } else { '+' };
        let _ = write!(
            out,
            "{sign}{}({})\\otimes_{{S_2}}(a_{{{}}}\\otimes a_{{{}}}) ",
            c.abs(),
            idx.rho.label(),
            idx.p + 1,
            idx.q + 1
        );
    }
    out.push('$');
    out
}

/// Reads back one line produced by [`amx_relation`]; whitespace is ignored.
/// Returns `None` if the line is not of that shape.
pub fn parse_amx_relation(n: usize, line: &str) -> Option<IntVector> {
    let text: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = text.strip_prefix('$')?.strip_suffix('$')?;
    let mut out = IntVector::zeros(3 * n * n).into_inner();
    while !rest.is_empty() {
        let negative = match rest.as_bytes()[0] {
            b'+' => false,
            b'-' => true,
            _ => return None,
        };
        let (magnitude, tail) = split_digits(&rest[1..])?;
        let tail = tail.strip_prefix('(')?;
        let (label, tail) = tail.split_once(')')?;
        let rho = CosetRep::ALL.into_iter().find(|r| r.label() == label)?;
        let tail = tail.strip_prefix("\\otimes_{S_2}(a_{")?;
        let (p, tail) = split_digits(tail)?;
        let tail = tail.strip_prefix("}\\otimesa_{")?;
        let (q, tail) = split_digits(tail)?;
        rest = tail.strip_prefix("})")?;
        let (p, q): (usize, usize) = (p.try_into().ok()?, q.try_into().ok()?);
        if p == 0 || q == 0 || p > n || q > n {
            return None;
        }
        let value = if negative { -magnitude } else { magnitude };
        out[E3Index::new(rho, p - 1, q - 1).flat(n)] += value;
    }
    Some(IntVector::new(out))
}

fn split_digits(s: &str) -> Option<(BigInt, &str)> {
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    Some((s[..end].parse().ok()?, &s[end..]))
}

/// The human-readable AmS-TeX report.
pub fn write_amx(p: &OperadPresentation) -> String {
    let n = p.n();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Space of operations $E$: $a_{{1}}, \\dots , a_{{{n}}}$"
    );
    out.push('\n');
    out.push_str("$S_2$ acts by:\n$$\\pmatrix\n");
    for i in 0..n {
        let row: Vec<String> = p.action().row(i).iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{} \\\\", row.join(" & "));
    }
    out.push_str("\\endpmatrix $$\nRelations:\n\n");
    for row in p.relations().rows() {
        let _ = writeln!(out, "{}\n", amx_relation(n, row));
    }
    out
}

/// Collapses all runs of whitespace to single spaces and trims the ends.
pub fn normalize_whitespace(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}
