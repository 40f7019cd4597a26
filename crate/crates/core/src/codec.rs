//! The bracket-dash text format.
//!
//! A matrix is written as its rows in brackets, joined by `-`, inside one
//! more bracket pair: `[[2 3 4]-[5 6 7]]`. Grammar after trimming outer
//! whitespace (`WS` is a space character):
//!
//! ```text
//! matrix := "[" row (WS* "-" WS* row)* "]"
//! row    := "[" WS* number (WS+ number)* WS* "]"
//! number := ["+"|"-"] digits ["." digits] [("e"|"E") ["+"|"-"] digits]
//! ```
//!
//! A `-` only separates rows when it sits between a `]` and a `[`; anywhere
//! else it is a sign. Parsing is lenient about spaces, serialization always
//! emits the canonical form with single spaces and no padding.

use std::fmt::{self, Display};
use std::str::FromStr;

use thiserror::Error;

use crate::matrix::MatrixOf;
use crate::scalar::Scalar;
use crate::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnbalancedBrackets,
    RaggedRows,
    EmptyMatrix,
    EmptyRow,
    InvalidNumber,
    TrailingGarbage,
}

impl Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Rejection of a malformed matrix string. `position` is a byte offset into
/// the original (untrimmed) input and never exceeds its length.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{detail} at offset {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
    pub detail: String,
}

impl ParseError {
    fn new(kind: ParseErrorKind, position: usize, detail: impl Into<String>) -> Self {
        ParseError {
            kind,
            position,
            detail: detail.into(),
        }
    }
}

/// How elements are written by [`serialize_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// Shortest decimal that reads back to the same binary value.
    #[default]
    Shortest,
    /// Fixed number of digits after the decimal point.
    Places(usize),
}

/// Parses a bracket-dash string into a `f64` matrix.
pub fn parse(text: &str) -> Result<Matrix, ParseError> {
    parse_as(text)
}

/// Parses a bracket-dash string into a matrix over any float-like scalar.
pub fn parse_as<T: Scalar + FromStr>(text: &str) -> Result<MatrixOf<T>, ParseError> {
    let start = text.len() - text.trim_start().len();
    let end = text.trim_end().len();
    if start >= end {
        return Err(ParseError::new(ParseErrorKind::EmptyMatrix, 0, "empty input"));
    }
    Parser { text, pos: start, end }.matrix()
}

/// Canonical bracket-dash form of `m`. `parse(&serialize(&m))` is `m`, bit for bit.
pub fn serialize<T: Display>(m: &MatrixOf<T>) -> String {
    m.to_string()
}

pub fn serialize_with<T: Display>(m: &MatrixOf<T>, precision: Precision) -> String {
    match precision {
        Precision::Shortest => m.to_string(),
        Precision::Places(places) => {
            let rows: Vec<String> = m
                .iter_rows()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|x| format!("{x:.places$}")).collect();
                    format!("[{}]", cells.join(" "))
                })
                .collect();
            format!("[{}]", rows.join("-"))
        }
    }
}

/// Formats a single scalar the same way matrix elements are formatted.
pub fn format_scalar<T: Display>(x: &T, precision: Precision) -> String {
    match precision {
        Precision::Shortest => x.to_string(),
        Precision::Places(places) => format!("{x:.places$}"),
    }
}

/// Whether `tok` matches the number production of the grammar.
fn is_decimal(tok: &str) -> bool {
    fn digits(b: &[u8], i: &mut usize) -> bool {
        let from = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        *i > from
    }
    let b = tok.as_bytes();
    let mut i = 0;
    if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
        i += 1;
    }
    if !digits(b, &mut i) {
        return false;
    }
    if i < b.len() && b[i] == b'.' {
        i += 1;
        if !digits(b, &mut i) {
            return false;
        }
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        i += 1;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            i += 1;
        }
        if !digits(b, &mut i) {
            return false;
        }
    }
    i == b.len()
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        (self.pos < self.end).then(|| self.text.as_bytes()[self.pos])
    }

    fn skip_spaces(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }

    fn current_char(&self) -> String {
        self.text[self.pos..].chars().next().map(String::from).unwrap_or_default()
    }

    fn unbalanced(&self, what: &str) -> ParseError {
        ParseError::new(ParseErrorKind::UnbalancedBrackets, self.pos, what)
    }

    fn unexpected(&self, what: &str) -> ParseError {
        self.unbalanced(&format!("{what}, found '{}'", self.current_char()))
    }

    fn matrix<T: Scalar + FromStr>(mut self) -> Result<MatrixOf<T>, ParseError> {
        if self.peek() != Some(b'[') {
            return Err(ParseError::new(
                ParseErrorKind::TrailingGarbage,
                self.pos,
                format!("unexpected '{}' before matrix", self.current_char()),
            ));
        }
        self.pos += 1;
        self.skip_spaces();
        match self.peek() {
            None => return Err(self.unbalanced("missing ']' to close matrix")),
            Some(b']') => return Err(ParseError::new(ParseErrorKind::EmptyMatrix, self.pos, "matrix has no rows")),
            _ => {}
        }

        let mut data = Vec::new();
        let mut cols = 0;
        let mut rows = 0;
        loop {
            let row_start = self.pos;
            let len = self.row(&mut data)?;
            if rows == 0 {
                cols = len;
            } else if len != cols {
                return Err(ParseError::new(
                    ParseErrorKind::RaggedRows,
                    row_start,
                    format!("row {} has {len} elements, expected {cols}", rows + 1),
                ));
            }
            rows += 1;

            self.skip_spaces();
            match self.peek() {
                None => return Err(self.unbalanced("missing ']' to close matrix")),
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_spaces();
                }
                Some(b'[') => return Err(self.unbalanced("missing '-' between rows")),
                Some(_) => return Err(self.unexpected("expected '-' or ']' after row")),
            }
        }

        if self.pos < self.end {
            let kind = if self.peek() == Some(b']') {
                ParseErrorKind::UnbalancedBrackets
            } else {
                ParseErrorKind::TrailingGarbage
            };
            return Err(ParseError::new(
                kind,
                self.pos,
                format!("unexpected '{}' after matrix", self.current_char()),
            ));
        }
        Ok(MatrixOf::from_parts("parse", rows, cols, data).expect("parsed elements are finite"))
    }

    /// Parses one `[ ... ]` row, appending to `out`; returns its length.
    fn row<T: Scalar + FromStr>(&mut self, out: &mut Vec<T>) -> Result<usize, ParseError> {
        match self.peek() {
            None => return Err(self.unbalanced("missing '[' to open row")),
            Some(b'[') => self.pos += 1,
            Some(_) => return Err(self.unexpected("expected '[' to open row")),
        }
        let open = self.pos - 1;
        self.skip_spaces();
        if self.peek() == Some(b']') {
            return Err(ParseError::new(ParseErrorKind::EmptyRow, open, "row has no elements"));
        }
        let mut len = 0;
        loop {
            let tok_start = self.pos;
            while !matches!(self.peek(), None | Some(b' ' | b'[' | b']')) {
                self.pos += 1;
            }
            if self.pos > tok_start {
                out.push(self.number(tok_start)?);
                len += 1;
            }
            self.skip_spaces();
            match self.peek() {
                None => return Err(self.unbalanced("missing ']' to close row")),
                Some(b']') => {
                    self.pos += 1;
                    return Ok(len);
                }
                Some(b'[') => return Err(self.unbalanced("unexpected '[' inside row")),
                Some(_) => {}
            }
        }
    }

    fn number<T: Scalar + FromStr>(&self, from: usize) -> Result<T, ParseError> {
        let tok = &self.text[from..self.pos];
        let invalid = |why: &str| ParseError::new(ParseErrorKind::InvalidNumber, from, format!("{why} '{tok}'"));
        if !is_decimal(tok) {
            return Err(invalid("invalid number"));
        }
        match tok.parse::<T>() {
            Ok(x) if x.is_finite() => Ok(x),
            Ok(_) => Err(invalid("number out of range")),
            Err(_) => Err(invalid("invalid number")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ParseErrorKind::*;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    fn kind(s: &str) -> ParseErrorKind {
        parse(s).unwrap_err().kind
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse("[[2 3 4]-[5 6 7]]").unwrap(), m(&[&[2., 3., 4.], &[5., 6., 7.]]));
        assert_eq!(parse("  [[1]]  ").unwrap(), m(&[&[1.]]));
        assert_eq!(parse("[[-1 2]-[3 -4.5]]").unwrap(), m(&[&[-1., 2.], &[3., -4.5]]));
        assert_eq!(parse("[[2 3 4]-[2 3 4]-[2 3 4]]").unwrap().dims(), (3, 3));
    }

    #[test]
    fn lenient_spacing() {
        let a = parse("[ [  1   -2 ]  -  [ +3e0 4.25E-1 ] ]\n").unwrap();
        assert_eq!(a, m(&[&[1., -2.], &[3., 0.425]]));
        assert_eq!(serialize(&a), "[[1 -2]-[3 0.425]]");
    }

    #[test]
    fn negative_rows_not_confused_with_delimiter() {
        let a = parse("[[-1]-[-2]-[-3]]").unwrap();
        assert_eq!(a, m(&[&[-1.], &[-2.], &[-3.]]));
    }

    #[test]
    fn error_kinds() {
        assert_eq!(kind("[[1 2]-[3]]"), RaggedRows);
        let e = parse("[[1 x]]").unwrap_err();
        assert_eq!((e.kind, e.position, e.detail.as_str()), (InvalidNumber, 4, "invalid number 'x'"));
        assert_eq!(kind(""), EmptyMatrix);
        assert_eq!(kind("   "), EmptyMatrix);
        assert_eq!(kind("[]"), EmptyMatrix);
        assert_eq!(kind("[[]]"), EmptyRow);
        assert_eq!(kind("[[1]-[ ]]"), EmptyRow);
        assert_eq!(kind("[[1 2]"), UnbalancedBrackets);
        assert_eq!(kind("[[1 2"), UnbalancedBrackets);
        assert_eq!(kind("[1 2]"), UnbalancedBrackets);
        assert_eq!(kind("[[1][2]]"), UnbalancedBrackets);
        assert_eq!(kind("[[1 [2]]"), UnbalancedBrackets);
        assert_eq!(kind("[[1]]]"), UnbalancedBrackets);
        assert_eq!(kind("[[1]-]"), UnbalancedBrackets);
        assert_eq!(kind("[[1]]x"), TrailingGarbage);
        assert_eq!(kind("x[[1]]"), TrailingGarbage);
        assert_eq!(kind("[[1 .5]]"), InvalidNumber);
        assert_eq!(kind("[[1 5.]]"), InvalidNumber);
        assert_eq!(kind("[[inf]]"), InvalidNumber);
        assert_eq!(kind("[[NaN]]"), InvalidNumber);
        assert_eq!(kind("[[1e400]]"), InvalidNumber);
        assert_eq!(kind("[[1--2]]"), InvalidNumber);
        assert_eq!(kind("[[1\t2]]"), InvalidNumber);
    }

    #[test]
    fn positions_are_in_bounds() {
        for s in ["", "[", "[[", "[[1", "[[1]", "[[1]-", "  [[1 2]-[3]]  ", "[[é]]", "[[1]]é"] {
            let e = parse(s).unwrap_err();
            assert!(e.position <= s.len(), "{s:?} -> {e:?}");
        }
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(serialize(&m(&[&[2., 3., 4.], &[5., 6., 7.]])), "[[2 3 4]-[5 6 7]]");
        assert_eq!(serialize(&m(&[&[0.]])), "[[0]]");
        let s = serialize(&m(&[&[-0.5, 1e10]]));
        assert_eq!(s, "[[-0.5 10000000000]]");
        assert_eq!(parse(&s).unwrap(), m(&[&[-0.5, 1e10]]));
    }

    #[test]
    fn fixed_places() {
        let a = m(&[&[-0.75, 0.625], &[0.5, -0.25]]);
        assert_eq!(serialize_with(&a, Precision::Places(2)), "[[-0.75 0.62]-[0.50 -0.25]]");
        assert_eq!(format_scalar(&-8.0, Precision::Places(1)), "-8.0");
        assert_eq!(format_scalar(&-8.0, Precision::Shortest), "-8");
    }

    #[test]
    fn f32_parse() {
        let a: MatrixOf<f32> = parse_as("[[0.1 2]]").unwrap();
        assert_eq!(a.as_slice(), &[0.1f32, 2.0]);
        assert_eq!(kind_f32("[[1e39]]"), InvalidNumber);
    }

    fn kind_f32(s: &str) -> ParseErrorKind {
        parse_as::<f32>(s).unwrap_err().kind
    }
}
