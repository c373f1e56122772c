//! Parsers for complex coefficient lists and degree ranges.
//!
//! Complex tokens are `a`, `a+bi`, `a-bi`, `bi` or `i`, with `a` and `b`
//! plain decimal numbers (exponents allowed). Lists are comma separated.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
#[error("column {column}: {message} in `{input}`")]
pub struct ParseError {
    /// One-based character column of the offending token.
    pub column: usize,
    pub message: String,
    pub input: String,
}

impl ParseError {
    fn new(input: &str, offset: usize, message: impl Into<String>) -> Self {
        let column = input[..offset.min(input.len())].chars().count() + 1;
        Self { column, message: message.into(), input: input.to_string() }
    }
}

/// Comma-separated complex numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexList(pub Vec<Complex64>);

/// Inclusive range `start:stop:step`; `start:stop` means step 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRange {
    pub start: usize,
    pub stop: usize,
    pub step: usize,
}

impl DegreeRange {
    pub fn values(&self) -> Vec<usize> {
        (self.start..=self.stop).step_by(self.step).collect()
    }
}

pub fn parse_complex_list(input: &str) -> Result<ComplexList, ParseError> {
    if input.trim().is_empty() {
        return Err(ParseError::new(input, 0, "empty list"));
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for token in input.split(',') {
        let lead = token.len() - token.trim_start().len();
        out.push(parse_complex(token.trim()).map_err(|(k, msg)| {
            ParseError::new(input, offset + lead + k, msg)
        })?);
        offset += token.len() + 1;
    }
    Ok(ComplexList(out))
}

/// Parses one token; errors carry the byte offset inside the token.
fn parse_complex(token: &str) -> Result<Complex64, (usize, String)> {
    if token.is_empty() {
        return Err((0, "empty entry".into()));
    }
    let Some(body) = token.strip_suffix('i') else {
        return parse_real(token, 0).map(|re| Complex64::new(re, 0.0));
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(k, ch)| {
            (ch == '+' || ch == '-') && !matches!(body.as_bytes()[k - 1], b'e' | b'E')
        })
        .map(|(k, _)| k)
        .last();
    match split {
        Some(k) => {
            let re = parse_real(&body[..k], 0)?;
            let im = parse_imaginary(&body[k..], k)?;
            Ok(Complex64::new(re, im))
        }
        None => Ok(Complex64::new(0.0, parse_imaginary(body, 0)?)),
    }
}

fn parse_imaginary(s: &str, offset: usize) -> Result<f64, (usize, String)> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s, offset),
    }
}

fn parse_real(s: &str, offset: usize) -> Result<f64, (usize, String)> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err((offset, format!("non-finite value `{s}`"))),
        Err(_) => Err((offset, format!("invalid number `{s}`"))),
    }
}

pub fn parse_degree_range(input: &str) -> Result<DegreeRange, ParseError> {
    let parts: Vec<&str> = input.split(':').collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(ParseError::new(input, 0, "expected start:stop or start:stop:step"));
    }
    let mut values = [0usize, 0, 1];
    let mut offset = 0;
    for (k, part) in parts.iter().enumerate() {
        values[k] = part
            .trim()
            .parse()
            .map_err(|_| ParseError::new(input, offset, format!("invalid integer `{part}`")))?;
        offset += part.len() + 1;
    }
    let [start, stop, step] = values;
    if step == 0 {
        return Err(ParseError::new(input, input.len() - parts[2].len(), "step must be positive"));
    }
    if stop < start {
        return Err(ParseError::new(input, 0, "range is empty"));
    }
    Ok(DegreeRange { start, stop, step })
}
