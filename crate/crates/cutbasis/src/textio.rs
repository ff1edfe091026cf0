//! Text formats: graphs as `u v` edge lines, vectors as one rational per
//! line, both with '#' comment lines. Line order defines edge indices.

use crate::graph::{Graph, GraphError};
use crate::linalg::Rat;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {0}: expected `u v`, got: {1}")]
    BadEdgeLine(usize, String),
    #[error("line {0}: bad rational literal: {1}")]
    BadRational(usize, String),
    #[error("zero denominator on line {0}")]
    ZeroDenominator(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(ParseError::BadEdgeLine(lineno + 1, raw.to_string()));
        };
        pairs.push((u.to_string(), v.to_string()));
    }
    Ok(Graph::from_owned_edges(&pairs)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    for i in 0..g.edge_count() {
        let (u, v) = g.edge_labels(i);
        out.push_str(u);
        out.push(' ');
        out.push_str(v);
        out.push('\n');
    }
    out
}

/// Parses a rational literal `p/q` or `p`.
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().ok()?;
        let den: BigInt = q.trim().parse().ok()?;
        if den == BigInt::from(0) {
            return None;
        }
        Some(Rat::new(num, den))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(num))
    }
}

pub fn parse_vector(text: &str) -> Result<Vec<Rat>, ParseError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_rational(line) {
            Some(r) => out.push(r),
            None => return Err(ParseError::BadRational(lineno + 1, raw.to_string())),
        }
    }
    Ok(out)
}

pub fn write_vector(x: &[Rat]) -> String {
    let mut out = String::new();
    for v in x {
        out.push_str(&format_rational(v));
        out.push('\n');
    }
    out
}

pub fn format_rational(v: &Rat) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
