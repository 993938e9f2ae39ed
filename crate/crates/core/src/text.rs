//! Plain-text formats for relations, maps and algebras.
//!
//! ```text
//! rel 3          map 4 3         alg 2
//! 0 1            0 1 1 2         op meet 2
//! 1 2                            0 0 0 1
//! ```
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::fmt;

use crate::error::{Error, Result};
use crate::maps::FiniteMap;
use crate::relation::{check_carrier, Relation};

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, got `{tok}`")))
}

pub(crate) fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    arity: usize,
) -> Result<(usize, Vec<usize>)> {
    let (no, l) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing `{keyword}` header")))?;
    let mut toks = l.split_whitespace();
    if toks.next() != Some(keyword) {
        return Err(Error::parse(no, format!("expected `{keyword}` header")));
    }
    let nums = toks.map(|t| parse_usize(no, t)).collect::<Result<Vec<_>>>()?;
    if nums.len() != arity {
        return Err(Error::parse(no, format!("`{keyword}` header takes {arity} number(s)")));
    }
    Ok((no, nums))
}

pub fn parse_relation(src: &str) -> Result<Relation> {
    let mut lines = content_lines(src);
    let (_, h) = header(&mut lines, "rel", 1)?;
    let n = h[0];
    check_carrier(n)?;
    let mut pairs = Vec::new();
    for (no, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(no, "expected a pair `<i> <j>`"));
        }
        let (i, j) = (parse_usize(no, toks[0])?, parse_usize(no, toks[1])?);
        if i >= n || j >= n {
            return Err(Error::parse(no, format!("pair ({i}, {j}) out of range for carrier of size {n}")));
        }
        pairs.push((i, j));
    }
    Relation::from_pairs(n, pairs)
}

pub fn format_relation(r: &Relation) -> String {
    r.to_string()
}

/// Canonical block: header then pairs in lexicographic order.
impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rel {}", self.size())?;
        for (i, j) in self.pairs() {
            writeln!(f, "{i} {j}")?;
        }
        Ok(())
    }
}

pub fn parse_map(src: &str) -> Result<FiniteMap> {
    let mut lines = content_lines(src);
    let (hno, h) = header(&mut lines, "map", 2)?;
    let (n, m) = (h[0], h[1]);
    check_carrier(n)?;
    let mut values = Vec::with_capacity(n);
    let mut last = hno;
    for (no, l) in lines {
        last = no;
        for t in l.split_whitespace() {
            values.push(parse_usize(no, t)?);
        }
    }
    if values.len() != n {
        return Err(Error::parse(last, format!("expected {n} map values, got {}", values.len())));
    }
    FiniteMap::new(m, values).map_err(|e| match e {
        Error::MapValueOutOfRange { .. } => Error::parse(last, e.to_string()),
        other => other,
    })
}

impl fmt::Display for FiniteMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "map {} {}", self.domain(), self.codomain())?;
        let vals: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
        writeln!(f, "{}", vals.join(" "))
    }
}
