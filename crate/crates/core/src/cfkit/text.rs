//! Text forms.
//!
//! Minimal form: `a0; e1/a1, e2/a2, ...` where `e` is `+` or `-` and the
//! numerator is always 1, e.g. `1; -1/3, +1/2`. A missing sign means `+`.
//! Ordinary and reduced forms: `a0; a1, a2, ...`. Integers print as `a0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{MinimalCF, OrdinaryCF, ReducedCF, Sign, Term};
use crate::error::{Error, Result};

fn write_plain(f: &mut fmt::Formatter<'_>, a0: &BigInt, q: &[BigInt]) -> fmt::Result {
    write!(f, "{a0}")?;
    for (i, a) in q.iter().enumerate() {
        f.write_str(if i == 0 { "; " } else { ", " })?;
        write!(f, "{a}")?;
    }
    Ok(())
}

impl fmt::Display for OrdinaryCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_plain(f, self.a0(), self.quotients())
    }
}

impl fmt::Display for ReducedCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_plain(f, self.a0(), self.quotients())
    }
}

impl fmt::Display for MinimalCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a0())?;
        for (i, t) in self.terms().iter().enumerate() {
            f.write_str(if i == 0 { "; " } else { ", " })?;
            let s = match t.eps {
                Sign::Plus => '+',
                Sign::Minus => '-',
            };
            write!(f, "{s}1/{}", t.a)?;
        }
        Ok(())
    }
}

fn parse_int(tok: &str) -> Result<BigInt> {
    let t = tok.trim();
    let (neg, digits) = match t.chars().next() {
        Some('-') => (true, &t[1..]),
        Some('\u{2212}') => (true, &t['\u{2212}'.len_utf8()..]),
        Some('+') => (false, &t[1..]),
        _ => (false, t),
    };
    parse_digits(digits).map(|v| if neg { -v } else { v })
}

fn parse_digits(t: &str) -> Result<BigInt> {
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected digits, got {t:?}")));
    }
    t.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
}

/// Splits `a0; x, y, ...` into the head and the list of items.
fn split_head(s: &str) -> Result<(BigInt, Vec<&str>)> {
    match s.split_once(';') {
        None => Ok((parse_int(s)?, Vec::new())),
        Some((head, rest)) => {
            let items: Vec<&str> = rest.split(',').collect();
            if items.iter().any(|t| t.trim().is_empty()) {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            Ok((parse_int(head)?, items))
        }
    }
}

fn parse_plain(s: &str) -> Result<(BigInt, Vec<BigInt>)> {
    let (a0, items) = split_head(s)?;
    let q = items
        .into_iter()
        .map(|t| parse_digits(t.trim()))
        .collect::<Result<Vec<_>>>()?;
    Ok((a0, q))
}

impl FromStr for OrdinaryCF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a0, q) = parse_plain(s)?;
        OrdinaryCF::new(a0, q)
    }
}

impl FromStr for ReducedCF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a0, q) = parse_plain(s)?;
        ReducedCF::new(a0, q)
    }
}

fn parse_term(tok: &str) -> Result<Term> {
    let t = tok.trim();
    let (eps, body) = match t.chars().next() {
        Some('+') => (Sign::Plus, &t[1..]),
        Some('-') => (Sign::Minus, &t[1..]),
        Some('\u{2212}') => (Sign::Minus, &t['\u{2212}'.len_utf8()..]),
        _ => (Sign::Plus, t),
    };
    let (num, den) = body
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("term {t:?} is not of the form e/a")))?;
    if !parse_digits(num)?.is_one() {
        return Err(Error::Parse(format!("numerator of {t:?} must be 1")));
    }
    Ok(Term {
        eps,
        a: parse_digits(den)?,
    })
}

impl FromStr for MinimalCF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a0, items) = split_head(s)?;
        let terms = items
            .into_iter()
            .map(parse_term)
            .collect::<Result<Vec<_>>>()?;
        MinimalCF::new(a0, terms)
    }
}
