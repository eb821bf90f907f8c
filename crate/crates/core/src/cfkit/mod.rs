//! Ordinary, regular reduced and minimal-remainder continued fractions.
//!
//! * ordinary: `a0 + 1/(a1 + 1/(a2 + ...))`, floor division, last quotient `>= 2`;
//! * regular reduced: `a0 - 1/(a1 - 1/(a2 - ...))`, division by excess, all `ai >= 2`;
//! * minimal remainders: `a0 + e1/(a1 + e2/(a2 + ...))` with `ei = ±1`,
//!   produced by centered division `a = bq + r`, `-b/2 < r <= b/2`.

mod convert;
mod text;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

pub use convert::convert_ordinary_to_minimal;

fn decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn decimal_seq<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|a| a.to_string()))
}

/// Sign of a numerator in a minimal-remainder expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One `e/a` entry after `a0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Term {
    pub eps: Sign,
    #[serde(serialize_with = "decimal")]
    pub a: BigInt,
}

impl Term {
    pub fn new(eps: Sign, a: impl Into<BigInt>) -> Self {
        Term { eps, a: a.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrdinaryCF {
    #[serde(serialize_with = "decimal")]
    a0: BigInt,
    #[serde(serialize_with = "decimal_seq")]
    quotients: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedCF {
    #[serde(serialize_with = "decimal")]
    a0: BigInt,
    #[serde(serialize_with = "decimal_seq")]
    quotients: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MinimalCF {
    #[serde(serialize_with = "decimal")]
    a0: BigInt,
    terms: Vec<Term>,
}

/// Which expansion a partial-quotient sum refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Ordinary,
    Reduced,
    Minimal,
}

impl OrdinaryCF {
    /// Validates `ai >= 1` and folds a trailing quotient 1 into its
    /// predecessor, so the last quotient is always at least 2.
    pub fn new(a0: impl Into<BigInt>, quotients: Vec<BigInt>) -> Result<Self> {
        let mut a0 = a0.into();
        let mut quotients = quotients;
        if let Some(bad) = quotients.iter().find(|a| !a.is_positive()) {
            return Err(Error::InvalidCf(format!("ordinary quotient {bad} < 1")));
        }
        if quotients.last().is_some_and(|a| a.is_one()) {
            quotients.pop();
            match quotients.last_mut() {
                Some(prev) => *prev += 1,
                None => a0 += 1,
            }
        }
        Ok(OrdinaryCF { a0, quotients })
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    pub fn evaluate(&self) -> Rational {
        let mut acc: Option<Rational> = None;
        for a in self.quotients.iter().rev() {
            let a = Rational::from_integer(a.clone());
            acc = Some(match acc {
                None => a,
                Some(t) => a + t.recip().expect("tail >= 1"),
            });
        }
        let a0 = Rational::from_integer(self.a0.clone());
        match acc {
            None => a0,
            Some(t) => a0 + t.recip().expect("tail >= 1"),
        }
    }

    pub fn sum(&self) -> BigInt {
        self.quotients.iter().fold(self.a0.clone(), |s, a| s + a)
    }
}

impl ReducedCF {
    pub fn new(a0: impl Into<BigInt>, quotients: Vec<BigInt>) -> Result<Self> {
        if let Some(bad) = quotients.iter().find(|a| *a < &BigInt::from(2)) {
            return Err(Error::InvalidCf(format!("reduced quotient {bad} < 2")));
        }
        Ok(ReducedCF {
            a0: a0.into(),
            quotients,
        })
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    pub fn evaluate(&self) -> Rational {
        let mut acc: Option<Rational> = None;
        for a in self.quotients.iter().rev() {
            let a = Rational::from_integer(a.clone());
            acc = Some(match acc {
                None => a,
                Some(t) => a - t.recip().expect("tail > 1"),
            });
        }
        let a0 = Rational::from_integer(self.a0.clone());
        match acc {
            None => a0,
            Some(t) => a0 - t.recip().expect("tail > 1"),
        }
    }

    pub fn sum(&self) -> BigInt {
        self.quotients.iter().fold(self.a0.clone(), |s, a| s + a)
    }
}

impl MinimalCF {
    /// Checks every structural constraint: `ai >= 2`; `ai = 2` forces a `+`
    /// on the following term; a terminal 2 carries `+`.
    pub fn new(a0: impl Into<BigInt>, terms: Vec<Term>) -> Result<Self> {
        let two = BigInt::from(2);
        for (i, t) in terms.iter().enumerate() {
            if t.a < two {
                return Err(Error::InvalidCf(format!(
                    "quotient a{} = {} < 2",
                    i + 1,
                    t.a
                )));
            }
            if t.a == two {
                match terms.get(i + 1) {
                    Some(next) if next.eps == Sign::Minus => {
                        return Err(Error::InvalidCf(format!(
                            "a{} = 2 followed by a minus sign",
                            i + 1
                        )))
                    }
                    None if t.eps == Sign::Minus => {
                        return Err(Error::InvalidCf("terminal -1/2".into()))
                    }
                    _ => {}
                }
            }
        }
        Ok(MinimalCF {
            a0: a0.into(),
            terms,
        })
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn last_quotient(&self) -> Option<&BigInt> {
        self.terms.last().map(|t| &t.a)
    }

    pub fn evaluate(&self) -> Rational {
        let mut acc: Option<Rational> = None;
        let mut pending = Sign::Plus;
        for t in self.terms.iter().rev() {
            let a = Rational::from_integer(t.a.clone());
            acc = Some(match acc {
                None => a,
                Some(tail) => signed_recip_add(a, &tail, pending),
            });
            pending = t.eps;
        }
        let a0 = Rational::from_integer(self.a0.clone());
        match acc {
            None => a0,
            Some(tail) => signed_recip_add(a0, &tail, pending),
        }
    }

    /// `S = a0 + a1 + ... + al`.
    pub fn sum(&self) -> BigInt {
        self.terms.iter().fold(self.a0.clone(), |s, t| s + &t.a)
    }

    /// Prefix keeping `a0` and the first `n` terms.
    pub fn truncate(&self, n: usize) -> MinimalCF {
        MinimalCF {
            a0: self.a0.clone(),
            terms: self.terms[..n.min(self.terms.len())].to_vec(),
        }
    }

    /// `P_0/Q_0 = a0/1`, `P_{-1}/Q_{-1} = 1/0`,
    /// `P_{n+1} = a_{n+1} P_n + e_{n+1} P_{n-1}` (same for `Q`).
    pub fn convergents(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.terms.len() + 1);
        let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
        let (mut p, mut q) = (self.a0.clone(), BigInt::one());
        out.push(Rational::from_big(p.clone(), q.clone()));
        for t in &self.terms {
            let (p_next, q_next) = match t.eps {
                Sign::Plus => (&t.a * &p + &p_prev, &t.a * &q + &q_prev),
                Sign::Minus => (&t.a * &p - &p_prev, &t.a * &q - &q_prev),
            };
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            out.push(Rational::from_big(p.clone(), q.clone()));
        }
        out
    }
}

fn signed_recip_add(a: Rational, tail: &Rational, eps: Sign) -> Rational {
    let r = tail.recip().expect("tails exceed 1 in absolute value");
    match eps {
        Sign::Plus => a + r,
        Sign::Minus => a - r,
    }
}

pub fn expand_ordinary(x: &Rational) -> OrdinaryCF {
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    let a0 = p.div_floor(&q);
    let mut r = &p - &a0 * &q;
    let mut quotients = Vec::new();
    while !r.is_zero() {
        p = std::mem::replace(&mut q, r);
        let a = p.div_floor(&q);
        r = &p - &a * &q;
        quotients.push(a);
    }
    OrdinaryCF { a0, quotients }
}

pub fn expand_reduced(x: &Rational) -> ReducedCF {
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    let a0 = p.div_ceil(&q);
    let mut r = &p - &a0 * &q;
    let mut quotients = Vec::new();
    while !r.is_zero() {
        p = std::mem::replace(&mut q, -r);
        let a = p.div_ceil(&q);
        r = &p - &a * &q;
        quotients.push(a);
    }
    ReducedCF { a0, quotients }
}

/// Centered division: `p = q·a + r` with `-q/2 < r <= q/2`.
fn centered_div(p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
    let two_q: BigInt = q * 2;
    let num: BigInt = p * 2 - q;
    let a = Integer::div_ceil(&num, &two_q);
    let r = p - &a * q;
    (a, r)
}

pub fn expand_minimal(x: &Rational) -> MinimalCF {
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    let (a0, mut r) = centered_div(&p, &q);
    let mut terms = Vec::new();
    while !r.is_zero() {
        let eps = if r.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        };
        p = std::mem::replace(&mut q, r.abs());
        let (a, next) = centered_div(&p, &q);
        r = next;
        terms.push(Term { eps, a });
    }
    MinimalCF { a0, terms }
}

pub fn sum_s(x: &Rational, variant: Variant) -> BigInt {
    match variant {
        Variant::Ordinary => expand_ordinary(x).sum(),
        Variant::Reduced => expand_reduced(x).sum(),
        Variant::Minimal => expand_minimal(x).sum(),
    }
}

/// `(S, last quotient)` of the minimal expansion of `p/q`, `0 <= p`, `q >= 1`,
/// in machine integers. The last quotient of an integer is `a0`.
pub(crate) fn minimal_stats(p: u64, q: u64) -> (u64, u64) {
    let (mut p, mut q) = (p as i128, q as i128);
    let mut sum = 0u64;
    loop {
        let a = (2 * p + q - 1) / (2 * q);
        let r = p - a * q;
        sum += a as u64;
        if r == 0 {
            return (sum, a as u64);
        }
        p = q;
        q = r.abs();
    }
}
