//! Identity suites, each producing a [`VerifyReport`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::brocot::{check_count_identities, counts, farey_level, walk_subtree, z_level, RawNode};
use crate::cfkit::{convert_ordinary_to_minimal, expand_minimal, expand_ordinary, minimal_stats};
use crate::error::{Error, Result};
use crate::exactnum::{constants, CubicNumber, Rational};
use crate::report::{Failure, VerifyReport};
use crate::singfun::{
    f_closed, f_oracle_level, g_lambda, kappa, qmark, qmark_by_mediants, verify_functional_eq,
    SplitRatio,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Recurrence,
    Functional,
    Ratios,
    Oracle,
    Monotone,
    Conversion,
    Qmark,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Recurrence,
        Suite::Functional,
        Suite::Ratios,
        Suite::Oracle,
        Suite::Monotone,
        Suite::Conversion,
        Suite::Qmark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrence => "recurrence",
            Suite::Functional => "functional",
            Suite::Ratios => "ratios",
            Suite::Oracle => "oracle",
            Suite::Monotone => "monotone",
            Suite::Conversion => "conversion",
            Suite::Qmark => "qmark",
        }
    }

    /// Runs the suite. `n` is a level index, except for `conversion` where it
    /// bounds the denominator.
    pub fn run(self, n: u32) -> Result<VerifyReport> {
        match self {
            Suite::Recurrence => verify_recurrence(n),
            Suite::Functional => verify_functional_eq(n),
            Suite::Ratios => verify_ratios(n),
            Suite::Oracle => verify_oracle(n),
            Suite::Monotone => verify_monotone(n),
            Suite::Conversion => verify_conversion(n),
            Suite::Qmark => verify_qmark(n),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Count recurrences, the `Y` seeds and the `Y`–`Z` bridge on `1..=n`.
pub fn verify_recurrence(n: u32) -> Result<VerifyReport> {
    let rows = counts(n)?;
    let mut report = VerifyReport::new("recurrence", n);
    for (row, (x, y)) in rows.iter().zip([(1, 1), (1, 3), (3, 6)]) {
        report.check(
            row.x == x && row.y == y,
            || format!("n = {}", row.n),
            || format!("X = {x}, Y = {y}"),
            || format!("X = {}, Y = {}", row.x, row.y),
        );
    }
    // three four-term recurrences per window of four, one bridge per window of three
    let len = rows.len() as u64;
    report.checked += 3 * len.saturating_sub(3) + len.saturating_sub(2);
    report.failures.extend(
        check_count_identities(&rows)
            .into_iter()
            .map(|msg| Failure {
                input: msg,
                expected: "equality".into(),
                got: "mismatch".into(),
            }),
    );
    Ok(report)
}

fn s_of(p: (u64, u64)) -> u64 {
    minimal_stats(p.0, p.1).0
}

fn frac(p: (u64, u64)) -> Rational {
    Rational::from_big(p.0.into(), p.1.into())
}

/// For every mediant `ξ = x ⊕ y` with `S(ξ) <= n + 1`, where `x` is the
/// ancestor with the smaller `S`, both `(F(ξ) - F(x))/(F(y) - F(x))` and
/// `(F(y) - F(ξ))/(F(y) - F(x))` equal the split constants dictated by the
/// last minimal quotient of `ξ`. Also checks `c/λ + c/λ² = 1` and
/// `1/λ + 1/(cλ) = 1`.
pub fn verify_ratios(n: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("ratios", n);
    let k = constants();
    let one = CubicNumber::one();
    for (a, b, label) in [
        (&k.c_over_lambda, &k.c_over_lambda2, "c/λ + c/λ²"),
        (&k.inv_lambda, &k.inv_c_lambda, "1/λ + 1/(cλ)"),
    ] {
        let sum = a + b;
        report.check(
            sum == one,
            || label.into(),
            || "1".into(),
            || format!("{sum:?}"),
        );
    }
    let mut nodes = Vec::new();
    walk_subtree(RawNode::root(), u64::from(n) + 1, &mut |node| {
        nodes.push(*node)
    })?;
    for node in nodes {
        let (near, far) = if s_of(node.lo) < s_of(node.hi) {
            (node.lo, node.hi)
        } else {
            (node.hi, node.lo)
        };
        let f_xi = f_closed(&node.value())?.exact;
        let f_x = f_closed(&frac(near))?.exact;
        let f_y = f_closed(&frac(far))?.exact;
        let span = &f_y - &f_x;
        let forward = (&f_xi - &f_x).div(&span)?;
        let backward = (&f_y - &f_xi).div(&span)?;
        let expected = if node.last == 2 {
            (SplitRatio::COverLambda, SplitRatio::COverLambda2)
        } else {
            (SplitRatio::InvLambda, SplitRatio::InvCLambda)
        };
        let got = (
            SplitRatio::classify(&forward),
            SplitRatio::classify(&backward),
        );
        report.check(
            got == (Some(expected.0), Some(expected.1)),
            || node.value().to_string(),
            || format!("{expected:?}"),
            || format!("{got:?}"),
        );
    }
    Ok(report)
}

/// `F_closed ≡ F_oracle` on every point of `𝓩ₙ`.
pub fn verify_oracle(n: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("oracle", n);
    for (x, oracle) in f_oracle_level(n)? {
        let closed = f_closed(&x)?.exact;
        report.check(
            closed == oracle,
            || x.to_string(),
            || format!("{oracle:?}"),
            || format!("{closed:?}"),
        );
    }
    Ok(report)
}

/// `F` strictly increasing across sorted `𝓩ₙ ∪ {0, 1}` with `0 <= F <= 1`,
/// decided by certified signs.
pub fn verify_monotone(n: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("monotone", n);
    let mut points = vec![Rational::zero()];
    points.extend(z_level(n)?.elements);
    points.push(Rational::one());
    let values = points
        .iter()
        .map(|x| Ok(f_closed(x)?.exact))
        .collect::<Result<Vec<_>>>()?;
    let one = CubicNumber::one();
    for (x, v) in points.iter().zip(&values) {
        let ok = v.sign() >= 0 && (&one - v).sign() >= 0;
        report.check(
            ok,
            || x.to_string(),
            || "0 <= F <= 1".into(),
            || format!("{v:?}"),
        );
    }
    for i in 1..points.len() {
        let sign = (&values[i] - &values[i - 1]).sign();
        report.check(
            sign == 1,
            || format!("{} < {}", points[i - 1], points[i]),
            || "+1".into(),
            || sign.to_string(),
        );
    }
    Ok(report)
}

/// For every `p/q ∈ [0, 1]` with `q <= max_q`: the Perron conversion agrees
/// with direct minimal expansion, and each convergent equals the value of the
/// matching truncation (the last one equals `p/q`).
pub fn verify_conversion(max_q: u32) -> Result<VerifyReport> {
    if max_q == 0 {
        return Err(Error::OutOfDomain("denominator bound must be >= 1".into()));
    }
    let mut report = VerifyReport::new("conversion", max_q);
    for q in 1..=i64::from(max_q) {
        for p in 0..=q {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let x = Rational::from_big(BigInt::from(p), BigInt::from(q));
            let direct = expand_minimal(&x);
            let converted = convert_ordinary_to_minimal(&expand_ordinary(&x));
            report.check(
                converted == direct,
                || x.to_string(),
                || direct.to_string(),
                || converted.to_string(),
            );
            let convergents = direct.convergents();
            let last_ok = convergents.last() == Some(&x);
            report.check(
                last_ok,
                || x.to_string(),
                || x.to_string(),
                || format!("{:?}", convergents.last()),
            );
            for (i, c) in convergents.iter().enumerate() {
                let t = direct.truncate(i).evaluate();
                report.check(
                    *c == t,
                    || format!("{x} convergent {i}"),
                    || t.to_string(),
                    || c.to_string(),
                );
            }
        }
    }
    Ok(report)
}

/// Salem sum against mediant averaging on `𝓕ₙ`, `g_{1/2} = ?` within
/// `1e-12`, and `κ(x, α) = 1 - (1 - α) g_{1-α}(x)` within `1e-10`.
pub fn verify_qmark(n: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("qmark", n);
    for (x, v) in qmark_by_mediants(n)? {
        let salem = qmark(&x)?;
        report.check(
            salem == v,
            || x.to_string(),
            || v.to_string(),
            || salem.to_string(),
        );
        let g = g_lambda(&x, 0.5, 64)?;
        let want = salem.to_f64();
        report.check(
            (g - want).abs() <= 1e-12,
            || format!("g_1/2({x})"),
            || want.to_string(),
            || g.to_string(),
        );
    }
    let level = farey_level(n.min(6))?;
    for x in level.elements.iter().filter(|x| x.signum() > 0 && **x < 1) {
        for alpha in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let lhs = kappa(x, alpha)?;
            let rhs = 1.0 - (1.0 - alpha) * g_lambda(x, 1.0 - alpha, 64)?;
            report.check(
                (lhs - rhs).abs() <= 1e-10,
                || format!("kappa({x}, {alpha})"),
                || rhs.to_string(),
                || lhs.to_string(),
            );
        }
    }
    Ok(report)
}
