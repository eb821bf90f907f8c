//! Numerical diagnostics for the singularity of `F`.
//!
//! * Mediant rays `y_k = (k a + a')/(k b + b')` approach a rational `a/b`
//!   from one side; the difference quotients `|F(y_k) - F(a/b)| / |y_k - a/b|`
//!   decay geometrically, so `F'(a/b) = 0`.
//! * Along the Stern–Brocot bracketing of a target, consecutive differences
//!   `ΔFₙ = F(p'ₙ/q'ₙ) - F(pₙ/qₙ)` shrink by one of four exact constants, and
//!   `Gₙ = (ΔFₙ₊₁/ΔFₙ)(qₙ₊₁q'ₙ₊₁)/(qₙq'ₙ)` would have to tend to 1 wherever a
//!   finite nonzero derivative exists.
//!
//! Nothing here claims a limit; the outputs are finite traces.

use num_bigint::BigInt;
use serde::Serialize;

use crate::brocot::raw_node_of;
use crate::cfkit::MinimalCF;
use crate::error::{Error, Result};
use crate::exactnum::{mediant, CubicNumber, Rational};
use crate::singfun::{f_closed, SplitRatio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MediantRay {
    pub base: Rational,
    pub neighbor: Rational,
    pub side: Side,
    /// `y_1, …, y_kmax`.
    pub points: Vec<Rational>,
}

/// Ray toward `x ∈ (0, 1)` from `side`. The neighbour is the adjacent element
/// of `𝓩ₙ ∪ {0, 1}` on the level where `x` first appears, which is the
/// Stern–Brocot ancestor of `x` on that side.
pub fn mediant_ray(x: &Rational, side: Side, k_max: u32) -> Result<MediantRay> {
    if k_max == 0 {
        return Err(Error::OutOfDomain("k_max must be >= 1".into()));
    }
    let node = raw_node_of(x)?;
    let (np, nq) = match side {
        Side::Left => node.lo,
        Side::Right => node.hi,
    };
    let neighbor = Rational::from_big(np.into(), nq.into());
    let points = (1..=k_max)
        .map(|k| {
            let k = BigInt::from(k);
            Rational::from_big(
                &k * x.numer() + BigInt::from(np),
                &k * x.denom() + BigInt::from(nq),
            )
        })
        .collect();
    Ok(MediantRay {
        base: x.clone(),
        neighbor,
        side,
        points,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RayPoint {
    pub k: u32,
    pub y: Rational,
    pub f_y: f64,
    pub d: f64,
}

/// `d_k = |F(y_k) - F(x)| / |y_k - x|` for `k = 1..=k_max`, from exact values.
pub fn difference_quotients(x: &Rational, side: Side, k_max: u32) -> Result<Vec<RayPoint>> {
    let ray = mediant_ray(x, side, k_max)?;
    let fx = f_closed(x)?.exact;
    ray.points
        .iter()
        .enumerate()
        .map(|(i, y)| {
            let fy = f_closed(y)?.exact;
            let dx = (y - x).abs().recip()?;
            let mut df = &fy - &fx;
            if df.sign() < 0 {
                df = -df;
            }
            Ok(RayPoint {
                k: i as u32 + 1,
                y: y.clone(),
                f_y: fy.to_f64(),
                d: df.scale(&dx).to_f64(),
            })
        })
        .collect()
}

/// Consecutive Stern–Brocot pairs `(pₙ/qₙ, p'ₙ/q'ₙ)` straddling a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTrace {
    pub target: Rational,
    pub entries: Vec<(Rational, Rational)>,
}

/// The first `steps + 1` brackets of `x ∈ (0, 1)`, starting from `(0/1, 1/1)`.
/// Fails if a mediant hits `x` first (the bracket collapses at a rational).
pub fn bracket_trace(x: &Rational, steps: usize) -> Result<BracketTrace> {
    if x.signum() <= 0 || *x >= 1 {
        return Err(Error::OutOfDomain(format!("{x} is outside (0, 1)")));
    }
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    let mut entries = vec![(lo.clone(), hi.clone())];
    for step in 0..steps {
        let m = mediant(&lo, &hi);
        if &m == x {
            return Err(Error::TraceCollapsed {
                step,
                target: x.to_string(),
            });
        }
        if *x < m {
            hi = m;
        } else {
            lo = m;
        }
        entries.push((lo.clone(), hi.clone()));
    }
    Ok(BracketTrace {
        target: x.clone(),
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GRow {
    pub n: usize,
    pub left: Rational,
    pub right: Rational,
    /// `ΔFₙ₊₁/ΔFₙ`, always one of the four split constants.
    pub ratio: SplitRatio,
    pub ratio_float: f64,
    pub g: f64,
}

/// `G₀ … G_{depth-1}` along the bracketing of the value of `cf`.
pub fn g_sequence(cf: &MinimalCF, depth: usize) -> Result<Vec<GRow>> {
    if depth < 2 {
        return Err(Error::OutOfDomain("depth must be >= 2".into()));
    }
    let trace = bracket_trace(&cf.evaluate(), depth)?;
    let delta = |(lo, hi): &(Rational, Rational)| -> Result<CubicNumber> {
        Ok(&f_closed(hi)?.exact - &f_closed(lo)?.exact)
    };
    let mut prev = delta(&trace.entries[0])?;
    let mut rows = Vec::with_capacity(depth);
    for (n, pair) in trace.entries.windows(2).enumerate() {
        let next = delta(&pair[1])?;
        let ratio_exact = next.div(&prev)?;
        let ratio = SplitRatio::classify(&ratio_exact).ok_or_else(|| {
            Error::InvalidCf(format!(
                "ratio {ratio_exact:?} at step {n} is not a split constant"
            ))
        })?;
        let (l0, r0) = &pair[0];
        let (l1, r1) = &pair[1];
        let qq = Rational::from_big(l1.denom() * r1.denom(), l0.denom() * r0.denom());
        let ratio_float = ratio_exact.to_f64();
        rows.push(GRow {
            n,
            left: l1.clone(),
            right: r1.clone(),
            ratio,
            ratio_float,
            g: ratio_exact.scale(&qq).to_f64(),
        });
        prev = next;
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SideVerdict {
    pub side: Side,
    /// First `k` with `d_k < eps`.
    pub first_below: Option<u32>,
    pub last_d: f64,
    /// `d_k` is non-increasing from some `k` on up to `k_max`.
    pub decreasing_tail_from: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivativeVerdict {
    pub x: Rational,
    pub eps: f64,
    pub k_max: u32,
    pub sides: Vec<SideVerdict>,
}

impl DerivativeVerdict {
    pub fn passed(&self) -> bool {
        self.sides.iter().all(|s| s.first_below.is_some())
    }
}

/// Both one-sided difference-quotient traces at a rational `x ∈ (0, 1)`.
pub fn derivative_verdict(x: &Rational, eps: f64, k_max: u32) -> Result<DerivativeVerdict> {
    let mut sides = Vec::with_capacity(2);
    for side in [Side::Left, Side::Right] {
        let trace = difference_quotients(x, side, k_max)?;
        let first_below = trace.iter().find(|p| p.d < eps).map(|p| p.k);
        let mut tail = trace.len();
        while tail > 1 && trace[tail - 2].d >= trace[tail - 1].d {
            tail -= 1;
        }
        sides.push(SideVerdict {
            side,
            first_below,
            last_d: trace.last().map_or(f64::NAN, |p| p.d),
            decreasing_tail_from: (tail < trace.len()).then(|| trace[tail - 1].k),
        });
    }
    Ok(DerivativeVerdict {
        x: x.clone(),
        eps,
        k_max,
        sides,
    })
}
