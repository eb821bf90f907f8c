//! The limit distribution `F` of the level sets `𝓩ₙ`, plus the classical
//! relatives it is compared against (Minkowski `?`, the `g_λ` family and
//! Denjoy's `κ`).
//!
//! `F` is evaluated two independent ways:
//!
//! * [`f_closed`] sums `a0 - cλ Σ Eⱼ λ^(-Aⱼ)` over the minimal expansion;
//! * [`f_oracle`] descends the Stern–Brocot tree from `F(0) = 0`, `F(1) = 1`
//!   and places every mediant with [`ratio_split`].
//!
//! Both produce exact elements of `Q(λ)`.

mod classic;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::brocot::{z_level, LevelSet, RawNode};
use crate::cfkit::{expand_minimal, minimal_stats, MinimalCF};
use crate::error::{Error, Result};
use crate::exactnum::{constants, mediant, CubicNumber, Rational};
use crate::report::VerifyReport;

pub use classic::{g_lambda, kappa, qmark, qmark_by_mediants};

/// An exact value of `F` with its decimal rendering on demand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FValue {
    pub exact: CubicNumber,
}

impl FValue {
    pub fn new(exact: CubicNumber) -> Self {
        FValue { exact }
    }

    pub fn float53(&self) -> String {
        self.exact
            .to_decimal_string(53)
            .expect("53 bits is a valid precision")
    }

    pub fn to_f64(&self) -> f64 {
        self.exact.to_f64()
    }
}

fn require_unit(x: &Rational) -> Result<()> {
    if x.signum() < 0 || *x > 1 {
        return Err(Error::OutOfDomain(format!("{x} is outside [0, 1]")));
    }
    Ok(())
}

fn exponent(a: &num_bigint::BigInt) -> Result<i64> {
    a.to_i64()
        .ok_or_else(|| Error::Overflow(format!("partial quotient {a}")))
}

/// `a0 - cλ Σⱼ Eⱼ / λ^Aⱼ` with `Eⱼ = Π_{i<=j} (-εᵢ)` and `Aⱼ = a0 + … + aⱼ`.
pub fn f_closed_cf(cf: &MinimalCF) -> Result<CubicNumber> {
    let k = constants();
    let mut power = k.inv_lambda.pow(exponent(cf.a0())?)?;
    let mut e_sign = 1i32;
    let mut sum = CubicNumber::zero();
    for t in cf.terms() {
        e_sign *= -t.eps.as_i32();
        power = &power * &k.inv_lambda.pow(exponent(&t.a)?)?;
        sum = if e_sign > 0 {
            &sum + &power
        } else {
            &sum - &power
        };
    }
    let c_lambda = &k.c * &k.lambda;
    let a0 = CubicNumber::from_rational(Rational::from_integer(cf.a0().clone()));
    Ok(&a0 - &(&c_lambda * &sum))
}

pub fn f_closed(x: &Rational) -> Result<FValue> {
    require_unit(x)?;
    Ok(FValue::new(f_closed_cf(&expand_minimal(x))?))
}

/// Value at the mediant `ξ = x ⊕ y` from the values at its ancestors, where
/// `x` is the ancestor with the smaller `S`:
/// `F(ξ) = F(x) + r (F(y) - F(x))` with `r = c/λ` if the last minimal
/// quotient of `ξ` is 2 and `r = 1/λ` otherwise.
pub fn ratio_split(fx: &CubicNumber, fy: &CubicNumber, last_quotient_is_2: bool) -> CubicNumber {
    let k = constants();
    let r = if last_quotient_is_2 {
        &k.c_over_lambda
    } else {
        &k.inv_lambda
    };
    fx + &(r * &(fy - fx))
}

/// The four possible ratios `(F(ξ) - F(a))/(F(b) - F(a))` for a mediant `ξ`
/// of neighbours `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SplitRatio {
    /// `c/λ`: last quotient 2, measured from the smaller-`S` ancestor.
    COverLambda,
    /// `c/λ²`: last quotient 2, measured from the larger-`S` ancestor.
    COverLambda2,
    /// `1/λ`: last quotient > 2, from the smaller-`S` ancestor.
    InvLambda,
    /// `1/(cλ)`: last quotient > 2, from the larger-`S` ancestor.
    InvCLambda,
}

impl SplitRatio {
    pub fn value(self) -> &'static CubicNumber {
        let k = constants();
        match self {
            SplitRatio::COverLambda => &k.c_over_lambda,
            SplitRatio::COverLambda2 => &k.c_over_lambda2,
            SplitRatio::InvLambda => &k.inv_lambda,
            SplitRatio::InvCLambda => &k.inv_c_lambda,
        }
    }

    pub const ALL: [SplitRatio; 4] = [
        SplitRatio::COverLambda,
        SplitRatio::COverLambda2,
        SplitRatio::InvLambda,
        SplitRatio::InvCLambda,
    ];

    /// Which constant an exact ratio equals, if any.
    pub fn classify(ratio: &CubicNumber) -> Option<SplitRatio> {
        SplitRatio::ALL.into_iter().find(|s| s.value() == ratio)
    }
}

fn s_and_last(x: &Rational) -> (num_bigint::BigInt, bool) {
    let cf = expand_minimal(x);
    let last_is_2 = cf
        .last_quotient()
        .is_some_and(|a| *a == num_bigint::BigInt::from(2));
    (cf.sum(), last_is_2)
}

/// `F(x)` built only from `F(0) = 0`, `F(1) = 1` and [`ratio_split`], by
/// descending the Stern–Brocot tree to `x`. Requires `x ∈ 𝓩ₙ ∪ {0, 1}`.
pub fn f_oracle(x: &Rational, n: u32) -> Result<FValue> {
    require_unit(x)?;
    if x.is_zero() {
        return Ok(FValue::new(CubicNumber::zero()));
    }
    if *x == 1 {
        return Ok(FValue::new(CubicNumber::one()));
    }
    let (s_x, _) = s_and_last(x);
    if s_x > num_bigint::BigInt::from(u64::from(n) + 1) {
        return Err(Error::NotReachable {
            value: x.to_string(),
            depth: n,
        });
    }
    let mut lo = (
        Rational::zero(),
        CubicNumber::zero(),
        num_bigint::BigInt::from(0),
    );
    let mut hi = (
        Rational::one(),
        CubicNumber::one(),
        num_bigint::BigInt::from(1),
    );
    loop {
        let m = mediant(&lo.0, &hi.0);
        let (s_m, last_is_2) = s_and_last(&m);
        let f_m = if lo.2 < hi.2 {
            ratio_split(&lo.1, &hi.1, last_is_2)
        } else {
            ratio_split(&hi.1, &lo.1, last_is_2)
        };
        if &m == x {
            return Ok(FValue::new(f_m));
        }
        if *x < m {
            hi = (m, f_m, s_m);
        } else {
            lo = (m, f_m, s_m);
        }
    }
}

/// Oracle values on all of `𝓩ₙ`, sorted by `x`, in one tree walk.
pub fn f_oracle_level(n: u32) -> Result<Vec<(Rational, CubicNumber)>> {
    if n == 0 {
        return Err(Error::OutOfDomain("level index must be >= 1".into()));
    }
    fn walk(
        node: RawNode,
        f_lo: &CubicNumber,
        f_hi: &CubicNumber,
        max_s: u64,
        out: &mut Vec<(Rational, CubicNumber)>,
    ) -> Result<()> {
        if node.s > max_s {
            return Ok(());
        }
        let s_lo = minimal_stats(node.lo.0, node.lo.1).0;
        let s_hi = minimal_stats(node.hi.0, node.hi.1).0;
        let f = if s_lo < s_hi {
            ratio_split(f_lo, f_hi, node.last == 2)
        } else {
            ratio_split(f_hi, f_lo, node.last == 2)
        };
        let (left, right) = node.children()?;
        walk(left, f_lo, &f, max_s, out)?;
        out.push((node.value(), f.clone()));
        walk(right, &f, f_hi, max_s, out)
    }
    let mut out = Vec::new();
    walk(
        RawNode::root(),
        &CubicNumber::zero(),
        &CubicNumber::one(),
        u64::from(n) + 1,
        &mut out,
    )?;
    Ok(out)
}

/// Checks `F(1 - x) = 1 - F(x)/λ` for every `x ∈ (𝓩ₙ ∪ {0}) ∩ [0, 1/2]`.
pub fn verify_functional_eq(n: u32) -> Result<VerifyReport> {
    let k = constants();
    let half = Rational::from_i64(1, 2)?;
    let mut report = VerifyReport::new("functional", n);
    let points = std::iter::once(Rational::zero())
        .chain(z_level(n)?.elements.into_iter().filter(|x| *x <= half));
    for x in points {
        let lhs = f_closed(&(Rational::one() - &x))?.exact;
        let rhs = &CubicNumber::one() - &(&f_closed(&x)?.exact * &k.inv_lambda);
        report.check(
            lhs == rhs,
            || x.to_string(),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
    Ok(report)
}

/// `#{ξ ∈ 𝓩ₙ : ξ <= x} / Zₙ`.
pub fn empirical_f(n: u32, x: &Rational) -> Result<Rational> {
    Ok(empirical_f_on(&z_level(n)?, x))
}

/// Empirical distribution on an already enumerated level set.
pub fn empirical_f_on(level: &LevelSet, x: &Rational) -> Rational {
    let below = level.elements.partition_point(|e| e <= x);
    Rational::from_big(below.into(), level.len().max(1).into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_i64(n, d).unwrap()
    }

    fn f(n: i64, d: i64) -> CubicNumber {
        f_closed(&r(n, d)).unwrap().exact
    }

    #[test]
    fn endpoints() {
        assert_eq!(f(0, 1), CubicNumber::zero());
        assert_eq!(f(1, 1), CubicNumber::one());
        assert!(f_closed(&r(3, 2)).is_err());
        assert!(f_closed(&r(-1, 2)).is_err());
    }

    #[test]
    fn value_at_one_half() {
        let k = constants();
        let want = CubicNumber::new(r(1, 2), r(1, 1), r(-1, 2));
        assert_eq!(f(1, 2), want);
        assert_eq!(f(1, 2), k.c_over_lambda);
        let fixed = k.lambda.div(&(&k.lambda + &CubicNumber::one())).unwrap();
        assert_eq!(f(1, 2), fixed);
        assert!((f(1, 2).to_f64() - 0.647_798_871_261_042_4).abs() < 1e-12);
    }

    #[test]
    fn unit_fractions() {
        let k = constants();
        for a in 2..9i64 {
            let want = &k.c * &k.inv_lambda.pow(a - 1).unwrap();
            assert_eq!(f(1, a), want, "a = {a}");
        }
        assert!((f(1, 3).to_f64() - 0.352_201_128).abs() < 1e-8);
        assert!((f(1, 4).to_f64() - 0.191_487_884).abs() < 1e-8);
    }

    #[test]
    fn two_fifths() {
        let k = constants();
        let want = &k.c_over_lambda - &(&k.c * &k.inv_lambda.pow(3).unwrap());
        assert_eq!(f(2, 5), want);
        assert!((f(2, 5).to_f64() - 0.456_311).abs() < 1e-6);
    }

    #[test]
    fn oracle_small_cases() {
        let k = constants();
        let third = f_oracle(&r(1, 3), 2).unwrap().exact;
        assert_eq!(third, &k.c * &k.inv_lambda.pow(2).unwrap());
        let lm1 = &k.lambda - &CubicNumber::one();
        assert_eq!(third, (&lm1 * &lm1).scale(&r(1, 2)));
        let f25 = f_oracle(&r(2, 5), 3).unwrap().exact;
        let f12 = f(1, 2);
        assert_eq!(&f25 - &f12, &k.c_over_lambda * &(&third - &f12));
        assert!(f_oracle(&r(2, 5), 2).is_err());
    }

    #[test]
    fn oracle_matches_closed_form_level_9() {
        for (x, fx) in f_oracle_level(9).unwrap() {
            assert_eq!(fx, f_closed(&x).unwrap().exact, "x = {x}");
        }
    }

    #[test]
    fn split_algebra() {
        let k = constants();
        let one = CubicNumber::one();
        assert_eq!(&k.c_over_lambda + &k.c_over_lambda2, one);
        assert_eq!(&k.inv_lambda + &k.inv_c_lambda, one);
        let third = ratio_split(&CubicNumber::zero(), &f(1, 2), false);
        assert_eq!(third, f(1, 3));
        let f25 = ratio_split(&f(1, 2), &f(1, 3), true);
        assert_eq!(f25, f(2, 5));
        assert_eq!(&f25 - &f(1, 3), &k.c_over_lambda2 * &(&f(1, 2) - &f(1, 3)));
    }

    #[test]
    fn functional_equation_points() {
        let k = constants();
        let one = CubicNumber::one();
        assert_eq!(&f(1, 2) * &(&one + &k.inv_lambda), one);
        let f23 = &one - &(&k.c * &k.inv_lambda.pow(3).unwrap());
        assert_eq!(f(2, 3), f23);
        assert!((f23.to_f64() - 0.808_512).abs() < 1e-6);
        let rep = verify_functional_eq(8).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.checked > 1);
    }

    #[test]
    fn empirical_values() {
        assert_eq!(empirical_f(3, &r(1, 3)).unwrap(), r(2, 5));
        assert_eq!(empirical_f(1, &r(1, 2)).unwrap(), r(1, 1));
        assert_eq!(empirical_f(4, &r(3, 4)).unwrap(), r(1, 1));
        assert_eq!(empirical_f(4, &r(0, 1)).unwrap(), r(0, 1));
    }

    #[test]
    fn classify_ratios() {
        for s in SplitRatio::ALL {
            assert_eq!(SplitRatio::classify(s.value()), Some(s));
        }
        assert_eq!(SplitRatio::classify(&CubicNumber::one()), None);
    }
}
