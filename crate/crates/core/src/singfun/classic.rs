//! Minkowski's `?`, the Tichy–Uitz family `g_λ` and Denjoy's `κ`, all driven
//! by the ordinary continued fraction.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::brocot::farey_level;
use crate::cfkit::expand_ordinary;
use crate::error::{Error, Result};
use crate::exactnum::Rational;

fn unit_closed(x: &Rational) -> Result<()> {
    if x.signum() < 0 || *x > 1 {
        return Err(Error::OutOfDomain(format!("{x} is outside [0, 1]")));
    }
    Ok(())
}

fn unit_open_param(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0 && v < 1.0) {
        return Err(Error::OutOfDomain(format!(
            "{name} = {v} is outside (0, 1)"
        )));
    }
    Ok(())
}

/// `?(x) = 2^(1-a1) - 2^(1-a1-a2) + 2^(1-a1-a2-a3) - …` over the ordinary
/// expansion `[0; a1, a2, …]`, as an exact dyadic rational.
pub fn qmark(x: &Rational) -> Result<Rational> {
    unit_closed(x)?;
    if *x == 1 {
        return Ok(Rational::one());
    }
    let cf = expand_ordinary(x);
    let mut acc = Rational::zero();
    let mut partial = BigInt::zero();
    for (k, a) in cf.quotients().iter().enumerate() {
        partial += a;
        let shift = (&partial - 1u32)
            .to_usize()
            .ok_or_else(|| Error::Overflow(format!("exponent {partial}")))?;
        let term = Rational::from_big(BigInt::from(1), BigInt::from(1) << shift);
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    Ok(acc)
}

/// `?` on `𝓕ₙ` by the mediant rule: `?(0) = 0`, `?(1) = 1`, and each
/// inserted mediant takes the average of its two neighbours.
pub fn qmark_by_mediants(n: u32) -> Result<Vec<(Rational, Rational)>> {
    let half = Rational::from_i64(1, 2)?;
    let mut seq = vec![
        (Rational::zero(), Rational::zero()),
        (Rational::one(), Rational::one()),
    ];
    for _ in 0..n {
        let mut next = Vec::with_capacity(2 * seq.len() - 1);
        for w in seq.windows(2) {
            next.push(w[0].clone());
            let x = crate::exactnum::mediant(&w[0].0, &w[1].0);
            let v = (&w[0].1 + &w[1].1) * &half;
            next.push((x, v));
        }
        next.push(seq.last().expect("nonempty").clone());
        seq = next;
    }
    debug_assert_eq!(seq.len(), farey_level(n)?.len());
    Ok(seq)
}

/// `g_λ(x) = λ^(a1-1) - λ^(a1-1)(1-λ)^a2 + λ^(a1-1)(1-λ)^a2 λ^a3 - …`:
/// odd-indexed quotients feed `λ`, even-indexed ones `1 - λ`. The sum is
/// cut once a term falls below `2^-precision_bits`.
pub fn g_lambda(x: &Rational, lam: f64, precision_bits: u32) -> Result<f64> {
    unit_open_param("lambda", lam)?;
    unit_closed(x)?;
    if x.is_zero() {
        return Ok(0.0);
    }
    if *x == 1 {
        return Ok(1.0);
    }
    let tol = (-f64::from(precision_bits)).exp2();
    let cf = expand_ordinary(x);
    let mut product = 1.0 / lam;
    let mut acc = 0.0;
    for (i, a) in cf.quotients().iter().enumerate() {
        let a = a.to_f64().unwrap_or(f64::INFINITY);
        product *= if i % 2 == 0 {
            lam.powf(a)
        } else {
            (1.0 - lam).powf(a)
        };
        acc += if i % 2 == 0 { product } else { -product };
        if product < tol {
            break;
        }
    }
    Ok(acc)
}

/// Denjoy's `κ(x, α) = α^a0 - α^a0 (1-α)^a1 + α^(a0+a2) (1-α)^a1 - …` over
/// the ordinary expansion `[a0; a1, a2, …]` of `x >= 0`.
pub fn kappa(x: &Rational, alpha: f64) -> Result<f64> {
    unit_open_param("alpha", alpha)?;
    if x.signum() < 0 {
        return Err(Error::OutOfDomain(format!("{x} is negative")));
    }
    let cf = expand_ordinary(x);
    let a0 = cf.a0().to_f64().unwrap_or(f64::INFINITY);
    let mut product = alpha.powf(a0);
    let mut acc = product;
    for (i, a) in cf.quotients().iter().enumerate() {
        if product < f64::EPSILON * f64::EPSILON {
            break;
        }
        let a = a.to_f64().unwrap_or(f64::INFINITY);
        // quotient index i + 1: odd indices feed (1 - α), even ones α
        product *= if i % 2 == 0 {
            (1.0 - alpha).powf(a)
        } else {
            alpha.powf(a)
        };
        acc += if i % 2 == 0 { -product } else { product };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_i64(n, d).unwrap()
    }

    #[test]
    fn qmark_values() {
        assert_eq!(qmark(&r(1, 2)).unwrap(), r(1, 2));
        assert_eq!(qmark(&r(1, 3)).unwrap(), r(1, 4));
        assert_eq!(qmark(&r(2, 5)).unwrap(), r(3, 8));
        assert_eq!(qmark(&r(2, 3)).unwrap(), r(3, 4));
        assert_eq!(qmark(&r(0, 1)).unwrap(), r(0, 1));
        assert_eq!(qmark(&r(1, 1)).unwrap(), r(1, 1));
        assert!(qmark(&r(5, 4)).is_err());
    }

    #[test]
    fn qmark_mediant_rule_small() {
        for (x, v) in qmark_by_mediants(6).unwrap() {
            assert_eq!(qmark(&x).unwrap(), v, "x = {x}");
        }
    }

    #[test]
    fn g_lambda_values() {
        let lam = 0.3;
        assert!((g_lambda(&r(1, 2), lam, 60).unwrap() - lam).abs() < 1e-15);
        assert!((g_lambda(&r(1, 3), lam, 60).unwrap() - lam * lam).abs() < 1e-15);
        // [0; 2, 3]: λ - λ(1-λ)^3
        let want = lam - lam * (1.0 - lam).powi(3);
        assert!((g_lambda(&r(3, 7), lam, 60).unwrap() - want).abs() < 1e-15);
        assert!(g_lambda(&r(1, 2), 1.0, 60).is_err());
        assert!(g_lambda(&r(1, 2), 0.0, 60).is_err());
    }

    #[test]
    fn kappa_values() {
        assert!((kappa(&r(1, 2), 0.5).unwrap() - 0.75).abs() < 1e-15);
        assert!((kappa(&r(1, 3), 0.5).unwrap() - 0.875).abs() < 1e-15);
        assert!((kappa(&r(0, 1), 0.3).unwrap() - 1.0).abs() < 1e-15);
        assert!((kappa(&r(1, 1), 0.3).unwrap() - 0.3).abs() < 1e-15);
        assert!(kappa(&r(1, 2), 1.5).is_err());
    }

    #[test]
    fn kappa_relation_small_grid() {
        for (p, q) in [(1, 2), (2, 5), (3, 7), (5, 8), (13, 21), (7, 19)] {
            for alpha in [0.1, 0.37, 0.5, 0.81] {
                let x = r(p, q);
                let rel = 1.0 - (1.0 - alpha) * g_lambda(&x, 1.0 - alpha, 60).unwrap();
                assert!((kappa(&x, alpha).unwrap() - rel).abs() < 1e-12);
            }
        }
    }
}
