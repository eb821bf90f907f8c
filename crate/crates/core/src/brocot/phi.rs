//! The bijection `Φ : 𝓧ₙ₊₂ ∪ 𝓧ₙ₊₁ ∪ 𝓧ₙ → 𝓧ₙ₊₃` behind `Xₙ₊₃ = Xₙ₊₂ + Xₙ₊₁ + Xₙ`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::cfkit::{expand_minimal, MinimalCF, Sign, Term};
use crate::error::{Error, Result};
use crate::exactnum::Rational;

fn two() -> BigInt {
    BigInt::from(2)
}

/// Level `S(x) - 1` of an `x ∈ (0, 1)`.
fn level_of(cf: &MinimalCF) -> Option<u64> {
    cf.sum().to_u64().and_then(|s| s.checked_sub(1))
}

fn in_unit_interval(x: &Rational) -> bool {
    x.signum() > 0 && *x < 1
}

fn rebuild(a0: BigInt, terms: Vec<Term>) -> Result<Rational> {
    Ok(MinimalCF::new(a0, terms)?.evaluate())
}

/// `Φ(x)` for `x ∈ 𝓧ₙ₊₂ ∪ 𝓧ₙ₊₁ ∪ 𝓧ₙ`:
///
/// * `x ∈ 𝓧ₙ₊₂`: last quotient `a_l → a_l + 1`;
/// * `x ∈ 𝓧ₙ₊₁`: append `+1/2`;
/// * `x ∈ 𝓧ₙ`, `a_l > 2`: append `-1/3`;
/// * `x ∈ 𝓧ₙ`, `a_l = 2`: drop `+1/2`, `a_{l-1} → a_{l-1} + 1`, append `-1/2, +1/2`.
pub fn phi_map(x: &Rational, n: u32) -> Result<Rational> {
    let out_of_domain =
        || Error::OutOfDomain(format!("{x} is not in X_(n+2), X_(n+1) or X_n for n = {n}"));
    if n == 0 || !in_unit_interval(x) {
        return Err(out_of_domain());
    }
    let cf = expand_minimal(x);
    let level = level_of(&cf).ok_or_else(out_of_domain)?;
    let n = u64::from(n);
    let mut a0 = cf.a0().clone();
    let mut terms = cf.terms().to_vec();
    let last = terms.last().expect("x is not an integer").a.clone();
    if level == n + 2 {
        terms.last_mut().expect("nonempty").a += 1;
    } else if level == n + 1 {
        terms.push(Term::new(Sign::Plus, 2));
    } else if level == n && last > two() {
        terms.push(Term::new(Sign::Minus, 3));
    } else if level == n {
        terms.pop();
        match terms.last_mut() {
            Some(prev) => prev.a += 1,
            None => a0 += 1,
        }
        terms.push(Term::new(Sign::Minus, 2));
        terms.push(Term::new(Sign::Plus, 2));
    } else {
        return Err(out_of_domain());
    }
    rebuild(a0, terms)
}

/// Preimage of `y ∈ 𝓧ₘ`, `m >= 4`, under `Φ` (with `n = m - 3`).
pub fn phi_inverse(y: &Rational) -> Result<Rational> {
    let out_of_domain = || Error::OutOfDomain(format!("{y} is not in any X_m with m >= 4"));
    if !in_unit_interval(y) {
        return Err(out_of_domain());
    }
    let cf = expand_minimal(y);
    if level_of(&cf).is_none_or(|m| m < 4) {
        return Err(out_of_domain());
    }
    let mut a0 = cf.a0().clone();
    let mut terms = cf.terms().to_vec();
    let l = terms.len();
    let last = terms[l - 1].clone();
    let three = BigInt::from(3);
    if last.a > three || (last.a == three && last.eps == Sign::Plus) {
        terms[l - 1].a -= 1;
        return rebuild(a0, terms);
    }
    if last.a == three {
        // a_l = 3 with a minus sign: the term was appended to an element of 𝓧ₙ
        terms.pop();
        return rebuild(a0, terms);
    }
    // a_l = 2; a level of at least 4 rules out l = 1
    let prev = terms[l - 2].clone();
    if prev.a > two() || prev.eps == Sign::Plus {
        terms.pop();
        return rebuild(a0, terms);
    }
    // a_l = a_{l-1} = 2 and e_{l-1} = -1
    terms.truncate(l - 2);
    match terms.last_mut() {
        Some(t) => t.a -= BigInt::one(),
        None => a0 -= 1,
    }
    terms.push(Term::new(Sign::Plus, 2));
    rebuild(a0, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brocot::x_level;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_i64(n, d).unwrap()
    }

    #[test]
    fn forward_cases() {
        assert_eq!(phi_map(&r(2, 3), 1).unwrap(), r(3, 4));
        assert_eq!(phi_map(&r(1, 3), 1).unwrap(), r(2, 7));
        assert_eq!(phi_map(&r(1, 2), 1).unwrap(), r(3, 5));
        assert!(phi_map(&r(1, 2), 2).is_err());
        assert!(phi_map(&r(0, 1), 1).is_err());
    }

    #[test]
    fn inverse_cases() {
        assert_eq!(phi_inverse(&r(3, 4)).unwrap(), r(2, 3));
        assert_eq!(phi_inverse(&r(2, 7)).unwrap(), r(1, 3));
        assert_eq!(phi_inverse(&r(3, 5)).unwrap(), r(1, 2));
        assert!(phi_inverse(&r(2, 3)).is_err());
        assert!(phi_inverse(&r(1, 1)).is_err());
    }

    #[test]
    fn bijective_on_small_levels() {
        for n in 1..=7u32 {
            let mut image: Vec<Rational> = (n..=n + 2)
                .flat_map(|k| x_level(k).unwrap().elements)
                .map(|x| {
                    let y = phi_map(&x, n).unwrap();
                    assert_eq!(phi_inverse(&y).unwrap(), x);
                    y
                })
                .collect();
            image.sort();
            assert_eq!(image, x_level(n + 3).unwrap().elements, "n = {n}");
        }
    }
}
