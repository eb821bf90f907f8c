//! Certified rational brackets around the real root of `t^3 - t^2 - t - 1`.

use std::sync::OnceLock;

use super::rational::Rational;

/// Open interval `(lo, hi)` with `p(lo) < 0 < p(hi)` for `p(t) = t^3 - t^2 - t - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealBracket {
    lo: Rational,
    hi: Rational,
}

/// Value of the defining polynomial at `t`.
pub fn defining_poly(t: &Rational) -> Rational {
    let t2 = t * t;
    let t3 = &t2 * t;
    t3 - t2 - t - Rational::one()
}

impl RealBracket {
    /// The starting bracket `(1, 2)`: `p(1) = -2`, `p(2) = 1`.
    pub fn initial() -> Self {
        RealBracket {
            lo: Rational::one(),
            hi: Rational::from_integer(2),
        }
    }

    /// A bracket of width `2^-64`, computed once per process.
    pub fn cached() -> &'static RealBracket {
        static CACHE: OnceLock<RealBracket> = OnceLock::new();
        CACHE.get_or_init(|| RealBracket::initial().refined(64))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * Rational::from_i64(1, 2).expect("nonzero")
    }

    /// One bisection step; the result has half the width and still contains the root.
    pub fn refine(&self) -> RealBracket {
        let mid = self.midpoint();
        // p has a single real root, and p(mid) == 0 would make it rational.
        if defining_poly(&mid).signum() < 0 {
            RealBracket {
                lo: mid,
                hi: self.hi.clone(),
            }
        } else {
            RealBracket {
                lo: self.lo.clone(),
                hi: mid,
            }
        }
    }

    pub fn refined(&self, steps: u32) -> RealBracket {
        (0..steps).fold(self.clone(), |b, _| b.refine())
    }

    pub fn is_certified(&self) -> bool {
        self.lo < self.hi
            && defining_poly(&self.lo).signum() < 0
            && defining_poly(&self.hi).signum() > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refinement_halves_and_contains_root() {
        let mut b = RealBracket::initial();
        assert!(b.is_certified());
        for _ in 0..40 {
            let next = b.refine();
            assert!(next.is_certified());
            assert_eq!(next.width() * Rational::from_integer(2), b.width());
            assert!(next.lo() >= b.lo() && next.hi() <= b.hi());
            b = next;
        }
        let mid = b.midpoint().to_f64();
        assert!((mid - 1.839_286_755_214_161).abs() < 1e-11);
    }

    #[test]
    fn cached_bracket_is_tight() {
        let b = RealBracket::cached();
        assert!(b.is_certified());
        assert_eq!(
            b.width(),
            Rational::new(1.into(), num_bigint::BigInt::from(1u8) << 64).unwrap()
        );
    }
}
