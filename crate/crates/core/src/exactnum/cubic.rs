//! Exact arithmetic in the cubic field `Q(λ)`, `λ^3 = λ^2 + λ + 1`.
//!
//! Elements are stored on the basis `{1, λ, λ²}`. Since `λ` is a cubic
//! irrational, an element is zero exactly when all three coefficients are.
//! Sign and ordering go through a certified interval evaluation on a
//! [`RealBracket`] around the real root.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::bracket::RealBracket;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubicNumber {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
}

/// Frequently used constants of the field.
pub struct Constants {
    pub lambda: CubicNumber,
    pub inv_lambda: CubicNumber,
    /// `c = 1/(λ - 1) = λ²/(1 + λ)`.
    pub c: CubicNumber,
    pub c_over_lambda: CubicNumber,
    pub c_over_lambda2: CubicNumber,
    pub inv_c_lambda: CubicNumber,
}

pub fn constants() -> &'static Constants {
    static K: OnceLock<Constants> = OnceLock::new();
    K.get_or_init(|| {
        let lambda = CubicNumber::lambda();
        let inv_lambda = lambda.inv().expect("λ is nonzero");
        let c = (&lambda - &CubicNumber::one())
            .inv()
            .expect("λ is irrational");
        let c_over_lambda = &c * &inv_lambda;
        let c_over_lambda2 = &c_over_lambda * &inv_lambda;
        let inv_c_lambda = (&c * &lambda).inv().expect("nonzero");
        Constants {
            lambda,
            inv_lambda,
            c,
            c_over_lambda,
            c_over_lambda2,
            inv_c_lambda,
        }
    })
}

impl CubicNumber {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        CubicNumber { c0, c1, c2 }
    }

    pub fn from_rational(r: Rational) -> Self {
        CubicNumber::new(r, Rational::zero(), Rational::zero())
    }

    /// Shorthand for integer coefficients.
    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        CubicNumber::new(c0.into(), c1.into(), c2.into())
    }

    pub fn zero() -> Self {
        CubicNumber::from_ints(0, 0, 0)
    }

    pub fn one() -> Self {
        CubicNumber::from_ints(1, 0, 0)
    }

    pub fn lambda() -> Self {
        CubicNumber::from_ints(0, 1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    /// Element times `λ`, using `λ³ = 1 + λ + λ²`.
    pub fn mul_lambda(&self) -> CubicNumber {
        CubicNumber::new(self.c2.clone(), &self.c0 + &self.c2, &self.c1 + &self.c2)
    }

    pub fn scale(&self, r: &Rational) -> CubicNumber {
        CubicNumber::new(&self.c0 * r, &self.c1 * r, &self.c2 * r)
    }

    /// Inverse by solving `a · x = 1` in the basis: the columns of the
    /// system are `a`, `a·λ`, `a·λ²`; Cramer's rule on the 3×3 matrix.
    pub fn inv(&self) -> Result<CubicNumber> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let col0 = self.clone();
        let col1 = col0.mul_lambda();
        let col2 = col1.mul_lambda();
        let m = [
            [&col0.c0, &col1.c0, &col2.c0],
            [&col0.c1, &col1.c1, &col2.c1],
            [&col0.c2, &col1.c2, &col2.c2],
        ];
        let minor = |r0: usize, r1: usize, k0: usize, k1: usize| -> Rational {
            m[r0][k0] * m[r1][k1] - m[r0][k1] * m[r1][k0]
        };
        // Expansion of det along the first row.
        let det = m[0][0] * &minor(1, 2, 1, 2) - m[0][1] * &minor(1, 2, 0, 2)
            + m[0][2] * &minor(1, 2, 0, 1);
        // The field norm of a nonzero element never vanishes.
        debug_assert!(!det.is_zero());
        // Right-hand side is e0, so x_k = cofactor(0, k) / det.
        let x0 = minor(1, 2, 1, 2).checked_div(&det)?;
        let x1 = (-minor(1, 2, 0, 2)).checked_div(&det)?;
        let x2 = minor(1, 2, 0, 1).checked_div(&det)?;
        Ok(CubicNumber::new(x0, x1, x2))
    }

    pub fn div(&self, other: &CubicNumber) -> Result<CubicNumber> {
        Ok(self * &other.inv()?)
    }

    /// Exact integer power; negative exponents go through [`CubicNumber::inv`].
    pub fn pow(&self, k: i64) -> Result<CubicNumber> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CubicNumber::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Interval image of `c0 + c1 t + c2 t²` over `t ∈ [lo, hi]`, `lo > 0`.
    fn enclose(&self, b: &RealBracket) -> (Rational, Rational) {
        let (lo, hi) = (b.lo(), b.hi());
        let lo2 = lo * lo;
        let hi2 = hi * hi;
        let span = |c: &Rational, a: &Rational, z: &Rational| -> (Rational, Rational) {
            let (u, v) = (c * a, c * z);
            if u <= v {
                (u, v)
            } else {
                (v, u)
            }
        };
        let (l1, h1) = span(&self.c1, lo, hi);
        let (l2, h2) = span(&self.c2, &lo2, &hi2);
        (&self.c0 + &l1 + l2, &self.c0 + &h1 + h2)
    }

    /// Exact sign of the real value.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let mut b = RealBracket::cached().clone();
        loop {
            let (lo, hi) = self.enclose(&b);
            if lo.signum() > 0 {
                return 1;
            }
            if hi.signum() < 0 {
                return -1;
            }
            b = b.refine();
        }
    }

    /// An enclosure of the value of width at most `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> (Rational, Rational) {
        let tol = Rational::new(1.into(), num_bigint::BigInt::from(1u8) << bits).expect("nonzero");
        let mut b = RealBracket::cached().clone();
        loop {
            let (lo, hi) = self.enclose(&b);
            if &hi - &lo <= tol {
                return (lo, hi);
            }
            b = b.refine();
        }
    }

    /// Decimal rendering accurate to `precision_bits` (at least 8).
    pub fn to_decimal_string(&self, precision_bits: u32) -> Result<String> {
        if precision_bits < 8 {
            return Err(Error::OutOfDomain(format!(
                "precision_bits = {precision_bits} (need >= 8)"
            )));
        }
        let (lo, hi) = self.enclosure(precision_bits + 4);
        let mid = (lo + hi) * Rational::from_i64(1, 2).expect("nonzero");
        let digits = (f64::from(precision_bits) * std::f64::consts::LOG10_2).ceil() as usize;
        Ok(mid.to_decimal(digits))
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclosure(64);
        ((lo + hi) * Rational::from_i64(1, 2).expect("nonzero")).to_f64()
    }

    /// Exact comparison of real values.
    pub fn cmp_value(&self, other: &CubicNumber) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for CubicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·λ + {}·λ²", self.c0, self.c1, self.c2)
    }
}

impl fmt::Debug for CubicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c0, self.c1, self.c2)
    }
}

impl<'a> Add<&'a CubicNumber> for &'a CubicNumber {
    type Output = CubicNumber;
    fn add(self, rhs: &'a CubicNumber) -> CubicNumber {
        CubicNumber::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }
}

impl<'a> Sub<&'a CubicNumber> for &'a CubicNumber {
    type Output = CubicNumber;
    fn sub(self, rhs: &'a CubicNumber) -> CubicNumber {
        CubicNumber::new(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1, &self.c2 - &rhs.c2)
    }
}

impl<'a> Mul<&'a CubicNumber> for &'a CubicNumber {
    type Output = CubicNumber;
    fn mul(self, rhs: &'a CubicNumber) -> CubicNumber {
        let (a, b) = (self, rhs);
        let d0 = &a.c0 * &b.c0;
        let d1 = &a.c0 * &b.c1 + &a.c1 * &b.c0;
        let d2 = &a.c0 * &b.c2 + &a.c1 * &b.c1 + &a.c2 * &b.c0;
        let d3 = &a.c1 * &b.c2 + &a.c2 * &b.c1;
        let d4 = &a.c2 * &b.c2;
        // λ³ = 1 + λ + λ², λ⁴ = 1 + 2λ + 2λ²
        let two_d4 = &d4 + &d4;
        CubicNumber::new(d0 + &d3 + &d4, d1 + &d3 + &two_d4, d2 + &d3 + &two_d4)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<CubicNumber> for CubicNumber {
            type Output = CubicNumber;
            fn $method(self, rhs: CubicNumber) -> CubicNumber {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a CubicNumber> for CubicNumber {
            type Output = CubicNumber;
            fn $method(self, rhs: &'a CubicNumber) -> CubicNumber {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &CubicNumber {
    type Output = CubicNumber;
    fn neg(self) -> CubicNumber {
        CubicNumber::new(-&self.c0, -&self.c1, -&self.c2)
    }
}

impl Neg for CubicNumber {
    type Output = CubicNumber;
    fn neg(self) -> CubicNumber {
        -&self
    }
}
