//! Minimal-remainder (centered) continued fractions.
//!
//! The centered Euclidean algorithm (`a = bq + r`, `-b/2 < r <= b/2`) expands a
//! rational into a continued fraction with signed numerators. Sorting the
//! rationals of `[0, 1]` by the sum `S(x)` of these partial quotients gives a
//! re-levelled Stern–Brocot tree whose counting sequences follow a
//! Tribonacci-style recurrence, and whose limit distribution `F` is a
//! singular function with values in the cubic field `Q(λ)`,
//! `λ³ = λ² + λ + 1`.
//!
//! Everything that can be exact is exact: rationals are arbitrary precision,
//! `F` is evaluated in `Q(λ)`, and signs are decided by certified interval
//! evaluation.

pub mod brocot;
pub mod cfkit;
pub mod error;
pub mod exactnum;
pub mod report;
pub mod singfun;
pub mod singlab;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{mediant, rat, CubicNumber, Rational, RealBracket};
