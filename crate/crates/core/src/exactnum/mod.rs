//! Exact rational arithmetic and arithmetic in `Q(λ)`.

mod bracket;
mod cubic;
mod rational;

pub use bracket::{defining_poly, RealBracket};
pub use cubic::{constants, Constants, CubicNumber};
pub use rational::{mediant, rat, Rational};
