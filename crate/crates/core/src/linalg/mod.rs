//! Exact rational linear algebra.
//!
//! Rationals are [`num_rational::BigRational`], always stored reduced with a
//! positive denominator, so structural equality is value equality.

mod elim;
mod limit;
mod matrix;
mod poly;

pub use elim::{inverse, kernel, rank, solve_linear, LinearSolution, Span};
pub use limit::{power_limit_matrix, power_limit_vec};
pub use matrix::{norm_bound_sq, Matrix, Vector};
pub use poly::{char_poly, roots_inside_unit_disk, Polynomial};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational number.
pub type Rational = num_rational::BigRational;

/// Builds `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn zero() -> Rational {
    Rational::zero()
}

pub(crate) fn one() -> Rational {
    Rational::one()
}
