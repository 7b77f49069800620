//! Exact scalars and dense exact linear algebra.
//!
//! Everything defaults to [`Rational`]. The prime field [`Fp`] exists for
//! fast randomized rank probes; any conclusion drawn from it is only
//! probabilistic.

mod field;
mod matrix;

pub use field::{Field, Fp, Fp31, Rational, DEFAULT_PRIME};
pub use matrix::{ExactMatrix, Matrix};

use num_bigint::BigInt;

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` in lowest terms. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p` or `p/q` (optionally signed).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}
