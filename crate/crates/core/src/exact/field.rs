use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// A field whose arithmetic is exact.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rational {}

/// Mersenne prime 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Element of the prime field of order `P`, stored as its representative in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

pub type Fp31 = Fp<DEFAULT_PRIME>;

impl<const P: u64> Fp<P> {
    pub fn new(value: u64) -> Self {
        Fp(value % P)
    }

    pub fn from_i64(value: i64) -> Self {
        Fp(value.rem_euclid(P as i64) as u64)
    }

    pub fn from_bigint(value: &BigInt) -> Self {
        let p = BigInt::from(P);
        Fp(value
            .mod_floor(&p)
            .to_u64()
            .expect("reduced residue fits in u64"))
    }

    /// Reduction of a rational, `None` when `P` divides the denominator.
    pub fn from_rational(value: &Rational) -> Option<Self> {
        let den = Self::from_bigint(value.denom());
        if den.0 == 0 {
            return None;
        }
        Some(Self::from_bigint(value.numer()) / den)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in Fp");
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Field for Fp<P> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    type F7 = Fp<7>;

    #[test]
    fn representatives_are_reduced() {
        assert_eq!(F7::from_i64(-1).value(), 6);
        assert_eq!(F7::new(15).value(), 1);
        assert_eq!((F7::new(3) - F7::new(5)).value(), 5);
        assert_eq!((-F7::zero()).value(), 0);
    }

    #[test]
    fn inverse_and_division() {
        for a in 1..7 {
            assert_eq!(F7::new(a) * F7::new(a).inv(), F7::one());
        }
        assert_eq!(Fp31::from_i64(-2).inv() * Fp31::from_i64(-2), Fp31::one());
    }

    #[test]
    fn rational_reduction() {
        let x = F7::from_rational(&ratio(3, 2)).unwrap();
        assert_eq!(x * F7::new(2), F7::new(3));
        assert!(F7::from_rational(&ratio(1, 14)).is_none());
    }

    #[test]
    fn rationals_are_in_lowest_terms() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
