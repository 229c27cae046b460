//! The scalar contract shared by every coefficient domain.
//!
//! `Rat` is the base field: arbitrary-precision rationals in lowest terms
//! with positive denominator (both invariants are maintained by
//! `num_rational::BigRational` itself). `Field` is the minimal interface the
//! linear algebra and polynomial layers need; it is implemented by `Rat`,
//! `NumberFieldElement` and `RatFunc`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: numerator and positive denominator, always reduced.
pub type Rat = BigRational;

/// Construct a rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Construct a rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// True if the rational is an integer.
pub fn rat_is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    if &(&num * &num) == q.numer() && &(&den * &den) == q.denom() {
        Some(Rat::new(num, den))
    } else {
        None
    }
}

/// An exact field of characteristic zero.
///
/// `inv` and `div` return `None` on division by zero; callers that have
/// already excluded zero may unwrap. `from_rat` is the canonical embedding
/// of the prime field.
pub trait Field: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rat(q: &Rat) -> Self;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&rat_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Scale by a rational (embedding then multiplying).
    fn scale(&self, q: &Rat) -> Self {
        self.mul(&Self::from_rat(q))
    }

    /// The element as a rational, when it lies in the prime field.
    fn to_rat(&self) -> Option<Rat>;
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        if <Rat as Zero>::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}
