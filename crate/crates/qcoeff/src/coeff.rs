//! Scalar rings used as Laurent coefficients.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact (partial) division.
pub trait Coeff: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other` when the quotient exists in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn is_negative(&self) -> bool;
    /// `(numerator, denominator)` of the absolute value, for rendering.
    fn abs_parts(&self) -> (String, Option<String>);
    fn parse(s: &str) -> Option<Self>;
    fn to_rational(&self) -> BigRational;
    fn from_rational(q: &BigRational) -> Option<Self>;

    fn add_assign(&mut self, other: &Self) {
        *self = Coeff::add(self, other);
    }
}

/// Machine integers; every operation is overflow-checked and panics on overflow.
impl Coeff for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(x: i64) -> Self {
        x
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn add(&self, other: &Self) -> Self {
        self.checked_add(*other)
            .expect("integer coefficient overflow")
    }
    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(*other)
            .expect("integer coefficient overflow")
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(*other)
            .expect("integer coefficient overflow")
    }
    fn neg(&self) -> Self {
        self.checked_neg().expect("integer coefficient overflow")
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if *other == 0 || self % other != 0 {
            None
        } else {
            Some(self / other)
        }
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_parts(&self) -> (String, Option<String>) {
        (self.unsigned_abs().to_string(), None)
    }
    fn parse(s: &str) -> Option<Self> {
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().ok()?;
                let q: i64 = q.trim().parse().ok()?;
                Coeff::div_exact(&p, &q)
            }
            None => s.trim().parse().ok(),
        }
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(*self))
    }
    fn from_rational(q: &BigRational) -> Option<Self> {
        if !q.is_integer() {
            return None;
        }
        i64::try_from(q.to_integer()).ok()
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_parts(&self) -> (String, Option<String>) {
        let a = self.abs();
        let den = if One::is_one(a.denom()) {
            None
        } else {
            Some(a.denom().to_string())
        };
        (a.numer().to_string(), den)
    }
    fn parse(s: &str) -> Option<Self> {
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().ok()?;
                let q: BigInt = q.trim().parse().ok()?;
                if Zero::is_zero(&q) {
                    None
                } else {
                    Some(BigRational::new(p, q))
                }
            }
            None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
        }
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
}
