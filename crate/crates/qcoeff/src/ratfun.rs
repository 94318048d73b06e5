//! The fraction field `Q(v)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;

use crate::coeff::Coeff;
use crate::laurent::{poly_div_rem, LaurentPoly, ZLaurent};
use crate::CoeffError;

/// A quotient `num / den` of Laurent polynomials in canonical form:
/// `gcd(num, den)` is a unit, `den` has lowest exponent 0 and leading coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = poly_div_rem(&a, &b).expect("rational division is exact");
        a = b;
        b = r;
    }
    a.monic()
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(x: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(x))
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::v_pow(k))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFun {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_z(p: &ZLaurent) -> Self {
        Self::from_laurent(p.to_rational())
    }

    /// Builds `num / den` and canonicalizes.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let dmin = den.min_exp().unwrap();
        let mut den = den.shift(-dmin);
        let mut num = num.shift(-dmin);
        if den.max_exp() == Some(0) {
            let c = den.leading_coeff().unwrap().clone();
            let inv = <BigRational as Coeff>::one().div_exact(&c).unwrap();
            return RatFun {
                num: num.scale(&inv),
                den: LaurentPoly::one(),
            };
        }
        let nmin = num.min_exp().unwrap();
        let g = poly_gcd(&num.shift(-nmin), &den);
        if g.max_exp() != Some(0) {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        let lc = den.leading_coeff().unwrap().clone();
        let inv = <BigRational as Coeff>::one().div_exact(&lc).unwrap();
        RatFun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in the Laurent ring.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.is_laurent() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The value in `Z[v, v^-1]`, if it lies there.
    pub fn to_z(&self) -> Option<ZLaurent> {
        self.as_laurent()?.to_integer()
    }

    pub fn shift(&self, k: i64) -> Self {
        RatFun {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        if other.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if other.is_laurent() && other.num.terms().len() == 1 {
            let (e, c) = &other.num.terms()[0];
            let inv = <BigRational as Coeff>::one().div_exact(c).unwrap();
            return Ok(RatFun {
                num: self.num.shift(-e).scale(&inv),
                den: self.den.clone(),
            });
        }
        Ok(Self::canonical(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn pow(&self, e: i32) -> Self {
        if e >= 0 {
            RatFun {
                num: self.num.pow(e as u32),
                den: self.den.pow(e as u32),
            }
        } else {
            self.inv().expect("negative power of zero").pow(-e)
        }
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        if self.is_laurent() {
            Self::from_laurent(&self.num * p)
        } else {
            Self::canonical(&self.num * p, self.den.clone())
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if self.den == other.den {
            let num = if negate {
                &self.num - &other.num
            } else {
                &self.num + &other.num
            };
            if self.is_laurent() {
                return Self::from_laurent(num);
            }
            return Self::canonical(num, self.den.clone());
        }
        let rhs = &other.num * &self.den;
        let lhs = &self.num * &other.den;
        let num = if negate { lhs - rhs } else { lhs + rhs };
        Self::canonical(num, &self.den * &other.den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_laurent() && other.is_laurent() {
            return Self::from_laurent(&self.num * &other.num);
        }
        Self::canonical(&self.num * &other.num, &self.den * &other.den)
    }
}

/// Division in `Q(v)`; errors when `b` is zero.
pub fn ratfun_div(a: &RatFun, b: &RatFun) -> Result<RatFun, CoeffError> {
    a.div(b)
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from_laurent(p)
    }
}

impl From<&ZLaurent> for RatFun {
    fn from(p: &ZLaurent) -> Self {
        RatFun::from_z(p)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                $body(self, rhs)
            }
        }
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                $body(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a: &RatFun, b: &RatFun| a.add_impl(b, false));
binop!(Sub, sub, |a: &RatFun, b: &RatFun| a.add_impl(b, true));
binop!(Mul, mul, |a: &RatFun, b: &RatFun| a.mul_impl(b));

impl std::ops::AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &RatFun) {
        if rhs.is_zero() {
            return;
        }
        if self.is_laurent() && rhs.is_laurent() {
            self.num += &rhs.num;
        } else {
            *self = self.add_impl(rhs, false);
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RatFun {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, CoeffError> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            if let Some(idx) = rest.find(")/(") {
                let num: LaurentPoly = rest[..idx].parse()?;
                let den_txt = rest[idx + 3..]
                    .strip_suffix(')')
                    .ok_or_else(|| CoeffError::Parse(s.to_string()))?;
                let den: LaurentPoly = den_txt.parse()?;
                return RatFun::new(num, den);
            }
        }
        Ok(RatFun::from_laurent(t.parse()?))
    }
}
