//! Exact scalars: arbitrary-precision integers and normalized rationals.
//!
//! [`ExactInt`] is the working scalar of fraction-free elimination: its
//! [`ExactInt::exact_div`] refuses to truncate, because every division the
//! elimination performs is supposed to be exact and a remainder means a bug
//! or a violated hypothesis. [`Rational`] is the scalar of reduced-form
//! entries and solutions; it is always stored normalized (positive
//! denominator, coprime parts), so equality is structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision signed integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactInt(BigInt);

impl ExactInt {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> ExactInt {
        ExactInt(self.0.abs())
    }

    /// Quotient of an exact division.
    ///
    /// Fails with [`Error::NonExactDivision`] (carrying both operands) when
    /// the divisor does not divide the dividend, and with
    /// [`Error::DivisionByZero`] when the divisor is zero.
    pub fn exact_div(&self, divisor: &ExactInt) -> Result<ExactInt, Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        if !r.is_zero() {
            return Err(Error::NonExactDivision {
                dividend: self.clone(),
                divisor: divisor.clone(),
            });
        }
        Ok(ExactInt(q))
    }

    pub fn gcd(&self, other: &ExactInt) -> ExactInt {
        ExactInt(self.0.gcd(&other.0))
    }

    pub fn parse(text: &str) -> Result<ExactInt, Error> {
        BigInt::from_str(text)
            .map(ExactInt)
            .map_err(|_| Error::parse(0, 0, format!("invalid integer token {text:?}")))
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for ExactInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExactInt::parse(s)
    }
}

macro_rules! exact_int_from {
    ($($t:ty),*) => {
        $(impl From<$t> for ExactInt {
            fn from(v: $t) -> Self {
                ExactInt(BigInt::from(v))
            }
        })*
    };
}
exact_int_from!(i8, i16, i32, i64, i128, u8, u16, u32, u64, usize);

/// Forwards a binary operator to `BigInt` for every owned/borrowed combination.
macro_rules! exact_int_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: ExactInt) -> ExactInt {
                ExactInt(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &ExactInt) -> ExactInt {
                ExactInt(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactInt> for &ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: ExactInt) -> ExactInt {
                ExactInt((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&ExactInt> for &ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &ExactInt) -> ExactInt {
                ExactInt((&self.0).$method(&rhs.0))
            }
        }
    };
}
exact_int_binop!(Add, add);
exact_int_binop!(Sub, sub);
exact_int_binop!(Mul, mul);

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-self.0)
    }
}

impl Neg for &ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-&self.0)
    }
}

impl Zero for ExactInt {
    fn zero() -> Self {
        ExactInt(BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for ExactInt {
    fn one() -> Self {
        ExactInt(BigInt::one())
    }
}

/// Normalized exact fraction: positive denominator, coprime parts, sign on
/// the numerator. Zero is canonically `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: ExactInt,
    den: ExactInt,
}

impl Rational {
    /// Builds the normalized fraction `num/den`. Fails when `den` is zero.
    pub fn new(num: ExactInt, den: ExactInt) -> Result<Rational, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(mut num: ExactInt, mut den: ExactInt) -> Rational {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Rational {
                num: ExactInt::zero(),
                den: ExactInt::one(),
            };
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            // gcd is positive and divides both parts by construction
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        Rational { num, den }
    }

    pub fn from_integer(n: ExactInt) -> Rational {
        Rational {
            num: n,
            den: ExactInt::one(),
        }
    }

    pub fn numerator(&self) -> &ExactInt {
        &self.num
    }

    pub fn denominator(&self) -> &ExactInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplicative inverse; fails on zero.
    pub fn recip(&self) -> Result<Rational, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational::normalized(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    /// Accepts `p` or `p/q` with optional sign on `p`.
    pub fn parse(text: &str) -> Result<Rational, Error> {
        match text.split_once('/') {
            None => Ok(Rational::from_integer(ExactInt::parse(text)?)),
            Some((p, q)) => {
                let num = ExactInt::parse(p)?;
                let den = ExactInt::parse(q)?;
                if den.is_zero() {
                    return Err(Error::parse(
                        0,
                        0,
                        format!("zero denominator in token {text:?}"),
                    ));
                }
                Ok(Rational::normalized(num, den))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rational::parse(s)
    }
}

impl From<ExactInt> for Rational {
    fn from(n: ExactInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(ExactInt::from(n))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

rational_binop!(Add, add, |a, b| Rational::normalized(
    &(&a.num * &b.den) + &(&b.num * &a.den),
    &a.den * &b.den
));
rational_binop!(Sub, sub, |a, b| Rational::normalized(
    &(&a.num * &b.den) - &(&b.num * &a.den),
    &a.den * &b.den
));
rational_binop!(Mul, mul, |a, b| Rational::normalized(
    &a.num * &b.num,
    &a.den * &b.den
));
rational_binop!(Div, div, |a, b| {
    assert!(!b.is_zero(), "rational division by zero");
    Rational::normalized(&a.num * &b.den, &a.den * &b.num)
});

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::from_integer(ExactInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::from_integer(ExactInt::one())
    }
}

/// Common interface of the two exact scalars, as far as the generic matrix
/// routines need one. `exact_div` is the checked integer division for
/// [`ExactInt`] and plain field division for [`Rational`].
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    fn exact_div(&self, divisor: &Self) -> Result<Self, Error>;

    fn to_rational(&self) -> Rational;

    fn parse_token(text: &str) -> Result<Self, Error>;
}

impl Scalar for ExactInt {
    fn exact_div(&self, divisor: &ExactInt) -> Result<ExactInt, Error> {
        ExactInt::exact_div(self, divisor)
    }

    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }

    fn parse_token(text: &str) -> Result<Self, Error> {
        ExactInt::parse(text)
    }
}

impl Scalar for Rational {
    fn exact_div(&self, divisor: &Rational) -> Result<Rational, Error> {
        self.checked_div(divisor)
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn parse_token(text: &str) -> Result<Self, Error> {
        Rational::parse(text)
    }
}
