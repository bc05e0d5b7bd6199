//! Arbitrary-precision rational arithmetic plus the two combinatorial
//! helpers (binomial coefficients and double factorials) that the series
//! engine and the identity checks share.
//!
//! Everything downstream assumes rationals are kept fully reduced with a
//! positive denominator, so that equality is structural and text output is
//! canonical. The [`Rational`] newtype delegates storage and reduction to
//! `num_rational::BigRational` and fixes the textual form: integers print
//! as `p`, everything else as `p/q`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number, always fully reduced, denominator positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom` from machine integers.
    ///
    /// # Panics
    ///
    /// Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational denominator must be non-zero");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Builds `numer / denom` from big integers.
    ///
    /// # Panics
    ///
    /// Panics if `denom` is zero.
    pub fn ratio(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "rational denominator must be non-zero");
        Rational(BigRational::new(numer, denom))
    }

    /// The integer `n` as a rational.
    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The big integer `n` as a rational.
    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics if the value is zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        Rational(self.0.recip())
    }

    /// Non-negative integer power.
    pub fn pow(&self, exp: u32) -> Self {
        debug_assert!(exp <= i32::MAX as u32);
        Rational(self.0.pow(exp as i32))
    }

    /// Numerator of the reduced form (carries the sign).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the reduced form (always positive).
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Nearest `f64`.
    ///
    /// The conversion aligns numerator and denominator bit lengths before
    /// dividing, so it stays accurate (within a couple of ULP) even when
    /// both sides far exceed the `f64` range; true overflow saturates to
    /// an infinity.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error produced when parsing text as a [`Rational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    /// A numerator or denominator was not a valid base-10 integer.
    InvalidInteger(String),
    /// The denominator was zero.
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::InvalidInteger(s) => {
                write!(f, "invalid integer in rational literal: {:?}", s)
            }
            ParseRationalError::ZeroDenominator => write!(f, "rational denominator is zero"),
        }
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Parses `p` or `p/q` (base 10, optional leading sign on either part).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int = |part: &str| {
            BigInt::from_str(part.trim())
                .map_err(|_| ParseRationalError::InvalidInteger(part.trim().to_string()))
        };
        match s.split_once('/') {
            Some((numer, denom)) => {
                let numer = parse_int(numer)?;
                let denom = parse_int(denom)?;
                if denom.is_zero() {
                    return Err(ParseRationalError::ZeroDenominator);
                }
                Ok(Rational(BigRational::new(numer, denom)))
            }
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }

        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

macro_rules! forward_assign {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            fn $method(&mut self, rhs: Rational) {
                (self.0).$method(rhs.0);
            }
        }

        impl $trait<&Rational> for Rational {
            fn $method(&mut self, rhs: &Rational) {
                (self.0).$method(&rhs.0);
            }
        }
    };
}

forward_assign!(AddAssign, add_assign);
forward_assign!(SubAssign, sub_assign);
forward_assign!(MulAssign, mul_assign);
forward_assign!(DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Binomial coefficient `C(n, k)` as a big integer.
///
/// Out-of-range `k` (negative or greater than `n`) yields zero, which lets
/// summation bounds be written without edge-case guards.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    // Symmetry keeps the loop short.
    let k = (k as u64).min(n - k as u64);
    let mut result = BigInt::one();
    for i in 0..k {
        // Exact at every step: result holds C(n, i) before this line, and
        // C(n, i + 1) * (i + 1) = C(n, i) * (n - i).
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// Double factorial `n!!` with the conventional empty products
/// `(-1)!! = 0!! = 1`.
///
/// # Panics
///
/// Panics if `n < -1`.
pub fn double_factorial(n: i64) -> BigInt {
    assert!(n >= -1, "double factorial requires n >= -1, got {n}");
    let mut result = BigInt::one();
    let mut k = n;
    while k > 1 {
        result *= BigInt::from(k);
        k -= 2;
    }
    result
}
