//! Exact rational scalars.
//!
//! [`Rat`] is a thin wrapper around [`BigRational`] that is always kept in
//! lowest terms with a positive denominator.  It adds parsing/printing in the
//! `p/q` notation used by the text formats and JSON reports.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact element of the ground field k = Q.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// The rational `n / d`.
    ///
    /// # Panics
    /// Panics when `d == 0`.
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The integer `n`.
    pub fn int(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds a rational from big integers.
    pub fn from_bigints(n: BigInt, d: BigInt) -> Rat {
        assert!(!d.is_zero(), "zero denominator");
        Rat(BigRational::new(n, d))
    }

    /// The big integer `n`.
    pub fn from_bigint(n: BigInt) -> Rat {
        Rat(BigRational::from_integer(n))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics on zero.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "inverse of zero");
        Rat(self.0.recip())
    }

    /// `self^e` for a non-negative exponent.
    pub fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Borrow the underlying big rational.
    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_bigint(n)
    }
}

impl From<BigRational> for Rat {
    fn from(q: BigRational) -> Rat {
        Rat(q)
    }
}

/// Error returned when a string is not a rational literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `INT` or `INT/POSINT` with an optional leading sign.
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let err = || ParseRatError(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let valid_int = |x: &str| {
            let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_int(n) {
            return Err(err());
        }
        let num: BigInt = n.trim_start_matches('+').parse().map_err(|_| err())?;
        let den: BigInt = match d {
            None => BigInt::one(),
            Some(d) => {
                if !d.bytes().all(|b| b.is_ascii_digit()) || d.is_empty() {
                    return Err(err());
                }
                d.parse().map_err(|_| err())?
            }
        };
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rat::from_bigints(num, den))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                Rat((&self.0).$m(&o.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                Rat(self.0.$m(o.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                Rat(self.0.$m(&o.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                Rat((&self.0).$m(o.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, o: &Rat) {
        self.0 += &o.0;
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, o: Rat) {
        self.0 += o.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, o: &Rat) {
        self.0 -= &o.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, o: &Rat) {
        self.0 *= &o.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

/// Binomial coefficient `C(n, k)` as a big integer (`0` when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * i)
}

/// The generalized binomial `p(p-1)…(p-a+1)/a!`, valid for negative `p`.
pub fn falling_binomial(p: i64, a: u32) -> Rat {
    let mut num = BigInt::one();
    for i in 0..a as i64 {
        num *= p - i;
    }
    Rat::from_bigints(num, factorial(a as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let q = Rat::new(6, -4);
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_and_print() {
        for s in ["0", "7", "-7", "1/2", "-5/3", "10/4"] {
            let q: Rat = s.parse().unwrap();
            let back: Rat = q.to_string().parse().unwrap();
            assert_eq!(q, back);
        }
        assert_eq!("10/4".parse::<Rat>().unwrap().to_string(), "5/2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("1/-2".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        // well past u64 range
        assert!(binomial(100, 50) > BigInt::from(u64::MAX));
    }

    #[test]
    fn falling_binomial_negative() {
        // (-1 choose 2) = (-1)(-2)/2 = 1
        assert_eq!(falling_binomial(-1, 2), Rat::one());
        assert_eq!(falling_binomial(5, 0), Rat::one());
        assert_eq!(falling_binomial(3, 4), Rat::zero());
        assert_eq!(falling_binomial(-2, 3), Rat::int(-4));
    }
}
