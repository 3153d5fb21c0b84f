use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A reduced projective fraction `num/den`.
///
/// The representation is canonical: `gcd(num, den) = 1`, `num >= 0` whenever
/// `num != 0`, and zero is always stored as `0/1`. The point at infinity is
/// `1/0`. Two fractions are equal exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Builds a fraction, reducing and canonicalizing the sign.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        Ok(Self::canonical(num, den))
    }

    /// Like [`Fraction::new`] but rejects input that is not already coprime.
    pub fn from_reduced(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        if !num.gcd(&den).is_one() {
            return Err(Error::NonCanonical(format!("{num}/{den}")));
        }
        Ok(Self::canonical(num, den))
    }

    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::canonical(n.into(), BigInt::one())
    }

    // Caller guarantees (num, den) != (0, 0).
    pub(crate) fn canonical(mut num: BigInt, mut den: BigInt) -> Self {
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        if num.is_negative() || (num.is_zero() && den.is_negative()) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// The map `x -> x / (1 - x)`, i.e. `a/b -> a/(b - a)`.
    ///
    /// The image describes the same rational link, since `b - a = b (mod a)`.
    pub fn s_transform(&self) -> Fraction {
        Self::canonical(self.num.clone(), &self.den - &self.num)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Parses `a/b`, a bare integer `a`, or `inf`. The input must already be
/// reduced; `6/4` is rejected rather than silently rewritten.
impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Self::infinity());
        }
        let parse = |part: &str, column: usize| {
            BigInt::from_str(part.trim()).map_err(|_| Error::Syntax {
                column,
                message: format!("expected an integer, found {:?}", part.trim()),
            })
        };
        match s.split_once('/') {
            Some((num, den)) => Fraction::from_reduced(parse(num, 1)?, parse(den, num.len() + 2)?),
            None => Ok(Fraction::from_integer(parse(s, 1)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn reduces_and_canonicalizes_sign() {
        let f = frac(-6, 4);
        assert_eq!(
            (f.num().clone(), f.den().clone()),
            (BigInt::from(3), BigInt::from(-2))
        );
        assert_eq!(frac(0, -7), frac(0, 1));
        assert_eq!(frac(-5, 0), Fraction::infinity());
    }

    #[test]
    fn zero_over_zero_is_rejected() {
        assert_eq!(Fraction::new(0, 0), Err(Error::ZeroOverZero));
    }

    #[test]
    fn s_transform_examples() {
        assert_eq!(frac(5, 3).s_transform(), frac(5, -2));
        assert_eq!(frac(0, 1).s_transform(), frac(0, 1));
        assert_eq!(frac(5, 1).s_transform(), frac(5, -4));
        assert_eq!(frac(3, 3).s_transform(), Fraction::infinity());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("10/3".parse::<Fraction>().unwrap(), frac(10, 3));
        assert_eq!("5/-2".parse::<Fraction>().unwrap().to_string(), "5/-2");
        assert_eq!("inf".parse::<Fraction>().unwrap().to_string(), "inf");
        assert_eq!("7".parse::<Fraction>().unwrap(), frac(7, 1));
        assert!(matches!(
            "6/4".parse::<Fraction>(),
            Err(Error::NonCanonical(_))
        ));
        assert!(matches!(
            "6/x".parse::<Fraction>(),
            Err(Error::Syntax { column: 3, .. })
        ));
    }
}
