//! Exact fractions, finite continued fractions and integer Möbius
//! transformations.
//!
//! A continued fraction `[a1, ..., am]` is evaluated projectively as the
//! product of the matrices `(ai 1 / 1 0)` applied to the point at infinity,
//! so evaluation is total and never divides.

mod expansion;
mod fraction;
mod mobius;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use expansion::{even_expansion, EvenExpansion};
pub use fraction::Fraction;
pub use mobius::Mobius;

/// A finite continued fraction `[a1, ..., am]`, which is also the Conway
/// notation `C(a1, ..., am)` of a rational link.
///
/// Every quotient after the first is nonzero. The empty sequence evaluates to
/// infinity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    quotients: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<BigInt>) -> Result<Self> {
        if let Some(pos) = quotients.iter().skip(1).position(Zero::is_zero) {
            return Err(Error::InteriorZero { position: pos + 2 });
        }
        Ok(Self { quotients })
    }

    pub fn from_i64s(quotients: &[i64]) -> Result<Self> {
        Self::new(quotients.iter().map(|&q| BigInt::from(q)).collect())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `n` repeated `j` times.
    pub fn repeated(n: impl Into<BigInt>, j: usize) -> Result<Self> {
        Self::new(vec![n.into(); j])
    }

    /// The regular expansion with floor quotients; every quotient after the
    /// first is positive and the value is reproduced exactly.
    pub fn regular(f: &Fraction) -> Self {
        let (mut p, mut q) = (f.num().clone(), f.den().clone());
        let mut quotients = Vec::new();
        while !q.is_zero() {
            let (a, r) = p.div_mod_floor(&q);
            quotients.push(a);
            p = std::mem::replace(&mut q, r);
        }
        Self { quotients }
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// `[-a1, ..., -am]`, whose value is the negation of this one.
    pub fn negated(&self) -> Self {
        Self {
            quotients: self.quotients.iter().map(|q| -q).collect(),
        }
    }

    /// Concatenation `[a1, ..., am, b1, ..., bk]`, which evaluates to
    /// `[a1, ..., am, y]` where `y` is the value of the tail.
    pub fn concat(&self, tail: &ContinuedFraction) -> Result<Self> {
        let mut quotients = self.quotients.clone();
        quotients.extend(tail.quotients.iter().cloned());
        Self::new(quotients)
    }

    /// `C(a1, a2, ...)`.
    pub fn conway_notation(&self) -> String {
        let inner = self.to_string();
        format!("C({})", &inner[1..inner.len() - 1])
    }

    pub fn all_even(&self) -> bool {
        self.quotients.iter().all(Integer::is_even)
    }

    pub fn evaluate(&self) -> Fraction {
        let (mut top, mut bottom) = (BigInt::one(), BigInt::zero());
        for q in self.quotients.iter().rev() {
            let next = q * &top + &bottom;
            bottom = std::mem::replace(&mut top, next);
        }
        Fraction::canonical(top, bottom)
    }

    /// The product of the twist matrices `(ai 1 / 1 0)`.
    pub fn to_mobius(&self) -> Mobius {
        self.quotients.iter().fold(Mobius::identity(), |acc, q| {
            acc.compose(&Mobius::twist(q.clone()))
        })
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, q) in self.quotients.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str("]")
    }
}

/// True when `q` is a nonzero even integer.
pub(crate) fn is_even_nonzero(q: &BigInt) -> bool {
    q.is_even() && !q.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(q: &[i64]) -> ContinuedFraction {
        ContinuedFraction::from_i64s(q).unwrap()
    }

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(cf(&[2, 2]).evaluate(), frac(5, 2));
        assert_eq!(cf(&[]).evaluate(), Fraction::infinity());
        assert_eq!(cf(&[1, 1, 1]).evaluate(), frac(3, 2));
        assert_eq!(cf(&[3, 3]).evaluate(), frac(10, 3));
        assert_eq!(cf(&[0]).evaluate(), frac(0, 1));
        assert_eq!(cf(&[1, -1, 1]).evaluate(), Fraction::infinity());
    }

    #[test]
    fn interior_zero_rejected() {
        assert_eq!(
            ContinuedFraction::from_i64s(&[2, 0, 2]),
            Err(Error::InteriorZero { position: 2 })
        );
        assert!(ContinuedFraction::from_i64s(&[0, 2]).is_ok());
    }

    #[test]
    fn regular_expansion_round_trips() {
        for (n, d) in [(10, 3), (5, -2), (1, 7), (0, 1), (13, 8)] {
            let f = frac(n, d);
            let r = ContinuedFraction::regular(&f);
            assert_eq!(r.evaluate(), f, "{f} -> {r}");
        }
        assert!(ContinuedFraction::regular(&Fraction::infinity()).is_empty());
    }

    #[test]
    fn matrix_first_column_is_value() {
        let c = cf(&[4, -2, 2, -4]);
        let m = c.to_mobius();
        let [a, _, c0, _] = m.entries();
        assert_eq!(Fraction::new(a.clone(), c0.clone()).unwrap(), c.evaluate());
        assert_eq!(c.evaluate(), frac(33, 10));
    }

    #[test]
    fn display() {
        assert_eq!(cf(&[2, -2]).to_string(), "[2, -2]");
        assert_eq!(cf(&[]).to_string(), "[]");
        assert_eq!(cf(&[3, 3]).conway_notation(), "C(3, 3)");
        assert_eq!(cf(&[]).conway_notation(), "C()");
    }
}
