use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Fraction;
use crate::error::{Error, Result};

/// An integer 2x2 matrix `(a b / c d)` with determinant `+1` or `-1`, acting
/// on the projective line by `x -> (a x + b) / (c x + d)`.
///
/// Structural equality (`==`) compares entries; use
/// [`Mobius::projectively_eq`] to compare the transformations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mobius {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mobius {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.determinant_big();
        if det.abs().is_one() {
            Ok(m)
        } else {
            Err(Error::NotUnimodular(det))
        }
    }

    pub fn identity() -> Self {
        Self {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// The matrix `(q 1 / 1 0)` of `x -> q + 1/x`.
    pub fn twist(q: impl Into<BigInt>) -> Self {
        Self {
            a: q.into(),
            b: BigInt::one(),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    fn determinant_big(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Either `1` or `-1`.
    pub fn determinant(&self) -> i32 {
        if self.determinant_big().is_positive() {
            1
        } else {
            -1
        }
    }

    /// Matrix product `self * other`, i.e. the map `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn pow(&self, mut exp: u32) -> Mobius {
        let mut base = self.clone();
        let mut acc = Mobius::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        acc
    }

    /// Exact integer inverse; the determinant is a unit so no scaling occurs.
    pub fn inverse(&self) -> Mobius {
        let det = self.determinant_big();
        Mobius {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        }
    }

    pub fn negated(&self) -> Mobius {
        Mobius {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// True when both matrices define the same transformation, i.e. they are
    /// equal or one is the negation of the other.
    pub fn projectively_eq(&self, other: &Mobius) -> bool {
        self == other || *self == other.negated()
    }

    pub fn apply(&self, x: &Fraction) -> Fraction {
        let (p, q) = (x.num(), x.den());
        Fraction::canonical(&self.a * p + &self.b * q, &self.c * p + &self.d * q)
    }

    /// Entries reduced into `{0, 1}`.
    pub fn mod2(&self) -> [[u8; 2]; 2] {
        let bit = |v: &BigInt| u8::from(v.is_odd());
        [[bit(&self.a), bit(&self.b)], [bit(&self.c), bit(&self.d)]]
    }
}

impl Mul for &Mobius {
    type Output = Mobius;

    fn mul(self, rhs: &Mobius) -> Mobius {
        self.compose(rhs)
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} / {} {})", self.a, self.b, self.c, self.d)
    }
}
