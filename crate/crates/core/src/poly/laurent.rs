use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::write_terms;

/// Laurent polynomial in `t` with integer coefficients: `coeffs[i]` is the
/// coefficient of `t^(min_degree + i)`. Both end coefficients are nonzero;
/// zero is stored as `min_degree = 0` with no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(min_degree: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::default();
        }
        coeffs.drain(..lead);
        Self {
            min_degree: min_degree + lead as i64,
            coeffs,
        }
    }

    pub fn from_i64s(min_degree: i64, coeffs: &[i64]) -> Self {
        Self::new(
            min_degree,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, degree: i64) -> Self {
        Self::new(degree, vec![c])
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_degree + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: i64) -> BigInt {
        usize::try_from(degree - self.min_degree)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_degree == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The substitution `t -> 1/t`.
    pub fn reflect(&self) -> Self {
        match self.max_degree() {
            None => Self::zero(),
            Some(max) => Self {
                min_degree: -max,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficients reduced into `{0, 1}`.
    pub fn mod2(&self) -> Self {
        Self::new(
            self.min_degree,
            self.coeffs
                .iter()
                .map(|c| BigInt::from(u8::from(c.is_odd())))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_degree, self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(rhs.min_degree);
        let hi = self.max_degree().max(rhs.max_degree()).unwrap_or(lo);
        let coeffs = (lo..=hi).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_degree + rhs.min_degree, coeffs)
    }
}

/// Highest degree first, e.g. `t^2 - t + 1 - t^-1 + t^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (c.clone(), self.min_degree + i as i64));
        write_terms(f, terms, "t")
    }
}
