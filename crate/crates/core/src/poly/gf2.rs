use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;

use super::write_terms;

const WORD: usize = 64;

/// Polynomial in `z` over GF(2), packed 64 coefficients per word, lowest
/// degree in the low bit of the first word. The last word is nonzero unless
/// the polynomial is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GF2Poly {
    words: Vec<u64>,
}

impl GF2Poly {
    fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        for (i, bit) in bits.into_iter().enumerate() {
            if i % WORD == 0 {
                words.push(0);
            }
            if bit {
                words[i / WORD] |= 1 << (i % WORD);
            }
        }
        Self::from_words(words)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    pub fn z() -> Self {
        Self { words: vec![2] }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - top.leading_zeros() as usize))
    }

    pub fn coeff(&self, degree: usize) -> bool {
        self.words
            .get(degree / WORD)
            .is_some_and(|w| (w >> (degree % WORD)) & 1 == 1)
    }

    /// Coefficients `0`/`1`, lowest degree first; empty for zero.
    pub fn bits(&self) -> Vec<u8> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| u8::from(self.coeff(i))).collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (whole, part) = (k / WORD, k % WORD);
        let mut words = vec![0u64; whole];
        let mut carry = 0u64;
        for &w in &self.words {
            words.push((w << part) | carry);
            carry = if part == 0 { 0 } else { w >> (WORD - part) };
        }
        words.push(carry);
        Self::from_words(words)
    }
}

impl Add for &GF2Poly {
    type Output = GF2Poly;

    fn add(self, rhs: &GF2Poly) -> GF2Poly {
        let n = self.words.len().max(rhs.words.len());
        let word = |p: &GF2Poly, i: usize| p.words.get(i).copied().unwrap_or(0);
        GF2Poly::from_words((0..n).map(|i| word(self, i) ^ word(rhs, i)).collect())
    }
}

impl Mul for &GF2Poly {
    type Output = GF2Poly;

    // Carry-less multiply: addition in GF(2) is xor.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &GF2Poly) -> GF2Poly {
        let Some(d) = self.degree() else {
            return GF2Poly::zero();
        };
        let mut acc = GF2Poly::zero();
        for i in (0..=d).filter(|&i| self.coeff(i)) {
            acc = &acc + &rhs.shift(i);
        }
        acc
    }
}

impl Add for GF2Poly {
    type Output = GF2Poly;

    fn add(self, rhs: GF2Poly) -> GF2Poly {
        &self + &rhs
    }
}

impl Mul for GF2Poly {
    type Output = GF2Poly;

    fn mul(self, rhs: GF2Poly) -> GF2Poly {
        &self * &rhs
    }
}

impl fmt::Display for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = self.bits();
        let terms = bits
            .iter()
            .enumerate()
            .rev()
            .map(|(d, &b)| (BigInt::from(b), d as i64));
        write_terms(f, terms, "z")
    }
}
