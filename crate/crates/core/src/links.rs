//! Rational links and their classification by Schubert fraction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::contfrac::{even_expansion, ContinuedFraction, Fraction};
use crate::error::{Error, Result};
use crate::poly::{conway_polynomial, IntPoly};

/// Number of components of a rational link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Components {
    Knot,
    TwoComponent,
}

impl Components {
    pub fn count(self) -> u8 {
        match self {
            Components::Knot => 1,
            Components::TwoComponent => 2,
        }
    }
}

impl fmt::Display for Components {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Components::Knot => "knot",
            Components::TwoComponent => "two-component link",
        })
    }
}

/// A rational link given by a Conway notation, together with its Schubert
/// fraction `alpha/beta` (`alpha >= 1`).
///
/// `beta` is kept as evaluated and is not reduced modulo `alpha`; negative
/// values such as `5/-2` are common.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLink {
    fraction: Fraction,
    notation: ContinuedFraction,
}

impl RationalLink {
    /// Fails when the notation evaluates to `0`. A value of infinity is the
    /// unknot.
    pub fn from_notation(notation: ContinuedFraction) -> Result<Self> {
        let fraction = notation.evaluate();
        if fraction.num().is_zero() {
            return Err(Error::ZeroLink);
        }
        Ok(Self { fraction, notation })
    }

    /// Uses the regular continued fraction of `fraction` as the notation.
    pub fn from_fraction(fraction: Fraction) -> Result<Self> {
        Self::from_notation(ContinuedFraction::regular(&fraction))
    }

    pub fn fraction(&self) -> &Fraction {
        &self.fraction
    }

    pub fn notation(&self) -> &ContinuedFraction {
        &self.notation
    }

    pub fn determinant(&self) -> &BigInt {
        self.fraction.num()
    }

    pub fn components(&self) -> Components {
        component_count(&self.fraction)
    }

    pub fn is_knot(&self) -> bool {
        self.components() == Components::Knot
    }

    pub fn is_unknot(&self) -> bool {
        self.determinant().is_one()
    }

    /// An all-even Conway notation of this link with every quotient nonzero.
    ///
    /// `beta` is first moved to the residue mod `alpha` with `|beta| < alpha`
    /// and the parity that admits an even expansion (even when `alpha` is
    /// odd), so neither the s-transform nor a leading zero is needed.
    pub fn even_normal_form(&self) -> ContinuedFraction {
        let alpha = self.fraction.num();
        let mut beta = self.fraction.den().mod_floor(alpha);
        if alpha.is_odd() && beta.is_odd() {
            beta -= alpha;
        }
        let f = Fraction::canonical(alpha.clone(), beta);
        let e = even_expansion(&f).expect("alpha is positive");
        debug_assert!(!e.s_applied);
        e.quotients
    }

    /// `∇` computed from [`RationalLink::even_normal_form`].
    ///
    /// For knots this is the Conway polynomial. For two-component links the
    /// integer polynomial depends on the even notation chosen (orientation),
    /// so this value is one representative.
    pub fn conway_polynomial(&self) -> IntPoly {
        conway_polynomial(&self.even_normal_form()).expect("normal form is even")
    }
}

/// Unoriented equivalence of rational links: `alpha1 = alpha2` and
/// `beta2 ≡ beta1^{±1} (mod alpha)`.
pub fn equivalent(f1: &Fraction, f2: &Fraction) -> bool {
    let alpha = f1.num();
    if alpha != f2.num() {
        return false;
    }
    if alpha.is_zero() {
        return f1 == f2;
    }
    if alpha.is_one() {
        return true;
    }
    let (b1, b2) = (f1.den(), f2.den());
    (b1 - b2).mod_floor(alpha).is_zero() || (b1 * b2 - BigInt::one()).mod_floor(alpha).is_zero()
}

/// One component when the determinant is odd, two when it is even.
pub fn component_count(f: &Fraction) -> Components {
    if f.num().is_odd() {
        Components::Knot
    } else {
        Components::TwoComponent
    }
}

impl fmt::Display for RationalLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.notation.conway_notation(), self.fraction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    fn link(q: &[i64]) -> RationalLink {
        RationalLink::from_notation(ContinuedFraction::from_i64s(q).unwrap()).unwrap()
    }

    #[test]
    fn from_notation_examples() {
        assert_eq!(link(&[1, 1, 1]).fraction(), &frac(3, 2));
        assert_eq!(link(&[7]).fraction(), &frac(7, 1));
        assert_eq!(link(&[3, 3]).fraction(), &frac(10, 3));
    }

    #[test]
    fn zero_value_is_not_a_link() {
        let r = RationalLink::from_notation(ContinuedFraction::from_i64s(&[1, -1]).unwrap());
        assert_eq!(r, Err(Error::ZeroLink));
    }

    #[test]
    fn infinity_is_the_unknot() {
        let u = link(&[]);
        assert!(u.is_unknot());
        assert_eq!(u.determinant(), &BigInt::one());
        assert_eq!(u.components(), Components::Knot);
        assert!(link(&[1]).is_unknot());
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&frac(5, 2), &frac(5, 3)));
        assert!(equivalent(&frac(5, 2), &frac(5, 2)));
        assert!(!equivalent(&frac(3, 1), &frac(5, 1)));
        assert!(equivalent(&frac(5, -2), &frac(5, 3)));
        assert!(!equivalent(&frac(7, 2), &frac(7, 3)));
        assert!(equivalent(&frac(1, 0), &frac(1, 1)));
    }

    #[test]
    fn component_examples() {
        assert_eq!(component_count(&frac(3, 2)).count(), 1);
        assert_eq!(component_count(&frac(2, 1)).count(), 2);
        assert_eq!(component_count(&Fraction::infinity()).count(), 1);
    }

    #[test]
    fn determinant_of_fibonacci_knot() {
        assert_eq!(link(&[1, 1, 1, 1]).determinant(), &BigInt::from(5));
        assert_eq!(link(&[9]).determinant(), &BigInt::from(9));
    }

    #[test]
    fn even_normal_form_is_equivalent_and_nonzero() {
        for q in [
            &[3, 3, 3][..],
            &[1, 1, 1],
            &[4, 4],
            &[2, 3, -2],
            &[5],
            &[1],
            &[2],
        ] {
            let l = link(q);
            let e = l.even_normal_form();
            assert!(e.all_even());
            assert!(e.quotients().iter().all(|q| !q.is_zero()));
            assert!(equivalent(&e.evaluate(), l.fraction()), "{l}: {e}");
        }
    }
}
