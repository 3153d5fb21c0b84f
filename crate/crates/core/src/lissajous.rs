//! Obstruction to being a Lissajous knot: a rational Lissajous knot has
//! `Δ(t) ≡ 1 (mod 2)`.
//!
//! The criterion is necessary only, so a verdict is either a proof that the
//! knot is not Lissajous or no information.

use std::fmt;

use crate::error::{Error, Result};
use crate::fiblinks::{classify, fib_link, FibLinkParams};
use crate::links::{Components, RationalLink};
use crate::poly::GF2Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// `∇ mod 2 ≠ 1`: not a Lissajous knot.
    Obstructed,
    /// `∇ mod 2 = 1`: the test says nothing.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Obstructed => "obstructed",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LissajousVerdict {
    pub status: Status,
    /// `∇ mod 2`; for knots this equals `Δ mod 2` after `z^2 -> t + t^-1`.
    pub witness: GF2Poly,
}

/// Runs the mod-2 test on a knot. Two-component links are rejected.
pub fn obstruction(link: &RationalLink) -> Result<LissajousVerdict> {
    if link.components() != Components::Knot {
        return Err(Error::TwoComponentLink("the Lissajous obstruction"));
    }
    Ok(verdict_from_witness(link.conway_polynomial().mod2()))
}

pub fn verdict_from_witness(witness: GF2Poly) -> LissajousVerdict {
    let status = if witness.is_one() {
        Status::Inconclusive
    } else {
        Status::Obstructed
    };
    LissajousVerdict { status, witness }
}

/// Whether `F_j^(n)` is shown not to be Lissajous by the closed form:
/// `n ≢ 0 (mod 4)` and `(n, j) ≠ (3, 3)`, excluding the unknot `C(1)`.
pub fn fibonacci_non_lissajous(params: FibLinkParams) -> Result<bool> {
    if classify(params) != Components::Knot {
        return Err(Error::TwoComponentLink("the Lissajous obstruction"));
    }
    let (n, j) = (params.n(), params.j());
    let unknot = n == 1 && j == 1;
    Ok(n % 4 != 0 && (n, j) != (3, 3) && !unknot)
}

/// [`obstruction`] on `F_j^(n)`.
pub fn fibonacci_obstruction(params: FibLinkParams) -> Result<LissajousVerdict> {
    obstruction(&fib_link(params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{ContinuedFraction, Fraction};
    use crate::poly::IntPoly;

    fn params(n: i64, j: i64) -> FibLinkParams {
        FibLinkParams::new(n, j).unwrap()
    }

    #[test]
    fn trefoil_is_obstructed() {
        let trefoil = RationalLink::from_fraction(Fraction::new(3, 2).unwrap()).unwrap();
        let v = obstruction(&trefoil).unwrap();
        assert_eq!(v.status, Status::Obstructed);
        assert_eq!(v.witness, IntPoly::from_i64s(&[1, 0, 1]).mod2());
    }

    #[test]
    fn unknot_is_inconclusive() {
        let u = RationalLink::from_notation(ContinuedFraction::empty()).unwrap();
        let v = obstruction(&u).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.witness.is_one());
    }

    #[test]
    fn open_cases_are_inconclusive() {
        for (n, j) in [(3, 3), (4, 2)] {
            let v = fibonacci_obstruction(params(n, j)).unwrap();
            assert_eq!(v.status, Status::Inconclusive, "({n}, {j})");
            assert!(v.witness.is_one());
        }
    }

    #[test]
    fn links_are_rejected() {
        let hopf = RationalLink::from_fraction(Fraction::new(2, 1).unwrap()).unwrap();
        assert!(obstruction(&hopf).is_err());
        assert!(fibonacci_non_lissajous(params(1, 2)).is_err());
    }

    #[test]
    fn corollary_examples() {
        assert!(fibonacci_non_lissajous(params(1, 3)).unwrap());
        assert!(!fibonacci_non_lissajous(params(3, 3)).unwrap());
        assert!(!fibonacci_non_lissajous(params(4, 2)).unwrap());
        assert!(!fibonacci_non_lissajous(params(1, 1)).unwrap());
    }
}
