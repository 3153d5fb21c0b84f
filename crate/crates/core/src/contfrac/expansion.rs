use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ContinuedFraction, Fraction};
use crate::error::{Error, Result};

/// Output of [`even_expansion`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenExpansion {
    /// All quotients even; every quotient after the first is nonzero.
    pub quotients: ContinuedFraction,
    /// The fraction the quotients evaluate to: the input, or its
    /// s-transform when `s_applied` is set.
    pub expanded: Fraction,
    /// Set when the input had odd numerator and odd denominator, in which
    /// case `a/b` was replaced by `a/(b - a)` first.
    pub s_applied: bool,
}

/// Expands `f` into a continued fraction with even quotients.
///
/// An odd/odd fraction has no such expansion, so it is first replaced by its
/// s-transform `a/(b - a)`, which names the same link. The quotients are then
/// chosen greedily as the even integer nearest to the current value, which
/// keeps every remainder strictly below one in absolute value. The first
/// quotient is zero only when `|b| > a`, since an expansion with nonzero even
/// quotients always has absolute value above one.
pub fn even_expansion(f: &Fraction) -> Result<EvenExpansion> {
    if !f.num().is_positive() {
        return Err(Error::NonCanonical(format!(
            "{f} (numerator must be positive)"
        )));
    }
    let s_applied = f.num().is_odd() && f.den().is_odd();
    let expanded = if s_applied {
        f.s_transform()
    } else {
        f.clone()
    };

    let (mut num, mut den) = (expanded.num().clone(), expanded.den().clone());
    let mut quotients = Vec::new();
    while !den.is_zero() {
        let q = nearest_even(&num, &den);
        let rem = &num - &q * &den;
        quotients.push(q);
        num = std::mem::replace(&mut den, rem);
    }
    let quotients = ContinuedFraction::new(quotients)?;
    debug_assert_eq!(quotients.evaluate(), expanded);
    Ok(EvenExpansion {
        quotients,
        expanded,
        s_applied,
    })
}

/// The even integer closest to `num/den` (`den != 0`). At an exact tie the
/// candidate of smaller absolute value wins.
fn nearest_even(num: &BigInt, den: &BigInt) -> BigInt {
    let (num, den) = if den.is_negative() {
        (-num, -den)
    } else {
        (num.clone(), den.clone())
    };
    // round(num / 2den) = floor((num + den) / 2den), rounding halves upward
    let (q, r) = (&num + &den).div_mod_floor(&(&den * 2));
    let half = if r.is_zero() {
        let lower: BigInt = &q - 1;
        match lower.abs().cmp(&q.abs()) {
            Ordering::Less => lower,
            _ => q,
        }
    } else {
        q
    };
    half * 2
}
