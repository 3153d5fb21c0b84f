//! Polynomials over the integers and GF(2), Laurent polynomials, and the
//! Conway and Alexander polynomials of rational links.

mod conway;
mod gf2;
mod int;
mod laurent;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use conway::{
    alexander_polynomial, conway_polynomial, fibonacci_number, fibonacci_poly, fibonacci_poly_mod2,
    torus_conway, torus_expansion, PolyMatrix,
};
pub use gf2::GF2Poly;
pub use int::IntPoly;
pub use laurent::LaurentPoly;

/// Writes `(coefficient, exponent)` pairs in the given order as
/// `3z^2 - z + 1`, skipping zero coefficients.
fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (BigInt, i64)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (c, e) in terms.filter(|(c, _)| !c.is_zero()) {
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let mag = c.abs();
        if e == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        match e {
            1 => f.write_str(var)?,
            _ => write!(f, "{var}^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
