use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{GF2Poly, IntPoly, LaurentPoly};
use crate::contfrac::{is_even_nonzero, ContinuedFraction};
use crate::error::{Error, Result};

/// `f_0 = 0`, `f_1 = 1`, `f_{m+1} = z f_m + f_{m-1}`.
pub fn fibonacci_poly(m: usize) -> IntPoly {
    let (mut prev, mut cur) = (IntPoly::zero(), IntPoly::one());
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = &cur.shift(1) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `f_m` reduced mod 2, computed directly over GF(2).
pub fn fibonacci_poly_mod2(m: usize) -> GF2Poly {
    let (mut prev, mut cur) = (GF2Poly::zero(), GF2Poly::one());
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = &cur.shift(1) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci_number(j: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..j {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Conway polynomial of the rational link `C(2b_1, ..., 2b_m)`:
///
/// ```text
/// (1 0) · Π_i ((-1)^i b_i z   1) · (1)
///             (1              0)   (0)
/// ```
///
/// Every quotient must be a nonzero even integer.
pub fn conway_polynomial(cf: &ContinuedFraction) -> Result<IntPoly> {
    if let Some((i, q)) = cf
        .quotients()
        .iter()
        .enumerate()
        .find(|(_, q)| !is_even_nonzero(q))
    {
        return Err(Error::NotEven {
            position: i + 1,
            value: q.clone(),
        });
    }
    // multiply the column vector from the right
    let (mut top, mut bottom) = (IntPoly::one(), IntPoly::zero());
    for (i, q) in cf.quotients().iter().enumerate().rev() {
        let half: BigInt = q / 2;
        let entry = if i % 2 == 0 { -half } else { half };
        let next = &top.shift(1).scale(&entry) + &bottom;
        bottom = std::mem::replace(&mut top, next);
    }
    Ok(top)
}

/// `Δ(t) = ∇(t^{1/2} - t^{-1/2})`, i.e. `z^2 -> t - 2 + t^{-1}`.
///
/// Only defined when `∇` has no odd powers of `z`, which is the knot case.
pub fn alexander_polynomial(nabla: &IntPoly) -> Result<LaurentPoly> {
    if !nabla.is_even_function() {
        return Err(Error::TwoComponentLink("the Alexander polynomial"));
    }
    let mut acc = LaurentPoly::zero();
    for (deg, c) in nabla.coeffs().iter().enumerate().step_by(2) {
        if c.is_zero() {
            continue;
        }
        // z^{2d} = Σ_i C(2d, i) (-1)^i t^{d-i}; the row is built incrementally
        let mut coeffs = Vec::with_capacity(deg + 1);
        let mut binom = c.clone();
        for i in 0..=deg {
            coeffs.push(if i.is_odd() { -&binom } else { binom.clone() });
            binom = binom * (deg - i) / (i + 1);
        }
        coeffs.reverse();
        acc = &acc + &LaurentPoly::new(-((deg / 2) as i64), coeffs);
    }
    Ok(acc)
}

/// `[-2, 2, ..., (-1)^{m-1} 2]` of length `m - 1`, an even expansion of
/// `m/(1 - m)` and hence of the torus link `T(2, m)`.
pub fn torus_expansion(m: usize) -> ContinuedFraction {
    let quotients = (1..m)
        .map(|i| BigInt::from(if i % 2 == 0 { 2 } else { -2 }))
        .collect();
    ContinuedFraction::new(quotients).expect("quotients are nonzero")
}

/// Conway polynomial of `T(2, m)` through [`torus_expansion`].
pub fn torus_conway(m: usize) -> IntPoly {
    conway_polynomial(&torus_expansion(m)).expect("torus expansion is even")
}

/// A 2x2 matrix of integer polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix(pub [[IntPoly; 2]; 2]);

impl PolyMatrix {
    pub fn identity() -> Self {
        Self([
            [IntPoly::one(), IntPoly::zero()],
            [IntPoly::zero(), IntPoly::one()],
        ])
    }

    /// `(z 1 / 1 0)`, whose powers carry the Fibonacci polynomials.
    pub fn fibonacci() -> Self {
        Self([
            [IntPoly::z(), IntPoly::one()],
            [IntPoly::one(), IntPoly::zero()],
        ])
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        let (a, b) = (&self.0, &rhs.0);
        let entry = |r: usize, c: usize| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c]);
        PolyMatrix([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn pow(&self, exp: usize) -> PolyMatrix {
        (0..exp).fold(PolyMatrix::identity(), |acc, _| acc.mul(self))
    }
}
