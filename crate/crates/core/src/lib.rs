//! Exact invariants of rational (two-bridge) knots and links, with a focus on
//! the generalized Fibonacci links `C(n, n, ..., n)`.
//!
//! * [`contfrac`]: fractions, continued fractions, Möbius matrices and even
//!   expansions.
//! * [`links`]: rational links, equivalence, determinant and components.
//! * [`poly`]: integer, GF(2) and Laurent polynomials; Conway and Alexander
//!   polynomials.
//! * [`fiblinks`]: the Fibonacci family, its even expansions and the closed
//!   form of `∇ mod 2`.
//! * [`lissajous`]: the mod-2 Alexander obstruction for Lissajous knots.
//! * [`cli`]: notation parsing, rendering, tables and the verification sweep.

pub mod cli;
pub mod contfrac;
pub mod error;
pub mod fiblinks;
pub mod links;
pub mod lissajous;
pub mod poly;
pub mod verify;

pub use contfrac::{even_expansion, ContinuedFraction, EvenExpansion, Fraction, Mobius};
pub use error::{Error, Result};
pub use links::{component_count, equivalent, Components, RationalLink};
pub use poly::{GF2Poly, IntPoly, LaurentPoly};
