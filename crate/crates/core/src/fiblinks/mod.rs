//! Generalized Fibonacci links `F_j^(n) = C(n, n, ..., n)` (`j` entries).
//!
//! For odd `n = 2k + 1` the even expansions are built recursively from three
//! base cases, stepping `j -> j + 3`:
//!
//! ```text
//! [n]_2     = [n+1, (-2,2)^k]
//! [n]_3     = [n+1, (-2,2)^k, -(n+1)]
//! [n]_{j+3} = [n+1, (-2,2)^k, -(n+1), -[n]_j]            j ≢ 1 (mod 3)
//! s([n]_1)  = [(-2,2)^k]                                   n ≠ 1
//! s([n]_{j+3}) = [(-2,2)^k, -(n+1), -(n+1), -s([n]_j)]
//! ```
//!
//! where `s(a/b) = a/(b - a)`. When `j ≡ 1 (mod 3)` both `alpha` and `beta`
//! are odd, so the expansion is of `s([n]_j)` instead.

mod lemma;

use std::fmt;

use num_bigint::BigInt;

use crate::contfrac::{ContinuedFraction, Fraction};
use crate::error::{Error, Result};
use crate::links::{Components, RationalLink};
use crate::poly::{conway_polynomial, fibonacci_number, fibonacci_poly_mod2, GF2Poly};

pub use lemma::{verify_lemma_identities, IdentityCheck, LemmaReport};

/// Parameters of `F_j^(n)`: twist value `n >= 1` repeated `j >= 1` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FibLinkParams {
    n: u64,
    j: u64,
}

impl FibLinkParams {
    pub fn new(n: i64, j: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams(format!(
                "n must be at least 1, got {n}"
            )));
        }
        if j < 1 {
            return Err(Error::InvalidParams(format!(
                "j must be at least 1, got {j}"
            )));
        }
        Ok(Self {
            n: n as u64,
            j: j as u64,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    /// `k` with `n = 2k + 1`, defined for odd `n`.
    pub fn k(&self) -> Option<u64> {
        (self.n % 2 == 1).then_some(self.n / 2)
    }
}

impl fmt::Display for FibLinkParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^({})", self.j, self.n)
    }
}

/// Residue class of `n` modulo 4, which selects the closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    OneMod4,
    ThreeMod4,
    TwoMod4,
    ZeroMod4,
}

impl Branch {
    pub fn of(n: u64) -> Self {
        match n % 4 {
            0 => Branch::ZeroMod4,
            1 => Branch::OneMod4,
            2 => Branch::TwoMod4,
            _ => Branch::ThreeMod4,
        }
    }
}

/// `∇_j^(n) ≡ f_index (mod 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosedFormN {
    pub index: u64,
    pub branch: Branch,
}

/// How an even expansion of a Fibonacci link was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// `n` even: `C(n, ..., n)` is already even.
    DirectEven,
    /// `n` odd, `j ≢ 1 (mod 3)`: the `[n]_{j+3}` recursion.
    Corollary,
    /// `n >= 3` odd, `j ≡ 1 (mod 3)`: the `s([n]_{j+3})` recursion.
    Proposition,
    /// `n = 1`, `j ≡ 1 (mod 3)`: the negated `F_{3m+2}/F_{3m}` family.
    RemarkFamilyA,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::DirectEven => "direct",
            Route::Corollary => "corollary",
            Route::Proposition => "proposition",
            Route::RemarkFamilyA => "remark-family-a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibExpansion {
    /// All quotients even and nonzero.
    pub quotients: ContinuedFraction,
    /// The expansion evaluates to `s` of the link's fraction rather than
    /// the fraction itself.
    pub s_applied: bool,
    pub route: Route,
}

impl FibExpansion {
    /// The fraction the quotients are meant to evaluate to.
    pub fn target(&self, link: &RationalLink) -> Fraction {
        if self.s_applied {
            link.fraction().s_transform()
        } else {
            link.fraction().clone()
        }
    }
}

/// `C(n, ..., n)` with `j` entries. For `n = 1` the fraction is
/// `F_{j+1}/F_j`.
pub fn fib_link(params: FibLinkParams) -> RationalLink {
    let notation = ContinuedFraction::repeated(params.n, params.j as usize).expect("n is nonzero");
    RationalLink::from_notation(notation).expect("value is at least 1")
}

/// Knot iff `n` and `j` are both even, or `n` is odd and `j ≢ 2 (mod 3)`.
pub fn classify(params: FibLinkParams) -> Components {
    let knot = if params.n.is_multiple_of(2) {
        params.j.is_multiple_of(2)
    } else {
        params.j % 3 != 2
    };
    if knot {
        Components::Knot
    } else {
        Components::TwoComponent
    }
}

fn even(q: i64) -> BigInt {
    BigInt::from(q)
}

/// `(-2, 2)` repeated `k` times.
fn twist_block(k: u64) -> Vec<BigInt> {
    (0..k).flat_map(|_| [even(-2), even(2)]).collect()
}

/// The recursive even expansion for odd `n`. See the module docs.
pub fn constructive_expansion(params: FibLinkParams) -> Result<FibExpansion> {
    let Some(k) = params.k() else {
        return Err(Error::InvalidParams(format!(
            "{params}: the recursive expansion needs odd n; C(n, ..., n) is already even"
        )));
    };
    let n = params.n as i64;
    let j = params.j;
    let block = twist_block(k);
    let up = even(n + 1);
    let down = even(-(n + 1));

    let (mut quotients, mut reached, route) = match j % 3 {
        1 if n == 1 => {
            let a = remark_quotients((j - 1) / 3, Family::A);
            let e = ContinuedFraction::new(a).expect("nonzero").negated();
            return Ok(FibExpansion {
                quotients: e,
                s_applied: true,
                route: Route::RemarkFamilyA,
            });
        }
        1 => (block.clone(), 1, Route::Proposition),
        2 => {
            let mut q = vec![up.clone()];
            q.extend(block.iter().cloned());
            (q, 2, Route::Corollary)
        }
        _ => {
            let mut q = vec![up.clone()];
            q.extend(block.iter().cloned());
            q.push(down.clone());
            (q, 3, Route::Corollary)
        }
    };

    while reached < j {
        let mut prefix = match route {
            Route::Proposition => {
                let mut p = block.clone();
                p.extend([down.clone(), down.clone()]);
                p
            }
            _ => {
                let mut p = vec![up.clone()];
                p.extend(block.iter().cloned());
                p.push(down.clone());
                p
            }
        };
        prefix.extend(quotients.iter().map(|q| -q));
        quotients = prefix;
        reached += 3;
    }

    let quotients = ContinuedFraction::new(quotients).expect("all quotients are nonzero");
    Ok(FibExpansion {
        quotients,
        s_applied: route == Route::Proposition,
        route,
    })
}

/// An even expansion of `F_j^(n)` for any `n`: the direct notation when `n`
/// is even, [`constructive_expansion`] otherwise.
pub fn fib_expansion(params: FibLinkParams) -> FibExpansion {
    if params.n.is_multiple_of(2) {
        FibExpansion {
            quotients: fib_link(params).notation().clone(),
            s_applied: false,
            route: Route::DirectEven,
        }
    } else {
        constructive_expansion(params).expect("n is odd")
    }
}

/// `∇ mod 2` from the matrix product on [`fib_expansion`].
pub fn conway_mod2_by_construction(params: FibLinkParams) -> GF2Poly {
    conway_polynomial(&fib_expansion(params).quotients)
        .expect("expansion is even")
        .mod2()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `F_{3m+2}/F_{3m} = [2, 2, -2, -2, ...]`, length `2m`.
    A,
    /// `F_{3m+1}/F_{3m} = [2, -2, -2, 2, 2, ..., (-1)^m 2]`, length `2m`.
    B,
    /// `F_{3m+3}/F_{3m+2} = [2, -A]`, length `2m + 1`.
    C,
}

fn remark_quotients(m: u64, family: Family) -> Vec<BigInt> {
    let sign = |i: u64| {
        if i.is_multiple_of(2) {
            even(2)
        } else {
            even(-2)
        }
    };
    match family {
        Family::A => (0..m).flat_map(|i| [sign(i), sign(i)]).collect(),
        Family::B => {
            let mut q = vec![even(2)];
            q.extend((1..m).flat_map(|i| [sign(i), sign(i)]));
            q.push(sign(m));
            q
        }
        Family::C => {
            let mut q = vec![even(2)];
            q.extend(remark_quotients(m, Family::A).into_iter().map(|x| -x));
            q
        }
    }
}

/// The three Fibonacci-ratio families of even continued fractions.
pub fn remark_family(m: u64, family: Family) -> Result<(Fraction, ContinuedFraction)> {
    if m == 0 {
        return Err(Error::InvalidParams("m must be at least 1".into()));
    }
    let fib = |i: u64| fibonacci_number(i as usize);
    let fraction = match family {
        Family::A => Fraction::new(fib(3 * m + 2), fib(3 * m)),
        Family::B => Fraction::new(fib(3 * m + 1), fib(3 * m)),
        Family::C => Fraction::new(fib(3 * m + 3), fib(3 * m + 2)),
    }?;
    let cf = ContinuedFraction::new(remark_quotients(m, family)).expect("nonzero");
    Ok((fraction, cf))
}

/// The index `N` with `∇_j^(n) ≡ f_N (mod 2)`:
///
/// * `n ≡ 1 (mod 4)`: `N = ⌊(j+2)/3⌋ (n-2) + j + 1`
/// * `n ≡ 3 (mod 4)`: `N = ⌊(j+2)/3⌋ (n+2) - (j+1)`
/// * `n ≡ 2 (mod 4)`: `N = j + 1`
/// * `n ≡ 0 (mod 4)`: `N = 0` for odd `j`, `1` for even `j`
pub fn closed_form_index(params: FibLinkParams) -> ClosedFormN {
    let (n, j) = (params.n as i128, params.j as i128);
    let blocks = (j + 2) / 3;
    let branch = Branch::of(params.n);
    let index = match branch {
        Branch::OneMod4 => blocks * (n - 2) + j + 1,
        Branch::ThreeMod4 => blocks * (n + 2) - (j + 1),
        Branch::TwoMod4 => j + 1,
        Branch::ZeroMod4 => i128::from(j % 2 == 0),
    };
    let index = u64::try_from(index).expect("closed-form index is nonnegative");
    ClosedFormN { index, branch }
}

/// `f_N mod 2` for the `N` of [`closed_form_index`].
pub fn mod2_closed_form(params: FibLinkParams) -> GF2Poly {
    fibonacci_poly_mod2(closed_form_index(params).index as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::fibonacci_poly;

    fn params(n: i64, j: i64) -> FibLinkParams {
        FibLinkParams::new(n, j).unwrap()
    }

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    fn cf(q: &[i64]) -> ContinuedFraction {
        ContinuedFraction::from_i64s(q).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(FibLinkParams::new(0, 1).is_err());
        assert!(FibLinkParams::new(-3, 1).is_err());
        assert!(FibLinkParams::new(3, 0).is_err());
        assert_eq!(params(7, 1).k(), Some(3));
        assert_eq!(params(6, 1).k(), None);
    }

    #[test]
    fn fib_link_examples() {
        assert_eq!(fib_link(params(1, 4)).fraction(), &frac(5, 3));
        assert_eq!(fib_link(params(3, 1)).fraction(), &frac(3, 1));
        assert_eq!(fib_link(params(3, 2)).fraction(), &frac(10, 3));
        for j in 1..25 {
            let f = fib_link(params(1, j));
            let expected = Fraction::new(
                fibonacci_number(j as usize + 1),
                fibonacci_number(j as usize),
            );
            assert_eq!(f.fraction(), &expected.unwrap());
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(params(2, 2)), Components::Knot);
        assert_eq!(classify(params(1, 2)), Components::TwoComponent);
        assert_eq!(classify(params(3, 3)), Components::Knot);
        assert_eq!(classify(params(2, 3)), Components::TwoComponent);
    }

    #[test]
    fn constructive_expansion_examples() {
        let e = constructive_expansion(params(3, 2)).unwrap();
        assert_eq!((e.quotients.clone(), e.s_applied), (cf(&[4, -2, 2]), false));
        assert_eq!(e.quotients.evaluate(), frac(10, 3));

        let e = constructive_expansion(params(3, 3)).unwrap();
        assert_eq!(
            (e.quotients.clone(), e.s_applied),
            (cf(&[4, -2, 2, -4]), false)
        );
        assert_eq!(e.quotients.evaluate(), frac(33, 10));

        let e = constructive_expansion(params(5, 1)).unwrap();
        assert_eq!(
            (e.quotients.clone(), e.s_applied),
            (cf(&[-2, 2, -2, 2]), true)
        );
        assert_eq!(e.quotients.evaluate(), frac(5, -4));
        assert_eq!(e.route, Route::Proposition);
    }

    #[test]
    fn constructive_expansion_n1_uses_remark_family() {
        let e = constructive_expansion(params(1, 1)).unwrap();
        assert!(e.quotients.is_empty() && e.s_applied);
        let e = constructive_expansion(params(1, 4)).unwrap();
        assert_eq!(e.route, Route::RemarkFamilyA);
        assert_eq!(e.quotients, cf(&[-2, -2]));
        assert_eq!(e.quotients.evaluate(), frac(5, 3).s_transform());
        let e = constructive_expansion(params(1, 3)).unwrap();
        assert_eq!(e.quotients, cf(&[2, -2]));
    }

    #[test]
    fn constructive_expansion_rejects_even_n() {
        assert!(matches!(
            constructive_expansion(params(4, 2)),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn constructive_expansion_round_trips() {
        for n in (1..=13).step_by(2) {
            for j in 1..=15 {
                let p = params(n, j);
                let e = constructive_expansion(p).unwrap();
                let link = fib_link(p);
                assert!(e
                    .quotients
                    .quotients()
                    .iter()
                    .all(crate::contfrac::is_even_nonzero));
                assert_eq!(e.quotients.evaluate(), e.target(&link), "{p}");
                assert_eq!(e.s_applied, j % 3 == 1, "{p}");
            }
        }
    }

    #[test]
    fn remark_family_examples() {
        assert_eq!(
            remark_family(1, Family::A).unwrap(),
            (frac(5, 2), cf(&[2, 2]))
        );
        assert_eq!(
            remark_family(1, Family::B).unwrap(),
            (frac(3, 2), cf(&[2, -2]))
        );
        assert_eq!(
            remark_family(1, Family::C).unwrap(),
            (frac(8, 5), cf(&[2, -2, -2]))
        );
        assert_eq!(
            remark_family(2, Family::A).unwrap(),
            (frac(21, 8), cf(&[2, 2, -2, -2]))
        );
        assert_eq!(
            remark_family(2, Family::B).unwrap(),
            (frac(13, 8), cf(&[2, -2, -2, 2]))
        );
        assert!(remark_family(0, Family::A).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_index(params(1, 3)).index, 3);
        assert_eq!(closed_form_index(params(1, 4)).index, 3);
        assert_eq!(closed_form_index(params(3, 3)).index, 1);
        assert_eq!(closed_form_index(params(2, 1)).index, 2);
        assert_eq!(mod2_closed_form(params(1, 3)), fibonacci_poly(3).mod2());
        assert!(mod2_closed_form(params(3, 3)).is_one());
        assert_eq!(mod2_closed_form(params(2, 1)), GF2Poly::z());
        assert!(mod2_closed_form(params(4, 2)).is_one());
        assert!(mod2_closed_form(params(4, 1)).is_zero());
    }

    #[test]
    fn floor_reading_matches_brute_force() {
        // trefoil and figure-eight pin the bracket to the floor
        for (j, nabla) in [(3, &[2, -2][..]), (4, &[2, 2][..])] {
            let brute = conway_polynomial(&cf(nabla)).unwrap().mod2();
            assert_eq!(brute, mod2_closed_form(params(1, j)));
        }
    }

    #[test]
    fn construction_matches_closed_form_small() {
        for n in 1..=6 {
            for j in 1..=9 {
                let p = params(n, j);
                assert_eq!(conway_mod2_by_construction(p), mod2_closed_form(p), "{p}");
            }
        }
    }
}
