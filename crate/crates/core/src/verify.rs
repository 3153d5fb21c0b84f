//! The full identity sweep behind `fibknot verify`.
//!
//! Every check is exact. Random samples come from a fixed-seed generator so
//! reports are reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::contfrac::{even_expansion, ContinuedFraction, Fraction};
use crate::fiblinks::{
    classify, constructive_expansion, conway_mod2_by_construction, fib_link, remark_family,
    verify_lemma_identities, Family, FibLinkParams,
};
use crate::links::{component_count, RationalLink};
use crate::lissajous::{fibonacci_non_lissajous, fibonacci_obstruction, obstruction, Status};
use crate::poly::{
    alexander_polynomial, conway_polynomial, fibonacci_poly, fibonacci_poly_mod2, torus_conway,
    GF2Poly, LaurentPoly, PolyMatrix,
};

const SEED: u64 = 0x5eed_f1b0;
const MAX_FAILURES_KEPT: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// A few failing cases, for diagnostics.
    pub failures: Vec<String>,
}

impl CheckResult {
    fn from_cells(name: &'static str, cells: Vec<(bool, String)>) -> Self {
        let passed = cells.iter().filter(|(ok, _)| *ok).count();
        let failures: Vec<String> = cells
            .into_iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, what)| what)
            .collect();
        Self {
            name,
            passed,
            failed: failures.len(),
            failures: failures.into_iter().take(MAX_FAILURES_KEPT).collect(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_n: u64,
    pub max_j: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.ok() { "pass" } else { "FAIL" };
            writeln!(
                f,
                "[{mark}] {}: {}/{}",
                c.name,
                c.passed,
                c.passed + c.failed
            )?;
            for what in &c.failures {
                writeln!(f, "       {what}")?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.ok()).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn params(n: u64, j: u64) -> FibLinkParams {
    FibLinkParams::new(n as i64, j as i64).expect("positive parameters")
}

fn cells(ns: impl Iterator<Item = u64>, max_j: u64) -> Vec<FibLinkParams> {
    ns.flat_map(|n| (1..=max_j).map(move |j| params(n, j)))
        .collect()
}

/// Runs every check with Fibonacci sweeps bounded by `max_n`, `max_j`.
pub fn run(max_n: u64, max_j: u64) -> VerifyReport {
    let checks = vec![
        theorem_sweep(max_n, max_j),
        even_corollaries(max_n, max_j),
        torus_identity(40),
        alexander_form(8, 200),
        lemma_identities(max_n.max(19)),
        remark_families(10),
        round_trip(1000),
        classification(max_n.max(10), max_j.max(20)),
        open_cases(),
        corollary_soundness(max_n, max_j),
    ];
    VerifyReport {
        max_n,
        max_j,
        checks,
    }
}

/// Matrix-product `∇ mod 2` on the recursive expansion equals the closed
/// form, for odd `n`.
pub fn theorem_sweep(max_n: u64, max_j: u64) -> CheckResult {
    let grid = cells((1..=max_n).filter(|n| n % 2 == 1), max_j);
    let results = grid
        .par_iter()
        .map(|&p| {
            let e = constructive_expansion(p).expect("odd n");
            let got = conway_polynomial(&e.quotients).expect("even").mod2();
            let want = crate::fiblinks::mod2_closed_form(p);
            (got == want, format!("{p}: got {got}, closed form {want}"))
        })
        .collect();
    CheckResult::from_cells("theorem sweep (odd n)", results)
}

/// `C(n, ..., n)` for even `n`: `f_{j+1}` when `n ≡ 2 (mod 4)`, `0`/`1` by
/// parity of `j` when `n ≡ 0 (mod 4)`.
pub fn even_corollaries(max_n: u64, max_j: u64) -> CheckResult {
    let grid = cells((2..=max_n).filter(|n| n % 2 == 0), max_j);
    let results = grid
        .par_iter()
        .map(|&p| {
            let got = conway_polynomial(fib_link(p).notation())
                .expect("even")
                .mod2();
            let want = if p.n() % 4 == 2 {
                fibonacci_poly_mod2(p.j() as usize + 1)
            } else if p.j() % 2 == 1 {
                GF2Poly::zero()
            } else {
                GF2Poly::one()
            };
            (got == want, format!("{p}: got {got}, expected {want}"))
        })
        .collect();
    CheckResult::from_cells("even-n corollaries", results)
}

/// `∇(T(2, m)) = f_m` and `(z 1 / 1 0)^m = (f_{m+1} f_m / f_m f_{m-1})`.
pub fn torus_identity(max_m: usize) -> CheckResult {
    let results = (1..=max_m)
        .into_par_iter()
        .flat_map_iter(|m| {
            let torus = torus_conway(m) == fibonacci_poly(m);
            let pm = PolyMatrix::fibonacci().pow(m);
            let want = PolyMatrix([
                [fibonacci_poly(m + 1), fibonacci_poly(m)],
                [fibonacci_poly(m), fibonacci_poly(m - 1)],
            ]);
            [
                (torus, format!("T(2,{m}) conway")),
                (pm == want, format!("(z 1 / 1 0)^{m}")),
            ]
        })
        .collect();
    CheckResult::from_cells("torus identity", results)
}

/// `Σ_{i=0}^k (-1)^{k-i} (t^i + t^-i)` with the `i = 0` term once.
pub fn alternating_alexander(k: usize) -> LaurentPoly {
    let k = k as i64;
    let coeffs = (-k..=k)
        .map(|d| BigInt::from(if (k - d.abs()) % 2 == 0 { 1 } else { -1 }))
        .collect();
    LaurentPoly::new(-k, coeffs)
}

/// Random rational knot fractions `alpha/beta` with odd `alpha <= max_alpha`.
pub fn random_knot_fractions(count: usize, max_alpha: u64, seed: u64) -> Vec<Fraction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let alpha = rng.gen_range(0..max_alpha.div_ceil(2)) * 2 + 1;
        let beta = rng.gen_range(-(alpha as i64)..=alpha as i64);
        if BigInt::from(alpha).gcd(&BigInt::from(beta)).is_one() {
            out.push(Fraction::new(alpha, beta).expect("alpha > 0"));
        }
    }
    out
}

/// Random coprime fractions with `1 <= alpha <= max_alpha`, `|beta| <= alpha`.
pub fn random_fractions(count: usize, max_alpha: u64, seed: u64) -> Vec<Fraction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let alpha = rng.gen_range(1..=max_alpha);
        let beta = rng.gen_range(-(alpha as i64)..=alpha as i64);
        if BigInt::from(alpha).gcd(&BigInt::from(beta)).is_one() {
            out.push(Fraction::new(alpha, beta).expect("alpha > 0"));
        }
    }
    out
}

pub fn alexander_form(max_k: usize, random_knots: usize) -> CheckResult {
    let mut results: Vec<(bool, String)> = (0..=max_k)
        .map(|k| {
            let got = alexander_polynomial(&fibonacci_poly(2 * k + 1)).expect("knot");
            (
                got == alternating_alexander(k),
                format!("f_{}: {got}", 2 * k + 1),
            )
        })
        .collect();
    let knots = random_knot_fractions(random_knots, 10_000, SEED);
    results.par_extend(knots.par_iter().map(|f| {
        let link = RationalLink::from_fraction(f.clone()).expect("nonzero");
        let delta = alexander_polynomial(&link.conway_polynomial()).expect("knot");
        let ok = delta.is_symmetric() && delta.eval_at_one().abs().is_one();
        (ok, format!("{f}: Δ = {delta}"))
    }));
    CheckResult::from_cells("alexander form", results)
}

pub fn lemma_identities(max_n: u64) -> CheckResult {
    let results = (3..=max_n)
        .step_by(2)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let report = verify_lemma_identities(n).expect("odd n >= 3");
            let failing: Vec<_> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name)
                .collect();
            (report.all_passed(), format!("n={n}: {failing:?}"))
        })
        .collect();
    CheckResult::from_cells("lemma identities", results)
}

pub fn remark_families(max_m: u64) -> CheckResult {
    let results = (1..=max_m)
        .flat_map(|m| {
            [
                (Family::A, 2 * m),
                (Family::B, 2 * m),
                (Family::C, 2 * m + 1),
            ]
            .map(|(fam, len)| {
                let (fraction, cf) = remark_family(m, fam).expect("m >= 1");
                let ok = cf.evaluate() == fraction && cf.len() as u64 == len && cf.all_even();
                (ok, format!("{fam:?} m={m}: {cf} vs {fraction}"))
            })
        })
        .collect();
    CheckResult::from_cells("remark families", results)
}

pub fn round_trip(count: usize) -> CheckResult {
    let fractions = random_fractions(count, 1_000_000, SEED ^ 1);
    let results = fractions
        .par_iter()
        .map(|f| {
            let e = even_expansion(f).expect("alpha > 0");
            let target = if e.s_applied {
                f.s_transform()
            } else {
                f.clone()
            };
            let q = e.quotients.quotients();
            let leading_zero_needed = e.expanded.den().abs() > *e.expanded.num();
            let ok = e.quotients.evaluate() == target
                && e.expanded == target
                && e.quotients.all_even()
                && q.iter().skip(1).all(|x| !num_traits::Zero::is_zero(x))
                && q.first()
                    .is_none_or(|x| num_traits::Zero::is_zero(x) == leading_zero_needed);
            (ok, format!("{f} -> {}", e.quotients))
        })
        .collect();
    CheckResult::from_cells("even expansion round trip", results)
}

pub fn classification(max_n: u64, max_j: u64) -> CheckResult {
    let grid = cells(1..=max_n, max_j);
    let results = grid
        .par_iter()
        .map(|&p| {
            let by_rule = classify(p);
            let by_det = component_count(fib_link(p).fraction());
            (
                by_rule == by_det,
                format!("{p}: rule {by_rule}, determinant {by_det}"),
            )
        })
        .collect();
    CheckResult::from_cells("classification", results)
}

pub fn open_cases() -> CheckResult {
    let mut results = Vec::new();
    for (n, j) in [(3, 3), (4, 2)] {
        let v = fibonacci_obstruction(params(n, j)).expect("knot");
        let ok = v.status == Status::Inconclusive && v.witness.is_one();
        results.push((
            ok,
            format!("F_{j}^({n}): {} with witness {}", v.status, v.witness),
        ));
    }
    let trefoil = RationalLink::from_notation(ContinuedFraction::from_i64s(&[2, -2]).unwrap())
        .expect("trefoil");
    let v = obstruction(&trefoil).expect("knot");
    results.push((
        v.status == Status::Obstructed,
        format!("trefoil: {}", v.status),
    ));
    CheckResult::from_cells("open cases", results)
}

/// Every knot claimed non-Lissajous by the closed form is obstructed by the
/// direct computation, and the witness agrees with the closed form.
pub fn corollary_soundness(max_n: u64, max_j: u64) -> CheckResult {
    let grid: Vec<_> = cells(1..=max_n, max_j)
        .into_iter()
        .filter(|&p| classify(p) == crate::links::Components::Knot)
        .collect();
    let results = grid
        .par_iter()
        .map(|&p| {
            let v = fibonacci_obstruction(p).expect("knot");
            let claim = fibonacci_non_lissajous(p).expect("knot");
            let consistent = v.witness == conway_mod2_by_construction(p);
            let ok = consistent && (!claim || v.status == Status::Obstructed);
            (
                ok,
                format!(
                    "{p}: claim {claim}, verdict {}, witness {}",
                    v.status, v.witness
                ),
            )
        })
        .collect();
    CheckResult::from_cells("corollary soundness", results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_sum_small() {
        assert_eq!(alternating_alexander(0), LaurentPoly::one());
        assert_eq!(
            alternating_alexander(1),
            LaurentPoly::from_i64s(-1, &[1, -1, 1])
        );
        assert_eq!(
            alternating_alexander(2),
            LaurentPoly::from_i64s(-2, &[1, -1, 1, -1, 1])
        );
    }

    #[test]
    fn small_run_passes() {
        let report = run(5, 6);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn random_samples_are_deterministic() {
        assert_eq!(random_fractions(20, 1000, 7), random_fractions(20, 1000, 7));
        assert!(random_knot_fractions(50, 100, 3)
            .iter()
            .all(|f| f.num().is_odd()));
    }
}
