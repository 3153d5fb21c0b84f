use std::fmt;

use num_bigint::BigInt;

use crate::contfrac::Mobius;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
}

/// Outcome of [`verify_lemma_identities`] for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub n: u64,
    pub checks: Vec<IdentityCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "n={} [{mark}] {}", self.n, c.name)?;
        }
        Ok(())
    }
}

fn mobius(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Mobius {
    Mobius::new(a, b, c, d).expect("unimodular by construction")
}

/// Rebuilds the matrices behind the `[n]_j` expansion identities for odd
/// `n = 2k + 1` and checks each identity with exact arithmetic.
///
/// `G = (3 2 / -2 -1)` is `x -> [-2, 2, x]`, `L = (n+1 1 / 1 0)`,
/// `T = (1 1 / 0 -1)` is `x -> -x - 1`, `Q = (-(n+1) 1 / 1 0)`,
/// `R = (1 0 / 0 -1)` is `x -> -x`, and `S = (1 0 / -1 1)` is `x -> x/(1-x)`.
pub fn verify_lemma_identities(n: u64) -> Result<LemmaReport> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!(
            "n must be odd and at least 3, got {n}"
        )));
    }
    let k =
        u32::try_from(n / 2).map_err(|_| Error::InvalidParams(format!("n = {n} is too large")))?;
    let nb = BigInt::from(n);
    let kb = BigInt::from(k);
    let one = || BigInt::from(1);

    let g = mobius(3.into(), 2.into(), (-2).into(), (-1).into());
    let l = Mobius::twist(&nb + 1u32);
    let t = mobius(one(), one(), 0.into(), (-1).into());
    let q = Mobius::twist(-(&nb + 1u32));
    let r = mobius(one(), 0.into(), 0.into(), (-1).into());
    let s = mobius(one(), 0.into(), (-1).into(), one());
    let p = Mobius::twist(nb.clone());

    let gk = g.pow(k);
    let m = &(&l * &gk) * &t;
    let h = &(&gk * &q.pow(2)) * &r;
    let p2 = p.pow(2);
    let p3 = p.pow(3);
    let conj = &(&s.inverse() * &h) * &s;
    let n2 = &nb * &nb;
    let n3 = &n2 * &nb;

    let checks = vec![
        IdentityCheck {
            name: "G^k = (1+2k 2k / -2k 1-2k)",
            passed: gk == mobius(1 + 2 * &kb, 2 * &kb, -2 * &kb, 1 - 2 * &kb),
        },
        IdentityCheck {
            name: "G^k = (n n-1 / 1-n 2-n)",
            passed: gk == mobius(nb.clone(), &nb - 1, 1 - &nb, 2 - &nb),
        },
        IdentityCheck {
            name: "L G^k T = (n^2+1 n / n 1)",
            passed: m == mobius(&n2 + 1, nb.clone(), nb.clone(), one()),
        },
        IdentityCheck {
            name: "L G^k T = P^2",
            passed: m.projectively_eq(&p2),
        },
        IdentityCheck {
            name: "L G^k Q R = P^3",
            passed: (&(&(&l * &gk) * &q) * &r).projectively_eq(&p3),
        },
        IdentityCheck {
            name: "G^k Q^2 R = (n^3+n^2+2n+1 n^2+1 / -n^3-n n-n^2-1)",
            passed: h == mobius(&n3 + &n2 + 2 * &nb + 1, &n2 + 1, -&n3 - &nb, &nb - &n2 - 1),
        },
        IdentityCheck {
            name: "S^-1 H S = (n^3+2n n^2+1 / n^2+1 n)",
            passed: conj == mobius(&n3 + 2 * &nb, &n2 + 1, &n2 + 1, nb.clone()),
        },
        IdentityCheck {
            name: "S^-1 H S = P^3",
            passed: conj.projectively_eq(&p3),
        },
        IdentityCheck {
            name: "S P^3 = H S",
            passed: (&s * &p3).projectively_eq(&(&h * &s)),
        },
    ];
    Ok(LemmaReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        for n in [3, 5, 19] {
            let report = verify_lemma_identities(n).unwrap();
            assert!(report.all_passed(), "{report}");
            assert_eq!(report.checks.len(), 9);
        }
    }

    #[test]
    fn rejects_even_or_small_n() {
        assert!(verify_lemma_identities(1).is_err());
        assert!(verify_lemma_identities(4).is_err());
    }
}
