//! Exhaustive families of small antichains and the cross-checks run over
//! them.

use std::collections::HashSet;

use serde::Serialize;

use crate::cool::{all_orderings_cool, is_cool};
use crate::error::Result;
use crate::monomial::{LetterOrder, Monomial, MonomialSet};
use crate::oracle::{finiteness_probe, preimage_probe};
use crate::preimage::{preimage_fg, preimage_fg_pairs};
use crate::sorted_ideal::is_fg_sorted;

/// Bounds on the monomials an antichain may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepBounds {
    pub letters: usize,
    pub max_exponent: u64,
    pub max_total_degree: u64,
}

impl SweepBounds {
    /// Monomials of total degree at most `d` over `n` letters.
    pub fn total_degree(n: usize, d: u64) -> Self {
        SweepBounds {
            letters: n,
            max_exponent: d,
            max_total_degree: d,
        }
    }
}

/// Nonunit monomials inside the bounds, lexicographically.
pub fn monomials_within(b: &SweepBounds) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u64; b.letters];
    loop {
        let total: u64 = e.iter().sum();
        if total > 0 && total <= b.max_total_degree {
            out.push(Monomial::new(e.clone()));
        }
        let mut i = b.letters;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if e[i] < b.max_exponent {
                e[i] += 1;
                break;
            }
            e[i] = 0;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    LetterOrder::all(n).map(|o| o.sequence().to_vec()).collect()
}

fn permuted_key(m: &[Monomial], p: &[usize]) -> Vec<Vec<u64>> {
    let mut key: Vec<Vec<u64>> = m
        .iter()
        .map(|g| {
            let mut v = vec![0; p.len()];
            for (i, &e) in g.exponents().iter().enumerate() {
                v[p[i]] = e;
            }
            v
        })
        .collect();
    key.sort();
    key
}

/// The lexicographically least sorted exponent list over all renamings of
/// the letters.
pub fn canonical_form(m: &MonomialSet) -> Vec<Vec<u64>> {
    permutations(m.arity())
        .iter()
        .map(|p| permuted_key(m.members(), p))
        .min()
        .unwrap_or_default()
}

/// Every nonempty antichain within the bounds, one per class under letter
/// permutation, members listed lexicographically.
pub fn antichains(b: &SweepBounds) -> Vec<MonomialSet> {
    let pool = monomials_within(b);
    let perms = permutations(b.letters);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut chosen: Vec<Monomial> = Vec::new();
    fn rec(
        pool: &[Monomial],
        start: usize,
        chosen: &mut Vec<Monomial>,
        perms: &[Vec<usize>],
        seen: &mut HashSet<Vec<Vec<u64>>>,
        out: &mut Vec<MonomialSet>,
        n: usize,
    ) {
        if !chosen.is_empty() {
            let key = perms
                .iter()
                .map(|p| permuted_key(chosen, p))
                .min()
                .expect("at least one permutation");
            if seen.insert(key) {
                out.push(MonomialSet::new(n, chosen.clone()).expect("same arity"));
            }
        }
        for i in start..pool.len() {
            let m = &pool[i];
            if chosen
                .iter()
                .any(|c| c.divides_unchecked(m) || m.divides_unchecked(c))
            {
                continue;
            }
            chosen.push(m.clone());
            rec(pool, i + 1, chosen, perms, seen, out, n);
            chosen.pop();
        }
    }
    rec(
        &pool,
        0,
        &mut chosen,
        &perms,
        &mut seen,
        &mut out,
        b.letters,
    );
    out
}

/// A disagreement found during a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub monomials: Vec<Vec<u64>>,
    pub ordering: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub antichains: usize,
    pub cases: usize,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn record(&mut self, check: &str, m: &MonomialSet, ord: Option<&LetterOrder>) {
        self.mismatches.push(Mismatch {
            check: check.to_string(),
            monomials: m.iter().map(|g| g.exponents().to_vec()).collect(),
            ordering: ord.map(|o| o.sequence().to_vec()),
        });
    }
}

/// The finiteness criterion against word enumeration, every ordering.
pub fn sweep_sorted_probe(family: &[MonomialSet], budget: u64) -> Result<SweepReport> {
    let mut report = SweepReport {
        antichains: family.len(),
        ..Default::default()
    };
    for m in family {
        for ord in LetterOrder::all(m.arity()) {
            report.cases += 1;
            if is_fg_sorted(m, &ord)?.verdict != finiteness_probe(m, &ord, budget)? {
                report.record("is_fg_sorted vs finiteness_probe", m, Some(&ord));
            }
        }
    }
    Ok(report)
}

/// Both preimage criteria against each other and against word enumeration.
pub fn sweep_preimage(family: &[MonomialSet], budget: u64) -> Result<SweepReport> {
    let mut report = SweepReport {
        antichains: family.len(),
        ..Default::default()
    };
    for m in family {
        report.cases += 1;
        let single = preimage_fg(m)?.verdict;
        if single != preimage_fg_pairs(m)?.verdict {
            report.record("preimage_fg vs preimage_fg_pairs", m, None);
        }
        if single != preimage_probe(m, budget)? {
            report.record("preimage_fg vs preimage_probe", m, None);
        }
    }
    Ok(report)
}

/// The every-ordering test against trying every ordering.
pub fn sweep_all_orderings(family: &[MonomialSet]) -> Result<SweepReport> {
    let mut report = SweepReport {
        antichains: family.len(),
        ..Default::default()
    };
    for m in family {
        report.cases += 1;
        let mut exhaustive = true;
        for ord in LetterOrder::all(m.arity()) {
            if !is_cool(m, &ord)? {
                exhaustive = false;
                break;
            }
        }
        if all_orderings_cool(m)? != exhaustive {
            report.record("all_orderings_cool vs every ordering", m, None);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_sizes() {
        assert_eq!(monomials_within(&SweepBounds::total_degree(3, 3)).len(), 19);
        assert_eq!(monomials_within(&SweepBounds::total_degree(1, 3)).len(), 3);
    }

    #[test]
    fn one_letter_antichains() {
        // x, x^2, x^3
        assert_eq!(antichains(&SweepBounds::total_degree(1, 3)).len(), 3);
    }

    #[test]
    fn two_letters_degree_one() {
        // {x}, {x, y}
        assert_eq!(antichains(&SweepBounds::total_degree(2, 1)).len(), 2);
    }

    #[test]
    fn canonical_is_permutation_invariant() {
        let m = MonomialSet::from_vectors(3, &[&[2, 0, 1], &[0, 1, 0]]).unwrap();
        let p = MonomialSet::from_vectors(3, &[&[0, 1, 2], &[1, 0, 0]]).unwrap();
        assert_eq!(canonical_form(&m), canonical_form(&p));
    }
}
