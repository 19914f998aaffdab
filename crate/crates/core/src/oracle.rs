//! Brute-force ground truth: word membership and bounded enumeration of
//! minimal word generators.
//!
//! Sorted-word ideals are matched with the factor pattern
//! `y1^e1 (inner letters, each at least its degree, any order-increasing
//! run) yk^ek`; preimage ideals by abelianizing. Enumeration walks the
//! complement of the ideal breadth-first: since the complement is closed
//! under factors, every minimal generator is a complement word extended by
//! one letter.

use crate::error::{Error, Result};
use crate::monomial::{Letter, LetterOrder, Monomial, MonomialSet, Word};
use crate::preimage::preimage_degree_bounds;
use crate::sorted_ideal::{complete_degree_bound, WordSet};

/// Default number of membership tests one enumeration may spend.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub cap: usize,
    pub minimal_generators: WordSet,
    /// No minimal generator has length in `(cap / 2, cap]`.
    pub saturated: bool,
    pub membership_tests: u64,
}

impl EnumerationReport {
    pub fn longest(&self) -> usize {
        self.minimal_generators
            .iter()
            .map(Word::len)
            .max()
            .unwrap_or(0)
    }
}

struct SortedPattern {
    min: Letter,
    max: Letter,
    min_exp: u64,
    max_exp: u64,
    /// Minimum run length per letter strictly between `min` and `max`.
    need: Vec<Option<u64>>,
    inner_support: usize,
}

/// Membership in the ideal generated by the sorted words of `<M>`.
pub struct SortedMembership {
    rank: Vec<usize>,
    patterns: Vec<SortedPattern>,
    has_unit: bool,
}

impl SortedMembership {
    pub fn new(m: &MonomialSet, ord: &LetterOrder) -> Result<Self> {
        m.require_order(ord)?;
        let n = m.arity();
        let mut patterns = Vec::new();
        let mut has_unit = false;
        for w in m {
            if w.is_unit() {
                has_unit = true;
                continue;
            }
            let ext = w.extremes(ord)?;
            let mut need = vec![None; n];
            let mut inner_support = 0;
            for &x in &ext.internal {
                need[x] = Some(w.degree_in(x));
                if w.in_support(x) {
                    inner_support += 1;
                }
            }
            patterns.push(SortedPattern {
                min: ext.min,
                max: ext.max,
                min_exp: w.degree_in(ext.min),
                max_exp: w.degree_in(ext.max),
                need,
                inner_support,
            });
        }
        Ok(SortedMembership {
            rank: (0..n).map(|l| ord.rank(l)).collect(),
            patterns,
            has_unit,
        })
    }

    pub fn contains(&self, u: &[Letter]) -> bool {
        if self.has_unit {
            return true;
        }
        let runs = runs(u);
        self.patterns.iter().any(|p| self.matches(p, &runs))
    }

    fn matches(&self, p: &SortedPattern, runs: &[(Letter, u64)]) -> bool {
        for (i, &(l, len)) in runs.iter().enumerate() {
            if l != p.min || len < p.min_exp {
                continue;
            }
            if p.min == p.max {
                return true;
            }
            let mut last = self.rank[p.min];
            let mut satisfied = 0;
            for &(l, len) in &runs[i + 1..] {
                if l == p.max {
                    if len >= p.max_exp && satisfied == p.inner_support {
                        return true;
                    }
                    break;
                }
                let need = match p.need[l] {
                    Some(need) if self.rank[l] > last => need,
                    _ => break,
                };
                if len < need {
                    break;
                }
                if need > 0 {
                    satisfied += 1;
                }
                last = self.rank[l];
            }
        }
        false
    }
}

fn runs(u: &[Letter]) -> Vec<(Letter, u64)> {
    let mut out: Vec<(Letter, u64)> = Vec::new();
    for &l in u {
        match out.last_mut() {
            Some((last, len)) if *last == l => *len += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

pub fn word_in_sorted_ideal(u: &Word, m: &MonomialSet, ord: &LetterOrder) -> Result<bool> {
    Ok(SortedMembership::new(m, ord)?.contains(u.letters()))
}

/// Membership in the full preimage of `<M>` under abelianization.
pub struct PreimageMembership {
    members: Vec<Monomial>,
    arity: usize,
}

impl PreimageMembership {
    pub fn new(m: &MonomialSet) -> Self {
        PreimageMembership {
            members: m.members().to_vec(),
            arity: m.arity(),
        }
    }

    pub fn contains(&self, u: &[Letter]) -> bool {
        let mut counts = vec![0u64; self.arity];
        for &l in u {
            counts[l] += 1;
        }
        self.members
            .iter()
            .any(|m| m.exponents().iter().zip(&counts).all(|(a, b)| a <= b))
    }
}

pub fn word_in_preimage(u: &Word, m: &MonomialSet) -> Result<bool> {
    if let Some(&l) = u.letters().iter().find(|&&l| l >= m.arity()) {
        return Err(Error::InvalidLetter {
            letter: l,
            size: m.arity(),
        });
    }
    Ok(PreimageMembership::new(m).contains(u.letters()))
}

/// All words of length at most `cap` that lie in the ideal while both the
/// word without its first letter and the word without its last letter do
/// not. `membership` must be closed under taking superwords.
pub fn enumerate_minimal_generators<F>(
    membership: F,
    alphabet_size: usize,
    cap: usize,
    budget: u64,
) -> Result<EnumerationReport>
where
    F: Fn(&[Letter]) -> bool,
{
    let mut tests = 1u64;
    let mut found = Vec::new();
    if membership(&[]) {
        found.push(Word::empty());
    } else {
        let mut level: Vec<Vec<Letter>> = vec![Vec::new()];
        for _ in 1..=cap {
            let mut next = Vec::new();
            for u in &level {
                for x in 0..alphabet_size {
                    let mut v = Vec::with_capacity(u.len() + 1);
                    v.extend_from_slice(u);
                    v.push(x);
                    tests += 1;
                    if membership(&v) {
                        tests += 1;
                        if !membership(&v[1..]) {
                            found.push(Word::new(v));
                        }
                    } else {
                        next.push(v);
                    }
                    if tests > budget {
                        return Err(Error::BudgetExceeded { limit: budget });
                    }
                }
            }
            level = next;
            if level.is_empty() {
                break;
            }
        }
    }
    let saturated = found.iter().all(|w| w.len() <= cap / 2);
    Ok(EnumerationReport {
        cap,
        minimal_generators: WordSet::new(found),
        saturated,
        membership_tests: tests,
    })
}

pub fn enumerate_sorted(
    m: &MonomialSet,
    ord: &LetterOrder,
    cap: usize,
    budget: u64,
) -> Result<EnumerationReport> {
    let member = SortedMembership::new(m, ord)?;
    enumerate_minimal_generators(|u| member.contains(u), m.arity(), cap, budget)
}

pub fn enumerate_preimage(m: &MonomialSet, cap: usize, budget: u64) -> Result<EnumerationReport> {
    let member = PreimageMembership::new(m);
    enumerate_minimal_generators(|u| member.contains(u), m.arity(), cap, budget)
}

fn as_cap(bound: u64) -> Result<usize> {
    usize::try_from(bound)
        .ok()
        .and_then(|b| b.checked_add(2))
        .ok_or(Error::Overflow)
}

/// Enumerates to two letters past [`complete_degree_bound`] and reports
/// whether every minimal generator found stays within the bound.
pub fn finiteness_probe(m: &MonomialSet, ord: &LetterOrder, budget: u64) -> Result<bool> {
    let bound = complete_degree_bound(m, ord)?;
    let report = enumerate_sorted(m, ord, as_cap(bound)?, budget)?;
    Ok(report.longest() as u64 <= bound)
}

/// Length bound for preimage generators: the sum of the per-letter degree
/// bounds plus the largest total degree in `M`.
pub fn preimage_length_bound(m: &MonomialSet) -> Result<u64> {
    let bounds = preimage_degree_bounds(m);
    let max_deg = m
        .iter()
        .map(Monomial::total_degree)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    bounds
        .iter()
        .try_fold(max_deg, |acc, &b| acc.checked_add(b))
        .ok_or(Error::Overflow)
}

/// Preimage counterpart of [`finiteness_probe`].
pub fn preimage_probe(m: &MonomialSet, budget: u64) -> Result<bool> {
    let bound = preimage_length_bound(m)?;
    let report = enumerate_preimage(m, as_cap(bound)?, budget)?;
    Ok(report.longest() as u64 <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;

    fn example() -> MonomialSet {
        MonomialSet::from_vectors(3, &[&[1, 2, 1], &[3, 1, 0]]).unwrap()
    }

    fn bac() -> LetterOrder {
        LetterOrder::from_sequence(vec![B, A, C]).unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn sorted_membership_examples() {
        let single = MonomialSet::from_vectors(3, &[&[1, 2, 1]]).unwrap();
        let abc = LetterOrder::identity(3);
        assert!(word_in_sorted_ideal(&w(&[A, B, B, B, B, B, C]), &single, &abc).unwrap());
        assert!(!word_in_sorted_ideal(&w(&[B, A, C]), &example(), &abc).unwrap());
        for m in example().iter() {
            assert!(word_in_sorted_ideal(&m.sigma(&abc), &example(), &abc).unwrap());
        }
        // ab^2c needs the whole b-block between a and c
        assert!(!word_in_sorted_ideal(&w(&[A, B, C, B]), &single, &abc).unwrap());
        assert!(word_in_sorted_ideal(&w(&[C, A, A, B, B, C, A]), &single, &abc).unwrap());
    }

    #[test]
    fn sorted_membership_allows_absent_inner_letters() {
        // a c over a < b < c: words a b^j c are all members
        let m = MonomialSet::from_vectors(3, &[&[1, 0, 1]]).unwrap();
        let abc = LetterOrder::identity(3);
        assert!(word_in_sorted_ideal(&w(&[A, C]), &m, &abc).unwrap());
        assert!(word_in_sorted_ideal(&w(&[A, B, B, C]), &m, &abc).unwrap());
        assert!(!word_in_sorted_ideal(&w(&[C, B, A]), &m, &abc).unwrap());
    }

    #[test]
    fn preimage_membership_examples() {
        let m = MonomialSet::from_vectors(2, &[&[2, 0]]).unwrap();
        assert!(word_in_preimage(&w(&[0, 1, 1, 1, 0]), &m).unwrap());
        assert!(!word_in_preimage(&w(&[0, 1, 1, 1]), &m).unwrap());
        assert!(!word_in_preimage(&Word::empty(), &m).unwrap());
    }

    #[test]
    fn enumeration_of_square_preimage() {
        let m = MonomialSet::from_vectors(2, &[&[2, 0]]).unwrap();
        let report = enumerate_preimage(&m, 6, DEFAULT_BUDGET).unwrap();
        let expected: WordSet = (0..=4)
            .map(|j| {
                let mut v = vec![0];
                v.extend(std::iter::repeat_n(1, j));
                v.push(0);
                Word::new(v)
            })
            .collect();
        assert_eq!(report.minimal_generators, expected);
        assert!(!report.saturated);
    }

    #[test]
    fn enumeration_of_worked_example() {
        let report = enumerate_sorted(&example(), &bac(), 8, DEFAULT_BUDGET).unwrap();
        let expected = WordSet::new([w(&[B, B, A, C]), w(&[B, B, A, A, C]), w(&[B, A, A, A])]);
        assert_eq!(report.minimal_generators, expected);
        // b^2 a^2 c has length 5, inside (4, 8]
        assert!(!report.saturated);
    }

    #[test]
    fn enumeration_of_principal_word_ideal() {
        let g = w(&[0, 1, 0]);
        let report = enumerate_minimal_generators(
            |u| g.is_factor_of(&Word::new(u.to_vec())),
            2,
            6,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(report.minimal_generators, WordSet::new([g]));
        assert!(report.saturated);
    }

    #[test]
    fn enumeration_budget() {
        let m = MonomialSet::from_vectors(2, &[&[9, 9]]).unwrap();
        assert_eq!(
            enumerate_preimage(&m, 16, 1000),
            Err(Error::BudgetExceeded { limit: 1000 })
        );
    }

    #[test]
    fn probes_on_worked_example() {
        assert!(finiteness_probe(&example(), &bac(), DEFAULT_BUDGET).unwrap());
        assert!(!finiteness_probe(&example(), &LetterOrder::identity(3), DEFAULT_BUDGET).unwrap());
        let single = MonomialSet::from_vectors(3, &[&[2, 1, 3]]).unwrap();
        for ord in LetterOrder::all(3) {
            assert!(!finiteness_probe(&single, &ord, DEFAULT_BUDGET).unwrap());
        }
    }
}
