//! Finite generation of the ideal generated by the sorted words of a
//! monomial ideal, and explicit generating sets when it is finite.
//!
//! For an antichain `M` and an ordering, the word ideal is finite exactly
//! when every internal letter `x` of every `w` in `M` has a helper: some
//! `s` in `M` with `x` extremal in `s` and `erase(s, x) | w`. When that
//! holds, `w` times any product of its internal letters, with each internal
//! `x` kept below degree `r_x(M)`, sorts into a generating set.

use crate::error::{Error, Result};
use crate::monomial::{Letter, LetterOrder, Monomial, MonomialSet, Word};

/// Upper limit on words materialized by the generator constructions.
pub const DEFAULT_GENERATOR_LIMIT: u64 = 2_000_000;

/// The first `(w, x)` pair without a helper, with members compared by their
/// sorted words and letters by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violator {
    /// Position of `w` in the input set.
    pub member: usize,
    pub monomial: Monomial,
    pub letter: Letter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgWitness {
    pub verdict: bool,
    pub violator: Option<Violator>,
}

/// A finite set of words, kept sorted by length then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSet {
    words: Vec<Word>,
}

impl WordSet {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Self {
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort_by(Word::shortlex_cmp);
        words.dedup();
        WordSet { words }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words
            .binary_search_by(|probe| probe.shortlex_cmp(w))
            .is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn union(&self, other: &WordSet) -> WordSet {
        WordSet::new(self.words.iter().chain(&other.words).cloned())
    }

    /// Whether some member is a factor of `u`.
    pub fn divides_word(&self, u: &Word) -> bool {
        self.words.iter().any(|g| g.is_factor_of(u))
    }
}

impl FromIterator<Word> for WordSet {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        WordSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a WordSet {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// Whether some member of `m` helps `w` with `x` in the sense of the
/// finiteness criterion: `x` extremal in `s` and `erase(s, x) | w`.
pub(crate) fn has_extremal_helper(
    m: &MonomialSet,
    w: &Monomial,
    x: Letter,
    ord: &LetterOrder,
) -> bool {
    m.iter()
        .any(|s| s.is_extremal(x, ord) && s.erased_divides(x, w))
}

/// Decides finite generation; reports the first violating pair in input
/// order, internal letters scanned in increasing order.
pub fn is_fg_sorted(m: &MonomialSet, ord: &LetterOrder) -> Result<FgWitness> {
    m.require_antichain()?;
    m.require_order(ord)?;
    let mut by_word: Vec<(Vec<usize>, usize)> = m
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let ranks = w
                .sigma(ord)
                .letters()
                .iter()
                .map(|&x| ord.rank(x))
                .collect();
            (ranks, i)
        })
        .collect();
    by_word.sort();
    for (_, i) in by_word {
        let w = &m.members()[i];
        for x in w.extremes(ord)?.internal {
            if !has_extremal_helper(m, w, x, ord) {
                return Ok(FgWitness {
                    verdict: false,
                    violator: Some(Violator {
                        member: i,
                        monomial: w.clone(),
                        letter: x,
                    }),
                });
            }
        }
    }
    Ok(FgWitness {
        verdict: true,
        violator: None,
    })
}

fn r_values(m: &MonomialSet, ord: &LetterOrder) -> Result<Vec<u64>> {
    (0..m.arity())
        .map(|x| m.extremal_degree_max(x, ord))
        .collect()
}

/// Calls `f` with every exponent assignment `e` where `lo[i] <= e[i] < hi[i]`.
fn for_each_in_box(lo: &[u64], hi: &[u64], f: &mut dyn FnMut(&[u64])) {
    if lo.iter().zip(hi).any(|(l, h)| l >= h) {
        return;
    }
    let mut cur = lo.to_vec();
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == cur.len() {
                return;
            }
            cur[i] += 1;
            if cur[i] < hi[i] {
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

/// The generating set `sigma(w * u)`, `u` a product of letters internal to
/// `w` with every internal degree below `r_x(M)`. May contain non-minimal
/// words; see [`minimal_word_generators`].
pub fn fg_generating_set(m: &MonomialSet, ord: &LetterOrder) -> Result<WordSet> {
    if !is_fg_sorted(m, ord)?.verdict {
        return Err(Error::NotFinitelyGenerated);
    }
    let bound = generator_count_bound(m, ord)?;
    if bound > u128::from(DEFAULT_GENERATOR_LIMIT) {
        return Err(Error::BudgetExceeded {
            limit: DEFAULT_GENERATOR_LIMIT,
        });
    }
    let r = r_values(m, ord)?;
    let mut words = Vec::new();
    for w in m {
        let internal = w.extremes(ord)?.internal;
        let lo: Vec<u64> = internal.iter().map(|&x| w.degree_in(x)).collect();
        let hi: Vec<u64> = internal.iter().map(|&x| r[x]).collect();
        let mut emit = |degs: &[u64]| {
            let mut exps = w.exponents().to_vec();
            for (&x, &d) in internal.iter().zip(degs) {
                exps[x] = d;
            }
            words.push(Monomial::new(exps).sigma(ord));
        };
        if internal.is_empty() {
            emit(&[]);
        } else {
            for_each_in_box(&lo, &hi, &mut emit);
        }
    }
    Ok(WordSet::new(words))
}

/// Members of `s` with no other member as a factor.
pub fn minimal_word_generators(s: &WordSet) -> WordSet {
    WordSet {
        words: s
            .iter()
            .filter(|u| !s.iter().any(|v| v != *u && v.is_factor_of(u)))
            .cloned()
            .collect(),
    }
}

/// Minimal generators `sigma(m u)` of word length at most `length_cap`:
/// `u` ranges over products of letters internal to `m`, and `m u x^-1`
/// must leave the ideal for each extremal letter `x` of `m`.
pub fn eps_minimal_generators(
    m: &MonomialSet,
    ord: &LetterOrder,
    length_cap: u64,
) -> Result<WordSet> {
    m.require_antichain()?;
    m.require_order(ord)?;
    let mut words = Vec::new();
    let mut examined = 0u64;
    for w in m {
        let deg = w.total_degree()?;
        if deg > length_cap {
            continue;
        }
        let ext = w.extremes(ord)?;
        let spare = length_cap - deg;
        let mut extra = vec![0u64; ext.internal.len()];
        loop {
            examined += 1;
            if examined > DEFAULT_GENERATOR_LIMIT {
                return Err(Error::BudgetExceeded {
                    limit: DEFAULT_GENERATOR_LIMIT,
                });
            }
            let mut exps = w.exponents().to_vec();
            for (&x, &e) in ext.internal.iter().zip(&extra) {
                exps[x] += e;
            }
            let mu = Monomial::new(exps);
            let minimal = [ext.min, ext.max].iter().all(|&x| {
                let shrunk = mu.div_letter(x).expect("extremal letter is in the support");
                !m.iter().any(|s| s.divides_unchecked(&shrunk))
            });
            if minimal {
                words.push(mu.sigma(ord));
            }
            if !next_bounded_composition(&mut extra, spare) {
                break;
            }
        }
    }
    Ok(WordSet::new(words))
}

/// Advances `v` through all vectors with entry sum at most `total`.
fn next_bounded_composition(v: &mut [u64], total: u64) -> bool {
    let mut sum: u64 = v.iter().sum();
    for x in v.iter_mut() {
        if sum < total {
            *x += 1;
            return true;
        }
        sum -= *x;
        *x = 0;
    }
    false
}

/// `|M'| * prod_{x in int(M)} r_x(M) + |M| - |M'|`, where `M'` holds the
/// members with an internal letter.
pub fn generator_count_bound(m: &MonomialSet, ord: &LetterOrder) -> Result<u128> {
    m.require_order(ord)?;
    let r = r_values(m, ord)?;
    let mut with_internal = 0u128;
    let mut internal_union = vec![false; m.arity()];
    for w in m {
        if w.is_unit() {
            continue;
        }
        let ext = w.extremes(ord)?;
        if !ext.internal.is_empty() {
            with_internal += 1;
            for x in ext.internal {
                internal_union[x] = true;
            }
        }
    }
    let product = internal_union
        .iter()
        .enumerate()
        .filter(|(_, &inside)| inside)
        .try_fold(1u128, |acc, (x, _)| acc.checked_mul(u128::from(r[x])))
        .ok_or(Error::Overflow)?;
    with_internal
        .checked_mul(product)
        .and_then(|p| p.checked_add(m.len() as u128 - with_internal))
        .ok_or(Error::Overflow)
}

/// Word length beyond which no minimal generator exists when the ideal is
/// finitely generated: `max_w deg(w) + sum_{x in int(w)} (r_x(M) - 1)`.
///
/// Every member of [`fg_generating_set`] built from `w` raises each
/// internal degree to at most `r_x - 1`, so it has length at most
/// `deg(w) + sum (r_x - 1 - deg_x(w))`, which this bound dominates.
/// Letters with `r_x = 0` contribute nothing.
pub fn complete_degree_bound(m: &MonomialSet, ord: &LetterOrder) -> Result<u64> {
    m.require_order(ord)?;
    let r = r_values(m, ord)?;
    let mut best = 0u64;
    for w in m {
        if w.is_unit() {
            continue;
        }
        let mut len = w.total_degree()?;
        for x in w.extremes(ord)?.internal {
            len = len
                .checked_add(r[x].saturating_sub(1))
                .ok_or(Error::Overflow)?;
        }
        best = best.max(len);
    }
    Ok(best)
}

/// Leading words of a Groebner basis for the preimage of the monomial
/// ideal in the free algebra: commutator leads `x y` with `x > y`, plus the
/// minimal generators of the sorted-word ideal.
pub fn groebner_lift(m: &MonomialSet, ord: &LetterOrder) -> Result<WordSet> {
    let sorted = minimal_word_generators(&fg_generating_set(m, ord)?);
    let n = m.arity();
    let leads = (0..n).flat_map(|x| {
        (0..n)
            .filter(move |&y| ord.precedes(y, x))
            .map(move |y| Word::new(vec![x, y]))
    });
    Ok(WordSet::new(leads.chain(sorted.words)))
}

/// `{x1^(i+1) xn^(m-i) : 0 <= i < m} ∪ {xi^(r_i) : 2 <= i <= n-1}` with
/// `n = r.len() + 2`.
pub fn tight_family(m: u64, r: &[u64]) -> Result<MonomialSet> {
    if m == 0 || r.contains(&0) {
        return Err(Error::InvalidInstance(
            "tight family needs m >= 1 and every r_i >= 1".into(),
        ));
    }
    let n = r.len() + 2;
    let mut elems = Vec::new();
    for i in 0..m {
        let mut exps = vec![0; n];
        exps[0] = i + 1;
        exps[n - 1] = m - i;
        elems.push(Monomial::new(exps));
    }
    for (k, &ri) in r.iter().enumerate() {
        elems.push(Monomial::power(n, k + 1, ri));
    }
    MonomialSet::new(n, elems)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;

    fn example() -> MonomialSet {
        // {a b^2 c, a^3 b}
        MonomialSet::from_vectors(3, &[&[1, 2, 1], &[3, 1, 0]]).unwrap()
    }

    fn order(seq: &[usize]) -> LetterOrder {
        LetterOrder::from_sequence(seq.to_vec()).unwrap()
    }

    fn words(ws: &[&[usize]]) -> WordSet {
        WordSet::new(ws.iter().map(|w| Word::new(w.to_vec())))
    }

    #[test]
    fn fg_verdicts_on_worked_example() {
        let m = example();
        let w = is_fg_sorted(&m, &order(&[A, B, C])).unwrap();
        assert!(!w.verdict);
        let v = w.violator.unwrap();
        assert_eq!((v.member, v.letter), (0, B));

        assert!(is_fg_sorted(&m, &order(&[B, A, C])).unwrap().verdict);

        let w = is_fg_sorted(&m, &order(&[A, C, B])).unwrap();
        let v = w.violator.unwrap();
        assert_eq!((v.monomial.exponents(), v.letter), (&[3, 1, 0][..], C));
    }

    #[test]
    fn fg_rejects_bad_input() {
        let m = MonomialSet::from_vectors(2, &[&[1, 0], &[1, 1]]).unwrap();
        assert!(matches!(
            is_fg_sorted(&m, &LetterOrder::identity(2)),
            Err(Error::NotAntichain { .. })
        ));
        let m = MonomialSet::from_vectors(2, &[&[0, 0]]).unwrap();
        assert_eq!(
            is_fg_sorted(&m, &LetterOrder::identity(2)),
            Err(Error::UnitMonomial)
        );
    }

    #[test]
    fn generating_set_of_worked_example() {
        let gens = fg_generating_set(&example(), &order(&[B, A, C])).unwrap();
        assert_eq!(
            gens,
            words(&[&[B, B, A, C], &[B, B, A, A, C], &[B, A, A, A]])
        );
        assert_eq!(minimal_word_generators(&gens), gens);
        assert_eq!(
            fg_generating_set(&example(), &order(&[A, B, C])),
            Err(Error::NotFinitelyGenerated)
        );
    }

    #[test]
    fn generating_set_without_internal_letters_is_sigma() {
        let m = MonomialSet::from_vectors(3, &[&[2, 1, 0], &[0, 1, 1]]).unwrap();
        let ord = LetterOrder::identity(3);
        let expected = WordSet::new(m.iter().map(|w| w.sigma(&ord)));
        assert_eq!(fg_generating_set(&m, &ord).unwrap(), expected);
    }

    #[test]
    fn tight_family_sizes() {
        let m = tight_family(2, &[2]).unwrap();
        assert_eq!(
            m,
            MonomialSet::from_vectors(3, &[&[1, 0, 2], &[2, 0, 1], &[0, 2, 0]]).unwrap()
        );
        let ord = LetterOrder::identity(3);
        let gens = fg_generating_set(&m, &ord).unwrap();
        assert_eq!(gens.len(), 5);
        assert_eq!(generator_count_bound(&m, &ord).unwrap(), 5);

        let one = tight_family(1, &[]).unwrap();
        assert_eq!(one, MonomialSet::from_vectors(2, &[&[1, 1]]).unwrap());

        let m = tight_family(3, &[2, 2]).unwrap();
        let ord = LetterOrder::identity(4);
        let gens = minimal_word_generators(&fg_generating_set(&m, &ord).unwrap());
        assert_eq!(gens.len(), 14);
        assert!(tight_family(0, &[1]).is_err());
        assert!(tight_family(1, &[0]).is_err());
    }

    #[test]
    fn count_bound_examples() {
        let ord = order(&[B, A, C]);
        assert_eq!(generator_count_bound(&example(), &ord).unwrap(), 4);
        let flat = MonomialSet::from_vectors(3, &[&[1, 1, 0], &[0, 3, 3]]).unwrap();
        assert_eq!(
            generator_count_bound(&flat, &LetterOrder::identity(3)).unwrap(),
            2
        );
    }

    #[test]
    fn minimal_words() {
        let s = words(&[&[A, B], &[A, A, B], &[B, A]]);
        assert_eq!(minimal_word_generators(&s), words(&[&[A, B], &[B, A]]));
        let anti = words(&[&[A, A], &[B]]);
        assert_eq!(minimal_word_generators(&anti), anti);
    }

    #[test]
    fn eps_generators() {
        let fg = eps_minimal_generators(&example(), &order(&[B, A, C]), 10).unwrap();
        assert_eq!(fg, words(&[&[B, B, A, C], &[B, B, A, A, C], &[B, A, A, A]]));

        let infinite = eps_minimal_generators(&example(), &LetterOrder::identity(3), 8).unwrap();
        for j in 2..=6 {
            let mut w = vec![A];
            w.extend(std::iter::repeat_n(B, j));
            w.push(C);
            assert!(infinite.contains(&Word::new(w)));
        }
        assert!(infinite.contains(&Word::new(vec![A, A, A, B])));
        assert_eq!(infinite.len(), 6);

        let single = MonomialSet::from_vectors(1, &[&[1]]).unwrap();
        assert_eq!(
            eps_minimal_generators(&single, &LetterOrder::identity(1), 5).unwrap(),
            words(&[&[0]])
        );
    }

    #[test]
    fn groebner_lift_examples() {
        let lift = groebner_lift(&example(), &order(&[B, A, C])).unwrap();
        let expected = words(&[
            &[A, B],
            &[C, B],
            &[C, A],
            &[B, B, A, C],
            &[B, B, A, A, C],
            &[B, A, A, A],
        ]);
        assert_eq!(lift, expected);

        let empty = MonomialSet::empty(3);
        assert_eq!(
            groebner_lift(&empty, &LetterOrder::identity(3))
                .unwrap()
                .len(),
            3
        );

        let unary = MonomialSet::from_vectors(1, &[&[4]]).unwrap();
        assert_eq!(
            groebner_lift(&unary, &LetterOrder::identity(1)).unwrap(),
            words(&[&[0, 0, 0, 0]])
        );
        assert_eq!(
            groebner_lift(&example(), &LetterOrder::identity(3)),
            Err(Error::NotFinitelyGenerated)
        );
    }

    #[test]
    fn degree_bound() {
        // b<a<c: a internal to a b^2 c with r_a = 3
        assert_eq!(
            complete_degree_bound(&example(), &order(&[B, A, C])).unwrap(),
            6
        );
        let m = tight_family(2, &[2]).unwrap();
        assert_eq!(
            complete_degree_bound(&m, &LetterOrder::identity(3)).unwrap(),
            4
        );
    }
}
