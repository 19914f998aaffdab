//! Monomials, words, letter orderings and the maps between them.
//!
//! Letters are indices `0..n`. A [`Monomial`] is an exponent vector of
//! length `n`; a [`Word`] is a finite letter sequence. A [`LetterOrder`]
//! fixes the total order used to sort words and to classify the letters
//! of a monomial as extremal or internal.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter in its alphabet.
pub type Letter = usize;

/// Display names for the letters `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be nonempty".into()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() || !seen.insert(name.as_str()) {
                return Err(Error::InvalidAlphabet(format!(
                    "letter name {name:?} is empty or repeated"
                )));
            }
        }
        Ok(Alphabet { names })
    }

    /// `a, b, c, ...` for up to 26 letters, `x1, x2, ...` beyond that.
    pub fn standard(n: usize) -> Self {
        let names = if n <= 26 {
            (0..n)
                .map(|i| ((b'a' + i as u8) as char).to_string())
                .collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Alphabet { names }
    }

    /// `x1, ..., xn`.
    pub fn indexed(n: usize) -> Self {
        Alphabet {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn empty() -> Self {
        Alphabet { names: Vec::new() }
    }

    pub(crate) fn push(&mut self, name: String) -> Letter {
        self.names.push(name);
        self.names.len() - 1
    }

    fn single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Words render as concatenated names when every name is one character,
    /// and as space-separated names otherwise.
    pub fn format_word(&self, word: &Word) -> String {
        let parts = word.letters().iter().map(|&l| self.name(l));
        if self.single_char() {
            parts.collect()
        } else {
            parts.collect::<Vec<_>>().join(" ")
        }
    }

    /// `a b^2 c`; the unit renders as `1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(l, &e)| {
                if e == 1 {
                    self.name(l).to_string()
                } else {
                    format!("{}^{}", self.name(l), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// An element of the free commutative monoid, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

/// Extremal and internal letters of a monomial under an ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub min: Letter,
    pub max: Letter,
    /// Letters strictly between `min` and `max`, in increasing order.
    pub internal: Vec<Letter>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial { exps }
    }

    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x^k` over an alphabet of size `n`.
    pub fn power(n: usize, x: Letter, k: u64) -> Self {
        let mut exps = vec![0; n];
        exps[x] = k;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    /// Size of the alphabet this monomial lives over.
    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree_in(&self, x: Letter) -> u64 {
        self.exps[x]
    }

    pub fn total_degree(&self) -> Result<u64> {
        self.exps
            .iter()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .ok_or(Error::Overflow)
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> Vec<Letter> {
        self.exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(l, _)| l)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    pub fn in_support(&self, x: Letter) -> bool {
        self.exps.get(x).is_some_and(|&e| e > 0)
    }

    fn check_same(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                expected: self.exps.len(),
                found: other.exps.len(),
            })
        }
    }

    fn check_letter(&self, x: Letter) -> Result<()> {
        if x < self.exps.len() {
            Ok(())
        } else {
            Err(Error::InvalidLetter {
                letter: x,
                size: self.exps.len(),
            })
        }
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Whether `erase(self, x)` divides `other`, without allocating.
    pub(crate) fn erased_divides(&self, x: Letter, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .enumerate()
            .all(|(l, (a, b))| l == x || a <= b)
    }

    /// The monomial with `x` evaluated to 1.
    pub fn erase(&self, x: Letter) -> Result<Monomial> {
        self.check_letter(x)?;
        let mut exps = self.exps.clone();
        exps[x] = 0;
        Ok(Monomial { exps })
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// `self * x`.
    pub fn mul_letter(&self, x: Letter) -> Result<Monomial> {
        self.check_letter(x)?;
        let mut exps = self.exps.clone();
        exps[x] = exps[x].checked_add(1).ok_or(Error::Overflow)?;
        Ok(Monomial { exps })
    }

    /// `self * x^-1`, if `x` divides `self`.
    pub fn div_letter(&self, x: Letter) -> Option<Monomial> {
        if !self.in_support(x) {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[x] -= 1;
        Some(Monomial { exps })
    }

    /// Every exponent multiplied by `k`.
    pub fn scale(&self, k: u64) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|e| e.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn extremes(&self, ord: &LetterOrder) -> Result<Extremes> {
        if ord.len() != self.exps.len() {
            return Err(Error::AlphabetMismatch {
                expected: self.exps.len(),
                found: ord.len(),
            });
        }
        let mut lo = usize::MAX;
        let mut hi = 0usize;
        for l in self.support() {
            let r = ord.rank(l);
            lo = lo.min(r);
            hi = hi.max(r);
        }
        if lo == usize::MAX {
            return Err(Error::EmptySupport);
        }
        Ok(Extremes {
            min: ord.letter_at(lo),
            max: ord.letter_at(hi),
            internal: (lo + 1..hi).map(|r| ord.letter_at(r)).collect(),
        })
    }

    /// Whether `x` is the smallest or the largest support letter under `ord`.
    pub fn is_extremal(&self, x: Letter, ord: &LetterOrder) -> bool {
        if !self.in_support(x) {
            return false;
        }
        let rx = ord.rank(x);
        let below = self.support().into_iter().any(|l| ord.rank(l) < rx);
        let above = self.support().into_iter().any(|l| ord.rank(l) > rx);
        !(below && above)
    }

    /// The sorted word with abelianization `self`.
    pub fn sigma(&self, ord: &LetterOrder) -> Word {
        let mut letters = Vec::new();
        for &l in ord.sequence() {
            for _ in 0..self.exps[l] {
                letters.push(l);
            }
        }
        Word(letters)
    }
}

/// An element of the free monoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Abelianization over an alphabet of size `n`.
    pub fn pi(&self, n: usize) -> Result<Monomial> {
        let mut exps = vec![0u64; n];
        for &l in &self.0 {
            if l >= n {
                return Err(Error::InvalidLetter { letter: l, size: n });
            }
            exps[l] += 1;
        }
        Ok(Monomial { exps })
    }

    /// The sorting map: rearranges the letters in increasing order.
    pub fn sorted(&self, ord: &LetterOrder) -> Word {
        let mut letters = self.0.clone();
        letters.sort_by_key(|&l| ord.rank(l));
        Word(letters)
    }

    /// `self` occurs as a contiguous block of `other`.
    pub fn is_factor_of(&self, other: &Word) -> bool {
        is_factor(&self.0, &other.0)
    }

    /// Words ordered by length, then lexicographically by letter index.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

pub(crate) fn is_factor(u: &[Letter], v: &[Letter]) -> bool {
    u.is_empty() || (u.len() <= v.len() && v.windows(u.len()).any(|w| w == u))
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// A total order on the letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LetterOrder {
    rank: Vec<usize>,
    seq: Vec<Letter>,
}

impl LetterOrder {
    /// From the letters listed in increasing order.
    pub fn from_sequence(seq: Vec<Letter>) -> Result<Self> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &l) in seq.iter().enumerate() {
            if l >= n || rank[l] != usize::MAX {
                return Err(Error::InvalidOrdering(format!(
                    "{seq:?} is not a permutation of 0..{n}"
                )));
            }
            rank[l] = pos;
        }
        Ok(LetterOrder { rank, seq })
    }

    pub fn identity(n: usize) -> Self {
        LetterOrder {
            rank: (0..n).collect(),
            seq: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn rank(&self, x: Letter) -> usize {
        self.rank[x]
    }

    pub fn letter_at(&self, pos: usize) -> Letter {
        self.seq[pos]
    }

    /// Letters in increasing order.
    pub fn sequence(&self) -> &[Letter] {
        &self.seq
    }

    pub fn precedes(&self, a: Letter, b: Letter) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn reversed(&self) -> Self {
        let mut seq = self.seq.clone();
        seq.reverse();
        LetterOrder::from_sequence(seq).expect("reverse of a permutation")
    }

    /// All `n!` orderings in lexicographic order of their sequences.
    pub fn all(n: usize) -> AllOrders {
        AllOrders {
            next: Some((0..n).collect()),
        }
    }
}

impl fmt::Display for LetterOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.seq.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" < "))
    }
}

/// Iterator over every permutation of `0..n`.
pub struct AllOrders {
    next: Option<Vec<Letter>>,
}

impl Iterator for AllOrders {
    type Item = LetterOrder;

    fn next(&mut self) -> Option<LetterOrder> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(LetterOrder::from_sequence(current).expect("permutation"))
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A finite set of monomials over one alphabet. Insertion order is kept
/// because witnesses are reported in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    arity: usize,
    elems: Vec<Monomial>,
}

impl MonomialSet {
    /// Duplicates are dropped, keeping the first occurrence.
    pub fn new(arity: usize, elems: Vec<Monomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut kept = Vec::with_capacity(elems.len());
        for m in elems {
            if m.arity() != arity {
                return Err(Error::AlphabetMismatch {
                    expected: arity,
                    found: m.arity(),
                });
            }
            if seen.insert(m.clone()) {
                kept.push(m);
            }
        }
        Ok(MonomialSet { arity, elems: kept })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_vectors(arity: usize, vectors: &[&[u64]]) -> Result<Self> {
        Self::new(
            arity,
            vectors.iter().map(|v| Monomial::new(v.to_vec())).collect(),
        )
    }

    pub fn empty(arity: usize) -> Self {
        MonomialSet {
            arity,
            elems: Vec::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn members(&self) -> &[Monomial] {
        &self.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Monomial> {
        self.elems.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elems.contains(m)
    }

    /// Same members, listed lexicographically by exponent vector.
    pub fn canonical(&self) -> MonomialSet {
        let mut elems = self.elems.clone();
        elems.sort();
        MonomialSet {
            arity: self.arity,
            elems,
        }
    }

    /// The divisibility-minimal members, in input order.
    pub fn antichain_reduce(&self) -> MonomialSet {
        let elems = self
            .elems
            .iter()
            .enumerate()
            .filter(|(i, m)| {
                !self
                    .elems
                    .iter()
                    .enumerate()
                    .any(|(j, d)| j != *i && d.divides_unchecked(m))
            })
            .map(|(_, m)| m.clone())
            .collect();
        MonomialSet {
            arity: self.arity,
            elems,
        }
    }

    /// First pair `(i, j)` with member `i` dividing member `j`.
    pub fn comparable_pair(&self) -> Option<(usize, usize)> {
        for (j, m) in self.elems.iter().enumerate() {
            for (i, d) in self.elems.iter().enumerate() {
                if i != j && d.divides_unchecked(m) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_antichain(&self) -> bool {
        self.comparable_pair().is_none()
    }

    /// Fails unless the set is an antichain without the unit.
    pub fn require_antichain(&self) -> Result<()> {
        if self.elems.iter().any(Monomial::is_unit) {
            return Err(Error::UnitMonomial);
        }
        match self.comparable_pair() {
            Some((divisor, multiple)) => Err(Error::NotAntichain { divisor, multiple }),
            None => Ok(()),
        }
    }

    pub fn require_order(&self, ord: &LetterOrder) -> Result<()> {
        if ord.len() == self.arity {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                expected: self.arity,
                found: ord.len(),
            })
        }
    }

    /// Members whose support has at most `k` letters.
    pub fn support_filter(&self, k: usize) -> MonomialSet {
        MonomialSet {
            arity: self.arity,
            elems: self
                .elems
                .iter()
                .filter(|m| m.support_size() <= k)
                .cloned()
                .collect(),
        }
    }

    /// Largest degree with which `x` occurs as an extremal letter; 0 if never.
    pub fn extremal_degree_max(&self, x: Letter, ord: &LetterOrder) -> Result<u64> {
        self.require_order(ord)?;
        if x >= self.arity {
            return Err(Error::InvalidLetter {
                letter: x,
                size: self.arity,
            });
        }
        Ok(self
            .elems
            .iter()
            .filter(|m| m.is_extremal(x, ord))
            .map(|m| m.degree_in(x))
            .max()
            .unwrap_or(0))
    }

    /// Every exponent doubled.
    pub fn square_letters(&self) -> Result<MonomialSet> {
        let elems = self
            .elems
            .iter()
            .map(|m| m.scale(2))
            .collect::<Result<Vec<_>>>()?;
        MonomialSet::new(self.arity, elems)
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = std::slice::Iter<'a, Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}
