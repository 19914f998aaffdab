//! Strategies and brute-force helpers shared by the property tests.
#![allow(dead_code)]

use monoideal::{LetterOrder, Monomial, MonomialSet};
use proptest::prelude::*;

pub fn order_of(n: usize) -> impl Strategy<Value = LetterOrder> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|s| LetterOrder::from_sequence(s).unwrap())
}

pub fn monomial(n: usize, max_exp: u64) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

/// A nonempty antichain of nonunit monomials: random generators, reduced.
pub fn antichain(n: usize, max_exp: u64, max_len: usize) -> impl Strategy<Value = MonomialSet> {
    prop::collection::vec(monomial(n, max_exp), 1..=max_len).prop_filter_map(
        "all generators were the unit",
        move |gens| {
            let gens: Vec<Monomial> = gens.into_iter().filter(|m| !m.is_unit()).collect();
            if gens.is_empty() {
                return None;
            }
            Some(MonomialSet::new(n, gens).unwrap().antichain_reduce())
        },
    )
}

/// Antichain with its alphabet size drawn from `1..=max_n`.
pub fn sized_antichain(
    max_n: usize,
    max_exp: u64,
    max_len: usize,
) -> impl Strategy<Value = MonomialSet> {
    (1..=max_n).prop_flat_map(move |n| antichain(n, max_exp, max_len))
}

pub fn antichain_with_order(
    max_n: usize,
    max_exp: u64,
    max_len: usize,
) -> impl Strategy<Value = (MonomialSet, LetterOrder)> {
    (1..=max_n).prop_flat_map(move |n| (antichain(n, max_exp, max_len), order_of(n)))
}

pub fn quadratic_pool(n: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in x..n {
            let mut e = vec![0; n];
            e[x] += 1;
            e[y] += 1;
            out.push(Monomial::new(e));
        }
    }
    out
}

/// A nonempty set of degree-two monomials over `n` letters.
pub fn quadratic(n: usize) -> impl Strategy<Value = MonomialSet> {
    let pool = quadratic_pool(n);
    let size = pool.len();
    prop::collection::vec(any::<bool>(), size)
        .prop_filter("empty selection", |picks| picks.iter().any(|&p| p))
        .prop_map(move |picks| {
            let gens = pool
                .iter()
                .zip(&picks)
                .filter(|(_, &p)| p)
                .map(|(m, _)| m.clone())
                .collect();
            MonomialSet::new(n, gens).unwrap()
        })
}

pub fn sized_quadratic(min_n: usize, max_n: usize) -> impl Strategy<Value = MonomialSet> {
    (min_n..=max_n).prop_flat_map(quadratic)
}

pub fn vectors(m: &MonomialSet) -> Vec<Vec<u64>> {
    m.iter().map(|g| g.exponents().to_vec()).collect()
}
