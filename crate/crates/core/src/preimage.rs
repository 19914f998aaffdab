//! Finite generation of the full preimage of a monomial ideal in the free
//! monoid.

use crate::error::Result;
use crate::monomial::{Letter, Monomial, MonomialSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageViolator {
    pub member: usize,
    pub monomial: Monomial,
    pub letter: Letter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageWitness {
    pub verdict: bool,
    pub violator: Option<PreimageViolator>,
}

impl PreimageWitness {
    fn holds() -> Self {
        PreimageWitness {
            verdict: true,
            violator: None,
        }
    }

    fn fails(member: usize, monomial: &Monomial, letter: Letter) -> Self {
        PreimageWitness {
            verdict: false,
            violator: Some(PreimageViolator {
                member,
                monomial: monomial.clone(),
                letter,
            }),
        }
    }
}

/// Letters `z` with a pure power `z^r` in `m`.
fn powered_letters(m: &MonomialSet) -> Vec<bool> {
    let mut powered = vec![false; m.arity()];
    for s in m {
        if s.support_size() == 1 {
            powered[s.support()[0]] = true;
        }
    }
    powered
}

/// Whether `m` contains `z^r t` with `t != z` of exponent exactly one and
/// `t` in `support`.
fn has_power_times_letter(m: &MonomialSet, z: Letter, target: &Monomial) -> bool {
    m.iter().any(|s| {
        if s.support_size() != 2 || !s.in_support(z) {
            return false;
        }
        let t = s
            .support()
            .into_iter()
            .find(|&t| t != z)
            .expect("two letters");
        s.degree_in(t) == 1 && target.in_support(t)
    })
}

/// For every member `m` and every letter `z` without a pure power in `M`,
/// if `erase(m, z)` has degree at least 2 then some `z^r t` in `M` has `t`
/// in the support of `m`.
pub fn preimage_fg(m: &MonomialSet) -> Result<PreimageWitness> {
    m.require_antichain()?;
    let powered = powered_letters(m);
    for (i, w) in m.iter().enumerate() {
        let total = w.total_degree()?;
        for (z, &has_power) in powered.iter().enumerate() {
            if has_power || total - w.degree_in(z) < 2 {
                continue;
            }
            if !has_power_times_letter(m, z, w) {
                return Ok(PreimageWitness::fails(i, w, z));
            }
        }
    }
    Ok(PreimageWitness::holds())
}

/// The pair formulation: for every member `m`, letters `x, y` with
/// `x y | m` (`x = y` allowed) and `z` different from both, some `w` in `M`
/// has `erase(w, z)` dividing `m / x` or `m / y`.
pub fn preimage_fg_pairs(m: &MonomialSet) -> Result<PreimageWitness> {
    m.require_antichain()?;
    let n = m.arity();
    for (i, w) in m.iter().enumerate() {
        for z in 0..n {
            for x in 0..n {
                for y in x..n {
                    if x == z || y == z {
                        continue;
                    }
                    let divides = if x == y {
                        w.degree_in(x) >= 2
                    } else {
                        w.in_support(x) && w.in_support(y)
                    };
                    if !divides {
                        continue;
                    }
                    let without_x = w.div_letter(x).expect("x divides m");
                    let without_y = w.div_letter(y).expect("y divides m");
                    let helped = m.iter().any(|s| {
                        s.erased_divides(z, &without_x) || s.erased_divides(z, &without_y)
                    });
                    if !helped {
                        return Ok(PreimageWitness::fails(i, w, z));
                    }
                }
            }
        }
    }
    Ok(PreimageWitness::holds())
}

/// Per letter, the largest exponent it has among members with at most two
/// support letters.
pub fn preimage_degree_bounds(m: &MonomialSet) -> Vec<u64> {
    let mut bounds = vec![0u64; m.arity()];
    for s in m.iter().filter(|s| s.support_size() <= 2) {
        for (b, &e) in bounds.iter_mut().zip(s.exponents()) {
            *b = (*b).max(e);
        }
    }
    bounds
}

/// Replaces every letter by its square.
pub fn square_letters(m: &MonomialSet) -> Result<MonomialSet> {
    m.square_letters()
}
