//! Ideals of `N^n` presented by inequalities: `I(A, W)` is the set of `x`
//! with `A x >= w` for some `w` in `W`, `A` nonnegative.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{LetterOrder, Monomial, MonomialSet};
use crate::preimage::preimage_fg;
use crate::sorted_ideal::is_fg_sorted;

/// Lattice points a box scan may visit by default.
pub const DEFAULT_BOX_BUDGET: u64 = 10_000_000;

#[derive(Deserialize)]
struct RawSystem {
    #[serde(rename = "A")]
    a: Vec<Vec<u64>>,
    #[serde(rename = "W")]
    w: Vec<Vec<u64>>,
    #[serde(default)]
    vars: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSystem")]
pub struct IneqSystem {
    #[serde(rename = "A")]
    a: Vec<Vec<u64>>,
    #[serde(rename = "W")]
    w: Vec<Vec<u64>>,
    vars: Vec<String>,
}

impl TryFrom<RawSystem> for IneqSystem {
    type Error = Error;

    fn try_from(raw: RawSystem) -> Result<Self> {
        let n = match (&raw.vars, raw.a.first()) {
            (Some(v), _) => v.len(),
            (None, Some(row)) => row.len(),
            (None, None) => {
                return Err(Error::InvalidInstance(
                    "a system without rows needs \"vars\"".into(),
                ))
            }
        };
        let sys = IneqSystem::new(n, raw.a, raw.w)?;
        match raw.vars {
            Some(v) => sys.with_vars(v),
            None => Ok(sys),
        }
    }
}

fn default_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl IneqSystem {
    /// `a` is `m x n`, every threshold has length `m`. Duplicate thresholds
    /// are dropped.
    pub fn new(n: usize, a: Vec<Vec<u64>>, w: Vec<Vec<u64>>) -> Result<Self> {
        for row in &a {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        let mut thresholds: Vec<Vec<u64>> = Vec::with_capacity(w.len());
        for t in w {
            if t.len() != a.len() {
                return Err(Error::DimensionMismatch {
                    expected: a.len(),
                    found: t.len(),
                });
            }
            if !thresholds.contains(&t) {
                thresholds.push(t);
            }
        }
        Ok(IneqSystem {
            a,
            w: thresholds,
            vars: default_vars(n),
        })
    }

    pub fn with_vars(mut self, vars: Vec<String>) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                found: vars.len(),
            });
        }
        self.vars = vars;
        Ok(self)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn row_count(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.a
    }

    pub fn thresholds(&self) -> &[Vec<u64>] {
        &self.w
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn max_threshold(&self) -> u64 {
        self.w.iter().flatten().copied().max().unwrap_or(0)
    }

    fn check_dim(&self, x: &[u64]) -> Result<()> {
        if x.len() == self.arity() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.arity(),
                found: x.len(),
            })
        }
    }

    fn image(&self, x: &[u64]) -> Vec<u128> {
        self.a
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .map(|(&a, &v)| u128::from(a) * u128::from(v))
                    .fold(0u128, u128::saturating_add)
            })
            .collect()
    }

    fn contains_unchecked(&self, x: &[u64]) -> bool {
        let ax = self.image(x);
        self.w
            .iter()
            .any(|t| ax.iter().zip(t).all(|(&v, &b)| v >= u128::from(b)))
    }

    pub fn membership(&self, x: &[u64]) -> Result<bool> {
        self.check_dim(x)?;
        Ok(self.contains_unchecked(x))
    }

    fn is_minimal_unchecked(&self, x: &[u64]) -> bool {
        if !self.contains_unchecked(x) {
            return false;
        }
        let mut y = x.to_vec();
        for i in 0..y.len() {
            if y[i] == 0 {
                continue;
            }
            y[i] -= 1;
            let below = self.contains_unchecked(&y);
            y[i] += 1;
            if below {
                return false;
            }
        }
        true
    }

    /// In the ideal, and no longer so after lowering any positive coordinate.
    pub fn is_minimal_generator(&self, x: &[u64]) -> Result<bool> {
        self.check_dim(x)?;
        Ok(self.is_minimal_unchecked(x))
    }

    /// All minimal generators, lexicographically. Every coordinate of a
    /// minimal generator is at most the largest threshold entry, so the scan
    /// covers `[0, max W]^n`.
    pub fn enumerate_minimal_generators(&self, budget: u64) -> Result<Vec<Vec<u64>>> {
        let n = self.arity();
        let side = self.max_threshold().saturating_add(1);
        let points = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(side));
        if points.is_none_or(|p| p > budget) {
            return Err(Error::BudgetExceeded { limit: budget });
        }
        let mut out = Vec::new();
        for_each_point(n, side - 1, &mut |x| {
            if self.is_minimal_unchecked(x) {
                out.push(x.to_vec());
            }
        });
        Ok(out)
    }

    /// The minimal generators as a monomial antichain.
    pub fn generators(&self, budget: u64) -> Result<MonomialSet> {
        let gens = self.enumerate_minimal_generators(budget)?;
        MonomialSet::new(self.arity(), gens.into_iter().map(Monomial::new).collect())
    }
}

/// Visits `[0, hi]^n` in lexicographic order.
fn for_each_point(n: usize, hi: u64, f: &mut dyn FnMut(&[u64])) {
    let mut x = vec![0u64; n];
    loop {
        f(&x);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if x[i] < hi {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
    }
}

/// The identity presentation `I(I_n, M)` of the ideal generated by `M`.
pub fn from_generators(m: &MonomialSet) -> IneqSystem {
    let n = m.arity();
    let a = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    let w = m.iter().map(|g| g.exponents().to_vec()).collect();
    IneqSystem::new(n, a, w).expect("square identity")
}

/// Stacks the matrices; each threshold is padded with zeros on the rows of
/// the other systems, so membership is the disjunction of the inputs.
pub fn union(systems: &[IneqSystem]) -> Result<IneqSystem> {
    let Some(first) = systems.first() else {
        return Err(Error::InvalidInstance("union of no systems".into()));
    };
    let n = first.arity();
    let total: usize = systems.iter().map(IneqSystem::row_count).sum();
    let mut a = Vec::with_capacity(total);
    let mut w = Vec::new();
    for s in systems {
        if s.arity() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: s.arity(),
            });
        }
        let offset = a.len();
        a.extend(s.a.iter().cloned());
        for t in &s.w {
            let mut padded = vec![0; total];
            padded[offset..offset + t.len()].copy_from_slice(t);
            w.push(padded);
        }
    }
    IneqSystem::new(n, a, w)?.with_vars(first.vars.clone())
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `coeffs . y >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Halfspace {
    coeffs: Vec<i128>,
    rhs: i128,
}

impl Halfspace {
    fn normalized(mut self) -> Self {
        let g = self.coeffs.iter().fold(self.rhs, |g, &c| gcd(g, c));
        if g > 1 {
            self.coeffs.iter_mut().for_each(|c| *c /= g);
            self.rhs /= g;
        }
        self
    }
}

/// Fourier-Motzkin elimination over the reals with integer coefficients.
fn feasible(mut rows: Vec<Halfspace>, vars: usize) -> bool {
    for k in 0..vars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r.coeffs[k].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => rest.push(r),
            }
        }
        for p in &pos {
            for q in &neg {
                let (cp, cq) = (p.coeffs[k], -q.coeffs[k]);
                let combined = Halfspace {
                    coeffs: p
                        .coeffs
                        .iter()
                        .zip(&q.coeffs)
                        .map(|(&a, &b)| cq * a + cp * b)
                        .collect(),
                    rhs: cq * p.rhs + cp * q.rhs,
                }
                .normalized();
                rest.push(combined);
            }
        }
        rest.retain(|r| r.coeffs.iter().any(|&c| c != 0) || r.rhs > 0);
        if rest.iter().any(|r| r.coeffs.iter().all(|&c| c == 0)) {
            return false;
        }
        rest.sort();
        rest.dedup();
        rows = rest;
    }
    true
}

/// Whether `x` lies in `conv(M) + R^n_+`. By duality this fails exactly when
/// some `y >= 0` has `y . (m - x) >= 1` for every `m` in `M`.
pub fn in_convex_region(m: &MonomialSet, x: &[u64]) -> Result<bool> {
    let n = m.arity();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if m.is_empty() {
        return Ok(false);
    }
    let mut rows: Vec<Halfspace> = m
        .iter()
        .map(|g| Halfspace {
            coeffs: g
                .exponents()
                .iter()
                .zip(x)
                .map(|(&a, &b)| i128::from(a) - i128::from(b))
                .collect(),
            rhs: 1,
        })
        .collect();
    for i in 0..n {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        rows.push(Halfspace { coeffs, rhs: 0 });
    }
    Ok(!feasible(rows, n))
}

/// Whether the ideal generated by `M` contains every lattice point of
/// `conv(M) + R^n_+` inside the box `[0, d + 1]^n`, `d` the largest
/// exponent in `M`.
pub fn convexity_check(m: &MonomialSet, budget: u64) -> Result<bool> {
    let n = m.arity();
    let d = m
        .iter()
        .flat_map(|g| g.exponents())
        .copied()
        .max()
        .unwrap_or(0);
    let side = d.saturating_add(2);
    let points = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(side));
    if points.is_none_or(|p| p > budget) {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    let sys = from_generators(m);
    let mut convex = true;
    let mut err = None;
    for_each_point(n, d + 1, &mut |x| {
        if !convex || err.is_some() || sys.contains_unchecked(x) {
            return;
        }
        match in_convex_region(m, x) {
            Ok(true) => convex = false,
            Ok(false) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(convex),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// A minimal generator with three or more support letters.
    Support3,
    /// A minimal generator and a letter violating the preimage criterion.
    PreimageNotFg,
    /// A minimal generator and an internal letter violating the sorted
    /// finiteness criterion.
    SortedNotFg,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub generator: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub letter: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<usize>>,
}

fn cert_letter(sys: &IneqSystem, cert: &Certificate) -> Result<usize> {
    match cert.letter {
        Some(z) if z < sys.arity() => Ok(z),
        Some(z) => Err(Error::MalformedCertificate(format!(
            "letter {z} outside 0..{}",
            sys.arity()
        ))),
        None => Err(Error::MalformedCertificate(format!(
            "{:?} certificate needs a letter",
            cert.kind
        ))),
    }
}

fn cert_ordering(sys: &IneqSystem, cert: &Certificate) -> Result<LetterOrder> {
    match &cert.ordering {
        None => Ok(LetterOrder::identity(sys.arity())),
        Some(seq) => {
            let ord = LetterOrder::from_sequence(seq.clone())
                .map_err(|e| Error::MalformedCertificate(e.to_string()))?;
            if ord.len() != sys.arity() {
                return Err(Error::MalformedCertificate(format!(
                    "ordering has {} letters, system has {}",
                    ord.len(),
                    sys.arity()
                )));
            }
            Ok(ord)
        }
    }
}

/// Checks a certificate of a negative answer in polynomial time.
///
/// `sorted_not_fg` uses `cert.ordering` (index order when absent): `m<-`
/// keeps the coordinates ranked at most the letter, `m->` those ranked at
/// least it, and both must lie outside the system restricted to rows not
/// involving the letter.
pub fn verify_certificate(sys: &IneqSystem, cert: &Certificate) -> Result<bool> {
    let m = &cert.generator;
    if m.len() != sys.arity() {
        return Err(Error::MalformedCertificate(format!(
            "generator has {} coordinates, system has {}",
            m.len(),
            sys.arity()
        )));
    }
    if !sys.is_minimal_unchecked(m) {
        return Ok(false);
    }
    match cert.kind {
        CertificateKind::Support3 => Ok(m.iter().filter(|&&v| v > 0).count() >= 3),
        CertificateKind::PreimageNotFg => {
            let z = cert_letter(sys, cert)?;
            let rest: u128 = m
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != z)
                .map(|(_, &v)| u128::from(v))
                .sum();
            if rest < 2 {
                return Ok(false);
            }
            let a = sys.matrix();
            let no_power = sys
                .thresholds()
                .iter()
                .all(|w| (0..a.len()).any(|i| w[i] > 0 && a[i][z] == 0));
            if !no_power {
                return Ok(false);
            }
            let no_partner = (0..sys.arity()).filter(|&t| t != z && m[t] > 0).all(|t| {
                sys.thresholds()
                    .iter()
                    .all(|w| (0..a.len()).any(|i| w[i] > a[i][t] && a[i][z] == 0))
            });
            Ok(no_partner)
        }
        CertificateKind::SortedNotFg => {
            let x = cert_letter(sys, cert)?;
            let ord = cert_ordering(sys, cert)?;
            let ranks: Vec<usize> = (0..m.len())
                .filter(|&i| m[i] > 0)
                .map(|i| ord.rank(i))
                .collect();
            let (Some(&lo), Some(&hi)) = (ranks.iter().min(), ranks.iter().max()) else {
                return Ok(false);
            };
            let rx = ord.rank(x);
            if !(lo < rx && rx < hi) {
                return Ok(false);
            }
            let keep: Vec<usize> = (0..sys.row_count()).filter(|&i| sys.a[i][x] == 0).collect();
            let restricted = IneqSystem::new(
                sys.arity(),
                keep.iter().map(|&i| sys.a[i].clone()).collect(),
                sys.w
                    .iter()
                    .map(|w| keep.iter().map(|&i| w[i]).collect())
                    .collect(),
            )?;
            let left: Vec<u64> = (0..m.len())
                .map(|i| if ord.rank(i) > rx { 0 } else { m[i] })
                .collect();
            let right: Vec<u64> = (0..m.len())
                .map(|i| if ord.rank(i) < rx { 0 } else { m[i] })
                .collect();
            Ok(!restricted.contains_unchecked(&left) && !restricted.contains_unchecked(&right))
        }
    }
}

/// Searches the enumerated minimal generators for a certificate of the
/// given kind that [`verify_certificate`] accepts.
pub fn find_certificate(
    sys: &IneqSystem,
    kind: CertificateKind,
    ordering: Option<&LetterOrder>,
    budget: u64,
) -> Result<Option<Certificate>> {
    let gens = sys.enumerate_minimal_generators(budget)?;
    let letters: Vec<Option<usize>> = match kind {
        CertificateKind::Support3 => vec![None],
        _ => (0..sys.arity()).map(Some).collect(),
    };
    let ordering = match kind {
        CertificateKind::SortedNotFg => ordering.map(|o| o.sequence().to_vec()),
        _ => None,
    };
    for g in gens {
        for &letter in &letters {
            let cert = Certificate {
                kind,
                generator: g.clone(),
                letter,
                ordering: ordering.clone(),
            };
            if verify_certificate(sys, &cert)? {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// The minimal-generator answer to "is this ideal generated in support at
/// most two?".
pub fn generated_in_support2(sys: &IneqSystem, budget: u64) -> Result<bool> {
    Ok(sys
        .enumerate_minimal_generators(budget)?
        .iter()
        .all(|g| g.iter().filter(|&&v| v > 0).count() <= 2))
}

/// Finite generation of the sorted-word ideal, decided on the enumerated
/// minimal generators.
pub fn sorted_fg(sys: &IneqSystem, ord: &LetterOrder, budget: u64) -> Result<bool> {
    Ok(is_fg_sorted(&sys.generators(budget)?, ord)?.verdict)
}

/// Finite generation of the full preimage, decided on the enumerated
/// minimal generators.
pub fn preimage_fg_system(sys: &IneqSystem, budget: u64) -> Result<bool> {
    Ok(preimage_fg(&sys.generators(budget)?)?.verdict)
}

/// A CNF formula; literals are signed 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatInstance {
    variable_count: usize,
    clauses: Vec<Vec<i32>>,
}

impl SatInstance {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for c in &clauses {
            if c.is_empty() {
                return Err(Error::InvalidInstance("empty clause".into()));
            }
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > variable_count {
                    return Err(Error::InvalidInstance(format!(
                        "literal {l} outside 1..={variable_count}"
                    )));
                }
            }
        }
        Ok(SatInstance {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn is_satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    /// A satisfying assignment by exhaustive search (at most 24 variables).
    pub fn brute_force(&self) -> Result<Option<Vec<bool>>> {
        let n = self.variable_count;
        if n > 24 {
            return Err(Error::InvalidInstance(format!(
                "{n} variables exceeds the brute-force limit of 24"
            )));
        }
        Ok((0u32..1 << n)
            .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_satisfied(a)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SatTarget {
    /// Generation in support at most two.
    Mdois,
    /// Finite generation of the sorted-word ideal, index order.
    Imfg,
    /// Finite generation of the full preimage.
    Pinfg,
}

/// Variable layout of a reduction instance.
struct Layout {
    offset: usize,
    n: usize,
}

impl Layout {
    fn lit(&self, l: i32) -> usize {
        let v = l.unsigned_abs() as usize - 1;
        self.offset + 2 * v + usize::from(l < 0)
    }

    fn arity(&self) -> usize {
        self.offset + 2 * self.n
    }

    fn names(&self, extra: &[&str]) -> Vec<String> {
        let mut v: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        for i in 1..=self.n {
            v.push(format!("x{i}"));
            v.push(format!("~x{i}"));
        }
        v
    }
}

fn single(n: usize, rows: Vec<Vec<u64>>, w: u64) -> IneqSystem {
    let m = rows.len();
    IneqSystem::new(n, rows, vec![vec![w; m]]).expect("consistent rows")
}

fn row(n: usize, entries: &[usize]) -> Vec<u64> {
    let mut r = vec![0; n];
    for &i in entries {
        r[i] += 1;
    }
    r
}

/// Builds the inequality instance whose answer is negative exactly when the
/// formula is satisfiable (at least three variables).
///
/// Variables are the literals `x1, ~x1, x2, ~x2, ...`, preceded by `y, z`
/// for `Imfg` and by `y` for `Pinfg`. `I0` holds one "sum of literals >= 1"
/// row per clause and `xi + ~xi >= 1` per variable; `Ii` is `xi + ~xi >= 2`.
/// `Mdois` is the union of `I0` and every `Ii`; `Imfg` adds `y >= 1` to `I0`;
/// `Pinfg` is `I0`, `y >= 2`, and every `Ii` with `y >= 1` added.
pub fn sat_reduction(inst: &SatInstance, target: SatTarget) -> Result<IneqSystem> {
    let nv = inst.variable_count;
    if nv < 3 {
        return Err(Error::InvalidInstance(format!(
            "the reductions need at least 3 variables, got {nv}"
        )));
    }
    let (layout, extra): (Layout, &[&str]) = match target {
        SatTarget::Mdois => (Layout { offset: 0, n: nv }, &[]),
        SatTarget::Imfg => (Layout { offset: 2, n: nv }, &["y", "z"]),
        SatTarget::Pinfg => (Layout { offset: 1, n: nv }, &["y"]),
    };
    let n = layout.arity();
    let mut base: Vec<Vec<u64>> = inst
        .clauses
        .iter()
        .map(|c| row(n, &c.iter().map(|&l| layout.lit(l)).collect::<Vec<_>>()))
        .collect();
    for v in 1..=nv as i32 {
        base.push(row(n, &[layout.lit(v), layout.lit(-v)]));
    }
    let pair = |v: i32| row(n, &[layout.lit(v), layout.lit(-v)]);
    let mut parts = Vec::new();
    match target {
        SatTarget::Mdois => {
            parts.push(single(n, base, 1));
            for v in 1..=nv as i32 {
                parts.push(single(n, vec![pair(v)], 2));
            }
        }
        SatTarget::Imfg => {
            base.push(row(n, &[0]));
            parts.push(single(n, base, 1));
            for v in 1..=nv as i32 {
                parts.push(single(n, vec![pair(v)], 2));
            }
        }
        SatTarget::Pinfg => {
            parts.push(single(n, base, 1));
            parts.push(single(n, vec![row(n, &[0])], 2));
            for v in 1..=nv as i32 {
                let rows = vec![pair(v), row(n, &[0])];
                parts.push(IneqSystem::new(n, rows, vec![vec![2, 1]]).expect("two rows"));
            }
        }
    }
    union(&parts)?.with_vars(layout.names(extra))
}

/// The negative-answer point for a satisfying assignment: one literal per
/// variable (plus `y = 1` for `Imfg`).
pub fn assignment_vector(inst: &SatInstance, target: SatTarget, assignment: &[bool]) -> Vec<u64> {
    let nv = inst.variable_count;
    let offset = match target {
        SatTarget::Mdois => 0,
        SatTarget::Imfg => 2,
        SatTarget::Pinfg => 1,
    };
    let layout = Layout { offset, n: nv };
    let mut x = vec![0; layout.arity()];
    for (i, &val) in assignment.iter().enumerate() {
        let v = i as i32 + 1;
        x[layout.lit(if val { v } else { -v })] = 1;
    }
    if target == SatTarget::Imfg {
        x[0] = 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sum_at_least(k: u64) -> IneqSystem {
        IneqSystem::new(2, vec![vec![1, 1]], vec![vec![k]]).unwrap()
    }

    fn at_least(n: usize, i: usize, k: u64) -> IneqSystem {
        IneqSystem::new(n, vec![row(n, &[i])], vec![vec![k]]).unwrap()
    }

    #[test]
    fn membership_examples() {
        let s = sum_at_least(5);
        assert!(s.membership(&[2, 3]).unwrap());
        assert!(!s.membership(&[2, 2]).unwrap());
        let empty = IneqSystem::new(2, vec![vec![1, 1]], vec![]).unwrap();
        assert!(!empty.membership(&[9, 9]).unwrap());
        assert!(s.membership(&[1]).is_err());
    }

    #[test]
    fn minimal_generator_examples() {
        let s = sum_at_least(5);
        assert!(s.is_minimal_generator(&[2, 3]).unwrap());
        assert!(!s.is_minimal_generator(&[3, 3]).unwrap());
        assert!(!s.is_minimal_generator(&[1, 1]).unwrap());
        let gens = s.enumerate_minimal_generators(DEFAULT_BOX_BUDGET).unwrap();
        assert_eq!(gens.len(), 6);
        assert!(gens.iter().all(|g| g[0] + g[1] == 5));
    }

    #[test]
    fn generators_round_trip() {
        let m = MonomialSet::from_vectors(3, &[&[2, 0, 0], &[0, 1, 1]]).unwrap();
        let s = from_generators(&m);
        assert_eq!(s.thresholds(), &[vec![2, 0, 0], vec![0, 1, 1]]);
        assert!(s.membership(&[2, 5, 0]).unwrap());
        assert!(!s.membership(&[1, 1, 0]).unwrap());
        let single = MonomialSet::from_vectors(3, &[&[1, 2, 1]]).unwrap();
        assert_eq!(
            from_generators(&single)
                .enumerate_minimal_generators(DEFAULT_BOX_BUDGET)
                .unwrap(),
            vec![vec![1, 2, 1]]
        );
    }

    #[test]
    fn union_examples() {
        let u = union(&[at_least(2, 0, 2), at_least(2, 1, 2)]).unwrap();
        assert_eq!(u.matrix(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(u.thresholds(), &[vec![2, 0], vec![0, 2]]);
        assert!(u.membership(&[2, 0]).unwrap());
        assert_eq!(
            u.enumerate_minimal_generators(DEFAULT_BOX_BUDGET).unwrap(),
            vec![vec![0, 2], vec![2, 0]]
        );
        let s = sum_at_least(3);
        assert_eq!(union(std::slice::from_ref(&s)).unwrap(), s);
        assert!(union(&[at_least(2, 0, 1), at_least(3, 0, 1)]).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let s = IneqSystem::new(8, vec![vec![1; 8]], vec![vec![100]]).unwrap();
        assert_eq!(
            s.enumerate_minimal_generators(1000),
            Err(Error::BudgetExceeded { limit: 1000 })
        );
    }

    #[test]
    fn convexity_examples() {
        let two = MonomialSet::from_vectors(2, &[&[2, 0], &[0, 2]]).unwrap();
        assert!(in_convex_region(&two, &[1, 1]).unwrap());
        assert!(!in_convex_region(&two, &[1, 0]).unwrap());
        assert!(!convexity_check(&two, DEFAULT_BOX_BUDGET).unwrap());
        let one = MonomialSet::from_vectors(2, &[&[3, 1]]).unwrap();
        assert!(convexity_check(&one, DEFAULT_BOX_BUDGET).unwrap());
        let lin = MonomialSet::from_vectors(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(convexity_check(&lin, DEFAULT_BOX_BUDGET).unwrap());
    }

    #[test]
    fn json_shape() {
        let s: IneqSystem =
            serde_json::from_str(r#"{"A":[[1,1]],"W":[[5]],"vars":["p","q"]}"#).unwrap();
        assert_eq!(s.vars(), &["p", "q"]);
        let back = serde_json::to_string(&s).unwrap();
        assert_eq!(back, r#"{"A":[[1,1]],"W":[[5]],"vars":["p","q"]}"#);
        assert!(serde_json::from_str::<IneqSystem>(r#"{"A":[[1,1]],"W":[[5,1]]}"#).is_err());
        assert!(serde_json::from_str::<IneqSystem>(r#"{"A":[[-1,1]],"W":[[5]]}"#).is_err());
    }

    #[test]
    fn preimage_certificate_on_square() {
        let m = MonomialSet::from_vectors(2, &[&[2, 0]]).unwrap();
        let s = from_generators(&m);
        let cert = Certificate {
            kind: CertificateKind::PreimageNotFg,
            generator: vec![2, 0],
            letter: Some(1),
            ordering: None,
        };
        assert!(verify_certificate(&s, &cert).unwrap());
        let missing = Certificate {
            letter: None,
            ..cert
        };
        assert!(matches!(
            verify_certificate(&s, &missing),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn sorted_certificate_on_worked_example() {
        let m = MonomialSet::from_vectors(3, &[&[1, 2, 1], &[3, 1, 0]]).unwrap();
        let s = from_generators(&m);
        let cert = Certificate {
            kind: CertificateKind::SortedNotFg,
            generator: vec![1, 2, 1],
            letter: Some(1),
            ordering: None,
        };
        assert!(verify_certificate(&s, &cert).unwrap());
        let bac = Certificate {
            letter: Some(0),
            ordering: Some(vec![1, 0, 2]),
            ..cert
        };
        assert!(!verify_certificate(&s, &bac).unwrap());
        assert!(find_certificate(
            &s,
            CertificateKind::SortedNotFg,
            Some(&LetterOrder::from_sequence(vec![1, 0, 2]).unwrap()),
            DEFAULT_BOX_BUDGET
        )
        .unwrap()
        .is_none());
    }

    #[test]
    fn support3_certificate() {
        let s = sum_at_least(5);
        let cert = Certificate {
            kind: CertificateKind::Support3,
            generator: vec![2, 3],
            letter: None,
            ordering: None,
        };
        assert!(!verify_certificate(&s, &cert).unwrap());
    }

    #[test]
    fn pair_system_has_three_generators() {
        let i1 = IneqSystem::new(2, vec![vec![1, 1]], vec![vec![2]]).unwrap();
        assert_eq!(
            i1.enumerate_minimal_generators(DEFAULT_BOX_BUDGET)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn reductions_on_small_formulas() {
        let sat = SatInstance::new(3, vec![vec![1, 2], vec![-1, 3], vec![-2]]).unwrap();
        let assignment = sat.brute_force().unwrap().unwrap();
        let md = sat_reduction(&sat, SatTarget::Mdois).unwrap();
        assert_eq!(md.arity(), 6);
        let x = assignment_vector(&sat, SatTarget::Mdois, &assignment);
        let cert = Certificate {
            kind: CertificateKind::Support3,
            generator: x,
            letter: None,
            ordering: None,
        };
        assert!(verify_certificate(&md, &cert).unwrap());
        assert!(!generated_in_support2(&md, DEFAULT_BOX_BUDGET).unwrap());

        let unsat = SatInstance::new(3, vec![vec![1], vec![-1]]).unwrap();
        let md = sat_reduction(&unsat, SatTarget::Mdois).unwrap();
        assert!(generated_in_support2(&md, DEFAULT_BOX_BUDGET).unwrap());
        let im = sat_reduction(&unsat, SatTarget::Imfg).unwrap();
        assert_eq!(im.vars()[..3], ["y", "z", "x1"]);
        assert!(sorted_fg(&im, &LetterOrder::identity(im.arity()), DEFAULT_BOX_BUDGET).unwrap());
        assert!(SatInstance::new(2, vec![vec![1]])
            .and_then(|i| sat_reduction(&i, SatTarget::Mdois))
            .is_err());
    }
}
