//! Cool orderings: letter orderings under which the sorted-word ideal is
//! finitely generated.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Letter, LetterOrder, Monomial, MonomialSet};
use crate::sorted_ideal::is_fg_sorted;
use crate::torient::{orientation_to_ordering, t_orientation_search_with_stats, TGraph};

/// Which procedure answered a [`find_cool_ordering`] call.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMethod {
    SquareFreeGuard,
    TOrientation,
    BranchAndBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoolSearchResult {
    pub found: bool,
    pub ordering: Option<LetterOrder>,
    pub nodes_explored: u64,
    pub method: SearchMethod,
}

pub fn is_cool(m: &MonomialSet, ord: &LetterOrder) -> Result<bool> {
    Ok(is_fg_sorted(m, ord)?.verdict)
}

/// Every ordering is cool iff each member `m` and letter `x` with
/// `erase(m, x)` on two or more letters has some `u` with at most two
/// support letters, `x` among them, and `erase(u, x) | m`.
pub fn all_orderings_cool(m: &MonomialSet) -> Result<bool> {
    m.require_antichain()?;
    let small = m.support_filter(2);
    for w in m {
        for x in 0..m.arity() {
            let rest = w.support().into_iter().filter(|&y| y != x).count();
            if rest < 2 {
                continue;
            }
            if !small
                .iter()
                .any(|u| u.in_support(x) && u.erased_divides(x, w))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `w` helps `m` with `x`: `x` in `supp(w)`, `erase(w, x) | m` and the
/// support of `erase(w, x)` is strictly inside that of `erase(m, x)`.
pub fn helps(w: &Monomial, m: &Monomial, x: Letter) -> bool {
    if w.arity() != m.arity() || x >= w.arity() || !w.in_support(x) {
        return false;
    }
    if !w.erased_divides(x, m) {
        return false;
    }
    let ws: Vec<Letter> = w.support().into_iter().filter(|&y| y != x).collect();
    let ms: Vec<Letter> = m.support().into_iter().filter(|&y| y != x).collect();
    ws.len() < ms.len() && ws.iter().all(|y| ms.contains(y))
}

/// Whether every member of `m` that helps a member of `n` lies in `n`.
pub fn closed_subset_check(m: &MonomialSet, n: &MonomialSet) -> Result<bool> {
    if n.arity() != m.arity() {
        return Err(Error::AlphabetMismatch {
            expected: m.arity(),
            found: n.arity(),
        });
    }
    if n.iter().any(|v| !m.contains(v)) {
        return Err(Error::NotSubset);
    }
    Ok(m.iter()
        .filter(|w| !n.contains(w))
        .all(|w| n.iter().all(|v| (0..m.arity()).all(|x| !helps(w, v, x)))))
}

pub fn support_filter(m: &MonomialSet, k: usize) -> MonomialSet {
    m.support_filter(k)
}

fn require_quadratic(m: &MonomialSet) -> Result<()> {
    for (i, w) in m.iter().enumerate() {
        if w.total_degree()? != 2 {
            return Err(Error::NonQuadratic(i));
        }
    }
    Ok(())
}

fn pair(n: usize, x: Letter, y: Letter) -> Monomial {
    let mut e = vec![0; n];
    e[x] += 1;
    e[y] += 1;
    Monomial::new(e)
}

/// Edge `xy` for each pair with `xy` not in `M`; `T` is the letters whose
/// square is not in `M`.
pub fn quadratic_graph(m: &MonomialSet) -> Result<TGraph> {
    require_quadratic(m)?;
    let n = m.arity();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if !m.contains(&pair(n, x, y)) {
                edges.push((x, y));
            }
        }
    }
    let t: Vec<usize> = (0..n).filter(|&x| !m.contains(&pair(n, x, x))).collect();
    TGraph::new(n, edges, &t)
}

/// Replaces each square `x^2` by the products `x^2 y` with `xy` not in `M`,
/// giving a set with support size exactly two and the same cool orderings.
pub fn quadratic_to_support2(m: &MonomialSet) -> Result<MonomialSet> {
    require_quadratic(m)?;
    let n = m.arity();
    let mut out = Vec::new();
    for w in m {
        match w.support()[..] {
            [x] => {
                for y in (0..n).filter(|&y| y != x) {
                    if !m.contains(&pair(n, x, y)) {
                        out.push(w.mul_letter(y)?);
                    }
                }
            }
            _ => out.push(w.clone()),
        }
    }
    MonomialSet::new(n, out)
}

/// For quadratic `M`: `ord` is cool iff every `x < y < z` with `xz` in `M`
/// has one of `y^2, xy, yz` in `M`.
pub fn quadratic_cool_restated(m: &MonomialSet, ord: &LetterOrder) -> Result<bool> {
    require_quadratic(m)?;
    m.require_order(ord)?;
    let n = m.arity();
    let seq = ord.sequence();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (seq[i], seq[j], seq[k]);
                if m.contains(&pair(n, x, z))
                    && !m.contains(&pair(n, y, y))
                    && !m.contains(&pair(n, x, y))
                    && !m.contains(&pair(n, y, z))
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// For square-free `M`: false when some member has total degree above 2,
/// in which case no ordering is cool.
pub fn square_free_total_degree_guard(m: &MonomialSet) -> Result<bool> {
    m.require_antichain()?;
    for (i, w) in m.iter().enumerate() {
        if w.exponents().iter().any(|&e| e > 1) {
            return Err(Error::NotSquareFree(i));
        }
    }
    Ok(m.iter().all(|w| w.support_size() <= 2))
}

/// Complete search for a cool ordering.
///
/// Square-free input with a member of degree above two is rejected at once;
/// quadratic input goes through the T-orientation solver on
/// [`quadratic_graph`]; anything else is branch-and-bound over letter
/// placements.
pub fn find_cool_ordering(m: &MonomialSet) -> Result<CoolSearchResult> {
    m.require_antichain()?;
    let square_free = m.iter().all(|w| w.exponents().iter().all(|&e| e <= 1));
    if square_free && !square_free_total_degree_guard(m)? {
        return Ok(CoolSearchResult {
            found: false,
            ordering: None,
            nodes_explored: 0,
            method: SearchMethod::SquareFreeGuard,
        });
    }
    let quadratic = m.iter().all(|w| w.total_degree() == Ok(2));
    if quadratic {
        let g = quadratic_graph(m)?;
        let outcome = t_orientation_search_with_stats(&g);
        let ordering = outcome
            .orientation
            .map(|o| orientation_to_ordering(&g, &o))
            .transpose()?;
        return Ok(CoolSearchResult {
            found: ordering.is_some(),
            ordering,
            nodes_explored: outcome.nodes,
            method: SearchMethod::TOrientation,
        });
    }
    let mut bnb = BranchAndBound::new(m);
    let ordering = bnb.run();
    Ok(CoolSearchResult {
        found: ordering.is_some(),
        ordering,
        nodes_explored: bnb.nodes,
        method: SearchMethod::BranchAndBound,
    })
}

/// Letters are placed from the smallest position upwards. Once the least
/// placed support letter of `w` is known, every later placed letter before
/// the greatest support letter (or after it, if support letters remain
/// unplaced) is internal to `w`, and needs a helper `s` that can still end
/// up with `x` extremal.
struct BranchAndBound {
    n: usize,
    supports: Vec<Vec<Letter>>,
    /// `helpers[w][x]`: members `s` with `x` in `supp(s)` and `erase(s, x) | w`.
    helpers: Vec<Vec<Vec<usize>>>,
    /// Per letter, the number of `(w, x)` pairs without any helper that
    /// mention it, as `x` or in `supp(w)`.
    weight: Vec<usize>,
    pos: Vec<Option<usize>>,
    prefix: Vec<Letter>,
    nodes: u64,
}

impl BranchAndBound {
    fn new(m: &MonomialSet) -> Self {
        let n = m.arity();
        let supports: Vec<Vec<Letter>> = m.iter().map(Monomial::support).collect();
        let helpers: Vec<Vec<Vec<usize>>> = m
            .iter()
            .map(|w| {
                (0..n)
                    .map(|x| {
                        m.iter()
                            .enumerate()
                            .filter(|(_, s)| s.in_support(x) && s.erased_divides(x, w))
                            .map(|(i, _)| i)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut weight = vec![0; n];
        for (wi, hs) in helpers.iter().enumerate() {
            for (x, h) in hs.iter().enumerate() {
                let others = supports[wi].iter().filter(|&&y| y != x).count();
                if h.is_empty() && others >= 2 {
                    weight[x] += 1;
                    for &y in &supports[wi] {
                        weight[y] += 1;
                    }
                }
            }
        }
        BranchAndBound {
            n,
            supports,
            helpers,
            weight,
            pos: vec![None; n],
            prefix: Vec::new(),
            nodes: 0,
        }
    }

    fn could_be_extremal(&self, s: usize, x: Letter, px: usize) -> bool {
        let mut before = false;
        let mut after = false;
        for &y in &self.supports[s] {
            if y == x {
                continue;
            }
            match self.pos[y] {
                Some(p) if p < px => before = true,
                _ => after = true,
            }
        }
        !(before && after)
    }

    fn feasible(&self) -> bool {
        for (wi, supp) in self.supports.iter().enumerate() {
            let placed: Vec<usize> = supp.iter().filter_map(|&y| self.pos[y]).collect();
            let Some(&lo) = placed.iter().min() else {
                continue;
            };
            let hi = if placed.len() == supp.len() {
                *placed.iter().max().expect("nonempty")
            } else {
                usize::MAX
            };
            for (px, &x) in self.prefix.iter().enumerate() {
                if px <= lo || px >= hi {
                    continue;
                }
                if !self.helpers[wi][x]
                    .iter()
                    .any(|&s| self.could_be_extremal(s, x, px))
                {
                    return false;
                }
            }
        }
        true
    }

    fn score(&self, y: Letter) -> usize {
        self.weight[y]
    }

    fn run(&mut self) -> Option<LetterOrder> {
        self.nodes += 1;
        if self.prefix.len() == self.n {
            return Some(LetterOrder::from_sequence(self.prefix.clone()).expect("permutation"));
        }
        let mut free: Vec<Letter> = (0..self.n).filter(|&y| self.pos[y].is_none()).collect();
        free.sort_by_key(|&y| (std::cmp::Reverse(self.score(y)), y));
        for y in free {
            // an ordering and its reverse are cool together
            if self.n >= 2 && y == 1 && self.pos[0].is_none() {
                continue;
            }
            self.pos[y] = Some(self.prefix.len());
            self.prefix.push(y);
            if self.feasible() {
                if let Some(found) = self.run() {
                    return Some(found);
                }
            }
            self.prefix.pop();
            self.pos[y] = None;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[&[u64]]) -> MonomialSet {
        MonomialSet::from_vectors(n, v).unwrap()
    }

    fn order(seq: &[usize]) -> LetterOrder {
        LetterOrder::from_sequence(seq.to_vec()).unwrap()
    }

    fn worked() -> MonomialSet {
        set(3, &[&[1, 2, 1], &[3, 1, 0]])
    }

    #[test]
    fn worked_example() {
        let m = worked();
        assert!(is_cool(&m, &order(&[1, 0, 2])).unwrap());
        assert!(!is_cool(&m, &order(&[0, 1, 2])).unwrap());
        assert!(!all_orderings_cool(&m).unwrap());
        let r = find_cool_ordering(&m).unwrap();
        assert!(r.found);
        assert_eq!(r.method, SearchMethod::BranchAndBound);
        assert!(is_cool(&m, r.ordering.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn two_letters_always_cool() {
        let m = set(2, &[&[3, 1], &[1, 4]]);
        for ord in LetterOrder::all(2) {
            assert!(is_cool(&m, &ord).unwrap());
        }
    }

    #[test]
    fn every_ordering_cool_examples() {
        assert!(all_orderings_cool(&set(3, &[&[2, 0, 0], &[0, 1, 1]])).unwrap());
        assert!(all_orderings_cool(&set(3, &[&[1, 0, 0], &[0, 2, 0]])).unwrap());
        // c between a and b has no helper
        let ab = set(3, &[&[1, 1, 0]]);
        assert!(!all_orderings_cool(&ab).unwrap());
        assert!(!is_cool(&ab, &order(&[0, 2, 1])).unwrap());
    }

    #[test]
    fn helps_examples() {
        let w = Monomial::new(vec![3, 1, 0]);
        let m = Monomial::new(vec![1, 2, 1]);
        assert!(helps(&w, &m, 0));
        assert!(!helps(&m, &m, 0));
        assert!(!helps(&w, &m, 2));
    }

    #[test]
    fn closed_subsets() {
        let m = set(3, &[&[2, 0, 0], &[0, 1, 1]]);
        assert!(closed_subset_check(&m, &m).unwrap());
        assert!(closed_subset_check(&m, &MonomialSet::empty(3)).unwrap());
        // a^2 helps bc with a: erasing a leaves the unit
        assert!(helps(
            &Monomial::new(vec![2, 0, 0]),
            &Monomial::new(vec![0, 1, 1]),
            0
        ));
        assert!(!closed_subset_check(&m, &set(3, &[&[0, 1, 1]])).unwrap());
        assert!(closed_subset_check(&m, &set(3, &[&[2, 0, 0]])).unwrap());
        assert_eq!(
            closed_subset_check(&m, &set(3, &[&[1, 1, 1]])),
            Err(Error::NotSubset)
        );
        let w = worked();
        assert!(!closed_subset_check(&w, &set(3, &[&[1, 2, 1]])).unwrap());
    }

    #[test]
    fn filter_examples() {
        let m = set(
            7,
            &[
                &[0, 0, 3, 0, 0, 0, 0],
                &[2, 0, 5, 0, 0, 2, 0],
                &[0, 0, 1, 0, 0, 3, 1],
                &[2, 2, 2, 0, 0, 0, 0],
            ],
        );
        assert_eq!(support_filter(&m, 2), set(7, &[&[0, 0, 3, 0, 0, 0, 0]]));
        assert_eq!(support_filter(&m, 7), m);
        assert!(support_filter(&m, 0).is_empty());
    }

    #[test]
    fn quadratic_graph_examples() {
        let g = quadratic_graph(&set(3, &[&[1, 0, 1]])).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.t_vertices(), vec![0, 1, 2]);
        let full = set(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let g = quadratic_graph(&full).unwrap();
        assert_eq!((g.edge_count(), g.t_vertices().len()), (0, 0));
        let g = quadratic_graph(&MonomialSet::empty(4)).unwrap();
        assert_eq!((g.edge_count(), g.t_vertices().len()), (6, 4));
        assert_eq!(
            quadratic_graph(&set(2, &[&[1, 0]])).unwrap_err(),
            Error::NonQuadratic(0)
        );
    }

    #[test]
    fn support_two_examples() {
        assert_eq!(
            quadratic_to_support2(&set(2, &[&[2, 0], &[1, 1]])).unwrap(),
            set(2, &[&[1, 1]])
        );
        let sq_free = set(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(quadratic_to_support2(&sq_free).unwrap(), sq_free);
        assert_eq!(
            quadratic_to_support2(&set(2, &[&[2, 0]])).unwrap(),
            set(2, &[&[2, 1]])
        );
    }

    #[test]
    fn natural_order_family() {
        let m = set(4, &[&[1, 2, 0, 0], &[1, 1, 2, 0], &[1, 1, 1, 2]]);
        assert!(is_cool(&m, &LetterOrder::identity(4)).unwrap());
        assert!(find_cool_ordering(&m).unwrap().found);
    }

    fn c5() -> MonomialSet {
        // the complement of a 5-cycle among pairs, no squares
        let n = 5;
        let mut v = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if (y - x) % 5 != 1 && (y - x) % 5 != 4 {
                    let mut e = vec![0u64; n];
                    e[x] = 1;
                    e[y] = 1;
                    v.push(Monomial::new(e));
                }
            }
        }
        MonomialSet::new(n, v).unwrap()
    }

    #[test]
    fn five_cycle_not_cool() {
        let m = c5();
        let g = quadratic_graph(&m).unwrap();
        assert_eq!(g.edge_count(), 5);
        let r = find_cool_ordering(&m).unwrap();
        assert!(!r.found);
        assert_eq!(r.method, SearchMethod::TOrientation);
        assert!(LetterOrder::all(5).all(|o| !is_cool(&m, &o).unwrap()));
    }

    #[test]
    fn square_free_guard() {
        assert!(!square_free_total_degree_guard(&set(3, &[&[1, 1, 1]])).unwrap());
        assert!(square_free_total_degree_guard(&set(3, &[&[1, 1, 0], &[0, 0, 1]])).unwrap());
        assert!(square_free_total_degree_guard(&MonomialSet::empty(2)).unwrap());
        assert!(square_free_total_degree_guard(&set(2, &[&[2, 0]])).is_err());
        let r = find_cool_ordering(&set(3, &[&[1, 1, 1]])).unwrap();
        assert_eq!((r.found, r.nodes_explored), (false, 0));
    }

    #[test]
    fn restatement_matches_on_c5() {
        let m = c5();
        for o in LetterOrder::all(5) {
            assert_eq!(
                quadratic_cool_restated(&m, &o).unwrap(),
                is_cool(&m, &o).unwrap()
            );
        }
    }
}
