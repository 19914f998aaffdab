//! Acyclic orientations of a graph that are transitive at a chosen vertex
//! set `T` ("T-orientations"), and the hardness gadgets built on them.
//!
//! The search treats each edge as a boolean (stored direction or reverse).
//! Transitivity at `y` in `T` becomes, for every pair of distinct
//! neighbours `x, z` of `y`, the clause "not x->y, or not y->z, or x->z"
//! (the last literal is absent when `xz` is not an edge). Clauses are unit
//! propagated; acyclicity is enforced whenever an edge is oriented.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::monomial::LetterOrder;

/// An undirected simple graph with a distinguished vertex subset `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    in_t: Vec<bool>,
    labels: Vec<String>,
    index: HashMap<(usize, usize), usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl TGraph {
    /// Edges keep their input order and endpoint order; that order is the
    /// edge numbering everything else refers to.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, t: &[usize]) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if index.insert(key(u, v), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        let mut in_t = vec![false; vertex_count];
        for &v in t {
            if v >= vertex_count {
                return Err(Error::InvalidGraph(format!("T vertex {v} out of range")));
            }
            in_t[v] = true;
        }
        Ok(TGraph {
            vertex_count,
            edges,
            in_t,
            labels: (0..vertex_count).map(|v| v.to_string()).collect(),
            index,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::DimensionMismatch {
                expected: self.vertex_count,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn in_t(&self, v: usize) -> bool {
        self.in_t[v]
    }

    pub fn t_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.in_t[v]).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&key(u, v)).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.index.contains_key(&key(u, v))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }
}

/// A direction for every edge: `forward[e]` means `edges[e].0 -> edges[e].1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn new(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// From a list of arcs covering every edge exactly once.
    pub fn from_arcs(g: &TGraph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut forward = vec![None; g.edge_count()];
        for &(u, v) in arcs {
            let e = g.edge_index(u, v).ok_or(Error::OrientationMismatch)?;
            if forward[e].is_some() {
                return Err(Error::OrientationMismatch);
            }
            forward[e] = Some(g.edges[e].0 == u);
        }
        let forward = forward
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::OrientationMismatch)?;
        Ok(Orientation { forward })
    }

    pub fn arc(&self, g: &TGraph, e: usize) -> (usize, usize) {
        let (u, v) = g.edges[e];
        if self.forward[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn arcs(&self, g: &TGraph) -> Vec<(usize, usize)> {
        (0..g.edge_count()).map(|e| self.arc(g, e)).collect()
    }

    /// Whether the edge `{u, v}` is oriented `u -> v`.
    pub fn points(&self, g: &TGraph, u: usize, v: usize) -> Option<bool> {
        g.edge_index(u, v).map(|e| self.arc(g, e) == (u, v))
    }
}

fn check_matches(g: &TGraph, o: &Orientation) -> Result<()> {
    if o.forward.len() == g.edge_count() {
        Ok(())
    } else {
        Err(Error::OrientationMismatch)
    }
}

/// Topological order, smallest index first among available vertices.
fn topological_order(g: &TGraph, o: &Orientation) -> Option<Vec<usize>> {
    let n = g.vertex_count;
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for (u, v) in o.arcs(g) {
        out[u].push(v);
        indeg[v] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = heap.pop() {
        order.push(u);
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                heap.push(Reverse(v));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Acyclic, and transitive at every vertex of `T`.
pub fn is_valid_t_orientation(g: &TGraph, o: &Orientation) -> Result<bool> {
    check_matches(g, o)?;
    if topological_order(g, o).is_none() {
        return Ok(false);
    }
    let arcs = o.arcs(g);
    for y in g.t_vertices() {
        let ins: Vec<usize> = arcs.iter().filter(|a| a.1 == y).map(|a| a.0).collect();
        let outs: Vec<usize> = arcs.iter().filter(|a| a.0 == y).map(|a| a.1).collect();
        for &x in &ins {
            for &z in &outs {
                if o.points(g, x, z) != Some(true) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn ordering_to_orientation(g: &TGraph, ord: &LetterOrder) -> Result<Orientation> {
    if ord.len() != g.vertex_count {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count,
            found: ord.len(),
        });
    }
    Ok(Orientation {
        forward: g.edges.iter().map(|&(u, v)| ord.precedes(u, v)).collect(),
    })
}

/// A topological order of `o`, taking the smallest available index first.
pub fn orientation_to_ordering(g: &TGraph, o: &Orientation) -> Result<LetterOrder> {
    check_matches(g, o)?;
    let order = topological_order(g, o).ok_or(Error::CyclicOrientation)?;
    LetterOrder::from_sequence(order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Lit {
    edge: usize,
    forward: bool,
}

/// Outcome of a complete search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub orientation: Option<Orientation>,
    pub nodes: u64,
}

struct Solver<'g> {
    g: &'g TGraph,
    clauses: Vec<Vec<Lit>>,
    watch: Vec<Vec<usize>>,
    branch_order: Vec<usize>,
    value: Vec<Option<bool>>,
    trail: Vec<usize>,
    out: Vec<Vec<usize>>,
    nodes: u64,
}

impl<'g> Solver<'g> {
    fn new(g: &'g TGraph) -> Self {
        let lit = |from: usize, to: usize| {
            let e = g.edge_index(from, to).expect("edge exists");
            Lit {
                edge: e,
                forward: g.edges[e].0 == from,
            }
        };
        let mut clauses = Vec::new();
        for y in g.t_vertices() {
            let nb = g.neighbors(y);
            for &x in &nb {
                for &z in &nb {
                    if x == z {
                        continue;
                    }
                    let mut c = vec![lit(y, x), lit(z, y)];
                    if g.has_edge(x, z) {
                        c.push(lit(x, z));
                    }
                    clauses.push(c);
                }
            }
        }
        let mut watch = vec![Vec::new(); g.edge_count()];
        for (ci, c) in clauses.iter().enumerate() {
            for l in c {
                watch[l.edge].push(ci);
            }
        }
        let mut branch_order: Vec<usize> = (0..g.edge_count()).collect();
        branch_order.sort_by_key(|&e| {
            let (u, v) = g.edges[e];
            (Reverse(g.in_t[u] as u8 + g.in_t[v] as u8), e)
        });
        Solver {
            g,
            clauses,
            watch,
            branch_order,
            value: vec![None; g.edge_count()],
            trail: Vec::new(),
            out: vec![Vec::new(); g.vertex_count],
            nodes: 0,
        }
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.g.vertex_count];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            if u == to {
                return true;
            }
            for &v in &self.out[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    fn arc_of(&self, e: usize, forward: bool) -> (usize, usize) {
        let (u, v) = self.g.edges[e];
        if forward {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// Orients `e`; false if that closes a directed cycle.
    fn assign(&mut self, e: usize, forward: bool) -> bool {
        match self.value[e] {
            Some(v) => v == forward,
            None => {
                let (u, v) = self.arc_of(e, forward);
                if self.reaches(v, u) {
                    return false;
                }
                self.value[e] = Some(forward);
                self.trail.push(e);
                self.out[u].push(v);
                true
            }
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("nonempty trail");
            let forward = self.value[e].take().expect("assigned");
            let (u, _) = self.arc_of(e, forward);
            self.out[u].pop();
        }
    }

    fn propagate(&mut self, mut head: usize) -> bool {
        while head < self.trail.len() {
            let e = self.trail[head];
            head += 1;
            for i in 0..self.watch[e].len() {
                let ci = self.watch[e][i];
                let mut free = None;
                let mut free_count = 0;
                let mut satisfied = false;
                for l in &self.clauses[ci] {
                    match self.value[l.edge] {
                        Some(v) if v == l.forward => {
                            satisfied = true;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            free_count += 1;
                            free = Some(*l);
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match (free_count, free) {
                    (0, _) => return false,
                    (1, Some(l)) if !self.assign(l.edge, l.forward) => {
                        return false;
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn fix(&mut self, lits: &[Lit]) -> bool {
        let mark = self.trail.len();
        for l in lits {
            if !self.assign(l.edge, l.forward) {
                return false;
            }
        }
        self.propagate(mark)
    }

    fn solution(&self) -> Orientation {
        Orientation {
            forward: self.value.iter().map(|v| v.expect("complete")).collect(),
        }
    }

    /// Depth-first search; `visit` returns true to stop.
    fn search(&mut self, visit: &mut dyn FnMut(Orientation) -> bool) -> bool {
        self.nodes += 1;
        let Some(&e) = self.branch_order.iter().find(|&&e| self.value[e].is_none()) else {
            return visit(self.solution());
        };
        for forward in [true, false] {
            let mark = self.trail.len();
            if self.assign(e, forward) && self.propagate(mark) && self.search(visit) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

fn fixed_lits(g: &TGraph, fixed: &[(usize, usize)]) -> Result<Vec<Lit>> {
    fixed
        .iter()
        .map(|&(u, v)| {
            let e = g.edge_index(u, v).ok_or(Error::OrientationMismatch)?;
            Ok(Lit {
                edge: e,
                forward: g.edges[e].0 == u,
            })
        })
        .collect()
}

/// Complete search for a T-orientation extending the arcs in `fixed`.
pub fn t_orientation_search_fixed(g: &TGraph, fixed: &[(usize, usize)]) -> Result<SearchOutcome> {
    let lits = fixed_lits(g, fixed)?;
    let mut solver = Solver::new(g);
    let mut found = None;
    if solver.fix(&lits) {
        solver.search(&mut |o| {
            found = Some(o);
            true
        });
    }
    Ok(SearchOutcome {
        orientation: found,
        nodes: solver.nodes,
    })
}

pub fn t_orientation_search_with_stats(g: &TGraph) -> SearchOutcome {
    t_orientation_search_fixed(g, &[]).expect("no fixed arcs")
}

/// A valid T-orientation if one exists: the first one met when branching
/// on edges with the most endpoints in `T` first (ties by edge index),
/// trying the stored direction before its reverse.
pub fn t_orientation_search(g: &TGraph) -> Option<Orientation> {
    t_orientation_search_with_stats(g).orientation
}

/// Number of T-orientations extending `fixed`, stopping at `limit`.
pub fn count_t_orientations(g: &TGraph, fixed: &[(usize, usize)], limit: u64) -> Result<u64> {
    let lits = fixed_lits(g, fixed)?;
    let mut solver = Solver::new(g);
    let mut count = 0u64;
    if solver.fix(&lits) {
        solver.search(&mut |_| {
            count += 1;
            count >= limit
        });
    }
    Ok(count)
}

/// When `T` induces a bipartite graph, a T-orientation making one side all
/// sources and the other all sinks: order one side first, the vertices
/// outside `T` next, the other side last. `None` if `T` is not bipartite.
/// This always succeeds when `|T| <= 2`.
pub fn bipartite_t_orientation(g: &TGraph) -> Option<Orientation> {
    let n = g.vertex_count;
    let mut side: Vec<Option<bool>> = vec![None; n];
    for start in g.t_vertices() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let su = side[u].expect("colored");
            for v in g.neighbors(u).into_iter().filter(|&v| g.in_t[v]) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        stack.push(v);
                    }
                    Some(sv) if sv == su => return None,
                    _ => {}
                }
            }
        }
    }
    let mut seq: Vec<usize> = (0..n).filter(|&v| side[v] == Some(false)).collect();
    seq.extend((0..n).filter(|&v| side[v].is_none()));
    seq.extend((0..n).filter(|&v| side[v] == Some(true)));
    let ord = LetterOrder::from_sequence(seq).expect("permutation");
    Some(ordering_to_orientation(g, &ord).expect("same size"))
}

/// Vertex numbers of one top hat inside a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hat {
    pub s: usize,
    pub a: usize,
    pub a_bar: usize,
    pub t: usize,
    pub l: usize,
    pub r: usize,
    pub c: usize,
}

impl Hat {
    fn edges(&self) -> [(usize, usize); 10] {
        [
            (self.s, self.a),
            (self.a_bar, self.a),
            (self.a, self.l),
            (self.r, self.a_bar),
            (self.c, self.a_bar),
            (self.c, self.a),
            (self.c, self.r),
            (self.c, self.l),
            (self.t, self.a_bar),
            (self.l, self.r),
        ]
    }

    fn black(&self) -> [usize; 3] {
        [self.a, self.a_bar, self.c]
    }
}

pub const TOP_HAT: Hat = Hat {
    s: 0,
    a: 1,
    a_bar: 2,
    t: 3,
    l: 4,
    r: 5,
    c: 6,
};

/// The 7-vertex top hat, vertices `s, a, ~a, t, l, r, c` numbered 0..6,
/// `T = {a, ~a, c}`.
pub fn top_hat() -> TGraph {
    let h = TOP_HAT;
    TGraph::new(7, h.edges().to_vec(), &h.black())
        .expect("static graph")
        .with_labels(
            ["s", "a", "~a", "t", "l", "r", "c"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        )
        .expect("seven labels")
}

/// Hat `i` (0, 1 or 2) of [`gadget3`]. Hats are numbered in order, each
/// listing `s, a, ~a, t, l, r, c`; a vertex glued to an earlier one keeps
/// the earlier number (`t_i = s_{i+1}`, `r_i = l_{i+1}`, cyclically).
pub fn gadget_hat(i: usize) -> Hat {
    const HATS: [Hat; 3] = [
        Hat {
            s: 0,
            a: 1,
            a_bar: 2,
            t: 3,
            l: 4,
            r: 5,
            c: 6,
        },
        Hat {
            s: 3,
            a: 7,
            a_bar: 8,
            t: 9,
            l: 5,
            r: 10,
            c: 11,
        },
        Hat {
            s: 9,
            a: 12,
            a_bar: 13,
            t: 0,
            l: 10,
            r: 4,
            c: 14,
        },
    ];
    HATS[i]
}

/// Three top hats glued in a cycle: 15 vertices, 30 edges, `|T| = 9`.
pub fn gadget3() -> TGraph {
    let mut edges = Vec::new();
    let mut t = Vec::new();
    let mut labels = vec![String::new(); 15];
    for i in 0..3 {
        let h = gadget_hat(i);
        edges.extend(h.edges());
        t.extend(h.black());
        let k = i + 1;
        for (v, name) in [
            (h.s, format!("s{k}")),
            (h.a, format!("a{k}")),
            (h.a_bar, format!("~a{k}")),
            (h.l, format!("l{k}")),
            (h.c, format!("c{k}")),
        ] {
            labels[v] = name;
        }
    }
    TGraph::new(15, edges, &t)
        .expect("static graph")
        .with_labels(labels)
        .expect("fifteen labels")
}

/// Not-all-equal 3-SAT: literals are signed 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaeInstance {
    variable_count: usize,
    clauses: Vec<[i32; 3]>,
}

impl NaeInstance {
    pub fn new(variable_count: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for c in &clauses {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > variable_count {
                    return Err(Error::InvalidInstance(format!(
                        "literal {l} outside 1..={variable_count}"
                    )));
                }
            }
        }
        Ok(NaeInstance {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    pub fn is_nae_satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let vals = c.map(|l| assignment[l.unsigned_abs() as usize - 1] == (l > 0));
            vals.contains(&true) && vals.contains(&false)
        })
    }
}

/// One gadget copy per clause (vertices `15k..15k+15`, numbered as in
/// [`gadget3`]) with `a_i` standing for the clause's i-th literal and `~a_i`
/// for its complement, then one vertex per variable (after all gadgets)
/// joined to every vertex standing for that variable's positive literal.
pub fn nae3sat_reduce(inst: &NaeInstance) -> TGraph {
    let gadget = gadget3();
    let k = inst.clauses.len();
    let n = 15 * k + inst.variable_count;
    let mut edges = Vec::new();
    let mut t = Vec::new();
    let mut labels = vec![String::new(); n];
    let lit_name = |l: i32| {
        if l > 0 {
            format!("x{l}")
        } else {
            format!("~x{}", -l)
        }
    };
    for (ci, clause) in inst.clauses.iter().enumerate() {
        let off = 15 * ci;
        edges.extend(gadget.edges().iter().map(|&(u, v)| (u + off, v + off)));
        t.extend(gadget.t_vertices().into_iter().map(|v| v + off));
        for v in 0..15 {
            labels[off + v] = format!("g{}.{}", ci + 1, gadget.labels()[v]);
        }
        for (i, &lit) in clause.iter().enumerate() {
            let hat = gadget_hat(i);
            labels[off + hat.a] = format!("g{}.{}", ci + 1, lit_name(lit));
            labels[off + hat.a_bar] = format!("g{}.{}", ci + 1, lit_name(-lit));
            let positive = if lit > 0 { hat.a } else { hat.a_bar };
            let var = lit.unsigned_abs() as usize - 1;
            edges.push((15 * k + var, off + positive));
        }
    }
    for var in 0..inst.variable_count {
        t.push(15 * k + var);
        labels[15 * k + var] = format!("v{}", var + 1);
    }
    TGraph::new(n, edges, &t)
        .expect("reduction graph is simple")
        .with_labels(labels)
        .expect("labels")
}

pub const NAE_BRUTE_MAX_VARIABLES: usize = 24;

/// Exhaustive NAE check over all assignments.
pub fn nae3sat_brute(inst: &NaeInstance) -> Result<bool> {
    if inst.variable_count > NAE_BRUTE_MAX_VARIABLES {
        return Err(Error::InvalidInstance(format!(
            "{} variables exceeds the brute-force limit of {}",
            inst.variable_count, NAE_BRUTE_MAX_VARIABLES
        )));
    }
    let n = inst.variable_count;
    Ok((0u32..1 << n).any(|bits| {
        let assignment: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        inst.is_nae_satisfied(&assignment)
    }))
}
