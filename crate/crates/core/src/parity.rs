//! Odd girth, fixed-length cycles and parity-constrained bounded-order paths.
//!
//! "Order" always counts vertices. The exponential searches share one
//! depth-first kernel that, before expanding a partial path, recomputes walk
//! distances back to the target in the parity-lifted graph (vertex, parity of
//! walk length) restricted to still-unused allowed vertices. A walk lower bound
//! is admissible for simple paths, so pruning on it never loses a solution and
//! `Absent` is an exhaustive verdict.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
pub use crate::witness::{CycleWitness, Parity, PathWitness};

/// Status of an exact search with a node budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum SearchStatus<W> {
    Found(W),
    /// The whole search space was exhausted.
    Absent,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome<W> {
    pub status: SearchStatus<W>,
    pub nodes: u64,
}

impl<W> SearchOutcome<W> {
    /// Converts the internal `Result<Option<_>>` convention, where running out
    /// of budget is an error, into an outcome.
    pub(crate) fn from_result(r: Result<Option<W>>, budget: &Budget) -> Result<Self> {
        let status = match r {
            Ok(Some(w)) => SearchStatus::Found(w),
            Ok(None) => SearchStatus::Absent,
            Err(Error::BudgetExceeded { .. }) => SearchStatus::BudgetExceeded,
            Err(e) => return Err(e),
        };
        Ok(SearchOutcome { status, nodes: budget.used().min(budget.limit()) })
    }

    pub fn found(&self) -> Option<&W> {
        match &self.status {
            SearchStatus::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self.status, SearchStatus::Absent)
    }

    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self.status, SearchStatus::BudgetExceeded)
    }
}

/// A finite set of odd cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OddCycleFamily {
    lengths: BTreeSet<usize>,
}

impl OddCycleFamily {
    pub fn new(lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        let lengths: BTreeSet<usize> = lengths.into_iter().collect();
        if lengths.is_empty() {
            return Err(Error::param("odd cycle family must be non-empty"));
        }
        if let Some(&bad) = lengths.iter().find(|&&l| l < 3 || l % 2 == 0) {
            return Err(Error::param(format!("family member {bad} is not an odd length >= 3")));
        }
        Ok(OddCycleFamily { lengths })
    }

    /// `{C_{2k+1}}`.
    pub fn single_cycle(k: usize) -> Result<Self> {
        OddCycleFamily::new([2 * k + 1])
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.lengths.iter().copied()
    }

    pub fn contains(&self, l: usize) -> bool {
        self.lengths.contains(&l)
    }

    /// `(s - 1) / 2` where `s` is the shortest odd length `>= 3` missing from the family.
    pub fn p(&self) -> usize {
        let mut s = 3;
        while self.lengths.contains(&s) {
            s += 2;
        }
        (s - 1) / 2
    }

    /// `(max - 1) / 2`.
    pub fn k(&self) -> usize {
        (self.lengths.last().copied().unwrap_or(1) - 1) / 2
    }
}

impl FromStr for OddCycleFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lengths = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::param(format!("bad cycle length '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        OddCycleFamily::new(lengths)
    }
}

impl fmt::Display for OddCycleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

const UNREACHED: u32 = u32::MAX;

/// Depth-first search for a simple path (or cycle, when start == target)
/// with an exact number of edges.
pub(crate) struct PathKernel<'g> {
    g: &'g Graph,
    blocked: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    target: Vertex,
    // dist[2v + q]: shortest walk from v to the target whose length has parity q
    dist: Vec<u32>,
    queue: VecDeque<(Vertex, usize)>,
}

impl<'g> PathKernel<'g> {
    pub(crate) fn new(g: &'g Graph, blocked: Vec<bool>) -> Self {
        let n = g.n();
        debug_assert_eq!(blocked.len(), n);
        PathKernel {
            g,
            blocked,
            on_path: vec![false; n],
            path: Vec::new(),
            target: 0,
            dist: vec![UNREACHED; 2 * n],
            queue: VecDeque::new(),
        }
    }

    pub(crate) fn set_blocked(&mut self, v: Vertex, blocked: bool) {
        self.blocked[v] = blocked;
    }

    #[inline]
    fn usable(&self, v: Vertex) -> bool {
        !self.blocked[v] && !self.on_path[v] && v != self.target
    }

    /// Simple walk path from `start` to `target` using exactly `edges` edges.
    /// With `start == target` the result is a cycle of length `edges`, listed
    /// without repeating the start.
    pub(crate) fn search(
        &mut self,
        start: Vertex,
        target: Vertex,
        edges: usize,
        budget: &mut Budget,
    ) -> Result<Option<Vec<Vertex>>> {
        if edges == 0 || self.blocked[start] || self.blocked[target] {
            return Ok(None);
        }
        self.target = target;
        self.path.clear();
        self.path.push(start);
        self.on_path[start] = true;
        let found = self.extend(start, edges, budget);
        self.on_path[start] = false;
        let found = found?;
        let mut path = std::mem::take(&mut self.path);
        if found {
            if start != target {
                path.push(target);
            }
            Ok(Some(path))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, w: Vertex, rem: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if rem == 1 {
            return Ok(self.g.has_edge(w, self.target) && !(w == self.target));
        }
        let reached = self.walk_distances();
        // rem - 1 fresh vertices are needed before the target.
        if rem - 1 > reached {
            return Ok(false);
        }
        let q = (rem - 1) % 2;
        let need = (rem - 1) as u32;
        let candidates: Vec<Vertex> = self
            .g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&y| self.usable(y) && self.dist[2 * y + q] <= need)
            .collect();
        for y in candidates {
            self.on_path[y] = true;
            self.path.push(y);
            let ok = self.extend(y, rem - 1, budget);
            match ok {
                Ok(true) => {
                    self.on_path[y] = false;
                    return Ok(true);
                }
                Ok(false) => {}
                Err(e) => {
                    self.on_path[y] = false;
                    return Err(e);
                }
            }
            self.path.pop();
            self.on_path[y] = false;
        }
        Ok(false)
    }

    /// Parity-lifted BFS from the target over usable vertices; returns the
    /// number of usable vertices reached.
    fn walk_distances(&mut self) -> usize {
        self.dist.fill(UNREACHED);
        self.queue.clear();
        let mut reached = 0;
        for &y in self.g.neighbors(self.target) {
            if self.usable(y) {
                self.dist[2 * y + 1] = 1;
                self.queue.push_back((y, 1));
                reached += 1;
            }
        }
        while let Some((u, q)) = self.queue.pop_front() {
            let d = self.dist[2 * u + q];
            for &z in self.g.neighbors(u) {
                if !self.usable(z) {
                    continue;
                }
                let slot = 2 * z + (1 - q);
                if self.dist[slot] == UNREACHED {
                    if self.dist[2 * z + q] == UNREACHED {
                        reached += 1;
                    }
                    self.dist[slot] = d + 1;
                    self.queue.push_back((z, 1 - q));
                }
            }
        }
        reached
    }
}

/// Shortest odd cycle, or `None` iff the graph is bipartite.
///
/// Runs a BFS from every vertex in the parity-lifted graph; the shortest odd
/// closed walk overall is a simple cycle, and the walk is shortened anyway.
pub fn odd_girth(g: &Graph) -> Option<CycleWitness> {
    if g.is_bipartite().is_bipartite() {
        return None;
    }
    let n = g.n();
    let mut best: Option<Vec<Vertex>> = None;
    let mut dist = vec![UNREACHED; 2 * n];
    let mut parent = vec![usize::MAX; 2 * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let bound = best.as_ref().map_or(u32::MAX, |b| b.len() as u32);
        if bound == 3 {
            break;
        }
        dist.fill(UNREACHED);
        queue.clear();
        dist[2 * s] = 0;
        queue.push_back(2 * s);
        while let Some(state) = queue.pop_front() {
            let d = dist[state];
            if d + 1 >= bound {
                break;
            }
            let (u, q) = (state / 2, state % 2);
            for &w in g.neighbors(u) {
                let next = 2 * w + (1 - q);
                if dist[next] == UNREACHED {
                    dist[next] = d + 1;
                    parent[next] = state;
                    queue.push_back(next);
                }
            }
            if dist[2 * s + 1] != UNREACHED {
                break;
            }
        }
        if dist[2 * s + 1] != UNREACHED && dist[2 * s + 1] < bound {
            let mut walk = Vec::new();
            let mut state = 2 * s + 1;
            while state != 2 * s {
                walk.push(state / 2);
                state = parent[state];
            }
            walk.reverse();
            best = Some(walk);
        }
    }
    best.map(CycleWitness::shorten_odd_walk)
}

pub(crate) fn find_cycle_of_length(g: &Graph, l: usize, budget: &mut Budget) -> Result<Option<CycleWitness>> {
    if l < 3 {
        return Err(Error::param(format!("cycle length must be >= 3, got {l}")));
    }
    let n = g.n();
    if l > n {
        return Ok(None);
    }
    // The anchor is the minimum vertex of the cycle.
    let mut kernel = PathKernel::new(g, vec![false; n]);
    for a in 0..=n - l {
        if a > 0 {
            kernel.set_blocked(a - 1, true);
        }
        if g.degree(a) < 2 {
            continue;
        }
        if let Some(c) = kernel.search(a, a, l, budget)? {
            return Ok(Some(CycleWitness::new(c)));
        }
    }
    Ok(None)
}

/// Exhaustive search for a cycle of length exactly `l`.
pub fn contains_cycle_of_length(g: &Graph, l: usize, limit: u64) -> Result<SearchOutcome<CycleWitness>> {
    let mut budget = Budget::new(limit);
    let r = find_cycle_of_length(g, l, &mut budget);
    SearchOutcome::from_result(r, &budget)
}

pub(crate) fn find_family_cycle(
    g: &Graph,
    family: &OddCycleFamily,
    budget: &mut Budget,
) -> Result<Option<CycleWitness>> {
    for l in family.lengths() {
        if let Some(c) = find_cycle_of_length(g, l, budget)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Freeness from every cycle length in `family` under one shared budget.
/// `Found` means the graph is *not* free; the witness length names the
/// violated member (the shortest violated one).
pub fn is_family_free(g: &Graph, family: &OddCycleFamily, limit: u64) -> Result<SearchOutcome<CycleWitness>> {
    let mut budget = Budget::new(limit);
    let r = find_family_cycle(g, family, &mut budget);
    SearchOutcome::from_result(r, &budget)
}

/// Shortest simple `u`–`v` path with the requested order parity and order at
/// most `max_order`, avoiding `blocked` vertices.
pub(crate) fn shortest_parity_path(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    parity: Parity,
    max_order: usize,
    blocked: &[bool],
    budget: &mut Budget,
) -> Result<Option<PathWitness>> {
    debug_assert!(u != v);
    let mut kernel = PathKernel::new(g, blocked.to_vec());
    let first = if parity == Parity::Even { 2 } else { 3 };
    for order in (first..=max_order.min(g.n())).step_by(2) {
        if let Some(p) = kernel.search(u, v, order - 1, budget)? {
            return Ok(Some(PathWitness::new(p)));
        }
    }
    Ok(None)
}

/// Simple `u`–`v` path of exactly `order` vertices avoiding `blocked`.
pub(crate) fn path_of_order(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    order: usize,
    blocked: &[bool],
    budget: &mut Budget,
) -> Result<Option<PathWitness>> {
    if order < 2 || order > g.n() {
        return Ok(None);
    }
    let mut kernel = PathKernel::new(g, blocked.to_vec());
    Ok(kernel.search(u, v, order - 1, budget)?.map(PathWitness::new))
}

/// Exact search for a simple `u`–`v` path of order at most `max_order` with
/// the given order parity, avoiding `forbidden`. Witnesses are shortest
/// among the admissible orders.
pub fn parity_path_exists(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    parity: Parity,
    max_order: usize,
    forbidden: &VertexSet,
    limit: u64,
) -> Result<SearchOutcome<PathWitness>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    forbidden.check_within(g)?;
    if u == v {
        return Err(Error::param("path endpoints must be distinct"));
    }
    if forbidden.contains(u) || forbidden.contains(v) {
        return Err(Error::param("path endpoints must not be forbidden"));
    }
    let mut budget = Budget::new(limit);
    let blocked = forbidden.mask(g.n());
    let r = shortest_parity_path(g, u, v, parity, max_order, &blocked, &mut budget);
    SearchOutcome::from_result(r, &budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::corpus;

    const LIMIT: u64 = 100_000_000;

    #[test]
    fn odd_girth_examples() {
        assert_eq!(odd_girth(&corpus::petersen()).map(|c| c.len()), Some(5));
        assert_eq!(odd_girth(&complete_bipartite(3, 3)), None);
        let bc = bc_construction(2, 20).unwrap().graph;
        let c = odd_girth(&bc).unwrap();
        c.validate(&bc).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(odd_girth(&bc_construction(1, 12).unwrap().graph).unwrap().len(), 3);
    }

    #[test]
    fn fixed_length_cycles() {
        let c7 = cycle_graph(7).unwrap();
        let out = contains_cycle_of_length(&c7, 7, LIMIT).unwrap();
        out.found().unwrap().validate(&c7).unwrap();

        let g = g_construction(3, 16).unwrap().graph;
        assert!(contains_cycle_of_length(&g, 11, LIMIT).unwrap().is_absent());

        let b = cycle_blowup(5, 2).unwrap();
        let out = contains_cycle_of_length(&b, 7, LIMIT).unwrap();
        let w = out.found().unwrap();
        assert_eq!(w.len(), 7);
        w.validate(&b).unwrap();

        assert!(contains_cycle_of_length(&c7, 2, LIMIT).is_err());
    }

    #[test]
    fn budget_is_a_distinct_outcome() {
        let g = complete_graph(12);
        let out = contains_cycle_of_length(&cycle_blowup(9, 2).unwrap(), 17, 5).unwrap();
        assert!(out.is_budget_exceeded());
        assert!(contains_cycle_of_length(&g, 11, LIMIT).unwrap().found().is_some());
    }

    #[test]
    fn family_freeness() {
        let bc3 = bc_construction(1, 12).unwrap().graph;
        let fam = OddCycleFamily::new([5, 7, 9]).unwrap();
        assert!(is_family_free(&bc3, &fam, LIMIT).unwrap().is_absent());

        let k4 = complete_graph(4);
        let out = is_family_free(&k4, &OddCycleFamily::new([3]).unwrap(), LIMIT).unwrap();
        assert_eq!(out.found().unwrap().len(), 3);

        let c7 = cycle_blowup(7, 1).unwrap();
        assert!(is_family_free(&c7, &OddCycleFamily::new([5]).unwrap(), LIMIT).unwrap().is_absent());

        assert!(OddCycleFamily::new([]).is_err());
        assert!(OddCycleFamily::new([4]).is_err());
    }

    #[test]
    fn family_parameters() {
        let f = OddCycleFamily::new([3, 5, 9]).unwrap();
        assert_eq!((f.p(), f.k()), (3, 4));
        let f: OddCycleFamily = "5,7,9,11".parse().unwrap();
        assert_eq!((f.p(), f.k()), (1, 5));
        assert_eq!(f.to_string(), "5,7,9,11");
    }

    #[test]
    fn parity_paths_on_c5() {
        let c5 = cycle_graph(5).unwrap();
        let none = VertexSet::new();
        let out = parity_path_exists(&c5, 0, 1, Parity::Even, 4, &none, LIMIT).unwrap();
        assert_eq!(out.found().unwrap().order(), 2);
        assert!(parity_path_exists(&c5, 0, 1, Parity::Odd, 4, &none, LIMIT).unwrap().is_absent());
        let out = parity_path_exists(&c5, 0, 2, Parity::Even, 4, &none, LIMIT).unwrap();
        let w = out.found().unwrap();
        assert_eq!(w.order(), 4);
        w.validate_request(&c5, 0, 2, Parity::Even, 4).unwrap();
    }

    #[test]
    fn parity_path_input_errors() {
        let c5 = cycle_graph(5).unwrap();
        let none = VertexSet::new();
        assert!(parity_path_exists(&c5, 1, 1, Parity::Odd, 4, &none, LIMIT).is_err());
        assert!(parity_path_exists(&c5, 1, 7, Parity::Odd, 4, &none, LIMIT).is_err());
        assert!(parity_path_exists(&c5, 0, 1, Parity::Odd, 5, &VertexSet::from([1]), LIMIT).is_err());
    }

    #[test]
    fn forbidden_vertices_are_avoided() {
        let c5 = cycle_graph(5).unwrap();
        let f = VertexSet::from([1]);
        // 0-4-3-2 is the only route avoiding 1.
        let out = parity_path_exists(&c5, 0, 2, Parity::Even, 5, &f, LIMIT).unwrap();
        assert_eq!(out.found().unwrap().vertices(), &[0, 4, 3, 2]);
        assert!(parity_path_exists(&c5, 0, 2, Parity::Odd, 5, &f, LIMIT).unwrap().is_absent());
    }
}
