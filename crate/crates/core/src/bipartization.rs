//! Exact odd cycle transversals: `d2` (fewest vertices whose removal leaves
//! a bipartite graph) and `gamma2` (fewest edges), for small hosts.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::parity::odd_girth;

pub const D2_LIMIT: usize = 64;
pub const GAMMA2_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "items", rename_all = "snake_case")]
pub enum Removed {
    Vertices(VertexSet),
    Edges(Vec<(Vertex, Vertex)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartizationResult {
    pub removed: Removed,
    pub size: usize,
    /// Side of every surviving vertex; `None` for deleted vertices.
    pub two_coloring: Vec<Option<u8>>,
}

impl BipartizationResult {
    fn vertices(g: &Graph, removed: VertexSet) -> Self {
        let gone = removed.mask(g.n());
        let two_coloring = two_color_avoiding(g, &gone, &[]).expect("remainder is bipartite");
        BipartizationResult { size: removed.len(), removed: Removed::Vertices(removed), two_coloring }
    }

    fn edges(g: &Graph, mut removed: Vec<(Vertex, Vertex)>) -> Self {
        removed.sort_unstable();
        let two_coloring = two_color_avoiding(g, &vec![false; g.n()], &removed).expect("remainder is bipartite");
        BipartizationResult { size: removed.len(), removed: Removed::Edges(removed), two_coloring }
    }

    /// Checks that the two-colouring is proper on everything that survives.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: &str| Err(Error::param(format!("invalid bipartization: {m}")));
        if self.two_coloring.len() != g.n() {
            return bad("colouring has the wrong length");
        }
        let (gone, cut): (Vec<bool>, Vec<(Vertex, Vertex)>) = match &self.removed {
            Removed::Vertices(s) => {
                s.check_within(g)?;
                (s.mask(g.n()), Vec::new())
            }
            Removed::Edges(e) => {
                if e.iter().any(|&(u, v)| u >= v || !g.has_edge(u, v)) {
                    return bad("removed pair is not an edge");
                }
                (vec![false; g.n()], e.clone())
            }
        };
        let count = match &self.removed {
            Removed::Vertices(s) => s.len(),
            Removed::Edges(e) => e.len(),
        };
        if count != self.size {
            return bad("size does not match the removed set");
        }
        for v in g.vertices() {
            if gone[v] != self.two_coloring[v].is_none() {
                return bad("colouring does not match the removed vertices");
            }
        }
        for (u, v) in g.edges() {
            if gone[u] || gone[v] || cut.binary_search(&(u, v)).is_ok() {
                continue;
            }
            if self.two_coloring[u] == self.two_coloring[v] {
                return bad("surviving edge is monochromatic");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BipartizationOutcome {
    Exact(BipartizationResult),
    /// Budget ran out with `lower <= optimum <= upper`; `best` achieves `upper`.
    Bracketed { lower: usize, upper: usize, best: BipartizationResult },
}

impl BipartizationOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            BipartizationOutcome::Exact(r) => Some(r.size),
            BipartizationOutcome::Bracketed { .. } => None,
        }
    }

    /// A bracket whose lower bound meets the incumbent is an exact answer.
    fn bracket(lower: usize, best: BipartizationResult) -> Self {
        if lower >= best.size {
            BipartizationOutcome::Exact(best)
        } else {
            BipartizationOutcome::Bracketed { lower, upper: best.size, best }
        }
    }

    pub fn best(&self) -> &BipartizationResult {
        match self {
            BipartizationOutcome::Exact(r) => r,
            BipartizationOutcome::Bracketed { best, .. } => best,
        }
    }
}

fn two_color_avoiding(g: &Graph, gone: &[bool], cut: &[(Vertex, Vertex)]) -> Option<Vec<Option<u8>>> {
    let mut side: Vec<Option<u8>> = vec![None; g.n()];
    let mut stack = Vec::new();
    for s in g.vertices() {
        if gone[s] || side[s].is_some() {
            continue;
        }
        side[s] = Some(0);
        stack.push(s);
        while let Some(u) = stack.pop() {
            let su = side[u].expect("coloured");
            for &w in g.neighbors(u) {
                if gone[w] || cut.binary_search(&(u.min(w), u.max(w))).is_ok() {
                    continue;
                }
                match side[w] {
                    None => {
                        side[w] = Some(1 - su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side)
}

/// Shortest odd cycle of `G - gone`, in original labels.
fn short_odd_cycle(g: &Graph, gone: &[bool]) -> Option<Vec<Vertex>> {
    let keep: VertexSet = g.vertices().filter(|&v| !gone[v]).collect();
    let (sub, map) = g.induced_subgraph(&keep).expect("in range");
    odd_girth(&sub).map(|c| c.vertices().iter().map(|&v| map[v]).collect())
}

/// Size of a greedy packing of vertex-disjoint odd cycles in `G - gone`.
fn disjoint_cycle_packing(g: &Graph, gone: &[bool]) -> usize {
    let mut gone = gone.to_vec();
    let mut count = 0;
    while let Some(c) = short_odd_cycle(g, &gone) {
        count += 1;
        for v in c {
            gone[v] = true;
        }
    }
    count
}

/// Minimum vertex bipartization by iterative deepening: every solution
/// meets each odd cycle, so branch over the vertices of a shortest one.
pub fn d2(g: &Graph, limit: u64) -> Result<BipartizationOutcome> {
    let n = g.n();
    if n > D2_LIMIT {
        return Err(Error::TooLarge { n, limit: D2_LIMIT });
    }
    let mut budget = Budget::new(limit);
    let upper_set = greedy_vertex_transversal(g);
    let mut lower = disjoint_cycle_packing(g, &vec![false; n]);
    while lower < upper_set.len() {
        let mut gone = vec![false; n];
        let mut kept = vec![false; n];
        match d2_branch(g, &mut gone, &mut kept, lower, &mut budget) {
            Ok(true) => {
                let removed: VertexSet = g.vertices().filter(|&v| gone[v]).collect();
                return Ok(BipartizationOutcome::Exact(BipartizationResult::vertices(g, removed)));
            }
            Ok(false) => lower += 1,
            Err(Error::BudgetExceeded { .. }) => {
                let best = BipartizationResult::vertices(g, upper_set);
                return Ok(BipartizationOutcome::bracket(lower, best));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(BipartizationOutcome::Exact(BipartizationResult::vertices(g, upper_set)))
}

/// On success `gone` holds a transversal of size at most `t`.
fn d2_branch(g: &Graph, gone: &mut [bool], kept: &mut [bool], t: usize, budget: &mut Budget) -> Result<bool> {
    budget.tick()?;
    let Some(cycle) = short_odd_cycle(g, gone) else {
        return Ok(true);
    };
    if t == 0 || disjoint_cycle_packing(g, gone) > t {
        return Ok(false);
    }
    // Branch i deletes the i-th deletable cycle vertex and keeps the earlier ones.
    let choices: Vec<Vertex> = cycle.into_iter().filter(|&v| !kept[v]).collect();
    for (i, &v) in choices.iter().enumerate() {
        gone[v] = true;
        if d2_branch(g, gone, kept, t - 1, budget)? {
            for &w in &choices[..i] {
                kept[w] = false;
            }
            return Ok(true);
        }
        gone[v] = false;
        kept[v] = true;
    }
    for &w in &choices {
        kept[w] = false;
    }
    Ok(false)
}

fn greedy_vertex_transversal(g: &Graph) -> VertexSet {
    let mut gone = vec![false; g.n()];
    while let Some(c) = short_odd_cycle(g, &gone) {
        let v = c
            .into_iter()
            .max_by_key(|&v| (g.neighbors(v).iter().filter(|&&w| !gone[w]).count(), std::cmp::Reverse(v)))
            .expect("cycle is non-empty");
        gone[v] = true;
    }
    g.vertices().filter(|&v| gone[v]).collect()
}

/// Minimum edge bipartization as `|E| - maxcut`, with the maximum cut found
/// by branch and bound over side assignments.
pub fn gamma2(g: &Graph, limit: u64) -> Result<BipartizationOutcome> {
    let n = g.n();
    if n > GAMMA2_LIMIT {
        return Err(Error::TooLarge { n, limit: GAMMA2_LIMIT });
    }
    let mut budget = Budget::new(limit);
    let mut mc = MaxCut::new(g);
    let outcome = mc.run(&mut budget);
    let result = BipartizationResult::edges(g, mc.uncut_edges());
    match outcome {
        Ok(()) => Ok(BipartizationOutcome::Exact(result)),
        Err(Error::BudgetExceeded { .. }) => {
            let lower = edge_disjoint_cycle_packing(g);
            Ok(BipartizationOutcome::bracket(lower, result))
        }
        Err(e) => Err(e),
    }
}

struct MaxCut<'g> {
    g: &'g Graph,
    order: Vec<Vertex>,
    side: Vec<u8>,
    // assigned neighbours of v on side 0 / side 1
    towards: Vec<[usize; 2]>,
    best_cut: usize,
    best_side: Vec<u8>,
}

impl<'g> MaxCut<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        // BFS order from the highest-degree vertex keeps the bound tight early.
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut by_degree: Vec<Vertex> = g.vertices().collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for &s in &by_degree {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut head = order.len();
            order.push(s);
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        let best_side = local_search_cut(g);
        let best_cut = cut_size(g, &best_side);
        MaxCut { g, order, side: vec![u8::MAX; n], towards: vec![[0, 0]; n], best_cut, best_side }
    }

    fn run(&mut self, budget: &mut Budget) -> Result<()> {
        if self.g.n() == 0 {
            return Ok(());
        }
        let remaining = self.g.m();
        self.assign(0, 0, remaining, budget)
    }

    fn place(&mut self, v: Vertex, s: u8, delta: isize) {
        for &w in self.g.neighbors(v) {
            self.towards[w][s as usize] = self.towards[w][s as usize].wrapping_add_signed(delta);
        }
    }

    /// `free` counts edges with both ends unassigned.
    fn assign(&mut self, depth: usize, cut: usize, free: usize, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        if depth == self.order.len() {
            if cut > self.best_cut {
                self.best_cut = cut;
                self.best_side = self.side.clone();
            }
            return Ok(());
        }
        let bound = cut
            + free
            + self.order[depth..].iter().map(|&v| self.towards[v][0].max(self.towards[v][1])).sum::<usize>();
        if bound <= self.best_cut {
            return Ok(());
        }
        let v = self.order[depth];
        let unassigned_nbrs = self.g.degree(v) - self.towards[v][0] - self.towards[v][1];
        let sides: &[u8] = if depth == 0 { &[0] } else { &[0, 1] };
        // try the side that cuts more edges first
        let mut sides = sides.to_vec();
        if self.towards[v][0] > self.towards[v][1] {
            sides.reverse();
        }
        for s in sides {
            let gain = self.towards[v][1 - s as usize];
            self.side[v] = s;
            self.place(v, s, 1);
            self.assign(depth + 1, cut + gain, free - unassigned_nbrs, budget)?;
            self.place(v, s, -1);
            self.side[v] = u8::MAX;
        }
        Ok(())
    }

    fn uncut_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.g.edges().filter(|&(u, v)| self.best_side[u] == self.best_side[v]).collect()
    }
}

fn cut_size(g: &Graph, side: &[u8]) -> usize {
    g.edges().filter(|&(u, v)| side[u] != side[v]).count()
}

/// Start from a BFS two-colouring attempt, then flip single vertices while
/// that strictly increases the cut.
fn local_search_cut(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for s in g.vertices() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                }
            }
        }
    }
    loop {
        let flip = g.vertices().find(|&v| {
            let same = g.neighbors(v).iter().filter(|&&w| side[w] == side[v]).count();
            2 * same > g.degree(v)
        });
        match flip {
            Some(v) => side[v] = 1 - side[v],
            None => return side,
        }
    }
}

fn edge_disjoint_cycle_packing(g: &Graph) -> usize {
    let mut h = g.clone();
    let mut count = 0;
    while let Some(c) = odd_girth(&h) {
        count += 1;
        let vs = c.vertices();
        let cycle_edges: Vec<(Vertex, Vertex)> =
            (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect();
        h = h.remove_edges(&cycle_edges);
    }
    count
}

/// Second, independent route to `gamma2`: iterative deepening over edge
/// deletions, branching on the edges of a shortest odd cycle. Used to cross
/// check the max-cut route.
pub fn gamma2_by_edge_branching(g: &Graph, limit: u64) -> Result<BipartizationOutcome> {
    let n = g.n();
    if n > GAMMA2_LIMIT {
        return Err(Error::TooLarge { n, limit: GAMMA2_LIMIT });
    }
    let mut budget = Budget::new(limit);
    let mut t = edge_disjoint_cycle_packing(g);
    loop {
        let mut removed = Vec::new();
        let mut kept = Vec::new();
        match edge_branch(g, &mut removed, &mut kept, t, &mut budget) {
            Ok(true) => return Ok(BipartizationOutcome::Exact(BipartizationResult::edges(g, removed))),
            Ok(false) => t += 1,
            Err(Error::BudgetExceeded { .. }) => {
                let side = local_search_cut(g);
                let best = BipartizationResult::edges(g, g.edges().filter(|&(u, v)| side[u] == side[v]).collect());
                return Ok(BipartizationOutcome::bracket(t, best));
            }
            Err(e) => return Err(e),
        }
    }
}

fn edge_branch(
    g: &Graph,
    removed: &mut Vec<(Vertex, Vertex)>,
    kept: &mut Vec<(Vertex, Vertex)>,
    t: usize,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    let h = g.remove_edges(removed);
    let Some(cycle) = odd_girth(&h) else {
        return Ok(true);
    };
    if t == 0 {
        return Ok(false);
    }
    let vs = cycle.vertices();
    let choices: Vec<(Vertex, Vertex)> = (0..vs.len())
        .map(|i| {
            let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
            (a.min(b), a.max(b))
        })
        .filter(|e| !kept.contains(e))
        .collect();
    let kept_len = kept.len();
    for &e in &choices {
        removed.push(e);
        if edge_branch(g, removed, kept, t - 1, budget)? {
            kept.truncate(kept_len);
            return Ok(true);
        }
        removed.pop();
        kept.push(e);
    }
    kept.truncate(kept_len);
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::corpus;

    const LIMIT: u64 = 100_000_000;

    fn exact_d2(g: &Graph) -> usize {
        let out = d2(g, LIMIT).unwrap();
        out.best().validate(g).unwrap();
        out.exact().expect("within budget")
    }

    fn exact_gamma2(g: &Graph) -> usize {
        let out = gamma2(g, LIMIT).unwrap();
        out.best().validate(g).unwrap();
        let other = gamma2_by_edge_branching(g, LIMIT).unwrap();
        other.best().validate(g).unwrap();
        assert_eq!(out.exact(), other.exact());
        out.exact().expect("within budget")
    }

    #[test]
    fn small_examples() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(exact_d2(&c5), 1);
        assert_eq!(exact_gamma2(&c5), 1);
        let k4 = complete_graph(4);
        assert_eq!(exact_d2(&k4), 2);
        assert_eq!(exact_gamma2(&k4), 2);
        assert_eq!(exact_d2(&complete_bipartite(3, 4)), 0);
        assert_eq!(exact_gamma2(&complete_bipartite(3, 4)), 0);
        assert_eq!(exact_d2(&corpus::petersen()), 3);
        assert_eq!(exact_gamma2(&corpus::petersen()), 3);
    }

    #[test]
    fn t_star_values() {
        // the suspended clique holds every odd cycle
        for r in 2..=5 {
            let g = t_star(r, 12).unwrap().graph;
            assert_eq!(exact_d2(&g), r - 2, "r={r}");
            let choose2 = |x: usize| x * x.saturating_sub(1) / 2;
            assert_eq!(exact_gamma2(&g), choose2(r.div_ceil(2)) + choose2(r / 2), "r={r}");
        }
    }

    #[test]
    fn size_limits() {
        assert!(matches!(d2(&Graph::empty(65), LIMIT), Err(Error::TooLarge { .. })));
        assert!(matches!(gamma2(&Graph::empty(41), LIMIT), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn tiny_budget_brackets() {
        let g = corpus::petersen();
        match d2(&g, 1).unwrap() {
            BipartizationOutcome::Bracketed { lower, upper, best } => {
                best.validate(&g).unwrap();
                assert!(lower <= 3 && 3 <= upper);
            }
            BipartizationOutcome::Exact(r) => assert_eq!(r.size, 3),
        }
    }
}
