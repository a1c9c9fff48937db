//! 2k-cores and strong-2k-cores.
//!
//! A vertex set `H` is a 2k-core when every unordered pair of distinct
//! vertices of `H` is joined inside `G[H]` by a path with an even number of
//! vertices and order at most `2k`; it is strong when every pair is also
//! joined by such a path with an odd number of vertices.
//!
//! Strong cores grow through two extension rules. With `l = |H| <= 2k - 2`
//! and a path `P` outside `H` of order at most `2k - l`:
//!
//! * single anchor: `P` has even order and both ends are adjacent to the same
//!   core vertex;
//! * two anchors: the ends of `P` (possibly one vertex) are adjacent to two
//!   distinct core vertices.
//!
//! Either way `H ∪ V(P)` is again a strong core.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::parity::{self, odd_girth, Parity, PathWitness};

/// Largest host accepted by the exhaustive core oracles.
pub const EXACT_CORE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub x: Vertex,
    pub y: Vertex,
    pub even: PathWitness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd: Option<PathWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreCertificate {
    pub core: VertexSet,
    pub k: usize,
    pub strong: bool,
    pub pairs: Vec<PairWitness>,
}

impl CoreCertificate {
    /// Independent re-check of every witness against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let h = &self.core;
        let limit = 2 * self.k;
        let expected = h.len() * (h.len().saturating_sub(1)) / 2;
        if self.pairs.len() != expected {
            return Err(Error::param("certificate does not cover every pair"));
        }
        let ids: Vec<Vertex> = h.iter().collect();
        let mut idx = 0;
        for (i, &x) in ids.iter().enumerate() {
            for &y in &ids[i + 1..] {
                let pw = &self.pairs[idx];
                idx += 1;
                if (pw.x, pw.y) != (x, y) {
                    return Err(Error::param("certificate pairs out of order"));
                }
                let check = |p: &PathWitness, parity| -> Result<()> {
                    p.validate_request(g, x, y, parity, limit)?;
                    if !p.avoids(|v| !h.contains(v)) {
                        return Err(Error::param("witness leaves the core"));
                    }
                    Ok(())
                };
                check(&pw.even, Parity::Even)?;
                match (&pw.odd, self.strong) {
                    (Some(p), _) => check(p, Parity::Odd)?,
                    (None, true) => return Err(Error::param("strong certificate lacks an odd witness")),
                    (None, false) => {}
                }
            }
        }
        Ok(())
    }
}

pub fn certify_2k_core(g: &Graph, h: &VertexSet, k: usize) -> Result<Option<CoreCertificate>> {
    certify(g, h, k, false, &mut Budget::default())
}

pub fn certify_strong_2k_core(g: &Graph, h: &VertexSet, k: usize) -> Result<Option<CoreCertificate>> {
    certify(g, h, k, true, &mut Budget::default())
}

pub(crate) fn certify(
    g: &Graph,
    h: &VertexSet,
    k: usize,
    strong: bool,
    budget: &mut Budget,
) -> Result<Option<CoreCertificate>> {
    h.check_within(g)?;
    if h.len() < 2 {
        return Err(Error::param("a core needs at least two vertices"));
    }
    if k < 1 {
        return Err(Error::param("k must be at least 1"));
    }
    let (sub, map) = g.induced_subgraph(h)?;
    if !quick_core_filter(&sub, strong) {
        return Ok(None);
    }
    let n = sub.n();
    let no_block = vec![false; n];
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    let lift = |p: PathWitness| PathWitness::new(p.into_vertices().into_iter().map(|v| map[v]).collect());
    for x in 0..n {
        for y in x + 1..n {
            let Some(even) = parity::shortest_parity_path(&sub, x, y, Parity::Even, 2 * k, &no_block, budget)? else {
                return Ok(None);
            };
            let odd = if strong {
                match parity::shortest_parity_path(&sub, x, y, Parity::Odd, 2 * k, &no_block, budget)? {
                    Some(p) => Some(lift(p)),
                    None => return Ok(None),
                }
            } else {
                None
            };
            pairs.push(PairWitness { x: map[x], y: map[y], even: lift(even), odd });
        }
    }
    Ok(Some(CoreCertificate { core: h.clone(), k, strong, pairs }))
}

/// Necessary conditions on the induced subgraph: connected; for strong cores
/// also minimum degree two (a degree-one vertex reaches its neighbour only by
/// the edge) and non-bipartite (path parities between a pair would be fixed).
fn quick_core_filter(sub: &Graph, strong: bool) -> bool {
    if !sub.is_connected() {
        return false;
    }
    if strong {
        if sub.n() < 3 || sub.min_degree().unwrap_or(0) < 2 {
            return false;
        }
        if sub.is_bipartite().is_bipartite() {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionPattern {
    /// Even path whose ends share one core neighbour.
    SingleAnchorEvenPath,
    /// Path of order at least two whose ends see two distinct core vertices.
    TwoAnchorPath,
    /// One outside vertex adjacent to two distinct core vertices.
    TwoAnchorSingleVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionStep {
    pub pattern: ExtensionPattern,
    pub anchors: Vec<Vertex>,
    pub path: PathWitness,
}

impl ExtensionStep {
    pub fn validate(&self, g: &Graph, h: &VertexSet, k: usize) -> Result<()> {
        let bad = |m: &str| Err(Error::param(format!("invalid extension step: {m}")));
        self.path.validate(g)?;
        if !self.path.avoids(|v| h.contains(v)) {
            return bad("path meets the core");
        }
        let order = self.path.order();
        if h.len() + order > 2 * k {
            return bad("path order exceeds 2k - |H|");
        }
        if self.anchors.iter().any(|&a| !h.contains(a)) {
            return bad("anchor outside the core");
        }
        let (u, v) = (self.path.first().unwrap_or(0), self.path.last().unwrap_or(0));
        match (self.pattern, self.anchors.as_slice()) {
            (ExtensionPattern::SingleAnchorEvenPath, &[x]) => {
                if !order.is_multiple_of(2) || !g.has_edge(x, u) || !g.has_edge(x, v) {
                    return bad("single-anchor pattern needs an even path with both ends on the anchor");
                }
            }
            (ExtensionPattern::TwoAnchorPath | ExtensionPattern::TwoAnchorSingleVertex, &[x, y]) => {
                let single = self.pattern == ExtensionPattern::TwoAnchorSingleVertex;
                if x == y || single != (order == 1) || !g.has_edge(x, u) || !g.has_edge(y, v) {
                    return bad("two-anchor pattern needs distinct anchors adjacent to the path ends");
                }
            }
            _ => return bad("wrong number of anchors"),
        }
        Ok(())
    }
}

/// Finds one extension step for a certified strong core, trying single
/// vertices with two core neighbours first, then shortest two-anchor paths,
/// then single-anchor even paths by increasing order; ties go to the lowest
/// vertex ids. Returns `None` when `|H| > 2k - 2` or no step exists.
pub fn find_extension(g: &Graph, h: &VertexSet, k: usize) -> Result<Option<ExtensionStep>> {
    find_extension_with(g, h, k, &mut Budget::default())
}

pub fn find_extension_with(g: &Graph, h: &VertexSet, k: usize, budget: &mut Budget) -> Result<Option<ExtensionStep>> {
    if certify(g, h, k, true, budget)?.is_none() {
        return Err(Error::param("extension requires a certified strong-2k-core"));
    }
    search_extension(g, h, k, budget)
}

fn search_extension(g: &Graph, h: &VertexSet, k: usize, budget: &mut Budget) -> Result<Option<ExtensionStep>> {
    let l = h.len();
    if l + 2 > 2 * k {
        return Ok(None);
    }
    let room = 2 * k - l;
    let in_core = h.mask(g.n());
    let core_nbrs = |w: Vertex| g.neighbors(w).iter().copied().filter(|&x| in_core[x]);

    for w in g.vertices().filter(|&w| !in_core[w]) {
        let anchors: Vec<Vertex> = core_nbrs(w).take(2).collect();
        if anchors.len() == 2 {
            return Ok(Some(ExtensionStep {
                pattern: ExtensionPattern::TwoAnchorSingleVertex,
                anchors,
                path: PathWitness::new(vec![w]),
            }));
        }
    }

    // Every outside vertex now has at most one core neighbour.
    let label: Vec<Option<Vertex>> = g
        .vertices()
        .map(|w| if in_core[w] { None } else { core_nbrs(w).next() })
        .collect();
    if let Some(step) = shortest_two_anchor_path(g, &in_core, &label, room) {
        return Ok(Some(step));
    }

    for order in (2..=room).step_by(2) {
        for x in h.iter() {
            let outside: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&w| !in_core[w]).collect();
            for (i, &u) in outside.iter().enumerate() {
                for &v in &outside[i + 1..] {
                    if let Some(path) = parity::path_of_order(g, u, v, order, &in_core, budget)? {
                        return Ok(Some(ExtensionStep {
                            pattern: ExtensionPattern::SingleAnchorEvenPath,
                            anchors: vec![x],
                            path,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Shortest path outside the core between vertices whose (unique) core
/// neighbours differ. Shortest paths are simple, so BFS is exact here.
fn shortest_two_anchor_path(
    g: &Graph,
    in_core: &[bool],
    label: &[Option<Vertex>],
    room: usize,
) -> Option<ExtensionStep> {
    let n = g.n();
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for u in 0..n {
        let Some(x) = label[u] else { continue };
        dist.fill(usize::MAX);
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        let mut hit = None;
        'bfs: while let Some(a) = queue.pop_front() {
            // order of a path ending at a neighbour of `a` would be dist[a] + 2
            if dist[a] + 2 > room || best.as_ref().is_some_and(|(o, _)| dist[a] + 2 >= *o) {
                break;
            }
            for &b in g.neighbors(a) {
                if in_core[b] || dist[b] != usize::MAX {
                    continue;
                }
                dist[b] = dist[a] + 1;
                parent[b] = a;
                queue.push_back(b);
                if label[b].is_some_and(|y| y != x) {
                    hit = Some(b);
                    break 'bfs;
                }
            }
        }
        if let Some(v) = hit {
            let mut path = vec![v];
            while *path.last().expect("non-empty") != u {
                path.push(parent[*path.last().expect("non-empty")]);
            }
            path.reverse();
            best = Some((path.len(), path));
        }
    }
    best.map(|(_, path)| {
        let (u, v) = (path[0], path[path.len() - 1]);
        ExtensionStep {
            pattern: ExtensionPattern::TwoAnchorPath,
            anchors: vec![label[u].expect("labelled"), label[v].expect("labelled")],
            path: PathWitness::new(path),
        }
    })
}

/// `H ∪ V(P)` for a validated step.
pub fn apply_extension(g: &Graph, h: &VertexSet, step: &ExtensionStep, k: usize) -> Result<VertexSet> {
    step.validate(g, h, k)?;
    let grown = h.union(step.path.vertices().iter().copied());
    debug_assert!(
        certify(g, &grown, k, true, &mut Budget::unlimited()).is_ok_and(|c| c.is_some()),
        "extension did not yield a strong core"
    );
    Ok(grown)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyCore {
    pub core: VertexSet,
    pub trace: Vec<ExtensionStep>,
}

/// Seeds with a shortest odd cycle (a strong core when its length is at most
/// `2k - 1`) and applies extension steps until none applies.
pub fn greedy_max_strong_core(g: &Graph, k: usize) -> Result<GreedyCore> {
    greedy_max_strong_core_with(g, k, &mut Budget::default())
}

pub fn greedy_max_strong_core_with(g: &Graph, k: usize, budget: &mut Budget) -> Result<GreedyCore> {
    let Some(cycle) = odd_girth(g) else {
        return Err(Error::NoSeed("graph is bipartite".into()));
    };
    if cycle.len() + 1 > 2 * k {
        return Err(Error::NoSeed(format!(
            "odd girth {} exceeds 2k - 1 = {}",
            cycle.len(),
            (2 * k).saturating_sub(1)
        )));
    }
    let mut core: VertexSet = cycle.vertices().iter().copied().collect();
    debug_assert!(certify(g, &core, k, true, budget)?.is_some());
    let mut trace = Vec::new();
    while let Some(step) = search_extension(g, &core, k, budget)? {
        core = apply_extension(g, &core, &step, k)?;
        trace.push(step);
    }
    Ok(GreedyCore { core, trace })
}

/// Maximum-cardinality strong-2k-core by exhaustive subset search, or the
/// empty set when no strong core exists. Hosts are limited to 16 vertices.
pub fn exact_maximum_strong_core(g: &Graph, k: usize) -> Result<VertexSet> {
    exact_maximum_core(g, k, true, &mut Budget::default())
}

/// Maximum-cardinality 2k-core by exhaustive subset search.
pub fn exact_maximum_2k_core(g: &Graph, k: usize) -> Result<VertexSet> {
    exact_maximum_core(g, k, false, &mut Budget::default())
}

pub(crate) fn exact_maximum_core(g: &Graph, k: usize, strong: bool, budget: &mut Budget) -> Result<VertexSet> {
    let n = g.n();
    if n > EXACT_CORE_LIMIT {
        return Err(Error::TooLarge { n, limit: EXACT_CORE_LIMIT });
    }
    let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let smallest = if strong { 3 } else { 2 };
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0..(1u32 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for size in (smallest..=n).rev() {
        for &mask in &by_size[size] {
            if !mask_filter(&adj, mask, strong) {
                continue;
            }
            let h: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if certify(g, &h, k, strong, budget)?.is_some() {
                return Ok(h);
            }
        }
    }
    Ok(VertexSet::new())
}

/// Bitmask version of the connectivity / degree / bipartiteness filter.
fn mask_filter(adj: &[u32], mask: u32, strong: bool) -> bool {
    let first = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << first;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    if seen != mask {
        return false;
    }
    if !strong {
        return true;
    }
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if (adj[v] & mask).count_ones() < 2 {
            return false;
        }
    }
    // two-colour by BFS layers
    let mut side0 = 1u32 << first;
    let mut side1 = 0u32;
    let mut frontier = side0;
    let mut colored = side0;
    let mut parity = 0;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & mask;
        }
        let same = if parity == 0 { side0 } else { side1 };
        if (next & same) != 0 {
            return true; // odd cycle
        }
        next &= !colored;
        colored |= next;
        if parity == 0 {
            side1 |= next;
        } else {
            side0 |= next;
        }
        parity ^= 1;
        frontier = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::corpus;

    fn set<const N: usize>(v: [Vertex; N]) -> VertexSet {
        VertexSet::from(v)
    }

    #[test]
    fn single_edge_is_a_core() {
        let g = corpus::petersen();
        let c = certify_2k_core(&g, &set([0, 1]), 5).unwrap().unwrap();
        assert_eq!(c.pairs[0].even.vertices(), &[0, 1]);
        c.validate(&g).unwrap();
    }

    #[test]
    fn c5_is_a_4_core() {
        let c5 = cycle_graph(5).unwrap();
        let all = VertexSet::from_iter(0..5);
        let c = certify_2k_core(&c5, &all, 2).unwrap().unwrap();
        c.validate(&c5).unwrap();
        for pw in &c.pairs {
            let adjacent = c5.has_edge(pw.x, pw.y);
            assert_eq!(pw.even.order(), if adjacent { 2 } else { 4 });
        }
    }

    #[test]
    fn path_endpoints_are_not_a_core() {
        let p3 = corpus::path_graph(3);
        assert_eq!(certify_2k_core(&p3, &set([0, 2]), 3).unwrap(), None);
        assert!(certify_2k_core(&p3, &set([0]), 3).is_err());
    }

    #[test]
    fn strong_core_examples() {
        let k3 = complete_graph(3);
        let all = VertexSet::from_iter(0..3);
        let c = certify_strong_2k_core(&k3, &all, 2).unwrap().unwrap();
        c.validate(&k3).unwrap();
        assert!(c.pairs.iter().all(|p| p.even.order() == 2 && p.odd.as_ref().unwrap().order() == 3));

        let edge = complete_graph(2);
        assert_eq!(certify_strong_2k_core(&edge, &set([0, 1]), 4).unwrap(), None);

        let c5 = cycle_graph(5).unwrap();
        let all = VertexSet::from_iter(0..5);
        assert_eq!(certify_strong_2k_core(&c5, &all, 2).unwrap(), None);
        certify_strong_2k_core(&c5, &all, 3).unwrap().unwrap().validate(&c5).unwrap();
    }

    #[test]
    fn no_extension_in_extremal_graph() {
        let c = g_construction(3, 16).unwrap();
        let h: VertexSet = c.selected.iter().copied().collect();
        assert_eq!(find_extension(&c.graph, &h, 5).unwrap(), None);
    }

    #[test]
    fn k5_triangle_extends_by_one_vertex() {
        let k5 = complete_graph(5);
        let h = set([0, 1, 2]);
        let step = find_extension(&k5, &h, 5).unwrap().unwrap();
        assert_eq!(step.pattern, ExtensionPattern::TwoAnchorSingleVertex);
        assert_eq!(step.path.vertices(), &[3]);
        assert_eq!(step.anchors, vec![0, 1]);
        let grown = apply_extension(&k5, &h, &step, 5).unwrap();
        assert_eq!(grown, set([0, 1, 2, 3]));
        assert!(certify_strong_2k_core(&k5, &grown, 5).unwrap().is_some());
    }

    #[test]
    fn pendant_does_not_extend_c5() {
        let g = corpus::c5_with_pendant();
        let h = VertexSet::from_iter(0..5);
        assert_eq!(find_extension(&g, &h, 4).unwrap(), None);
    }

    #[test]
    fn uncertified_core_is_rejected() {
        let c5 = cycle_graph(5).unwrap();
        assert!(find_extension(&c5, &VertexSet::from_iter(0..5), 2).is_err());
    }

    #[test]
    fn single_anchor_even_path_extension() {
        // triangle 0,1,2 with an edge 3-4 hanging off vertex 0
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 3), (0, 4)]).unwrap();
        let h = set([0, 1, 2]);
        let step = ExtensionStep {
            pattern: ExtensionPattern::SingleAnchorEvenPath,
            anchors: vec![0],
            path: PathWitness::new(vec![3, 4]),
        };
        let grown = apply_extension(&g, &h, &step, 4).unwrap();
        assert_eq!(grown.len(), 5);
        assert!(certify_strong_2k_core(&g, &grown, 4).unwrap().is_some());
        // 3 and 4 each see only vertex 0, so the search must use the same pattern
        let found = find_extension(&g, &h, 4).unwrap().unwrap();
        assert_eq!(found, step);
    }

    #[test]
    fn oversized_step_is_rejected() {
        let k5 = complete_graph(5);
        let step = ExtensionStep {
            pattern: ExtensionPattern::TwoAnchorPath,
            anchors: vec![0, 1],
            path: PathWitness::new(vec![3, 4]),
        };
        // |H| = 3, k = 2: room 1 < 2
        assert!(apply_extension(&k5, &set([0, 1, 2]), &step, 2).is_err());
    }

    #[test]
    fn greedy_examples() {
        let bc3 = bc_construction(1, 12).unwrap();
        let g = greedy_max_strong_core(&bc3.graph, 5).unwrap();
        assert_eq!(g.core, bc3.selected.iter().copied().collect());
        assert!(g.trace.is_empty());

        let k6 = complete_graph(6);
        let g = greedy_max_strong_core(&k6, 5).unwrap();
        assert_eq!(g.core.len(), 6);
        assert_eq!(g.trace.len(), 3);
        assert!(g.trace.iter().all(|s| s.pattern == ExtensionPattern::TwoAnchorSingleVertex));

        let c7 = cycle_graph(7).unwrap();
        assert!(matches!(greedy_max_strong_core(&c7, 2), Err(Error::NoSeed(_))));
        assert!(matches!(greedy_max_strong_core(&complete_bipartite(2, 2), 5), Err(Error::NoSeed(_))));
    }

    #[test]
    fn exact_examples() {
        assert_eq!(exact_maximum_strong_core(&complete_graph(4), 3).unwrap().len(), 4);
        assert_eq!(exact_maximum_strong_core(&corpus::c5_with_chord(), 2).unwrap(), set([0, 1, 2]));
        assert!(exact_maximum_strong_core(&complete_bipartite(3, 3), 4).unwrap().is_empty());
        assert!(matches!(
            exact_maximum_strong_core(&corpus::path_graph(17), 3),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn mask_filter_matches_graph_filter() {
        for f in corpus::small_fixtures(9) {
            let g = &f.graph;
            let n = g.n();
            let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
            for mask in 1u32..(1 << n) {
                let h: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let (sub, _) = g.induced_subgraph(&h).unwrap();
                for strong in [false, true] {
                    assert_eq!(mask_filter(&adj, mask, strong), quick_core_filter(&sub, strong), "{} {mask:b}", f.name);
                }
            }
        }
    }
}
