//! Immutable simple undirected graphs on dense integer vertex ids.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::witness::CycleWitness;

pub type Vertex = usize;

/// Graphs up to this many vertices also carry a bit-matrix for membership tests.
const DENSE_LIMIT: usize = 4096;

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are sorted; adjacency membership is a bit test for graphs
/// with at most 4096 vertices and a binary search above that.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
    rows: Option<Vec<Vec<u64>>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Serialized as `{"n": .., "edges": [[u, v], ..]}`.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs (in either
    /// orientation) collapse to one edge; loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edge_list(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Same as [`Graph::from_edge_list`] for callers that already guarantee
    /// valid pairs (generators).
    pub(crate) fn from_pairs_unchecked(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in pairs {
            debug_assert!(u != v && u < n && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        Graph::from_adjacency(adj)
    }

    fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Graph {
        let n = adj.len();
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let rows = (n <= DENSE_LIMIT).then(|| {
            let words = n.div_ceil(64);
            adj.iter()
                .map(|list| {
                    let mut row = vec![0u64; words];
                    for &v in list {
                        row[v / 64] |= 1 << (v % 64);
                    }
                    row
                })
                .collect()
        });
        Graph { adj, m, rows }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![Vec::new(); n])
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match &self.rows {
            Some(rows) => rows[u][v / 64] >> (v % 64) & 1 == 1,
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Minimum degree; errors on the graph with no vertices.
    pub fn min_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(Vec::len)
            .min()
            .ok_or_else(|| Error::param("minimum degree of the empty graph"))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Either a proper 2-colouring or a simple odd cycle.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Bipartiteness::OddCycle(tree_cycle(&parent, &depth, u, w));
                    }
                }
            }
        }
        Bipartiteness::TwoColoring(side)
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in increasing
    /// order of original id. The returned map sends new ids to old ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        let map: Vec<Vertex> = set.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect())
            .collect();
        Ok((Graph::from_adjacency(adj), map))
    }

    /// `G - S`, relabelled as in [`Graph::induced_subgraph`].
    pub fn remove_vertices(&self, removed: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        let keep = VertexSet::from_iter(self.vertices().filter(|v| !removed.contains(*v)));
        self.induced_subgraph(&keep)
    }

    /// `G - E` on the same vertex set.
    pub fn remove_edges(&self, removed: &[(Vertex, Vertex)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        Graph::from_adjacency(adj)
    }

    /// Returns a copy with the given extra edges.
    pub fn with_edges(&self, extra: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut pairs: Vec<_> = self.edges().collect();
        pairs.extend_from_slice(extra);
        Graph::from_edge_list(self.n(), &pairs)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&|_| false)
    }

    pub(crate) fn components_avoiding(&self, skip: &dyn Fn(Vertex) -> bool) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] || skip(s) {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] && !skip(w) {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// True iff removing `v` disconnects the graph. The graph must be
    /// connected.
    pub fn is_cut_vertex(&self, v: Vertex) -> Result<bool> {
        self.check_vertex(v)?;
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.components_avoiding(&|w| w == v).len() > 1)
    }

    /// Articulation points of every component, sorted (iterative Tarjan).
    pub fn articulation_points(&self) -> Vec<Vertex> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[u].len() {
                    let w = self.adj[u][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Edge-list text: a header `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Parses the edge-list format. Blank lines and lines starting with `#`
    /// are ignored anywhere in the input.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        Graph::read_edge_list(text.as_bytes())
    }

    pub fn read_edge_list(reader: impl BufRead) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let lineno = i + 1;
            let line = line.map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums = parse_two(line).map_err(|msg| Error::Parse { line: lineno, msg })?;
            if header.is_none() {
                header = Some(nums);
            } else {
                pairs.push(nums);
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing 'n m' header".into() })?;
        if pairs.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header announces {m} edges, found {}", pairs.len()),
            });
        }
        Graph::from_edge_list(n, &pairs)
    }
}

fn parse_two(line: &str) -> std::result::Result<(usize, usize), String> {
    let mut it = line.split_whitespace();
    let mut next = || -> std::result::Result<usize, String> {
        let tok = it.next().ok_or_else(|| "expected two integers".to_string())?;
        tok.parse().map_err(|_| format!("not a non-negative integer: '{tok}'"))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err("trailing tokens".into());
    }
    Ok((a, b))
}

/// Cycle closed by the non-tree edge `u-w` in a BFS forest with equal-parity depths.
fn tree_cycle(parent: &[Vertex], depth: &[usize], u: Vertex, w: Vertex) -> CycleWitness {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    CycleWitness::new(left)
}

/// Outcome of a bipartiteness test; each variant is independently checkable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Side (0 or 1) of every vertex.
    TwoColoring(Vec<u8>),
    OddCycle(CycleWitness),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::TwoColoring(_))
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            Bipartiteness::TwoColoring(side) => {
                if side.len() != g.n() {
                    return Err(Error::param("colouring length mismatch"));
                }
                match g.edges().find(|&(u, v)| side[u] == side[v]) {
                    Some((u, v)) => Err(Error::param(format!("edge {u}-{v} is monochromatic"))),
                    None => Ok(()),
                }
            }
            Bipartiteness::OddCycle(c) => {
                c.validate(g)?;
                if c.len() % 2 == 0 {
                    return Err(Error::param("cycle witness has even length"));
                }
                Ok(())
            }
        }
    }
}

/// A sorted set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn union(&self, other: impl IntoIterator<Item = Vertex>) -> VertexSet {
        let mut out = self.clone();
        for v in other {
            out.insert(v);
        }
        out
    }

    /// Membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            m[v] = true;
        }
        m
    }

    pub fn check_within(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(Error::VertexOutOfRange { vertex: v, n: g.n() }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}
