//! Structural recognition of the blob constructions up to isomorphism.
//!
//! Both constructions are `s` balanced complete bipartite blobs hanging off
//! `s` selected vertices, which are exactly the cut vertices. Recognition
//! finds them, checks every blob, and returns an explicit vertex map onto the
//! canonical generator output, which is then re-checked edge by edge.

use serde::Serialize;

use crate::constructions::ConstructionSpec;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub spec: ConstructionSpec,
    /// `map[v]` is the canonical label of vertex `v`.
    pub map: Vec<Vertex>,
}

impl Recognition {
    /// Checks that `map` is a bijection carrying `g` onto the generator output.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let canon = self.spec.build()?.graph;
        if canon.n() != g.n() || canon.m() != g.m() || self.map.len() != g.n() {
            return Err(Error::param("recognition map has the wrong size"));
        }
        let mut hit = vec![false; g.n()];
        for &c in &self.map {
            if c >= g.n() || std::mem::replace(&mut hit[c], true) {
                return Err(Error::param("recognition map is not a bijection"));
            }
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| !canon.has_edge(self.map[u], self.map[v])) {
            return Err(Error::param(format!("edge {u}-{v} is not mapped onto an edge")));
        }
        Ok(())
    }
}

pub fn recognize_g_construction(g: &Graph, r: usize) -> Option<Recognition> {
    if r < 1 {
        return None;
    }
    let spec = ConstructionSpec::GConstruction { r, n: g.n() };
    recognize_blobs(g, r + 1, spec, |q| clique_order(g, q))
}

pub fn recognize_bc_construction(g: &Graph, p: usize) -> Option<Recognition> {
    if p < 1 {
        return None;
    }
    let spec = ConstructionSpec::BcConstruction { p, n: g.n() };
    recognize_blobs(g, 2 * p + 1, spec, |q| cycle_order(g, q))
}

/// Any order works for a clique; check that it is one.
fn clique_order(g: &Graph, q: &[Vertex]) -> Option<Vec<Vertex>> {
    let complete = q.iter().enumerate().all(|(i, &a)| q[i + 1..].iter().all(|&b| g.has_edge(a, b)));
    complete.then(|| q.to_vec())
}

/// Walks the cycle induced on `q` from its smallest vertex towards the
/// smaller neighbour.
fn cycle_order(g: &Graph, q: &[Vertex]) -> Option<Vec<Vertex>> {
    let inside = |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().copied().filter(|w| q.contains(w)).collect() };
    if q.iter().any(|&v| inside(v).len() != 2) {
        return None;
    }
    let mut order = vec![q[0]];
    let mut prev = q[0];
    let mut cur = inside(q[0])[0];
    while cur != q[0] {
        if order.len() == q.len() {
            return None;
        }
        order.push(cur);
        let nb = inside(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    (order.len() == q.len()).then_some(order)
}

fn recognize_blobs(
    g: &Graph,
    blobs: usize,
    spec: ConstructionSpec,
    order_selected: impl Fn(&[Vertex]) -> Option<Vec<Vertex>>,
) -> Option<Recognition> {
    let n = g.n();
    if n == 0 || !n.is_multiple_of(2 * blobs) || !g.is_connected() {
        return None;
    }
    let t = n / (2 * blobs);
    let q = g.articulation_points();
    if q.len() != blobs {
        return None;
    }
    let selected = order_selected(&q)?;
    let in_q = |v: Vertex| q.binary_search(&v).is_ok();

    // Each component of G - Q must hang off exactly one selected vertex.
    let mut blob_of = vec![usize::MAX; n];
    let components = g.components_avoiding(&in_q);
    if components.len() != blobs {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    for comp in &components {
        let mut anchors: Vec<Vertex> = comp
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied().filter(|&w| in_q(w)))
            .collect();
        anchors.sort_unstable();
        anchors.dedup();
        let &[a] = anchors.as_slice() else { return None };
        let i = selected.iter().position(|&s| s == a)?;
        if blob_of[a] != usize::MAX {
            return None;
        }
        blob_of[a] = i;
        let mut members = comp.clone();
        members.push(a);
        let base = 2 * t * i;
        for (v, c) in balanced_blob(g, &members, a, t)? {
            map[v] = base + c;
        }
    }
    let rec = Recognition { spec, map };
    rec.validate(g).ok()?;
    Some(rec)
}

/// Checks that `members` induces `K_{t,t}` and labels it: `a` gets 0, the
/// rest of its side `1..t`, the other side `t..2t`, each in increasing order.
fn balanced_blob(g: &Graph, members: &[Vertex], a: Vertex, t: usize) -> Option<Vec<(Vertex, usize)>> {
    if members.len() != 2 * t {
        return None;
    }
    let (side_b, mut side_a): (Vec<Vertex>, Vec<Vertex>) = members.iter().partition(|&&v| g.has_edge(a, v));
    side_a.retain(|&v| v != a);
    side_a.sort_unstable();
    let mut side_b = side_b;
    side_b.sort_unstable();
    if side_a.len() + 1 != t || side_b.len() != t {
        return None;
    }
    let in_blob = |v: Vertex| members.contains(&v);
    for &v in std::iter::once(&a).chain(&side_a) {
        let nb: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| in_blob(w)).collect();
        if nb != side_b {
            return None;
        }
    }
    let mut labels = vec![(a, 0)];
    labels.extend(side_a.iter().enumerate().map(|(j, &v)| (v, j + 1)));
    labels.extend(side_b.iter().enumerate().map(|(j, &v)| (v, t + j)));
    Some(labels)
}
