//! Deterministic generators for the named extremal graphs.
//!
//! Layout conventions are fixed so that recognisers and tests can rely on
//! them:
//!
//! * blob constructions (`gplus`, `bc`) place blob `i` on the contiguous range
//!   `[2ti, 2t(i+1))`; the first `t` vertices form side A, the next `t`
//!   side B, and the selected vertex is the first vertex of the blob;
//! * multipartite constructions (`turan`, `kab`, `blowup`) lay parts out
//!   contiguously in order;
//! * `tstar` puts the bipartite host on `0..n-r+1` (smaller side first) and the
//!   suspension clique on vertex `0` plus `n-r+1..n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A generated graph together with its designated vertices (the selected
/// vertices of blob constructions, in clique or cycle order; empty otherwise).
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub selected: Vec<Vertex>,
}

/// Complete r-partite graph on n vertices with part sizes differing by at most one.
pub fn turan_graph(r: usize, n: usize) -> Result<Graph> {
    if r < 1 || r > n {
        return Err(Error::param(format!("turan needs 1 <= r <= n, got r={r}, n={n}")));
    }
    let sizes: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
    Ok(complete_multipartite(&sizes))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

pub fn complete_graph(n: usize) -> Graph {
    complete_multipartite(&vec![1; n])
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    cycle_blowup(n, 1)
}

fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_pairs_unchecked(n, pairs.filter(|&(u, v)| part[u] != part[v]))
}

/// `blobs` disjoint copies of `K_{t,t}`; `selected_edges` joins selected
/// vertices given by blob index.
fn blob_construction(blobs: usize, t: usize, selected_edges: &[(usize, usize)]) -> Construction {
    let n = 2 * t * blobs;
    let selected: Vec<Vertex> = (0..blobs).map(|i| 2 * t * i).collect();
    let mut pairs = Vec::with_capacity(blobs * t * t + selected_edges.len());
    for &base in &selected {
        for a in 0..t {
            for b in 0..t {
                pairs.push((base + a, base + t + b));
            }
        }
    }
    pairs.extend(selected_edges.iter().map(|&(i, j)| (selected[i], selected[j])));
    Construction { graph: Graph::from_pairs_unchecked(n, pairs), selected }
}

fn blob_side(n: usize, blobs: usize, what: &str) -> Result<usize> {
    if n == 0 || !n.is_multiple_of(2 * blobs) {
        return Err(Error::param(format!(
            "{what}: n = {n} must be a positive multiple of {}",
            2 * blobs
        )));
    }
    Ok(n / (2 * blobs))
}

/// `r+1` copies of `K_{t,t}`, `t = n/(2(r+1))`, whose selected vertices form `K_{r+1}`.
pub fn g_construction(r: usize, n: usize) -> Result<Construction> {
    if r < 1 {
        return Err(Error::param("gplus needs r >= 1"));
    }
    let blobs = r + 1;
    let t = blob_side(n, blobs, "gplus")?;
    let clique: Vec<_> = (0..blobs).flat_map(|i| (i + 1..blobs).map(move |j| (i, j))).collect();
    Ok(blob_construction(blobs, t, &clique))
}

/// `2p+1` copies of `K_{t,t}`, `t = n/(2(2p+1))`, whose selected vertices form
/// the cycle `C_{2p+1}` in blob order.
pub fn bc_construction(p: usize, n: usize) -> Result<Construction> {
    if p < 1 {
        return Err(Error::param("bc needs p >= 1"));
    }
    let blobs = 2 * p + 1;
    let t = blob_side(n, blobs, "bc")?;
    let cycle: Vec<_> = (0..blobs).map(|i| (i, (i + 1) % blobs)).collect();
    Ok(blob_construction(blobs, t, &cycle))
}

/// Balanced blow-up `C_m(t)`: part `i` is independent of size `t` and is
/// completely joined to parts `i±1 (mod m)`.
pub fn cycle_blowup(m: usize, t: usize) -> Result<Graph> {
    if m < 3 || t < 1 {
        return Err(Error::param(format!("blowup needs m >= 3 and t >= 1, got m={m}, t={t}")));
    }
    let mut pairs = Vec::with_capacity(m * t * t);
    for i in 0..m {
        let j = (i + 1) % m;
        for a in 0..t {
            for b in 0..t {
                pairs.push((i * t + a, j * t + b));
            }
        }
    }
    Ok(Graph::from_pairs_unchecked(m * t, pairs))
}

/// `K_{⌊(n-r+1)/2⌋,⌈(n-r+1)/2⌉}` with a suspended `K_r` sharing vertex 0.
pub fn t_star(r: usize, n: usize) -> Result<Construction> {
    if r < 1 || n < r {
        return Err(Error::param(format!("tstar needs n >= r >= 1, got r={r}, n={n}")));
    }
    let host = n - r + 1;
    let a = host / 2;
    let mut pairs: Vec<(Vertex, Vertex)> = (0..a).flat_map(|u| (a..host).map(move |v| (u, v))).collect();
    let clique: Vec<Vertex> = std::iter::once(0).chain(host..n).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            pairs.push((u, v));
        }
    }
    Ok(Construction { graph: Graph::from_pairs_unchecked(n, pairs), selected: clique })
}

/// Parsed form of the construction grammar
/// `turan:r,n | gplus:r,n | bc:p,n | blowup:m,t | tstar:r,n | kab:a,b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstructionSpec {
    Turan { r: usize, n: usize },
    CompleteBipartite { a: usize, b: usize },
    GConstruction { r: usize, n: usize },
    BcConstruction { p: usize, n: usize },
    CycleBlowup { m: usize, t: usize },
    TStar { r: usize, n: usize },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Construction> {
        use ConstructionSpec::*;
        let plain = |graph: Graph| Construction { graph, selected: Vec::new() };
        match *self {
            Turan { r, n } => turan_graph(r, n).map(plain),
            CompleteBipartite { a, b } => Ok(plain(complete_bipartite(a, b))),
            GConstruction { r, n } => g_construction(r, n),
            BcConstruction { p, n } => bc_construction(p, n),
            CycleBlowup { m, t } => cycle_blowup(m, t).map(plain),
            TStar { r, n } => t_star(r, n),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::param(format!("malformed construction spec '{s}'"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let (x, y) = args.split_once(',').ok_or_else(bad)?;
        let x: usize = x.trim().parse().map_err(|_| bad())?;
        let y: usize = y.trim().parse().map_err(|_| bad())?;
        use ConstructionSpec::*;
        Ok(match kind.trim() {
            "turan" => Turan { r: x, n: y },
            "kab" => CompleteBipartite { a: x, b: y },
            "gplus" => GConstruction { r: x, n: y },
            "bc" => BcConstruction { p: x, n: y },
            "blowup" => CycleBlowup { m: x, t: y },
            "tstar" => TStar { r: x, n: y },
            other => return Err(Error::param(format!("unknown construction kind '{other}'"))),
        })
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionSpec::*;
        match *self {
            Turan { r, n } => write!(f, "turan:{r},{n}"),
            CompleteBipartite { a, b } => write!(f, "kab:{a},{b}"),
            GConstruction { r, n } => write!(f, "gplus:{r},{n}"),
            BcConstruction { p, n } => write!(f, "bc:{p},{n}"),
            CycleBlowup { m, t } => write!(f, "blowup:{m},{t}"),
            TStar { r, n } => write!(f, "tstar:{r},{n}"),
        }
    }
}
