//! Finite-n analogue of the chromatic profile: the largest `δ(G)/n` over
//! family-free graphs on `n` vertices with `χ(G) > c`, by exhaustive search.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::budget::Budget;
use crate::coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::parity::{self, OddCycleFamily};

pub const DELTA_CHI_LIMIT: usize = 8;

/// A reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: usize,
    pub den: usize,
}

impl Ratio {
    pub fn new(num: usize, den: usize) -> Self {
        let g = num.gcd(&den).max(1);
        Ratio { num: num / g, den: den / g }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaChi {
    pub n: usize,
    pub c: usize,
    /// Largest minimum degree reached; `None` when no graph qualifies.
    pub min_degree: Option<usize>,
    pub value: Option<Ratio>,
    pub witness: Option<Graph>,
}

/// Search over labelled graphs with the degree-0 normal form: vertex 0 has
/// minimum degree `d` and neighbourhood `{1..=d}`. Every graph has such a
/// relabelling, so trying `d` from `n - 1` down and stopping at the first hit
/// gives the maximum minimum degree.
pub fn exact_delta_chi(family: &OddCycleFamily, c: usize, n: usize) -> Result<DeltaChi> {
    if n > DELTA_CHI_LIMIT {
        return Err(Error::TooLarge { n, limit: DELTA_CHI_LIMIT });
    }
    if n == 0 || c == 0 {
        return Err(Error::param("delta-chi needs n >= 1 and c >= 1"));
    }
    let lengths: Vec<usize> = family.lengths().filter(|&l| l <= n).collect();
    let pairs: Vec<(Vertex, Vertex)> = (1..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for d in (0..n).rev() {
        let mut s = Enumerator {
            n,
            c,
            d,
            lengths: &lengths,
            pairs: &pairs,
            adj: vec![vec![false; n]; n],
            deg: vec![0; n],
            open: vec![0; n],
        };
        for v in 1..=d {
            s.adj[0][v] = true;
            s.adj[v][0] = true;
            s.deg[v] = 1;
        }
        s.deg[0] = d;
        for &(u, v) in &pairs {
            s.open[u] += 1;
            s.open[v] += 1;
        }
        if let Some(g) = s.search(0)? {
            return Ok(DeltaChi { n, c, min_degree: Some(d), value: Some(Ratio::new(d, n)), witness: Some(g) });
        }
    }
    Ok(DeltaChi { n, c, min_degree: None, value: None, witness: None })
}

struct Enumerator<'a> {
    n: usize,
    c: usize,
    d: usize,
    lengths: &'a [usize],
    pairs: &'a [(Vertex, Vertex)],
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
    // undecided pairs at each vertex
    open: Vec<usize>,
}

impl Enumerator<'_> {
    fn graph(&self) -> Graph {
        let e: Vec<_> = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adj[u][v])
            .collect();
        Graph::from_edge_list(self.n, &e).expect("valid pairs")
    }

    /// Would adding `u-v` close a forbidden cycle?
    fn closes_forbidden(&self, u: Vertex, v: Vertex) -> Result<bool> {
        let g = self.graph();
        let blocked = vec![false; self.n];
        let mut budget = Budget::unlimited();
        for &l in self.lengths {
            if parity::path_of_order(&g, u, v, l, &blocked, &mut budget)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn search(&mut self, i: usize) -> Result<Option<Graph>> {
        if i == self.pairs.len() {
            let g = self.graph();
            debug_assert!(g.min_degree().unwrap_or(0) >= self.d);
            let colourable = coloring::k_coloring(&g, self.c, &mut Budget::unlimited())?.is_some();
            return Ok((!colourable).then_some(g));
        }
        let (u, v) = self.pairs[i];
        self.open[u] -= 1;
        self.open[v] -= 1;
        let mut found = None;
        // include first: denser graphs reach high chromatic number sooner
        if !self.closes_forbidden(u, v)? {
            self.set(u, v, true);
            found = self.search(i + 1)?;
            self.set(u, v, false);
        }
        if found.is_none() && self.deg[u] + self.open[u] >= self.d && self.deg[v] + self.open[v] >= self.d {
            found = self.search(i + 1)?;
        }
        self.open[u] += 1;
        self.open[v] += 1;
        Ok(found)
    }

    fn set(&mut self, u: Vertex, v: Vertex, on: bool) {
        self.adj[u][v] = on;
        self.adj[v][u] = on;
        if on {
            self.deg[u] += 1;
            self.deg[v] += 1;
        } else {
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
    }
}
