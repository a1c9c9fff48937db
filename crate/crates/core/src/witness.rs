//! Explicit path and cycle certificates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Parity of a path's *order*, i.e. of its number of vertices.
///
/// An even path therefore has an odd number of edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Parity {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn matches(self, count: usize) -> bool {
        Parity::of(count) == self
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(Error::param(format!("parity must be 'even' or 'odd', got '{s}'"))),
        }
    }
}

/// A simple path, listed from one endpoint to the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathWitness {
    vertices: Vec<Vertex>,
}

impl PathWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        PathWitness { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.order())
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    /// Checks that the vertices are distinct, in range, and consecutive ones
    /// are adjacent in `g`. A single vertex is a valid path of order 1.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::param("empty path"));
        }
        check_distinct(g, &self.vertices)?;
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::param(format!("path uses non-edge {}-{}", w[0], w[1])));
            }
        }
        Ok(())
    }

    /// Full check against a request: endpoints, parity and order bound.
    pub fn validate_request(
        &self,
        g: &Graph,
        u: Vertex,
        v: Vertex,
        parity: Parity,
        max_order: usize,
    ) -> Result<()> {
        self.validate(g)?;
        if self.first() != Some(u) || self.last() != Some(v) {
            return Err(Error::param("path endpoints differ from the request"));
        }
        if !parity.matches(self.order()) {
            return Err(Error::param("path parity differs from the request"));
        }
        if self.order() > max_order {
            return Err(Error::param("path order exceeds the bound"));
        }
        Ok(())
    }

    pub fn avoids(&self, forbidden: impl Fn(Vertex) -> bool) -> bool {
        self.vertices.iter().all(|&v| !forbidden(v))
    }
}

/// A simple cycle listed in cyclic order; the closing edge is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness {
    vertices: Vec<Vertex>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        CycleWitness { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let l = self.vertices.len();
        if l < 3 {
            return Err(Error::param(format!("cycle of length {l} is too short")));
        }
        check_distinct(g, &self.vertices)?;
        for i in 0..l {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % l]);
            if !g.has_edge(a, b) {
                return Err(Error::param(format!("cycle uses non-edge {a}-{b}")));
            }
        }
        Ok(())
    }

    /// Reduces a closed walk of odd length (closing edge implicit) to a simple
    /// odd cycle on a subset of its vertices.
    ///
    /// Splitting an odd closed walk at a repeated vertex yields two closed
    /// walks whose lengths sum to the original, so one of them is odd.
    pub fn shorten_odd_walk(mut walk: Vec<Vertex>) -> CycleWitness {
        debug_assert!(walk.len() % 2 == 1);
        'outer: loop {
            for i in 0..walk.len() {
                for j in i + 1..walk.len() {
                    if walk[i] == walk[j] {
                        // walk[i..j] and walk[j..] + walk[..i] are both closed.
                        let inner = walk[i..j].to_vec();
                        walk = if inner.len() % 2 == 1 {
                            inner
                        } else {
                            let mut outer = walk[j..].to_vec();
                            outer.extend_from_slice(&walk[..i]);
                            outer
                        };
                        continue 'outer;
                    }
                }
            }
            return CycleWitness::new(walk);
        }
    }
}

fn check_distinct(g: &Graph, vs: &[Vertex]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::param(format!("vertex {v} repeated")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_counts_vertices() {
        assert_eq!(Parity::of(2), Parity::Even);
        assert_eq!(PathWitness::new(vec![0, 1]).parity(), Parity::Even);
        assert_eq!(PathWitness::new(vec![0, 1, 2]).parity(), Parity::Odd);
    }

    #[test]
    fn odd_walk_shortens_to_triangle() {
        // 0-1-2-0 triangle followed by a back-and-forth 0-3-0: 0,1,2,0,3 closes 3->0.
        let c = CycleWitness::shorten_odd_walk(vec![0, 1, 2, 0, 3]);
        let mut vs = c.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, vec![0, 1, 2]);
    }
}
