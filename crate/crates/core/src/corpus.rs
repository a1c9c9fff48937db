//! Named small graphs, seeded random graphs and the fixture matrix shared by
//! the test suites, benches and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{self, ConstructionSpec};
use crate::graph::{Graph, Vertex};

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_pairs_unchecked(10, e)
}

/// Möbius ladder on 8 vertices: triangle-free, cubic, 3-chromatic.
pub fn wagner() -> Graph {
    let mut e: Vec<(Vertex, Vertex)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    e.extend((0..4).map(|i| (i, i + 4)));
    Graph::from_pairs_unchecked(8, e)
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_pairs_unchecked(n, (1..n).map(|i| (i - 1, i)))
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_pairs_unchecked(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// `C_5` with the chord `0-2`, which closes exactly one triangle.
pub fn c5_with_chord() -> Graph {
    Graph::from_pairs_unchecked(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
}

/// `C_5` plus a pendant vertex 5 attached to vertex 0.
pub fn c5_with_pendant() -> Graph {
    Graph::from_pairs_unchecked(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
}

/// Erdős–Rényi `G(n, p)` from a seeded ChaCha stream.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(n, p, &mut rng)
}

pub fn random_graph_with(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_pairs_unchecked(n, e)
}

/// Connected random graph: a random spanning tree plus `G(n, p)` noise.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    for v in 1..n {
        e.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &e).expect("generated pairs are valid")
}

/// `count` connected random graphs with `min_n..=max_n` vertices and mixed
/// densities, reproducible from `seed`.
pub fn random_connected_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.05..0.6);
            random_connected(n, p, rng.gen())
        })
        .collect()
}

/// A named fixture.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
}

fn fixture(name: impl Into<String>, graph: Graph) -> Fixture {
    Fixture { name: name.into(), graph }
}

/// Construction specs with at most `max_n` vertices covering every generator.
pub fn construction_specs(max_n: usize) -> Vec<ConstructionSpec> {
    use ConstructionSpec::*;
    let mut out = Vec::new();
    for r in 1..=5 {
        for n in (r..=max_n).step_by(1) {
            if n <= 12 || n % 4 == 0 {
                out.push(Turan { r, n });
            }
        }
    }
    for a in 1..=4 {
        for b in a..=4 {
            if a + b <= max_n {
                out.push(CompleteBipartite { a, b });
            }
        }
    }
    for r in 1..=5 {
        let step = 2 * (r + 1);
        for n in (step..=max_n).step_by(step) {
            out.push(GConstruction { r, n });
        }
    }
    for p in 1..=3 {
        let step = 2 * (2 * p + 1);
        for n in (step..=max_n).step_by(step) {
            out.push(BcConstruction { p, n });
        }
    }
    for m in 3..=9 {
        for t in 1..=3 {
            if m * t <= max_n {
                out.push(CycleBlowup { m, t });
            }
        }
    }
    for r in 1..=5 {
        for n in r..=max_n.min(12) {
            out.push(TStar { r, n });
        }
    }
    out
}

/// Named graphs plus all constructions with at most `max_n` vertices.
pub fn small_fixtures(max_n: usize) -> Vec<Fixture> {
    let mut out = vec![
        fixture("petersen", petersen()),
        fixture("wagner", wagner()),
        fixture("c5_chord", c5_with_chord()),
        fixture("c5_pendant", c5_with_pendant()),
    ];
    for n in 1..=7 {
        out.push(fixture(format!("K{n}"), constructions::complete_graph(n)));
        out.push(fixture(format!("P{n}"), path_graph(n)));
    }
    for n in 3..=11 {
        out.push(fixture(format!("C{n}"), constructions::cycle_graph(n).expect("n >= 3")));
    }
    out.push(fixture("star4", star(4)));
    out.retain(|f| f.graph.n() <= max_n);
    for spec in construction_specs(max_n) {
        let g = spec.build().expect("fixture specs are valid").graph;
        if g.n() <= max_n {
            out.push(fixture(spec.to_string(), g));
        }
    }
    out
}
