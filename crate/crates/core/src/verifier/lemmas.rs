//! Lemma-level checks. Each report gates its conclusion on the lemma's
//! hypotheses and records whether the regime threshold holds.

use serde::Serialize;

use crate::budget::Budget;
use crate::cores::{self, CoreCertificate, EXACT_CORE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::parity::{self, odd_girth, OddCycleFamily, Parity, PathWitness};

use super::params::TheoremParams;
use super::report::{CheckStatus, Target, VerificationReport};

/// Records `C_{2k+1}`-freeness and the degree floor as preconditions.
pub(crate) fn hypotheses(report: &mut VerificationReport, g: &Graph, params: &TheoremParams, limit: u64) -> Result<()> {
    let family = OddCycleFamily::single_cycle(params.k)?;
    freeness(report, g, &family, limit)?;
    degree_floor(report, g, params.degree_floor_holds(g.min_degree().unwrap_or(0)));
    Ok(())
}

pub(crate) fn freeness(report: &mut VerificationReport, g: &Graph, family: &OddCycleFamily, limit: u64) -> Result<()> {
    let out = parity::is_family_free(g, family, limit)?;
    let status = if let Some(c) = out.found() {
        report.witness("forbidden_cycle", c);
        CheckStatus::Fail
    } else if out.is_absent() {
        CheckStatus::Pass
    } else {
        report.note(format!("freeness search exceeded its budget after {} nodes", out.nodes));
        CheckStatus::Unknown
    };
    report.precondition("family_free", status);
    Ok(())
}

pub(crate) fn degree_floor(report: &mut VerificationReport, g: &Graph, holds: bool) {
    report.witness("min_degree", g.min_degree().unwrap_or(0));
    report.precondition("degree_floor", CheckStatus::from_bool(holds));
}

/// `|(N(x) ∩ N(y)) \ V(P)| <= 15r` for an even path `P` from `x` to `y` of
/// order at most `2k`.
pub fn check_common_neighborhood_bound(
    g: &Graph,
    path: &PathWitness,
    params: &TheoremParams,
    limit: u64,
) -> Result<VerificationReport> {
    path.validate(g)?;
    if path.parity() != Parity::Even || path.order() > 2 * params.k {
        return Err(Error::param("expected an even path of order at most 2k"));
    }
    let (x, y) = (path.first().expect("non-empty"), path.last().expect("non-empty"));
    let on_path = VertexSet::from(path.vertices().to_vec());
    let common: Vec<Vertex> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&w| g.has_edge(y, w) && !on_path.contains(w))
        .collect();
    let bound = 15 * params.r;
    let mut report = VerificationReport::new(Target::LemmaCn);
    hypotheses(&mut report, g, params, limit)?;
    report.witness("common_neighbors", common.len()).witness("bound", bound);
    report.conclude(Some(common.len() <= bound), params.in_regime());
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoreMode {
    /// Exhaustive subset search; hosts up to 16 vertices.
    Exact,
    /// Greedy extension from a shortest odd cycle: a lower bound only.
    Greedy,
}

/// Maximum strong core `<= r + 1` and maximum 2k-core `<= 2r + 2`.
pub fn check_core_size_bounds(g: &Graph, params: &TheoremParams, mode: CoreMode, limit: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Target::CoreBounds);
    hypotheses(&mut report, g, params, limit)?;
    let k = params.k;
    let holds = match mode {
        CoreMode::Exact => {
            if g.n() > EXACT_CORE_LIMIT {
                return Err(Error::TooLarge { n: g.n(), limit: EXACT_CORE_LIMIT });
            }
            let mut budget = Budget::new(limit);
            let strong = cores::exact_maximum_core(g, k, true, &mut budget);
            let plain = strong.clone().and_then(|_| cores::exact_maximum_core(g, k, false, &mut budget));
            match (strong, plain) {
                (Ok(s), Ok(c)) => {
                    report.witness("strong_core", &s).witness("strong_core_size", s.len());
                    report.witness("core", &c).witness("core_size", c.len());
                    Some(s.len() <= params.r + 1 && c.len() <= 2 * params.r + 2)
                }
                (Err(Error::BudgetExceeded { .. }), _) | (_, Err(Error::BudgetExceeded { .. })) => {
                    report.note("exact core search exceeded its budget");
                    None
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        CoreMode::Greedy => match cores::greedy_max_strong_core_with(g, k, &mut Budget::new(limit)) {
            Ok(found) => {
                report.witness("strong_core", &found.core).witness("strong_core_size", found.core.len());
                report.witness("trace", &found.trace);
                report.note("greedy mode: sizes are lower bounds on the maxima");
                Some(found.core.len() <= params.r + 1)
            }
            Err(Error::NoSeed(msg)) => {
                report.note(format!("no strong core seed: {msg}"));
                Some(true)
            }
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        },
    };
    report.witness("strong_bound", params.r + 1).witness("core_bound", 2 * params.r + 2);
    report.conclude(holds, params.in_regime());
    Ok(report)
}

/// Non-bipartite hosts with `δ >= n/(2r+2)` have odd girth at most `2(2r+1)+1`.
/// This lemma carries no size threshold.
pub fn check_shortest_odd_cycle_bound(g: &Graph, params: &TheoremParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Target::OddGirth);
    let cycle = odd_girth(g);
    report.precondition("non_bipartite", CheckStatus::from_bool(cycle.is_some()));
    degree_floor(&mut report, g, params.degree_floor_holds(g.min_degree().unwrap_or(0)));
    let bound = params.odd_girth_bound();
    report.witness("bound", bound);
    let holds = cycle.as_ref().map(|c| c.len() <= bound);
    if let Some(c) = &cycle {
        report.witness("odd_girth", c.len()).witness("cycle", c);
    }
    report.conclude(holds, true);
    Ok(report)
}

/// The layers around one core vertex `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Layers {
    pub x: Vertex,
    /// `N(x) \ V(H)`
    pub n0: VertexSet,
    /// `N(N0)`
    pub n1: VertexSet,
    /// `N(N1) \ V(H)`
    pub n2: VertexSet,
}

pub fn neighborhood_layers(g: &Graph, h: &VertexSet) -> Result<Vec<Layers>> {
    h.check_within(g)?;
    let nbhd = |s: &VertexSet| -> VertexSet { s.iter().flat_map(|v| g.neighbors(v).iter().copied()).collect() };
    let outside = |s: VertexSet| -> VertexSet { s.iter().filter(|&v| !h.contains(v)).collect() };
    Ok(h
        .iter()
        .map(|x| {
            let n0 = outside(g.neighbors(x).iter().copied().collect());
            let n1 = nbhd(&n0);
            let n2 = outside(nbhd(&n1));
            Layers { x, n0, n1, n2 }
        })
        .collect())
}

fn independent(g: &Graph, s: &VertexSet) -> bool {
    let v: Vec<Vertex> = s.iter().collect();
    v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

fn complete_between(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    a.iter().all(|u| b.iter().all(|v| g.has_edge(u, v)))
}

/// Structure around a certified strong core `H`: with `|H| = r + 1` every
/// `N1`, `N2` is independent, has `n/(2r+2)` vertices, and `G[N1, N2]` is
/// complete bipartite; with `|H| <= r` every core vertex is a cut vertex.
pub fn check_structure_lemma(g: &Graph, h: &VertexSet, params: &TheoremParams, limit: u64) -> Result<VerificationReport> {
    if h.len() < 3 {
        return Err(Error::param("structure check needs a core of at least 3 vertices"));
    }
    let cert: CoreCertificate = cores::certify(g, h, params.k, true, &mut Budget::new(limit))?
        .ok_or_else(|| Error::param("H is not a strong-2k-core"))?;
    debug_assert!(cert.validate(g).is_ok());
    let mut report = VerificationReport::new(Target::Structure);
    hypotheses(&mut report, g, params, limit)?;
    let r = params.r;
    let l = h.len();
    report.witness("core_size", l);
    let holds = if l == r + 1 {
        report.witness("case", "i");
        let layers = neighborhood_layers(g, h)?;
        let mut ok = true;
        let mut failures = Vec::new();
        for lay in &layers {
            let sizes = [lay.n1.len(), lay.n2.len()];
            let checks = [
                ("n1_independent", independent(g, &lay.n1)),
                ("n2_independent", independent(g, &lay.n2)),
                ("layer_sizes", sizes.iter().all(|&s| s * (2 * r + 2) == g.n())),
                ("complete_bipartite", complete_between(g, &lay.n1, &lay.n2)),
            ];
            for (name, pass) in checks {
                if !pass {
                    ok = false;
                    failures.push(format!("x={}: {name}", lay.x));
                }
            }
        }
        report.witness("layers", &layers);
        if !failures.is_empty() {
            report.witness("failures", failures);
        }
        Some(ok)
    } else if l <= r {
        report.witness("case", "ii");
        if !g.is_connected() {
            report.precondition("connected", CheckStatus::Fail);
            None
        } else {
            let non_cut: Vec<Vertex> = h.iter().filter(|&x| !g.is_cut_vertex(x).unwrap_or(false)).collect();
            let ok = non_cut.is_empty();
            report.witness("non_cut_vertices", non_cut);
            Some(ok)
        }
    } else {
        report.note(format!("|H| = {l} exceeds r + 1 = {}; the structure statement does not cover it", r + 1));
        report.precondition("core_size_at_most_r_plus_1", CheckStatus::Fail);
        None
    };
    report.conclude(holds, params.in_regime());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::verifier::report::{Conclusion, Tier};

    const LIMIT: u64 = 100_000_000;

    fn params(r: usize, k: usize, g: &Graph) -> TheoremParams {
        TheoremParams::new(r, k, g.n()).unwrap()
    }

    #[test]
    fn common_neighborhood_examples() {
        let g = g_construction(3, 16).unwrap().graph;
        let p = PathWitness::new(vec![1, 2]);
        let rep = check_common_neighborhood_bound(&g, &p, &params(3, 13, &g), LIMIT).unwrap();
        assert_eq!(rep.witnesses["common_neighbors"], 0);
        assert_eq!((rep.conclusion, rep.tier), (Conclusion::Pass, Tier::BelowRegime));

        let k = complete_graph(100);
        let p = PathWitness::new(vec![0, 1]);
        let rep = check_common_neighborhood_bound(&k, &p, &params(3, 13, &k), LIMIT).unwrap();
        assert_eq!(rep.witnesses["common_neighbors"], 98);
        assert_eq!(rep.conclusion, Conclusion::NotApplicable);
        assert_eq!(rep.preconditions["family_free"], CheckStatus::Fail);

        let c6 = cycle_graph(6).unwrap();
        let p = PathWitness::new(vec![0, 1]);
        let rep = check_common_neighborhood_bound(&c6, &p, &params(2, 5, &c6), LIMIT).unwrap();
        assert_eq!(rep.witnesses["common_neighbors"], 0);
        assert_eq!(rep.conclusion, Conclusion::Pass);

        assert!(check_common_neighborhood_bound(&c6, &PathWitness::new(vec![0, 1, 2]), &params(2, 5, &c6), LIMIT).is_err());
    }

    #[test]
    fn core_bound_examples() {
        let g = g_construction(3, 16).unwrap().graph;
        let rep = check_core_size_bounds(&g, &params(3, 13, &g), CoreMode::Exact, LIMIT).unwrap();
        assert_eq!(rep.witnesses["strong_core_size"], 4);
        assert_eq!(rep.conclusion, Conclusion::Pass);

        let g = bc_construction(1, 12).unwrap().graph;
        let rep = check_core_size_bounds(&g, &params(2, 5, &g), CoreMode::Exact, LIMIT).unwrap();
        assert_eq!(rep.witnesses["strong_core_size"], 3);

        let k6 = complete_graph(6);
        let rep = check_core_size_bounds(&k6, &params(3, 5, &k6), CoreMode::Exact, LIMIT).unwrap();
        assert_eq!(rep.witnesses["strong_core_size"], 6);
        assert!(rep.preconditions_pass());
        assert_eq!((rep.conclusion, rep.tier), (Conclusion::Fail, Tier::BelowRegime));

        let rep = check_core_size_bounds(&k6, &params(3, 5, &k6), CoreMode::Greedy, LIMIT).unwrap();
        assert_eq!(rep.witnesses["strong_core_size"], 6);
    }

    #[test]
    fn odd_girth_examples() {
        let g = bc_construction(2, 20).unwrap().graph;
        // r = 2: the floor 20/6 exceeds δ = 2, so the hypothesis fails
        let rep = check_shortest_odd_cycle_bound(&g, &params(2, 5, &g)).unwrap();
        assert_eq!(rep.witnesses["odd_girth"], 5);
        assert_eq!(rep.preconditions["degree_floor"], CheckStatus::Fail);
        assert_eq!(rep.conclusion, Conclusion::NotApplicable);
        let rep = check_shortest_odd_cycle_bound(&g, &params(4, 5, &g)).unwrap();
        assert_eq!((rep.conclusion, rep.tier), (Conclusion::Pass, Tier::InRegime));

        let c7 = cycle_graph(7).unwrap();
        assert_eq!(check_shortest_odd_cycle_bound(&c7, &params(2, 5, &c7)).unwrap().conclusion, Conclusion::Pass);

        let c13 = cycle_graph(13).unwrap();
        let rep = check_shortest_odd_cycle_bound(&c13, &params(1, 5, &c13)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::NotApplicable);
        assert_eq!(rep.preconditions["degree_floor"], CheckStatus::Fail);

        let k33 = complete_bipartite(3, 3);
        let rep = check_shortest_odd_cycle_bound(&k33, &params(2, 5, &k33)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::NotApplicable);
    }

    #[test]
    fn structure_examples() {
        let c = g_construction(3, 16).unwrap();
        let h = VertexSet::from(c.selected.clone());
        let rep = check_structure_lemma(&c.graph, &h, &params(3, 13, &c.graph), LIMIT).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Pass, "{rep:?}");
        assert_eq!(rep.witnesses["case"], "i");

        for (p, n) in [(1, 12), (2, 20)] {
            let c = bc_construction(p, n).unwrap();
            let h = VertexSet::from(c.selected.clone());
            let rep = check_structure_lemma(&c.graph, &h, &params(2 * p, 13, &c.graph), LIMIT).unwrap();
            assert_eq!(rep.conclusion, Conclusion::Pass, "{rep:?}");
        }

        // Layers on G_4(16): blob sides of size 2.
        let layers = neighborhood_layers(&c.graph, &h).unwrap();
        assert!(layers.iter().all(|l| l.n0.len() == 2 && l.n1.len() == 2 && l.n2.len() == 2));

        let c5 = cycle_graph(5).unwrap();
        assert!(check_structure_lemma(&c5, &VertexSet::from_iter(0..5), &params(4, 2, &c5), LIMIT).is_err());
        assert!(check_structure_lemma(&c5, &VertexSet::from([0, 1]), &params(4, 3, &c5), LIMIT).is_err());
    }

    #[test]
    fn structure_case_two() {
        // triangle core with pendant blobs, r large enough that |H| <= r
        let c = bc_construction(1, 12).unwrap();
        let h = VertexSet::from(c.selected.clone());
        let rep = check_structure_lemma(&c.graph, &h, &params(3, 13, &c.graph), LIMIT).unwrap();
        assert_eq!(rep.witnesses["case"], "ii");
        // degree floor 2 * 8 >= 12 holds, every selected vertex is a cut vertex
        assert_eq!(rep.conclusion, Conclusion::Pass, "{rep:?}");
    }
}
