//! Seeded local search for below-regime graphs that break a theorem's
//! conclusion while keeping its hypotheses. It reports what it finds and
//! asserts nothing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coloring::{self, greedy_clique, ChromaticOutcome};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::parity::{self, OddCycleFamily};

use super::params::{FamilyParams, TheoremParams};
use super::recognize::{recognize_bc_construction, recognize_g_construction};
use super::report::{CheckStatus, Conclusion, Target, Tier, VerificationReport};

/// Per-move cap on the forbidden-cycle check; moves it cannot decide are
/// rejected.
const MOVE_LIMIT: u64 = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "theorem", rename_all = "snake_case")]
pub enum SearchTheorem {
    Main { r: usize, k: usize },
    Main2 { family: OddCycleFamily },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub theorem: SearchTheorem,
    pub n: usize,
    pub seed: u64,
    pub iterations: u64,
    /// Node limit for each exact chromatic evaluation.
    pub limit: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub seed: u64,
    pub iteration: u64,
    pub chi: Option<usize>,
    pub min_degree: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

struct Setup {
    forbidden: Vec<usize>,
    /// `d * floor_den >= n`
    floor_den: usize,
    /// conclusion: colourable with this many colours, or recognized
    colours: usize,
    recognize: Box<dyn Fn(&Graph) -> bool>,
    in_regime: bool,
}

fn setup(config: &SearchConfig) -> Result<Setup> {
    let n = config.n;
    Ok(match &config.theorem {
        SearchTheorem::Main { r, k } => {
            let params = TheoremParams::new(*r, *k, n)?;
            let r = *r;
            Setup {
                forbidden: vec![2 * k + 1],
                floor_den: 2 * r + 2,
                colours: r,
                recognize: Box::new(move |g| recognize_g_construction(g, r).is_some()),
                in_regime: params.in_regime(),
            }
        }
        SearchTheorem::Main2 { family } => {
            let params = FamilyParams { p: family.p(), k: family.k(), n };
            let p = params.p;
            Setup {
                forbidden: family.lengths().collect(),
                floor_den: 2 * (2 * p + 1),
                colours: 2,
                recognize: Box::new(move |g| recognize_bc_construction(g, p).is_some()),
                in_regime: params.in_regime(),
            }
        }
    })
}

struct State {
    n: usize,
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
}

impl State {
    /// `K_{⌊n/2⌋,⌈n/2⌉}`: bipartite, so free of every odd cycle, with the
    /// largest minimum degree a bipartite graph allows.
    fn start(n: usize) -> Self {
        let half = n / 2;
        let mut s = State { n, adj: vec![vec![false; n]; n], deg: vec![0; n] };
        for u in 0..half {
            for v in half..n {
                s.toggle(u, v);
            }
        }
        s
    }

    fn toggle(&mut self, u: Vertex, v: Vertex) {
        let on = !self.adj[u][v];
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

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.n).flat_map(|u| (u + 1..self.n).map(move |v| (u, v))).filter(|&(u, v)| self.adj[u][v]).collect()
    }

    fn graph(&self) -> Graph {
        Graph::from_edge_list(self.n, &self.edges()).expect("valid pairs")
    }

    fn min_degree(&self) -> usize {
        self.deg.iter().copied().min().unwrap_or(0)
    }
}

/// Simulated annealing over single-edge flips. Additions may not close a
/// forbidden cycle through the new edge and deletions may not break the
/// degree floor. The score rewards a large greedy clique, then a large
/// minimum degree; each new best graph gets an exact chromatic number and a
/// conclusion check, and failures are logged with their edge lists.
pub fn search_counterexamples(config: &SearchConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Target::Search);
    report.witness("config", config);
    if config.iterations == 0 {
        report.note("no iterations requested");
        return Ok(report);
    }
    let n = config.n;
    if n < 2 {
        return Err(Error::param("search needs n >= 2"));
    }
    let setup = setup(config)?;
    let floor_ok = |d: usize| d * setup.floor_den >= n;
    let mut state = State::start(n);
    if !floor_ok(state.min_degree()) {
        return Err(Error::param("the degree floor exceeds what the starting graph offers"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let score = |g: &Graph, s: &State| (greedy_clique(g).len() * n + s.min_degree()) as f64;
    let mut current = score(&state.graph(), &state);
    let mut best = f64::NEG_INFINITY;
    let mut best_graph = None;
    let mut findings = Vec::new();
    let mut accepted = 0u64;
    let mut evaluated = 0u64;
    let mut undecided = 0u64;
    for it in 0..config.iterations {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let (u, v) = (u.min(v), u.max(v));
        if state.adj[u][v] {
            if !floor_ok(state.deg[u] - 1) || !floor_ok(state.deg[v] - 1) {
                continue;
            }
        } else if closes_forbidden(&state, u, v, &setup.forbidden)? != Some(false) {
            continue;
        }
        state.toggle(u, v);
        let g = state.graph();
        let next = score(&g, &state);
        let temp = 2.0 * (1.0 - it as f64 / config.iterations as f64) + 0.01;
        if next >= current || rng.gen_bool(((next - current) / temp).exp().clamp(0.0, 1.0)) {
            current = next;
            accepted += 1;
        } else {
            state.toggle(u, v);
            continue;
        }
        if current > best {
            best = current;
            evaluated += 1;
            let chi = coloring::chromatic_number(&g, config.limit)?;
            let chi_value = chi.exact();
            let colourable = match &chi {
                ChromaticOutcome::Exact { chi, .. } => Some(*chi <= setup.colours),
                ChromaticOutcome::Bracketed { lower, upper, .. } => {
                    if *upper <= setup.colours {
                        Some(true)
                    } else if *lower > setup.colours {
                        Some(false)
                    } else {
                        None
                    }
                }
            };
            let holds = if colourable == Some(true) || (setup.recognize)(&g) { Some(true) } else { colourable };
            match holds {
                Some(false) => findings.push(Finding {
                    seed: config.seed,
                    iteration: it,
                    chi: chi_value,
                    min_degree: state.min_degree(),
                    edges: state.edges(),
                }),
                None => undecided += 1,
                Some(true) => {}
            }
            best_graph = Some((it, chi_value, state.min_degree(), state.edges()));
        }
    }
    report.precondition("family_free", CheckStatus::Pass);
    report.precondition("degree_floor", CheckStatus::Pass);
    report.witness("accepted_moves", accepted).witness("evaluated_incumbents", evaluated);
    if let Some((it, chi, d, edges)) = best_graph {
        report.witness(
            "best",
            serde_json::json!({ "iteration": it, "chi": chi, "min_degree": d, "m": edges.len(), "edges": edges }),
        );
    }
    if undecided > 0 {
        report.note(format!("{undecided} incumbents could not be coloured within budget"));
    }
    let failed = !findings.is_empty();
    report.witness("failures", findings);
    report.conclude(Some(!failed), setup.in_regime);
    Ok(report)
}

/// `Some(true)` when adding `u-v` would close a forbidden cycle, `None`
/// when the check ran out of budget.
fn closes_forbidden(state: &State, u: Vertex, v: Vertex, lengths: &[usize]) -> Result<Option<bool>> {
    let g = state.graph();
    let blocked = vec![false; state.n];
    let mut budget = Budget::new(MOVE_LIMIT);
    for &l in lengths.iter().filter(|&&l| l <= state.n) {
        match parity::path_of_order(&g, u, v, l, &blocked, &mut budget) {
            Ok(Some(_)) => return Ok(Some(true)),
            Ok(None) => {}
            Err(Error::BudgetExceeded { .. }) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(Some(false))
}

/// Runs seeds `config.seed .. config.seed + runs` on `workers` threads and
/// merges the reports in seed order.
pub fn search_many(config: &SearchConfig, runs: u64, workers: usize) -> Result<VerificationReport> {
    let seeds: Vec<u64> = (0..runs).map(|i| config.seed.wrapping_add(i)).collect();
    let workers = workers.max(1);
    let mut results: Vec<Option<Result<VerificationReport>>> = (0..seeds.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let chunks: Vec<_> = results.chunks_mut(seeds.len().div_ceil(workers).max(1)).collect();
        let mut start = 0;
        for chunk in chunks {
            let mine = &seeds[start..start + chunk.len()];
            start += chunk.len();
            scope.spawn(move || {
                for (slot, &seed) in chunk.iter_mut().zip(mine) {
                    let cfg = SearchConfig { seed, ..config.clone() };
                    *slot = Some(search_counterexamples(&cfg));
                }
            });
        }
    });
    let reports = results.into_iter().map(|r| r.expect("every seed ran")).collect::<Result<Vec<_>>>()?;
    Ok(merge_reports(config, reports))
}

/// Concatenates failures and per-seed summaries; the merged conclusion fails
/// when any run logged a failure.
pub fn merge_reports(config: &SearchConfig, reports: Vec<VerificationReport>) -> VerificationReport {
    let mut merged = VerificationReport::new(Target::Search);
    merged.witness("config", config);
    let mut failures = Vec::new();
    let mut runs = Vec::new();
    for r in &reports {
        if let Some(serde_json::Value::Array(f)) = r.witnesses.get("failures") {
            failures.extend(f.iter().cloned());
        }
        runs.push(serde_json::json!({
            "seed": r.witnesses.get("config").and_then(|c| c.get("seed")).cloned(),
            "conclusion": r.conclusion,
            "best": r.witnesses.get("best").cloned(),
        }));
        for note in &r.notes {
            if !merged.notes.contains(note) {
                merged.notes.push(note.clone());
            }
        }
    }
    let ran = reports.iter().any(|r| r.conclusion != Conclusion::NotApplicable);
    merged.witness("runs", runs);
    if ran {
        merged.conclusion = if failures.is_empty() { Conclusion::Pass } else { Conclusion::Fail };
        merged.tier = reports.iter().map(|r| r.tier).find(|&t| t != Tier::NotApplicable).unwrap_or(Tier::NotApplicable);
        merged.precondition("family_free", CheckStatus::Pass);
        merged.precondition("degree_floor", CheckStatus::Pass);
    }
    merged.witness("failures", failures);
    merged
}
