use clap::{Args, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use oddcore::bipartization::{self, BipartizationOutcome};
use oddcore::coloring::{self, ChromaticOutcome};
use oddcore::constructions::ConstructionSpec;
use oddcore::cores::{self, EXACT_CORE_LIMIT};
use oddcore::parity::{self, OddCycleFamily};
use oddcore::verifier::{self, Conclusion, CoreMode, SearchConfig, SearchTheorem, Target, TheoremParams};
use oddcore::{Budget, Error, Graph, Parity, PathWitness, SearchStatus, VertexSet};

use crate::input::{self, parse_set};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// A finished command: the JSON fields, an optional edge-list rendering, and
/// whether some search stopped on its budget.
pub struct Output {
    pub report: Map<String, Value>,
    pub edge_list: Option<String>,
    pub budget_exceeded: bool,
}

impl Output {
    fn json(value: impl Serialize) -> Self {
        let report = match serde_json::to_value(value).expect("reports serialize") {
            Value::Object(map) => map,
            other => Map::from_iter([("value".to_string(), other)]),
        };
        Output { report, edge_list: None, budget_exceeded: false }
    }

    fn budget(mut self, exceeded: bool) -> Self {
        self.budget_exceeded |= exceeded;
        self
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a construction (turan:r,n | gplus:r,n | bc:p,n | blowup:m,t | tstar:r,n | kab:a,b).
    Generate { spec: String },
    /// Search for cycles whose lengths lie in a family.
    CheckFree {
        /// Comma-separated odd lengths, e.g. 5,7,9.
        #[arg(long, value_parser = parse_family)]
        lengths: OddCycleFamily,
        input: String,
    },
    /// Shortest odd cycle.
    OddGirth { input: String },
    /// Shortest path of a given order parity between two vertices.
    Path {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_parser = parse_parity)]
        parity: Parity,
        /// Maximum order (vertex count) of the path.
        #[arg(long)]
        max_order: usize,
        /// Comma-separated vertices the path must avoid.
        #[arg(long, value_parser = parse_set, default_value = "")]
        forbid: VertexSet,
        input: String,
    },
    /// Largest strong-2k-core: greedy extension, or exhaustive with --exact.
    Core {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Exhaustive search (hosts with at most 16 vertices).
        #[arg(long)]
        exact: bool,
        /// With --exact: maximum 2k-core instead of strong core.
        #[arg(long, requires = "exact")]
        plain: bool,
        input: String,
    },
    /// Chromatic number with a colouring certificate.
    Chi { input: String },
    /// Decide c-colourability.
    Kcolor {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        c: u64,
        input: String,
    },
    /// Fewest vertices whose removal leaves a bipartite graph.
    D2 { input: String },
    /// Fewest edges whose removal leaves a bipartite graph.
    Gamma2 {
        #[arg(long, value_enum, default_value_t = Gamma2Method::BranchAndBound)]
        method: Gamma2Method,
        input: String,
    },
    /// Check a lemma or theorem on one host graph.
    Verify(VerifyArgs),
    /// Seeded counterexample search below the regime threshold.
    Search(SearchArgs),
    /// Exact max minimum degree of family-free non-c-colourable graphs on n vertices.
    DeltaChi {
        #[arg(long, value_parser = parse_family)]
        family: OddCycleFamily,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        c: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Gamma2Method {
    BranchAndBound,
    EdgeBranching,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CoreModeArg {
    Exact,
    Greedy,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_target)]
    target: Target,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Forbidden odd lengths for main2.
    #[arg(long, value_parser = parse_family)]
    family: Option<OddCycleFamily>,
    /// Certified core for the structure lemma, e.g. 0,5,10.
    #[arg(long, value_parser = parse_set)]
    core: Option<VertexSet>,
    /// Even path x..y for lemma-cn, e.g. 0,1,2,3.
    #[arg(long, value_delimiter = ',')]
    path: Option<Vec<usize>>,
    /// Core search for core-bounds (default: exact up to 16 vertices).
    #[arg(long, value_enum)]
    mode: Option<CoreModeArg>,
    input: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    iters: u64,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: usize,
    /// Search against main2 with this forbidden family instead of main.
    #[arg(long, value_parser = parse_family)]
    family: Option<OddCycleFamily>,
    /// Number of consecutive seeds starting at --seed.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    runs: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

fn parse_family(s: &str) -> Result<OddCycleFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_parity(s: &str) -> Result<Parity, String> {
    s.parse().map_err(|_| format!("parity must be 'even' or 'odd', got '{s}'"))
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Generate { .. } => "generate",
            Command::CheckFree { .. } => "check-free",
            Command::OddGirth { .. } => "odd-girth",
            Command::Path { .. } => "path",
            Command::Core { .. } => "core",
            Command::Chi { .. } => "chi",
            Command::Kcolor { .. } => "kcolor",
            Command::D2 { .. } => "d2",
            Command::Gamma2 { .. } => "gamma2",
            Command::Verify(_) => "verify",
            Command::Search(_) => "search",
            Command::DeltaChi { .. } => "delta-chi",
        }
    }

    /// Flag checks that need no graph.
    fn validate(&self) -> Result<(), CliError> {
        match self {
            Command::Generate { spec } => {
                spec.parse::<ConstructionSpec>()?;
            }
            Command::Path { from, to, max_order, forbid, .. } => {
                if from == to {
                    return Err(usage("--from and --to must differ"));
                }
                if forbid.contains(*from) || forbid.contains(*to) {
                    return Err(usage("path endpoints must not be forbidden"));
                }
                if *max_order < 2 {
                    return Err(usage("--max-order must be at least 2"));
                }
            }
            Command::Verify(v) => v.validate()?,
            Command::Search(s) => {
                s.theorem()?;
            }
            _ => {}
        }
        Ok(())
    }
}

impl VerifyArgs {
    fn need_r(&self) -> Result<usize, CliError> {
        match self.r {
            Some(r) if r >= 1 => Ok(r),
            _ => Err(usage(format!("--target {} needs --r >= 1", self.target))),
        }
    }

    fn need_k(&self) -> Result<usize, CliError> {
        match self.k {
            Some(k) if k >= 1 => Ok(k),
            _ => Err(usage(format!("--target {} needs --k >= 1", self.target))),
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        match self.target {
            Target::LemmaCn => {
                self.need_r()?;
                self.need_k()?;
                if self.path.as_ref().is_none_or(|p| p.is_empty()) {
                    return Err(usage("--target lemma-cn needs --path"));
                }
            }
            Target::CoreBounds | Target::Main => {
                self.need_r()?;
                self.need_k()?;
            }
            Target::OddGirth => {
                self.need_r()?;
            }
            Target::Structure => {
                self.need_r()?;
                self.need_k()?;
                match &self.core {
                    Some(h) if h.len() >= 3 => {}
                    _ => return Err(usage("--target structure needs --core with at least 3 vertices")),
                }
            }
            Target::Main2 => {
                if self.family.is_none() {
                    return Err(usage("--target main2 needs --family"));
                }
            }
            Target::Search => return Err(usage("use the search subcommand")),
        }
        Ok(())
    }
}

impl SearchArgs {
    fn theorem(&self) -> Result<SearchTheorem, CliError> {
        if self.n < 2 {
            return Err(usage("--n must be at least 2"));
        }
        if self.workers < 1 {
            return Err(usage("--workers must be at least 1"));
        }
        match (&self.family, self.r, self.k) {
            (Some(family), None, None) => Ok(SearchTheorem::Main2 { family: family.clone() }),
            (Some(_), _, _) => Err(usage("--family excludes --r and --k")),
            (None, Some(r), Some(k)) if r >= 1 && k >= 1 => Ok(SearchTheorem::Main { r, k }),
            _ => Err(usage("search needs --r and --k (>= 1), or --family")),
        }
    }
}

pub fn run(command: &Command, limit: u64) -> Result<Output, CliError> {
    command.validate()?;
    match command {
        Command::Generate { spec } => generate(spec),
        Command::CheckFree { lengths, input } => check_free(&load(input)?, lengths, limit),
        Command::OddGirth { input } => Ok(odd_girth(&load(input)?)),
        Command::Path { from, to, parity, max_order, forbid, input } => {
            let out = parity::parity_path_exists(&load(input)?, *from, *to, *parity, *max_order, forbid, limit)?;
            let exceeded = out.is_budget_exceeded();
            let order = out.found().map(PathWitness::order);
            Ok(Output::json(json!({
                "status": status_name(&out.status),
                "witness": out.found(),
                "order": order,
                "nodes": out.nodes,
            }))
            .budget(exceeded))
        }
        Command::Core { k, exact, plain, input } => core(&load(input)?, usize_arg(*k)?, *exact, *plain, limit),
        Command::Chi { input } => Ok(chi(&load(input)?, limit)?),
        Command::Kcolor { c, input } => {
            let c = usize_arg(*c)?;
            let out = coloring::is_k_colorable(&load(input)?, c, limit)?;
            let status = match &out.status {
                SearchStatus::Found(_) => "colorable",
                SearchStatus::Absent => "not_colorable",
                SearchStatus::BudgetExceeded => "budget_exceeded",
            };
            Ok(Output::json(json!({
                "status": status,
                "c": c,
                "coloring": out.found().map(|cert| &cert.colors),
                "nodes": out.nodes,
            }))
            .budget(out.is_budget_exceeded()))
        }
        Command::D2 { input } => Ok(bipartization_output(bipartization::d2(&load(input)?, limit)?)),
        Command::Gamma2 { method, input } => {
            let g = load(input)?;
            let out = match method {
                Gamma2Method::BranchAndBound => bipartization::gamma2(&g, limit)?,
                Gamma2Method::EdgeBranching => bipartization::gamma2_by_edge_branching(&g, limit)?,
            };
            Ok(bipartization_output(out))
        }
        Command::Verify(args) => verify(args, limit),
        Command::Search(args) => {
            let config = SearchConfig {
                theorem: args.theorem()?,
                n: args.n,
                seed: args.seed,
                iterations: args.iters,
                limit,
            };
            let report = verifier::search_many(&config, args.runs, args.workers)?;
            Ok(Output::json(report.to_json()))
        }
        Command::DeltaChi { family, c, n } => {
            let r = verifier::exact_delta_chi(family, usize_arg(*c)?, usize_arg(*n)?)?;
            Ok(Output::json(json!({
                "family": family.to_string(),
                "n": r.n,
                "c": r.c,
                "min_degree": r.min_degree,
                "value": r.value.map(|v| v.to_string()),
                "ratio": r.value,
                "witness": r.witness,
            })))
        }
    }
}

fn usize_arg(v: u64) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| usage(format!("{v} is too large")))
}

fn load(source: &str) -> Result<Graph, CliError> {
    input::load(source).map(|c| c.graph)
}

fn status_name<W>(s: &SearchStatus<W>) -> &'static str {
    match s {
        SearchStatus::Found(_) => "found",
        SearchStatus::Absent => "absent",
        SearchStatus::BudgetExceeded => "budget_exceeded",
    }
}

fn generate(spec: &str) -> Result<Output, CliError> {
    let spec: ConstructionSpec = spec.parse()?;
    let c = spec.build()?;
    let mut out = Output::json(json!({
        "spec": spec.to_string(),
        "n": c.graph.n(),
        "m": c.graph.m(),
        "selected": c.selected,
        "edges": c.graph.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
    }));
    out.edge_list = Some(c.graph.to_edge_list());
    Ok(out)
}

fn check_free(g: &Graph, family: &OddCycleFamily, limit: u64) -> Result<Output, CliError> {
    let out = parity::is_family_free(g, family, limit)?;
    let status = match &out.status {
        SearchStatus::Found(_) => "violated",
        SearchStatus::Absent => "free",
        SearchStatus::BudgetExceeded => "budget_exceeded",
    };
    Ok(Output::json(json!({
        "status": status,
        "lengths": family.to_string(),
        "violated_length": out.found().map(|c| c.len()),
        "witness": out.found(),
        "nodes": out.nodes,
    }))
    .budget(out.is_budget_exceeded()))
}

fn odd_girth(g: &Graph) -> Output {
    let cycle = parity::odd_girth(g);
    Output::json(json!({
        "odd_girth": cycle.as_ref().map(|c| c.len()),
        "witness": cycle,
    }))
}

fn core(g: &Graph, k: usize, exact: bool, plain: bool, limit: u64) -> Result<Output, CliError> {
    if exact && g.n() > EXACT_CORE_LIMIT {
        return Err(Error::TooLarge { n: g.n(), limit: EXACT_CORE_LIMIT }.into());
    }
    let mut notes = Vec::new();
    let (core, trace) = if exact {
        let set = if plain { cores::exact_maximum_2k_core(g, k)? } else { cores::exact_maximum_strong_core(g, k)? };
        (set, Vec::new())
    } else {
        match cores::greedy_max_strong_core_with(g, k, &mut Budget::new(limit)) {
            Ok(found) => (found.core, found.trace),
            Err(Error::NoSeed(msg)) => {
                notes.push(format!("no strong core seed: {msg}"));
                (VertexSet::new(), Vec::new())
            }
            Err(e) => return Err(e.into()),
        }
    };
    let certified = match (plain, core.len()) {
        (false, 3..) => cores::certify_strong_2k_core(g, &core, k)?.is_some(),
        (true, 2..) => cores::certify_2k_core(g, &core, k)?.is_some(),
        _ => false,
    };
    Ok(Output::json(json!({
        "k": k,
        "mode": if exact { "exact" } else { "greedy" },
        "strong": !plain,
        "core": core,
        "size": core.len(),
        "trace": trace,
        "certified": certified,
        "notes": notes,
    })))
}

fn chi(g: &Graph, limit: u64) -> Result<Output, CliError> {
    Ok(match coloring::chromatic_number(g, limit)? {
        ChromaticOutcome::Exact { chi, coloring } => Output::json(json!({
            "status": "exact",
            "chi": chi,
            "coloring": coloring.colors,
        })),
        ChromaticOutcome::Bracketed { lower, upper, coloring } => Output::json(json!({
            "status": "bracketed",
            "chi": null,
            "bounds": { "lower": lower, "upper": upper },
            "coloring": coloring.colors,
        }))
        .budget(true),
    })
}

fn bipartization_output(out: BipartizationOutcome) -> Output {
    let bounds = match &out {
        BipartizationOutcome::Exact(_) => Value::Null,
        BipartizationOutcome::Bracketed { lower, upper, .. } => json!({ "lower": lower, "upper": upper }),
    };
    let best = out.best();
    Output::json(json!({
        "status": if out.exact().is_some() { "exact" } else { "bracketed" },
        "size": best.size,
        "removed": best.removed,
        "two_coloring": best.two_coloring,
        "bounds": bounds,
    }))
    .budget(out.exact().is_none())
}

fn verify(args: &VerifyArgs, limit: u64) -> Result<Output, CliError> {
    let g = load(&args.input)?;
    let n = g.n();
    let params = || -> Result<TheoremParams, CliError> {
        Ok(TheoremParams::new(args.need_r()?, args.k.unwrap_or(1).max(1), n)?)
    };
    let report = match args.target {
        Target::LemmaCn => {
            let path = PathWitness::new(args.path.clone().unwrap_or_default());
            verifier::check_common_neighborhood_bound(&g, &path, &params()?, limit)?
        }
        Target::CoreBounds => {
            let mode = match args.mode {
                Some(CoreModeArg::Exact) => CoreMode::Exact,
                Some(CoreModeArg::Greedy) => CoreMode::Greedy,
                None if n <= EXACT_CORE_LIMIT => CoreMode::Exact,
                None => CoreMode::Greedy,
            };
            verifier::check_core_size_bounds(&g, &params()?, mode, limit)?
        }
        Target::OddGirth => verifier::check_shortest_odd_cycle_bound(&g, &params()?)?,
        Target::Structure => {
            let h = args.core.clone().unwrap_or_default();
            verifier::check_structure_lemma(&g, &h, &params()?, limit)?
        }
        Target::Main => verifier::check_theorem_main(&g, &params()?, limit)?,
        Target::Main2 => {
            let family = args.family.as_ref().expect("validated");
            verifier::check_theorem_main2(&g, family, limit)?
        }
        Target::Search => unreachable!("rejected by validation"),
    };
    let inconclusive = report.conclusion == Conclusion::Inconclusive;
    Ok(Output::json(report.to_json()).budget(inconclusive))
}
