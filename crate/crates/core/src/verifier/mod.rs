//! Lemma and theorem checkers, extremal-graph recognizers, the finite-n
//! chromatic profile oracle and the counterexample search harness.

mod delta_chi;
mod lemmas;
mod params;
mod recognize;
mod report;
mod search;
mod theorems;

pub use delta_chi::{exact_delta_chi, DeltaChi, Ratio, DELTA_CHI_LIMIT};
pub use lemmas::{
    check_common_neighborhood_bound, check_core_size_bounds, check_shortest_odd_cycle_bound, check_structure_lemma,
    neighborhood_layers, CoreMode, Layers,
};
pub use params::{f, FamilyParams, TheoremParams};
pub use recognize::{recognize_bc_construction, recognize_g_construction, Recognition};
pub use report::{CheckStatus, Conclusion, Target, Tier, VerificationReport};
pub use search::{merge_reports, search_counterexamples, search_many, Finding, SearchConfig, SearchTheorem};
pub use theorems::{check_theorem_main, check_theorem_main2};
