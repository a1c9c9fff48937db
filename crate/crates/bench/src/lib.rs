//! Shared fixtures for the criterion benches.

use oddcore::constructions::ConstructionSpec;
use oddcore::{Graph, VertexSet};

/// Builds a construction from its spec string; panics on a bad spec.
pub fn build(spec: &str) -> Graph {
    spec.parse::<ConstructionSpec>().expect("valid spec").build().expect("buildable").graph
}

/// The selected vertices of a blob construction, as a core candidate.
pub fn selected(spec: &str) -> VertexSet {
    let c = spec.parse::<ConstructionSpec>().expect("valid spec").build().expect("buildable");
    VertexSet::from(c.selected)
}

/// Hosts for the cycle kernels, smallest first.
pub const CYCLE_HOSTS: &[&str] = &["bc:2,20", "gplus:3,32", "gplus:4,60", "blowup:9,4"];
