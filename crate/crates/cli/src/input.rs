//! Graph sources: a file path, `-` for stdin, or a construction spec string.

use std::fs::File;
use std::io::{self, BufReader};
use std::path::Path;

use oddcore::constructions::{Construction, ConstructionSpec};
use oddcore::{Graph, VertexSet};

use crate::commands::CliError;

/// Loads `source`. Existing files win over spec strings, so a file named
/// `bc:1,6` is still read as a file.
pub fn load(source: &str) -> Result<Construction, CliError> {
    if source == "-" {
        let graph = Graph::read_edge_list(io::stdin().lock())?;
        return Ok(plain(graph));
    }
    let path = Path::new(source);
    if path.is_file() {
        let file = File::open(path).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
        return Ok(plain(Graph::read_edge_list(BufReader::new(file))?));
    }
    if source.contains(':') {
        let spec: ConstructionSpec = source.parse()?;
        return Ok(spec.build()?);
    }
    Err(CliError::Input(format!("{source}: no such file and not a construction spec")))
}

fn plain(graph: Graph) -> Construction {
    Construction { graph, selected: Vec::new() }
}

/// Comma-separated vertex ids, e.g. `0,3,7`.
pub fn parse_set(s: &str) -> Result<VertexSet, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad vertex id '{t}'")))
        .collect()
}
