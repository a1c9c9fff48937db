//! Odd-cycle extremal graph toolkit: constructions, parity-constrained path
//! and cycle search, 2k-cores, exact colouring and bipartization, and
//! checkers for the structural theorems about `C_{2k+1}`-free graphs.

pub mod bipartization;
pub mod budget;
pub mod coloring;
pub mod constructions;
pub mod cores;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod parity;
pub mod verifier;
pub mod witness;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Bipartiteness, Graph, Vertex, VertexSet};
pub use witness::{CycleWitness, Parity, PathWitness};
pub use parity::{OddCycleFamily, SearchOutcome, SearchStatus};
