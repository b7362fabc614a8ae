//! Approximate tree decompositions of bounded independence number.
//!
//! Given a graph `G` and an integer `k`, [`decompose`] either returns a tree
//! decomposition whose bags all have independence number at most `8k`, or
//! reports that every tree decomposition of `G` has a bag with independence
//! number above `k`. The building blocks are exposed as well: an exact
//! rational LP solver and the rounding-based separator for the base case,
//! the branching separator solver, balanced separators, exact brute-force
//! oracles, and generators for structured hard instances.

pub mod branch;
pub mod decompose;
pub mod error;
pub mod generators;
pub mod graph;
pub mod independence;
pub mod instance;
pub mod io;
pub mod lp;
pub mod mwis;
pub mod oracles;
pub mod split;
pub mod td;
pub mod vertex_set;

pub use decompose::{decompose, DecomposeResult};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use independence::{alpha, tau};
pub use instance::{SeparatorInstance, SeparatorResult};
pub use lp::{LinearProgram, Rational};
pub use mwis::mwis_dp;
pub use split::BalancedSplit;
pub use td::{TreeDecomposition, ValidationReport, Violation};
pub use vertex_set::VertexSet;
