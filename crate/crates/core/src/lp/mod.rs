//! Exact linear programming and the LP-rounding separator for instances
//! whose free region lies next to the terminals.

pub mod separator;
pub mod simplex;

pub use separator::{build_lp, lp_separator, normalize, Normalized};
pub use simplex::{simplex_solve, Constraint, LinearProgram, LpOutcome, Rational, Relation};
