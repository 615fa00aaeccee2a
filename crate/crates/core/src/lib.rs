//! Exact solvers for minimal fragment tilings, maximal saturated domino
//! coverings, maximal-fragment covers and grid domination numbers on
//! square, triangular and hexagonal boards.

pub mod covers;
pub mod domgraph;
pub mod error;
pub mod formulas;
pub mod grid;
pub mod oracle;
pub mod render;
mod search;
pub mod tilings;
pub mod witness;

pub use covers::{trim_to_tiling, x_exact, MaxFragmentCover};
pub use domgraph::{
    adjacency_graph, gamma_exact, AdjacencyGraph, DominatingSet, SolveReport, SolverOptions,
};
pub use error::{Error, ErrorCategory, Result};
pub use grid::{Board, BoardFormat, Cell, GridKind};
pub use tilings::{Domino, DominoCovering, Fragment, FragmentTiling};
pub use witness::{CheckReport, Witness};
