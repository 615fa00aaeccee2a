use thiserror::Error;

use crate::grid::{Cell, GridKind};
use crate::tilings::Domino;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed or inconsistent input.
    Input,
    /// A guard, table range or search budget was exceeded.
    Capability,
    /// The input is well-formed but violates an operation's precondition.
    Domain,
    /// A witness failed its validator.
    Verification,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a board needs at least one cell")]
    EmptyBoard,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown grid kind `{0}`")]
    UnknownKind(String),

    #[error("unsupported format: {0}")]
    Format(String),

    #[error("coordinate {0} does not fit in 32 bits")]
    CoordinateRange(i64),

    #[error("graph is malformed: {0}")]
    InvalidGraph(String),

    #[error("cell {0} has no neighbor on the board")]
    IsolatedCell(Cell),

    #[error(
        "board is irregular: cells {0} and {1} share an ambient neighbor but no board neighbor"
    )]
    Irregular(Cell, Cell),

    #[error("expected a {expected} board, found {found}")]
    KindMismatch { expected: GridKind, found: GridKind },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("unsolved within a budget of {budget} nodes (bounds {lower}..={upper})")]
    Unsolved {
        budget: u64,
        lower: usize,
        upper: usize,
    },

    #[error("outside the validity domain: {0}")]
    OutOfRange(String),

    #[error("cell {0} is not on the board")]
    OffBoard(Cell),

    #[error("cells {0} and {1} are not adjacent")]
    NotAdjacent(Cell, Cell),

    #[error("invalid fragment centered at {center}: {reason}")]
    InvalidFragment { center: Cell, reason: String },

    #[error("cell {0} is covered more than once")]
    Overlap(Cell),

    #[error("cell {0} is not covered")]
    Uncovered(Cell),

    #[error("domino {0} appears twice")]
    DuplicateDomino(Domino),

    #[error("domino {0} is redundant")]
    NotSaturated(Domino),

    #[error("vertex {0} is not dominated")]
    NotDominating(usize),

    #[error("center {0} does not reach the board")]
    UselessCenter(Cell),

    #[error("witness rejected: {0}")]
    Verification(String),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            EmptyBoard
            | Parse { .. }
            | UnknownKind(_)
            | Format(_)
            | CoordinateRange(_)
            | InvalidGraph(_)
            | KindMismatch { .. } => ErrorCategory::Input,
            Capacity(_) | Unsolved { .. } | OutOfRange(_) => ErrorCategory::Capability,
            IsolatedCell(_) | Irregular(..) => ErrorCategory::Domain,
            OffBoard(_)
            | NotAdjacent(..)
            | InvalidFragment { .. }
            | Overlap(_)
            | Uncovered(_)
            | DuplicateDomino(_)
            | NotSaturated(_)
            | NotDominating(_)
            | UselessCenter(_)
            | Verification(_) => ErrorCategory::Verification,
        }
    }
}
