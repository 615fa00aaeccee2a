//! Self-describing witness documents and their validators.
//!
//! A [`Witness`] is parsed without validation so that a broken claim can be
//! reported precisely instead of failing at the JSON layer.

use serde::{Deserialize, Serialize};

use crate::covers::MaxFragmentCover;
use crate::domgraph::{adjacency_graph, DominatingSet};
use crate::error::{Error, Result};
use crate::grid::{Board, Cell};
use crate::tilings::{Domino, DominoCovering, Fragment, FragmentTiling};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFragment {
    pub center: Cell,
    pub spokes: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    FragmentTiling {
        board: Board,
        fragments: Vec<RawFragment>,
    },
    DominoCovering {
        board: Board,
        dominoes: Vec<(Cell, Cell)>,
    },
    MaxFragmentCover {
        board: Board,
        centers: Vec<Cell>,
    },
    DominatingSet {
        board: Board,
        cells: Vec<Cell>,
    },
}

impl Witness {
    pub fn board(&self) -> &Board {
        match self {
            Witness::FragmentTiling { board, .. }
            | Witness::DominoCovering { board, .. }
            | Witness::MaxFragmentCover { board, .. }
            | Witness::DominatingSet { board, .. } => board,
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Witness::FragmentTiling { .. } => "fragment_tiling",
            Witness::DominoCovering { .. } => "domino_covering",
            Witness::MaxFragmentCover { .. } => "max_fragment_cover",
            Witness::DominatingSet { .. } => "dominating_set",
        }
    }

    /// Number of pieces claimed: fragments, dominoes, centers or members.
    pub fn claimed_size(&self) -> usize {
        match self {
            Witness::FragmentTiling { fragments, .. } => fragments.len(),
            Witness::DominoCovering { dominoes, .. } => dominoes.len(),
            Witness::MaxFragmentCover { centers, .. } => centers.len(),
            Witness::DominatingSet { cells, .. } => cells.len(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Runs the validator for this witness type. A domino covering must also
    /// be saturated.
    pub fn validate(&self) -> Result<()> {
        match self {
            Witness::FragmentTiling { board, fragments } => {
                let fragments = fragments
                    .iter()
                    .map(|f| Fragment::new(board.kind(), f.center, f.spokes.iter().copied()))
                    .collect::<Result<Vec<_>>>()?;
                FragmentTiling::new(board.clone(), fragments).map(drop)
            }
            Witness::DominoCovering { board, dominoes } => {
                let dominoes = dominoes
                    .iter()
                    .map(|&(a, b)| Domino::new(board.kind(), a, b))
                    .collect::<Result<Vec<_>>>()?;
                let covering = DominoCovering::new(board.clone(), dominoes)?;
                match covering.redundant_domino() {
                    Some(d) => Err(Error::NotSaturated(d)),
                    None => Ok(()),
                }
            }
            Witness::MaxFragmentCover { board, centers } => {
                MaxFragmentCover::new(board.clone(), centers.iter().copied()).map(drop)
            }
            Witness::DominatingSet { board, cells } => {
                let mut members = Vec::with_capacity(cells.len());
                for &c in cells {
                    members.push(board.index_of(c).ok_or(Error::OffBoard(c))?);
                }
                let g = adjacency_graph(board);
                match DominatingSet::new(&g, members) {
                    Err(Error::NotDominating(v)) => Err(Error::Verification(format!(
                        "cell {} is not dominated",
                        board.cells()[v]
                    ))),
                    other => other.map(drop),
                }
            }
        }
    }

    /// Validates and summarizes the outcome.
    pub fn check(&self) -> CheckReport {
        let outcome = self.validate();
        CheckReport {
            witness_type: self.type_name(),
            size: self.claimed_size(),
            valid: outcome.is_ok(),
            counterexample: outcome
                .as_ref()
                .err()
                .map(counterexample_cells)
                .unwrap_or_default(),
            message: outcome.err().map(|e| e.to_string()),
        }
    }
}

impl From<&FragmentTiling> for Witness {
    fn from(t: &FragmentTiling) -> Self {
        Witness::FragmentTiling {
            board: t.board().clone(),
            fragments: t
                .fragments()
                .iter()
                .map(|f| RawFragment {
                    center: f.center(),
                    spokes: f.spokes().to_vec(),
                })
                .collect(),
        }
    }
}

impl From<&DominoCovering> for Witness {
    fn from(c: &DominoCovering) -> Self {
        Witness::DominoCovering {
            board: c.board().clone(),
            dominoes: c
                .dominoes()
                .iter()
                .map(|d| (d.cells()[0], d.cells()[1]))
                .collect(),
        }
    }
}

impl From<&MaxFragmentCover> for Witness {
    fn from(c: &MaxFragmentCover) -> Self {
        Witness::MaxFragmentCover {
            board: c.board().clone(),
            centers: c.centers().to_vec(),
        }
    }
}

impl Witness {
    pub fn dominating_set(board: &Board, d: &DominatingSet) -> Self {
        Witness::DominatingSet {
            board: board.clone(),
            cells: d.members().iter().map(|&v| board.cells()[v]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub witness_type: &'static str,
    pub size: usize,
    pub valid: bool,
    /// Cells named by the first failure, empty when valid.
    pub counterexample: Vec<Cell>,
    pub message: Option<String>,
}

fn counterexample_cells(e: &Error) -> Vec<Cell> {
    match *e {
        Error::OffBoard(c) | Error::Overlap(c) | Error::Uncovered(c) | Error::UselessCenter(c) => {
            vec![c]
        }
        Error::InvalidFragment { center, .. } => vec![center],
        Error::NotAdjacent(a, b) | Error::Irregular(a, b) => vec![a, b],
        Error::NotSaturated(d) | Error::DuplicateDomino(d) => d.cells().to_vec(),
        _ => Vec::new(),
    }
}
