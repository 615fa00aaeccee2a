//! Fragment tilings and saturated domino coverings.
//!
//! In a saturated covering every domino owns a cell no other domino covers.
//! The domino graph of such a covering is a disjoint union of stars, so it
//! is exactly a fragment tiling, and a fragment with `k` cells accounts for
//! `k − 1` dominoes. Maximizing dominoes is therefore minimizing fragments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domgraph::{adjacency_graph, gamma_exact, star_partition, SolveReport, SolverOptions};
use crate::error::{Error, Result};
use crate::grid::{are_adjacent, make_square, Board, Cell, GridKind};

/// A star-shaped tile: a center and one or more adjacent spokes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fragment {
    center: Cell,
    spokes: Vec<Cell>,
}

impl Fragment {
    /// Validates adjacency on grid `kind`. A two-cell fragment is centered
    /// on its lesser cell.
    pub fn new(
        kind: GridKind,
        center: Cell,
        spokes: impl IntoIterator<Item = Cell>,
    ) -> Result<Self> {
        let raw: Vec<Cell> = spokes.into_iter().collect();
        let set: BTreeSet<Cell> = raw.iter().copied().collect();
        let invalid = |reason: &str| Error::InvalidFragment {
            center,
            reason: reason.to_string(),
        };
        if set.is_empty() {
            return Err(invalid("a fragment needs at least one spoke"));
        }
        if set.len() != raw.len() {
            return Err(invalid("repeated spoke"));
        }
        if set.contains(&center) {
            return Err(invalid("the center cannot also be a spoke"));
        }
        if let Some(s) = set.iter().find(|&&s| !are_adjacent(kind, center, s)) {
            return Err(invalid(&format!("spoke {s} is not adjacent to the center")));
        }
        let mut spokes: Vec<Cell> = set.into_iter().collect();
        let mut center = center;
        if spokes.len() == 1 && spokes[0] < center {
            std::mem::swap(&mut center, &mut spokes[0]);
        }
        Ok(Fragment { center, spokes })
    }

    pub fn center(&self) -> Cell {
        self.center
    }

    pub fn spokes(&self) -> &[Cell] {
        &self.spokes
    }

    pub fn len(&self) -> usize {
        self.spokes.len() + 1
    }

    /// Never true: every fragment has a center and a spoke.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Center first, then spokes.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        std::iter::once(self.center).chain(self.spokes.iter().copied())
    }

    /// The sorted cell set.
    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.cells().collect()
    }
}

#[derive(Deserialize)]
struct FragmentRepr {
    center: Cell,
    spokes: Vec<Cell>,
}

/// Disjoint fragments whose union is exactly the board.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TilingRepr")]
pub struct FragmentTiling {
    board: Board,
    fragments: Vec<Fragment>,
}

#[derive(Deserialize)]
struct TilingRepr {
    board: Board,
    fragments: Vec<FragmentRepr>,
}

impl TryFrom<TilingRepr> for FragmentTiling {
    type Error = Error;

    fn try_from(r: TilingRepr) -> Result<Self> {
        let kind = r.board.kind();
        let fragments = r
            .fragments
            .into_iter()
            .map(|f| Fragment::new(kind, f.center, f.spokes))
            .collect::<Result<Vec<_>>>()?;
        FragmentTiling::new(r.board, fragments)
    }
}

impl FragmentTiling {
    /// Checks that the fragments partition the board. Fragments are stored
    /// sorted by center.
    pub fn new(board: Board, mut fragments: Vec<Fragment>) -> Result<Self> {
        let kind = board.kind();
        let mut seen = BTreeSet::new();
        for f in &fragments {
            // Re-check shape against this board's grid.
            Fragment::new(kind, f.center, f.spokes.iter().copied())?;
            for c in f.cells() {
                if !board.contains(c) {
                    return Err(Error::OffBoard(c));
                }
                if !seen.insert(c) {
                    return Err(Error::Overlap(c));
                }
            }
        }
        if let Some(&c) = board.cells().iter().find(|c| !seen.contains(c)) {
            return Err(Error::Uncovered(c));
        }
        fragments.sort();
        Ok(FragmentTiling { board, fragments })
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn fragments(&self) -> &[Fragment] {
        &self.fragments
    }

    pub fn len(&self) -> usize {
        self.fragments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fragments.is_empty()
    }

    /// The partition as a set of cell sets, for order-free comparison.
    pub fn partition(&self) -> BTreeSet<BTreeSet<Cell>> {
        self.fragments.iter().map(Fragment::cell_set).collect()
    }
}

/// Two adjacent cells, stored in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Domino(Cell, Cell);

impl Domino {
    pub fn new(kind: GridKind, a: Cell, b: Cell) -> Result<Self> {
        if a == b || !are_adjacent(kind, a, b) {
            return Err(Error::NotAdjacent(a, b));
        }
        Ok(if a < b { Domino(a, b) } else { Domino(b, a) })
    }

    pub fn cells(&self) -> [Cell; 2] {
        [self.0, self.1]
    }
}

impl fmt::Display for Domino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A set of dominoes on a board covering every cell at least once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoveringRepr")]
pub struct DominoCovering {
    board: Board,
    dominoes: Vec<Domino>,
}

#[derive(Deserialize)]
struct CoveringRepr {
    board: Board,
    dominoes: Vec<(Cell, Cell)>,
}

impl TryFrom<CoveringRepr> for DominoCovering {
    type Error = Error;

    fn try_from(r: CoveringRepr) -> Result<Self> {
        let kind = r.board.kind();
        let dominoes = r
            .dominoes
            .into_iter()
            .map(|(a, b)| Domino::new(kind, a, b))
            .collect::<Result<Vec<_>>>()?;
        DominoCovering::new(r.board, dominoes)
    }
}

impl DominoCovering {
    /// Rejects off-board cells, repeated dominoes and uncovered cells.
    pub fn new(board: Board, dominoes: impl IntoIterator<Item = Domino>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for d in dominoes {
            Domino::new(board.kind(), d.0, d.1)?;
            for c in d.cells() {
                if !board.contains(c) {
                    return Err(Error::OffBoard(c));
                }
            }
            if !set.insert(d) {
                return Err(Error::DuplicateDomino(d));
            }
        }
        let covered: BTreeSet<Cell> = set.iter().flat_map(Domino::cells).collect();
        if let Some(&c) = board.cells().iter().find(|c| !covered.contains(c)) {
            return Err(Error::Uncovered(c));
        }
        Ok(DominoCovering {
            board,
            dominoes: set.into_iter().collect(),
        })
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    /// The least domino whose removal keeps the board covered.
    pub fn redundant_domino(&self) -> Option<Domino> {
        let mut count: BTreeMap<Cell, usize> = BTreeMap::new();
        for d in &self.dominoes {
            for c in d.cells() {
                *count.entry(c).or_default() += 1;
            }
        }
        self.dominoes
            .iter()
            .copied()
            .find(|d| d.cells().iter().all(|c| count[c] >= 2))
    }

    pub fn is_saturated(&self) -> bool {
        self.redundant_domino().is_none()
    }
}

/// One domino per (center, spoke) pair.
pub fn tiling_to_saturated(t: &FragmentTiling) -> DominoCovering {
    let kind = t.board.kind();
    let dominoes = t.fragments.iter().flat_map(|f| {
        f.spokes
            .iter()
            .map(move |&s| Domino::new(kind, f.center, s).expect("spokes touch centers"))
    });
    DominoCovering::new(t.board.clone(), dominoes).expect("a tiling yields a covering")
}

/// Splits a saturated covering into the stars formed by its dominoes.
pub fn saturated_to_tiling(c: &DominoCovering) -> Result<FragmentTiling> {
    if let Some(d) = c.redundant_domino() {
        return Err(Error::NotSaturated(d));
    }
    let mut adj: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
    for d in &c.dominoes {
        adj.entry(d.0).or_default().push(d.1);
        adj.entry(d.1).or_default().push(d.0);
    }
    let mut visited = BTreeSet::new();
    let mut fragments = Vec::new();
    for &start in adj.keys() {
        if visited.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        visited.insert(start);
        let mut i = 0;
        while i < comp.len() {
            for &v in &adj[&comp[i]] {
                if visited.insert(v) {
                    comp.push(v);
                }
            }
            i += 1;
        }
        // A star with k leaves has a vertex of degree k = |comp| - 1.
        let center = comp
            .iter()
            .copied()
            .filter(|v| adj[v].len() == comp.len() - 1)
            .min()
            .ok_or_else(|| Error::Verification(format!("component at {start} is not a star")))?;
        fragments.push(Fragment::new(
            c.board.kind(),
            center,
            adj[&center].iter().copied(),
        )?);
    }
    FragmentTiling::new(c.board.clone(), fragments)
}

/// f(B): a minimum fragment tiling, via a minimum dominating set of the
/// board's adjacency graph.
pub fn minimal_fragment_tiling(
    b: &Board,
    options: SolverOptions,
) -> Result<SolveReport<FragmentTiling>> {
    b.require_no_isolated()?;
    let g = adjacency_graph(b);
    let r = gamma_exact(&g, options)?;
    let tiling = star_partition(&g, &r.witness)?.to_tiling(&g, b)?;
    debug_assert_eq!(tiling.len(), r.value);
    Ok(SolveReport {
        value: tiling.len(),
        witness: tiling,
        nodes_explored: r.nodes_explored,
        elapsed: r.elapsed,
    })
}

/// d(B) = |B| − f(B).
pub fn d_value(b: &Board, options: SolverOptions) -> Result<usize> {
    Ok(b.len() - minimal_fragment_tiling(b, options)?.value)
}

/// A largest saturated covering, built from a minimum fragment tiling.
pub fn max_saturated_covering(
    b: &Board,
    options: SolverOptions,
) -> Result<SolveReport<DominoCovering>> {
    let r = minimal_fragment_tiling(b, options)?;
    let covering = tiling_to_saturated(&r.witness);
    Ok(SolveReport {
        value: covering.len(),
        witness: covering,
        nodes_explored: r.nodes_explored,
        elapsed: r.elapsed,
    })
}

/// True iff every covering of the `n × n` board by exactly `k` distinct
/// dominoes contains a redundant domino. Exhaustive over all `k`-subsets.
pub fn brute_check_radoicic(n: usize, k: usize) -> Result<bool> {
    if n > 4 {
        return Err(Error::Capacity(format!(
            "exhaustive domino check is limited to n <= 4, got {n}"
        )));
    }
    let b = make_square(n)?;
    let idx = |c: Cell| b.index_of(c).unwrap();
    let mut dominoes: Vec<u32> = Vec::new();
    for &c in b.cells() {
        for v in [Cell(c.0, c.1 + 1), Cell(c.0 + 1, c.1)] {
            if b.contains(v) {
                dominoes.push((1 << idx(c)) | (1 << idx(v)));
            }
        }
    }
    let full: u32 = if b.len() == 32 {
        u32::MAX
    } else {
        (1 << b.len()) - 1
    };

    fn saturated_covering(chosen: &[u32], full: u32) -> bool {
        let mut once = 0u32;
        let mut twice = 0u32;
        for &d in chosen {
            twice |= once & d;
            once |= d;
        }
        once == full && chosen.iter().all(|&d| d & !twice != 0)
    }

    fn any(dominoes: &[u32], from: usize, k: usize, chosen: &mut Vec<u32>, full: u32) -> bool {
        if chosen.len() == k {
            return saturated_covering(chosen, full);
        }
        let need = k - chosen.len();
        for i in from..=dominoes.len().saturating_sub(need) {
            if i >= dominoes.len() {
                break;
            }
            chosen.push(dominoes[i]);
            let hit = any(dominoes, i + 1, k, chosen, full);
            chosen.pop();
            if hit {
                return true;
            }
        }
        false
    }

    Ok(!any(&dominoes, 0, k, &mut Vec::new(), full))
}
