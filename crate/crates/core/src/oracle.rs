//! Brute-force reference computations.
//!
//! Everything here is exponential and deliberately naive. Adjacency is
//! recomputed from coordinates with its own predicate instead of going
//! through [`crate::grid::neighbors`], so a bug in the solvers' geometry
//! cannot hide behind an identical bug in the oracle.

use std::collections::BTreeSet;

use crate::domgraph::AdjacencyGraph;
use crate::error::{Error, Result};
use crate::grid::{Board, Cell, GridKind};

pub const MAX_GAMMA_VERTICES: usize = 20;
pub const MAX_TILING_CELLS: usize = 16;
pub const MAX_SATURATED_DOMINOES: usize = 24;
pub const MAX_X_CANDIDATES: usize = 32;
pub const MAX_SUB_BOARD_CELLS: usize = 20;

/// Edge adjacency from first principles.
pub fn touching(kind: GridKind, a: Cell, b: Cell) -> bool {
    let (dr, dc) = (b.0 as i64 - a.0 as i64, b.1 as i64 - a.1 as i64);
    match kind {
        GridKind::Square => dr.abs() + dc.abs() == 1,
        GridKind::Triangular => {
            if dr == 0 {
                dc.abs() == 1
            } else {
                // Only an upward triangle has a neighbor in the row below,
                // one position to the right.
                let (top, bottom) = if dr > 0 { (a, b) } else { (b, a) };
                bottom.0 as i64 == top.0 as i64 + 1
                    && bottom.1 as i64 == top.1 as i64 + 1
                    && top.1.rem_euclid(2) == 0
            }
        }
        GridKind::Hexagonal => {
            let ds = -dr - dc;
            dr.abs().max(dc.abs()).max(ds.abs()) == 1
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Open-neighborhood masks of the board's cells, by pairwise comparison.
fn board_masks(b: &Board) -> Vec<u64> {
    let cells = b.cells();
    (0..cells.len())
        .map(|i| {
            (0..cells.len())
                .filter(|&j| j != i && touching(b.kind(), cells[i], cells[j]))
                .fold(0u64, |m, j| m | (1 << j))
        })
        .collect()
}

/// Calls `f` on every `k`-subset of `0..n` as a bitmask, in increasing
/// numeric order, until it returns true.
fn any_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    if k > n {
        return false;
    }
    if k == 0 {
        return f(0);
    }
    let mut s: u64 = (1 << k) - 1;
    let limit = 1u64 << n;
    while s < limit {
        if f(s) {
            return true;
        }
        // Gosper's hack: next integer with the same popcount.
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    false
}

fn min_cover(universe: u64, sets: &[u64]) -> usize {
    if universe == 0 {
        return 0;
    }
    for k in 1..=sets.len() {
        let hit = any_subset(sets.len(), k, |s| {
            let mut cov = 0;
            let mut bits = s;
            while bits != 0 {
                cov |= sets[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            cov & universe == universe
        });
        if hit {
            return k;
        }
    }
    unreachable!("the family covers the universe")
}

/// γ(g) by enumerating vertex subsets in increasing size.
pub fn brute_gamma(g: &AdjacencyGraph) -> Result<usize> {
    let n = g.len();
    if n > MAX_GAMMA_VERTICES {
        return Err(Error::Capacity(format!(
            "brute_gamma takes at most {MAX_GAMMA_VERTICES} vertices, got {n}"
        )));
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &u| m | (1 << u)))
        .collect();
    Ok(min_cover(full_mask(n), &closed))
}

/// γ of the board's adjacency graph, rebuilt with [`touching`].
pub fn brute_gamma_board(b: &Board) -> Result<usize> {
    if b.len() > MAX_GAMMA_VERTICES {
        return Err(Error::Capacity(format!(
            "brute_gamma takes at most {MAX_GAMMA_VERTICES} cells, got {}",
            b.len()
        )));
    }
    let closed: Vec<u64> = board_masks(b)
        .iter()
        .enumerate()
        .map(|(i, &m)| m | (1 << i))
        .collect();
    Ok(min_cover(full_mask(b.len()), &closed))
}

/// Every fragment on the board as a cell mask: a center plus any nonempty
/// set of its board neighbors.
fn all_fragments(b: &Board) -> Vec<u64> {
    let masks = board_masks(b);
    let mut out = BTreeSet::new();
    for (c, &nb) in masks.iter().enumerate() {
        let nbrs: Vec<usize> = (0..b.len()).filter(|&j| nb >> j & 1 == 1).collect();
        for pick in 1u64..(1 << nbrs.len()) {
            let mask = nbrs
                .iter()
                .enumerate()
                .filter(|(k, _)| pick >> k & 1 == 1)
                .fold(1u64 << c, |m, (_, &j)| m | (1 << j));
            out.insert(mask);
        }
    }
    out.into_iter().collect()
}

fn require_no_isolated(b: &Board) -> Result<Vec<u64>> {
    let masks = board_masks(b);
    if let Some(i) = masks.iter().position(|&m| m == 0) {
        return Err(Error::IsolatedCell(b.cells()[i]));
    }
    Ok(masks)
}

/// f(B) by exhaustive exact cover over all fragments of the board.
pub fn brute_min_tiling(b: &Board) -> Result<usize> {
    let n = b.len();
    if n > MAX_TILING_CELLS {
        return Err(Error::Capacity(format!(
            "brute_min_tiling takes at most {MAX_TILING_CELLS} cells, got {n}"
        )));
    }
    require_no_isolated(b)?;
    let frags = all_fragments(b);
    let full = full_mask(n) as usize;
    // memo[covered] = fragments needed to tile the rest, branching on every
    // fragment through the lowest uncovered cell.
    let containing: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            frags
                .iter()
                .filter(|&&f| f >> i & 1 == 1)
                .map(|&f| f as usize)
                .collect()
        })
        .collect();
    const UNKNOWN: u8 = u8::MAX;
    const NONE: u8 = u8::MAX - 1;
    let mut memo = vec![UNKNOWN; full + 1];
    fn go(covered: usize, full: usize, containing: &[Vec<usize>], memo: &mut [u8]) -> u8 {
        if covered == full {
            return 0;
        }
        if memo[covered] != UNKNOWN {
            return memo[covered];
        }
        let low = (!covered).trailing_zeros() as usize;
        let mut best = NONE;
        for &f in &containing[low] {
            if f & covered == 0 {
                let sub = go(covered | f, full, containing, memo);
                if sub != NONE && sub + 1 < best {
                    best = sub + 1;
                }
            }
        }
        memo[covered] = best;
        best
    }
    let best = go(0, full, &containing, &mut memo);
    assert_ne!(
        best, NONE,
        "a board without isolated cells always has a fragment tiling"
    );
    Ok(best as usize)
}

/// d(B) by exhaustive search over domino subsets.
///
/// Adding dominoes can only take private cells away, so a branch is cut as
/// soon as some chosen domino has lost all of its private cells.
pub fn brute_max_saturated(b: &Board) -> Result<usize> {
    let masks = require_no_isolated(b)?;
    let mut dominoes = Vec::new();
    for (i, &m) in masks.iter().enumerate() {
        for j in i + 1..b.len() {
            if m >> j & 1 == 1 {
                dominoes.push((1u64 << i) | (1 << j));
            }
        }
    }
    if dominoes.len() > MAX_SATURATED_DOMINOES {
        return Err(Error::Capacity(format!(
            "brute_max_saturated takes at most {MAX_SATURATED_DOMINOES} dominoes, got {}",
            dominoes.len()
        )));
    }
    let full = full_mask(b.len());

    struct Search<'a> {
        dominoes: &'a [u64],
        full: u64,
        chosen: Vec<u64>,
        best: usize,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize, once: u64, twice: u64) {
            if self.chosen.iter().any(|&d| d & !twice == 0) {
                return;
            }
            if self.chosen.len() + (self.dominoes.len() - i) <= self.best {
                return;
            }
            if i == self.dominoes.len() {
                if once == self.full {
                    self.best = self.chosen.len();
                }
                return;
            }
            let d = self.dominoes[i];
            self.chosen.push(d);
            self.go(i + 1, once | d, twice | (once & d));
            self.chosen.pop();
            self.go(i + 1, once, twice);
        }
    }
    let mut s = Search {
        dominoes: &dominoes,
        full,
        chosen: Vec::new(),
        best: 0,
    };
    s.go(0, 0, 0);
    Ok(s.best)
}

/// Ambient cells whose maximal fragment meets the board, with the board
/// cells each one covers.
fn ambient_candidates(b: &Board) -> Vec<(Cell, u64)> {
    let kind = b.kind();
    let mut out = BTreeSet::new();
    for &c in b.cells() {
        for dr in -1..=1 {
            for dc in -2..=2 {
                let v = Cell(c.0 + dr, c.1 + dc);
                if v == c || touching(kind, v, c) {
                    out.insert(v);
                }
            }
        }
    }
    out.into_iter()
        .map(|v| {
            let mask = b
                .cells()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == v || touching(kind, v, c))
                .fold(0u64, |m, (i, _)| m | (1 << i));
            (v, mask)
        })
        .collect()
}

/// x(B) by enumerating sets of ambient centers in increasing size.
pub fn brute_x(b: &Board) -> Result<usize> {
    let cands = ambient_candidates(b);
    if cands.len() > MAX_X_CANDIDATES {
        return Err(Error::Capacity(format!(
            "brute_x takes at most {MAX_X_CANDIDATES} candidate centers, got {}",
            cands.len()
        )));
    }
    let sets: Vec<u64> = cands.iter().map(|&(_, m)| m).collect();
    Ok(min_cover(full_mask(b.len()), &sets))
}

/// Connected subsets of `b` with at least two cells, as boards.
pub fn connected_sub_boards(b: &Board) -> Result<Vec<Board>> {
    let n = b.len();
    if n > MAX_SUB_BOARD_CELLS {
        return Err(Error::Capacity(format!(
            "sub-board enumeration takes at most {MAX_SUB_BOARD_CELLS} cells"
        )));
    }
    let masks = board_masks(b);
    let mut out = Vec::new();
    for s in 1u64..(1 << n) {
        if s.count_ones() < 2 {
            continue;
        }
        let mut seen = s & s.wrapping_neg();
        loop {
            let mut grown = seen;
            let mut bits = seen;
            while bits != 0 {
                grown |= masks[bits.trailing_zeros() as usize] & s;
                bits &= bits - 1;
            }
            if grown == seen {
                break;
            }
            seen = grown;
        }
        if seen == s {
            let cells = (0..n).filter(|&i| s >> i & 1 == 1).map(|i| b.cells()[i]);
            out.push(Board::new(b.kind(), cells)?);
        }
    }
    Ok(out)
}

/// Translate so the shape touches the axes, keeping triangle orientation.
fn normalize(kind: GridKind, cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let r0 = cells.iter().map(|c| c.0).min().unwrap();
    let c0 = cells.iter().map(|c| c.1).min().unwrap();
    let shift = match kind {
        GridKind::Triangular => c0.div_euclid(2) * 2,
        _ => c0,
    };
    cells.iter().map(|c| Cell(c.0 - r0, c.1 - shift)).collect()
}

/// All connected boards of `2..=max_cells` cells on grid `kind`, one per
/// translation class.
pub fn polyforms(kind: GridKind, max_cells: usize) -> Vec<Board> {
    let mut layer: BTreeSet<BTreeSet<Cell>> = BTreeSet::from([BTreeSet::from([Cell(0, 0)])]);
    if kind == GridKind::Triangular {
        layer.insert(BTreeSet::from([Cell(0, 1)]));
    }
    let mut out = Vec::new();
    for _ in 2..=max_cells {
        let mut next = BTreeSet::new();
        for shape in &layer {
            for &c in shape {
                for dr in -1..=1 {
                    for dc in -2..=2 {
                        let v = Cell(c.0 + dr, c.1 + dc);
                        if !shape.contains(&v) && touching(kind, c, v) {
                            let mut grown = shape.clone();
                            grown.insert(v);
                            next.insert(normalize(kind, &grown));
                        }
                    }
                }
            }
        }
        out.extend(
            next.iter()
                .map(|s| Board::new(kind, s.iter().copied()).unwrap()),
        );
        layer = next;
    }
    out
}
