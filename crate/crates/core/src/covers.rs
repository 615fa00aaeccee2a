//! Coverings by maximal fragments, where tiles may overlap and poke out of
//! the board.
//!
//! The maximal fragment centered at a cell is its closed ambient
//! neighborhood: the X-pentomino on the square grid, a side-2 triangle on
//! the triangular grid, a 7-hex flower on the hexagonal grid. Since every
//! fragment grows to a maximal one, `x(B) <= f(B)`. On regular boards a
//! cover can be trimmed back into a tiling of the same size.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::domgraph::{adjacency_graph, SolveReport, SolverOptions, Stars};
use crate::error::{Error, Result};
use crate::grid::{
    are_adjacent, closed_neighborhood, common_neighbors, make_triangle, Board, Cell,
};
use crate::search::{self, CoverProblem};
use crate::tilings::FragmentTiling;

/// Ambient centers whose maximal fragments together cover a board.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoverRepr")]
pub struct MaxFragmentCover {
    board: Board,
    centers: Vec<Cell>,
}

#[derive(Deserialize)]
struct CoverRepr {
    board: Board,
    centers: Vec<Cell>,
}

impl TryFrom<CoverRepr> for MaxFragmentCover {
    type Error = Error;

    fn try_from(r: CoverRepr) -> Result<Self> {
        MaxFragmentCover::new(r.board, r.centers)
    }
}

impl MaxFragmentCover {
    pub fn new(board: Board, centers: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let centers: BTreeSet<Cell> = centers.into_iter().collect();
        let mut covered = BTreeSet::new();
        for &c in &centers {
            let on: Vec<Cell> = closed_neighborhood(board.kind(), c)
                .into_iter()
                .filter(|&v| board.contains(v))
                .collect();
            if on.is_empty() {
                return Err(Error::UselessCenter(c));
            }
            covered.extend(on);
        }
        if let Some(&c) = board.cells().iter().find(|c| !covered.contains(c)) {
            return Err(Error::Uncovered(c));
        }
        Ok(MaxFragmentCover {
            board,
            centers: centers.into_iter().collect(),
        })
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    /// Centers in canonical order; some may lie off the board.
    pub fn centers(&self) -> &[Cell] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Candidate centers with their on-board coverage (as board indices),
/// after discarding every candidate whose coverage is contained in another
/// candidate's. Among equal coverages the least center is kept.
fn reduced_candidates(b: &Board) -> Vec<(Cell, Vec<usize>)> {
    let mut ambient = BTreeSet::new();
    for &c in b.cells() {
        ambient.extend(closed_neighborhood(b.kind(), c));
    }
    let all: Vec<(Cell, Vec<usize>)> = ambient
        .into_iter()
        .map(|c| {
            let mut cov: Vec<usize> = closed_neighborhood(b.kind(), c)
                .into_iter()
                .filter_map(|v| b.index_of(v))
                .collect();
            cov.sort_unstable();
            (c, cov)
        })
        .collect();
    (0..all.len())
        .filter(|&i| {
            !(0..all.len()).any(|j| {
                j != i
                    && is_subset(&all[i].1, &all[j].1)
                    && (all[i].1.len() < all[j].1.len() || j < i)
            })
        })
        .map(|i| all[i].clone())
        .collect()
}

/// x(B): a minimum set of ambient centers whose maximal fragments cover `b`.
pub fn x_exact(b: &Board, options: SolverOptions) -> Result<SolveReport<MaxFragmentCover>> {
    let start = Instant::now();
    let cands = reduced_candidates(b);
    let sets: Vec<Vec<usize>> = cands.iter().map(|(_, cov)| cov.clone()).collect();
    let problem = CoverProblem::new(b.len(), &sets);
    let cover = search::solve(&problem, options.search()).map_err(|e| Error::Unsolved {
        budget: options.budget,
        lower: e.lower,
        upper: e.upper,
    })?;
    let witness = MaxFragmentCover::new(b.clone(), cover.chosen.iter().map(|&s| cands[s].0))?;
    Ok(SolveReport {
        value: witness.len(),
        witness,
        nodes_explored: cover.nodes,
        elapsed: start.elapsed(),
    })
}

/// A star under construction: a center and its spokes.
#[derive(Debug, Clone)]
struct Piece {
    center: Cell,
    spokes: BTreeSet<Cell>,
}

impl Piece {
    fn cells(&self) -> BTreeSet<Cell> {
        let mut s = self.spokes.clone();
        s.insert(self.center);
        s
    }
}

/// The part of the maximal fragment at `c` that survives on the board,
/// repaired into a star.
fn trimmed_piece(b: &Board, c: Cell) -> Result<Piece> {
    let kind = b.kind();
    let on: Vec<Cell> = closed_neighborhood(kind, c)
        .into_iter()
        .filter(|&v| b.contains(v))
        .collect();
    if b.contains(c) {
        return Ok(Piece {
            center: c,
            spokes: on.into_iter().filter(|&v| v != c).collect(),
        });
    }
    if on.len() == 1 {
        return Ok(Piece {
            center: on[0],
            spokes: BTreeSet::new(),
        });
    }
    // The surviving spokes form a star around one of themselves...
    if let Some(&hub) = on
        .iter()
        .find(|&&h| on.iter().all(|&v| v == h || are_adjacent(kind, h, v)))
    {
        return Ok(Piece {
            center: hub,
            spokes: on.iter().copied().filter(|&v| v != hub).collect(),
        });
    }
    // ...or, after trimming left disconnected cells, around a common board
    // neighbor, which regularity provides.
    let mut common: Option<BTreeSet<Cell>> = None;
    for &v in &on {
        let nb: BTreeSet<Cell> = b.board_neighbors(v).into_iter().collect();
        common = Some(match common {
            None => nb,
            Some(acc) => acc.intersection(&nb).copied().collect(),
        });
    }
    match common.and_then(|s| s.into_iter().next()) {
        Some(hub) => Ok(Piece {
            center: hub,
            spokes: on.into_iter().collect(),
        }),
        None => {
            let (u, v) = (on[0], on[1]);
            debug_assert!(common_neighbors(kind, u, v).contains(&c));
            Err(Error::Irregular(u, v))
        }
    }
}

/// Resolves one overlapping pair in place. Returns false when there was
/// none.
fn resolve_one_overlap(b: &Board, pieces: &mut Vec<Piece>) -> bool {
    let cells: Vec<BTreeSet<Cell>> = pieces.iter().map(Piece::cells).collect();
    let pair = (0..pieces.len())
        .flat_map(|i| (i + 1..pieces.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !cells[i].is_disjoint(&cells[j]));
    let Some((i, j)) = pair else { return false };

    if cells[i].is_subset(&cells[j]) {
        pieces.remove(i);
        return true;
    }
    if cells[j].is_subset(&cells[i]) {
        pieces.remove(j);
        return true;
    }
    let (ci, cj) = (pieces[i].center, pieces[j].center);
    if ci == cj {
        let spokes = pieces.remove(j).spokes;
        pieces[i].spokes.extend(spokes);
        return true;
    }
    if are_adjacent(b.kind(), ci, cj) {
        // Drop the link between the two centers.
        pieces[i].spokes.remove(&cj);
        pieces[j].spokes.remove(&ci);
    }
    let shared: BTreeSet<Cell> = pieces[i]
        .spokes
        .intersection(&pieces[j].spokes)
        .copied()
        .collect();
    if shared.is_empty() {
        return true;
    }
    // Shared spokes go to the lesser center, but the other piece keeps at
    // least one spoke if it had only shared ones.
    let (keep, give) = if ci < cj { (i, j) } else { (j, i) };
    for s in &shared {
        pieces[give].spokes.remove(s);
    }
    if pieces[give].spokes.is_empty() {
        let s = *shared.iter().next().unwrap();
        pieces[keep].spokes.remove(&s);
        pieces[give].spokes.insert(s);
        if pieces[keep].spokes.is_empty() {
            // Both were {center, s}: one star around s replaces them.
            let (a, c) = (pieces[keep].center, pieces[give].center);
            let (hi, lo) = if keep > give {
                (keep, give)
            } else {
                (give, keep)
            };
            pieces.remove(hi);
            pieces.remove(lo);
            pieces.push(Piece {
                center: s,
                spokes: BTreeSet::from([a, c]),
            });
        }
    }
    true
}

/// Turns a cover of a regular board into a fragment tiling with no more
/// tiles than the cover has centers.
///
/// Each maximal fragment is clipped to the board. Tiles reduced to two
/// disconnected cells are rejoined through a common board neighbor.
/// Overlapping stars are then merged (shared center), unlinked (adjacent
/// centers) or have their shared cells handed to the lesser center.
/// Leftover single cells are finally absorbed into neighboring stars.
pub fn trim_to_tiling(b: &Board, cover: &MaxFragmentCover) -> Result<FragmentTiling> {
    b.require_regular()?;
    if cover.board() != b {
        return Err(Error::Verification(
            "the cover belongs to a different board".into(),
        ));
    }
    b.require_no_isolated()?;
    let mut pieces = cover
        .centers()
        .iter()
        .map(|&c| trimmed_piece(b, c))
        .collect::<Result<Vec<_>>>()?;
    while resolve_one_overlap(b, &mut pieces) {}

    let g = adjacency_graph(b);
    let idx = |c: Cell| b.index_of(c).expect("pieces stay on the board");
    let stars: BTreeMap<usize, Vec<usize>> = pieces
        .iter()
        .map(|p| (idx(p.center), p.spokes.iter().map(|&s| idx(s)).collect()))
        .collect();
    let mut work = Stars::new(&g, stars);
    work.absorb_singletons()?;
    let tiling = work.into_partition().to_tiling(&g, b)?;
    debug_assert!(tiling.len() <= cover.len());
    Ok(tiling)
}

/// Upper bound on x(n) from the best placement of an `n × n` window on the
/// X-pentomino tessellation: `((n + 2)² − k(n)) / 5`.
pub fn tessellation_upper_bound(n: usize) -> usize {
    const K: [usize; 5] = [4, 4, 6, 5, 16];
    ((n + 2) * (n + 2) - K[n % 5]) / 5
}

/// ⌈n²/4⌉, the minimal number of maximal fragments covering the
/// triangular board of side `n`.
pub fn x_triangular_value(n: usize) -> usize {
    (n * n).div_ceil(4)
}

/// Centers tiling the upward triangle of even side `2k` whose apex is
/// `(r0, p0)`, `p0` even.
fn tile_up_triangle(r0: i32, p0: i32, k: i32, out: &mut Vec<Cell>) {
    for big_row in 0..k {
        let r = r0 + 2 * big_row;
        for t in 0..=big_row {
            out.push(Cell(r + 1, p0 + 4 * t + 1));
        }
        for t in 0..big_row {
            out.push(Cell(r, p0 + 4 * t + 2));
        }
    }
}

/// Centers tiling the downward triangle of even side `2k` whose top row is
/// `r0` and starts at position `p0`, `p0` odd.
fn tile_down_triangle(r0: i32, p0: i32, k: i32, out: &mut Vec<Cell>) {
    for big_row in 0..k {
        let r = r0 + 2 * big_row;
        let start = p0 + 4 * big_row;
        for t in 0..k - big_row {
            out.push(Cell(r, start + 4 * t + 1));
        }
        for t in 0..k - big_row - 1 {
            out.push(Cell(r + 1, start + 4 * t + 4));
        }
    }
}

/// An explicit cover of `make_triangle(n)` by ⌈n²/4⌉ maximal fragments.
///
/// * even `n`: the board itself is an even triangle and is tiled exactly.
/// * `n = 4m + 1`: three side-`2m` corner triangles, plus the downward
///   side-`2m + 2` triangle in the middle, whose three corner cells lie
///   just outside the board.
/// * `n = 4m + 3`: three side-`(2m + 2)` corner triangles meeting in three
///   cells, plus the downward side-`2m` triangle left in the middle.
pub fn triangular_cover(n: usize) -> Result<MaxFragmentCover> {
    let board = make_triangle(n)?;
    let mut centers = Vec::new();
    let ni = n as i32;
    if n.is_multiple_of(2) {
        tile_up_triangle(0, 0, ni / 2, &mut centers);
    } else {
        let m = (ni - 1) / 4;
        let (corner, center_side, center_row, center_p0) = if n % 4 == 1 {
            (2 * m, 2 * m + 2, 2 * m, -1)
        } else {
            (2 * m + 2, 2 * m, 2 * m + 2, 3)
        };
        let low = ni - corner;
        tile_up_triangle(0, 0, corner / 2, &mut centers);
        tile_up_triangle(low, 0, corner / 2, &mut centers);
        tile_up_triangle(low, 2 * low, corner / 2, &mut centers);
        tile_down_triangle(center_row, center_p0, center_side / 2, &mut centers);
    }
    let cover = MaxFragmentCover::new(board, centers)?;
    debug_assert_eq!(cover.len(), x_triangular_value(n));
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_rectangle, make_square, GridKind};

    #[test]
    fn x_small_boards() {
        let opts = SolverOptions::default();
        assert_eq!(
            x_exact(&make_rectangle(1, 1).unwrap(), opts).unwrap().value,
            1
        );
        assert_eq!(x_exact(&make_square(5).unwrap(), opts).unwrap().value, 7);
        let notch = make_rectangle(3, 2).unwrap().without(Cell(1, 0)).unwrap();
        assert_eq!(x_exact(&notch, opts).unwrap().value, 2);
    }

    #[test]
    fn dominance_keeps_an_optimal_family() {
        let b = make_rectangle(1, 3).unwrap();
        let c = reduced_candidates(&b);
        // Only the middle cell's cross covers the whole strip.
        assert_eq!(c, vec![(Cell(0, 1), vec![0, 1, 2])]);
    }

    #[test]
    fn cover_validation() {
        let b = make_rectangle(1, 3).unwrap();
        assert_eq!(
            MaxFragmentCover::new(b.clone(), [Cell(5, 5)]),
            Err(Error::UselessCenter(Cell(5, 5)))
        );
        assert_eq!(
            MaxFragmentCover::new(b.clone(), [Cell(0, 0)]),
            Err(Error::Uncovered(Cell(0, 2)))
        );
        assert!(MaxFragmentCover::new(b, [Cell(-1, 0), Cell(0, 2)]).is_ok());
    }

    #[test]
    fn tessellation_bounds() {
        assert_eq!(tessellation_upper_bound(5), 9);
        assert_eq!(tessellation_upper_bound(7), 15);
        assert_eq!(tessellation_upper_bound(10), 28);
        for n in 1..200 {
            let k = [4, 4, 6, 5, 16][n % 5];
            assert_eq!(((n + 2) * (n + 2) - k) % 5, 0, "n = {n}");
        }
    }

    #[test]
    fn triangular_values() {
        assert_eq!(x_triangular_value(4), 4);
        assert_eq!(x_triangular_value(5), 7);
        assert_eq!(triangular_cover(2).unwrap().len(), 1);
        assert_eq!(triangular_cover(5).unwrap().len(), 7);
        assert_eq!(triangular_cover(7).unwrap().len(), 13);
        for n in 1..=40 {
            assert_eq!(
                triangular_cover(n).unwrap().len(),
                x_triangular_value(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn trim_regular_boards() {
        let opts = SolverOptions::default();
        let b = make_square(5).unwrap();
        let x = x_exact(&b, opts).unwrap();
        let t = trim_to_tiling(&b, &x.witness).unwrap();
        assert_eq!(t.len(), 7);

        // A cover that is already a tiling comes back unchanged.
        let b = make_rectangle(1, 6).unwrap();
        let cover = MaxFragmentCover::new(b.clone(), [Cell(0, 1), Cell(0, 4)]).unwrap();
        let t = trim_to_tiling(&b, &cover).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.fragments()[0].center(), Cell(0, 1));
        assert_eq!(t.fragments()[1].center(), Cell(0, 4));
    }

    #[test]
    fn trim_rejoins_split_tiles() {
        // The cross at (-1, 1) pokes out and leaves (0,0) and (0,2) apart
        // from (0,1); here it survives as the three top cells.
        let b = make_rectangle(2, 3).unwrap();
        let cover =
            MaxFragmentCover::new(b.clone(), [Cell(-1, 1), Cell(1, 0), Cell(1, 2)]).unwrap();
        let t = trim_to_tiling(&b, &cover).unwrap();
        assert!(t.len() <= 3);
        // Off-board center touching two on-board cells that are not adjacent
        // to each other; the other piece is swallowed by the new hub.
        let l = Board::new(GridKind::Square, [Cell(0, 0), Cell(0, 1), Cell(1, 1)]).unwrap();
        let cover = MaxFragmentCover::new(l.clone(), [Cell(1, 0), Cell(-1, 1)]).unwrap();
        let t = trim_to_tiling(&l, &cover).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.fragments()[0].center(), Cell(0, 1));
    }

    #[test]
    fn trim_refuses_irregular_boards() {
        let notch = make_rectangle(3, 2).unwrap().without(Cell(1, 0)).unwrap();
        let x = x_exact(&notch, SolverOptions::default()).unwrap();
        assert_eq!(
            trim_to_tiling(&notch, &x.witness),
            Err(Error::Irregular(Cell(0, 0), Cell(2, 0)))
        );
    }
}
