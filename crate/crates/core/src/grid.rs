//! Grid geometries, cells and boards.
//!
//! Three ambient grids are supported:
//!
//! * **square**: cells are `(row, col)`, each with four edge neighbors.
//! * **triangular**: cells are `(row, pos)`. A cell points up when `pos` is
//!   even and down when it is odd. An upward cell touches `(row, pos - 1)`,
//!   `(row, pos + 1)` and `(row + 1, pos + 1)`; a downward cell touches
//!   `(row - 1, pos - 1)`, `(row, pos - 1)` and `(row, pos + 1)`. The
//!   triangular board of side `n` has rows `0..n`, row `r` holding positions
//!   `0..=2r`.
//! * **hexagonal**: axial coordinates `(q, r)` with the six offsets
//!   `(±1, 0)`, `(0, ±1)`, `(+1, −1)` and `(−1, +1)`.
//!
//! Cells are ordered lexicographically on their coordinate pair; every
//! canonical ordering in the crate uses that order.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coordinates are kept this far inside the `i32` range so neighbors of
/// neighbors never overflow.
const COORD_LIMIT: i64 = i32::MAX as i64 - 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Square,
    Triangular,
    Hexagonal,
}

impl GridKind {
    pub const ALL: [GridKind; 3] = [GridKind::Square, GridKind::Triangular, GridKind::Hexagonal];

    /// Number of edge neighbors of every cell.
    pub fn degree(self) -> usize {
        match self {
            GridKind::Square => 4,
            GridKind::Triangular => 3,
            GridKind::Hexagonal => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GridKind::Square => "square",
            GridKind::Triangular => "triangular",
            GridKind::Hexagonal => "hexagonal",
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "square" => Ok(GridKind::Square),
            "triangular" => Ok(GridKind::Triangular),
            "hexagonal" => Ok(GridKind::Hexagonal),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// A grid cell. The meaning of the two coordinates depends on the
/// [`GridKind`]; see the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell(pub i32, pub i32);

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl From<(i32, i32)> for Cell {
    fn from((a, b): (i32, i32)) -> Self {
        Cell(a, b)
    }
}

/// The ambient neighbors of a cell, in canonical order.
#[derive(Debug, Clone, Copy)]
pub struct Neighbors {
    cells: [Cell; 6],
    len: usize,
}

impl Deref for Neighbors {
    type Target = [Cell];

    fn deref(&self) -> &[Cell] {
        &self.cells[..self.len]
    }
}

impl Neighbors {
    fn from_slice(list: &[Cell]) -> Self {
        let mut cells = [Cell(0, 0); 6];
        cells[..list.len()].copy_from_slice(list);
        Neighbors {
            cells,
            len: list.len(),
        }
    }
}

pub fn is_upward(c: Cell) -> bool {
    c.1.rem_euclid(2) == 0
}

/// Ambient-grid neighbors of `c`, sorted in canonical cell order.
pub fn neighbors(kind: GridKind, c: Cell) -> Neighbors {
    let Cell(a, b) = c;
    match kind {
        GridKind::Square => Neighbors::from_slice(&[
            Cell(a - 1, b),
            Cell(a, b - 1),
            Cell(a, b + 1),
            Cell(a + 1, b),
        ]),
        GridKind::Triangular => {
            if is_upward(c) {
                Neighbors::from_slice(&[Cell(a, b - 1), Cell(a, b + 1), Cell(a + 1, b + 1)])
            } else {
                Neighbors::from_slice(&[Cell(a - 1, b - 1), Cell(a, b - 1), Cell(a, b + 1)])
            }
        }
        GridKind::Hexagonal => Neighbors::from_slice(&[
            Cell(a - 1, b),
            Cell(a - 1, b + 1),
            Cell(a, b - 1),
            Cell(a, b + 1),
            Cell(a + 1, b - 1),
            Cell(a + 1, b),
        ]),
    }
}

pub fn are_adjacent(kind: GridKind, a: Cell, b: Cell) -> bool {
    neighbors(kind, a).contains(&b)
}

/// `c` followed by its ambient neighbors: the cells of the maximal fragment
/// centered at `c`.
pub fn closed_neighborhood(kind: GridKind, c: Cell) -> Vec<Cell> {
    let mut out = Vec::with_capacity(7);
    out.push(c);
    out.extend_from_slice(&neighbors(kind, c));
    out
}

/// Ambient cells adjacent to both `a` and `b`, in canonical order.
pub fn common_neighbors(kind: GridKind, a: Cell, b: Cell) -> Vec<Cell> {
    let nb = neighbors(kind, b);
    neighbors(kind, a)
        .iter()
        .copied()
        .filter(|c| nb.contains(c))
        .collect()
}

/// A finite nonempty set of cells on one grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BoardRepr", into = "BoardRepr")]
pub struct Board {
    kind: GridKind,
    cells: Vec<Cell>,
    has_isolated: bool,
}

#[derive(Serialize, Deserialize)]
struct BoardRepr {
    kind: GridKind,
    cells: Vec<Cell>,
}

impl TryFrom<BoardRepr> for Board {
    type Error = Error;

    fn try_from(r: BoardRepr) -> Result<Self> {
        Board::new(r.kind, r.cells)
    }
}

impl From<Board> for BoardRepr {
    fn from(b: Board) -> Self {
        BoardRepr {
            kind: b.kind,
            cells: b.cells,
        }
    }
}

impl Board {
    /// Builds a board from any collection of cells; duplicates collapse.
    pub fn new(kind: GridKind, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyBoard);
        }
        for c in &set {
            for v in [c.0, c.1] {
                if (v as i64).abs() > COORD_LIMIT {
                    return Err(Error::CoordinateRange(v as i64));
                }
            }
        }
        let mut board = Board {
            kind,
            cells: set.into_iter().collect(),
            has_isolated: false,
        };
        board.has_isolated = board.cells.iter().any(|&c| board.is_isolated(c));
        Ok(board)
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    /// Cells in canonical order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// Always false; boards are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// Position of `c` in the canonical cell order.
    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.cells.binary_search(&c).ok()
    }

    pub fn has_isolated(&self) -> bool {
        self.has_isolated
    }

    /// Neighbors of `c` that lie on the board.
    pub fn board_neighbors(&self, c: Cell) -> Vec<Cell> {
        neighbors(self.kind, c)
            .iter()
            .copied()
            .filter(|&v| self.contains(v))
            .collect()
    }

    fn is_isolated(&self, c: Cell) -> bool {
        !neighbors(self.kind, c).iter().any(|&v| self.contains(v))
    }

    /// Cells with no neighbor on the board.
    pub fn isolated_cells(&self) -> BTreeSet<Cell> {
        if !self.has_isolated {
            return BTreeSet::new();
        }
        self.cells
            .iter()
            .copied()
            .filter(|&c| self.is_isolated(c))
            .collect()
    }

    /// Fails with the least isolated cell, if any.
    pub fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_cells().into_iter().next() {
            Some(c) => Err(Error::IsolatedCell(c)),
            None => Ok(()),
        }
    }

    /// The lexicographically least pair of non-adjacent board cells that
    /// share an ambient neighbor but none on the board, or `None` when the
    /// board is regular.
    pub fn irregular_pair(&self) -> Option<(Cell, Cell)> {
        let kind = self.kind;
        for &u in &self.cells {
            let mut partners = BTreeSet::new();
            for &w in neighbors(kind, u).iter() {
                for &v in neighbors(kind, w).iter() {
                    if v > u && self.contains(v) && !are_adjacent(kind, u, v) {
                        partners.insert(v);
                    }
                }
            }
            for v in partners {
                if !common_neighbors(kind, u, v)
                    .iter()
                    .any(|&w| self.contains(w))
                {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_regular(&self) -> bool {
        self.irregular_pair().is_none()
    }

    /// Fails with the offending pair when the board is irregular.
    pub fn require_regular(&self) -> Result<()> {
        match self.irregular_pair() {
            Some((a, b)) => Err(Error::Irregular(a, b)),
            None => Ok(()),
        }
    }

    /// Returns the same shape with `c` removed, or `None` if nothing remains.
    pub fn without(&self, c: Cell) -> Option<Board> {
        Board::new(self.kind, self.cells.iter().copied().filter(|&x| x != c)).ok()
    }

    /// Square-grid ASCII art: `#` for cells, `.` for holes.
    pub fn to_ascii(&self) -> Result<String> {
        if self.kind != GridKind::Square {
            return Err(Error::Format(format!(
                "ascii boards are square-grid only, not {}",
                self.kind
            )));
        }
        let r0 = self.cells.iter().map(|c| c.0).min().unwrap().min(0);
        let c0 = self.cells.iter().map(|c| c.1).min().unwrap().min(0);
        let r1 = self.cells.iter().map(|c| c.0).max().unwrap();
        let mut out = String::new();
        for r in r0..=r1 {
            let row: Vec<i32> = self
                .cells
                .iter()
                .filter(|c| c.0 == r)
                .map(|c| c.1)
                .collect();
            if let Some(&last) = row.last() {
                for c in c0..=last {
                    out.push(if row.binary_search(&c).is_ok() {
                        '#'
                    } else {
                        '.'
                    });
                }
            }
            out.push('\n');
        }
        Ok(out)
    }

    /// The cell-list JSON document for this board.
    pub fn to_cell_list(&self) -> String {
        serde_json::to_string(self).expect("boards always serialize")
    }
}

/// `m × n` rectangle on the square grid, cells `(i, j)` with `i < m`, `j < n`.
pub fn make_rectangle(m: usize, n: usize) -> Result<Board> {
    let cells = (0..m as i32).flat_map(|i| (0..n as i32).map(move |j| Cell(i, j)));
    Board::new(GridKind::Square, cells)
}

pub fn make_square(n: usize) -> Result<Board> {
    make_rectangle(n, n)
}

/// Triangular board of side `n`: rows `0..n` of `1, 3, …, 2n − 1` triangles.
pub fn make_triangle(n: usize) -> Result<Board> {
    let cells = (0..n as i32).flat_map(|r| (0..=2 * r).map(move |p| Cell(r, p)));
    Board::new(GridKind::Triangular, cells)
}

/// Hexagonal board of all cells within axial distance `radius` of the origin.
pub fn make_hexagon(radius: usize) -> Result<Board> {
    let r = radius as i32;
    let cells = (-r..=r).flat_map(move |q| {
        (-r..=r)
            .filter(move |&s| (q + s).abs() <= r)
            .map(move |s| Cell(q, s))
    });
    Board::new(GridKind::Hexagonal, cells)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoardFormat {
    Ascii,
    CellList,
}

pub fn parse_board(text: &str, format: BoardFormat) -> Result<Board> {
    match format {
        BoardFormat::Ascii => parse_ascii(text),
        BoardFormat::CellList => parse_cell_list(text),
    }
}

fn parse_ascii(text: &str) -> Result<Board> {
    let mut cells = Vec::new();
    for (i, line) in text.lines().enumerate() {
        for (j, ch) in line.trim_end().chars().enumerate() {
            match ch {
                '#' => cells.push(Cell(i as i32, j as i32)),
                '.' => {}
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        column: j + 1,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
    }
    Board::new(GridKind::Square, cells)
}

#[derive(Deserialize)]
struct RawCellList {
    kind: String,
    cells: Vec<(i64, i64)>,
}

fn parse_cell_list(text: &str) -> Result<Board> {
    let raw: RawCellList = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let kind: GridKind = raw.kind.parse()?;
    let mut cells = Vec::with_capacity(raw.cells.len());
    for (a, b) in raw.cells {
        for v in [a, b] {
            if v.abs() > COORD_LIMIT {
                return Err(Error::CoordinateRange(v));
            }
        }
        cells.push(Cell(a as i32, b as i32));
    }
    Board::new(kind, cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_neighbors_of_origin() {
        let n = neighbors(GridKind::Square, Cell(0, 0));
        assert_eq!(&*n, &[Cell(-1, 0), Cell(0, -1), Cell(0, 1), Cell(1, 0)]);
    }

    #[test]
    fn neighbor_counts_and_order() {
        for kind in GridKind::ALL {
            for c in [Cell(0, 0), Cell(3, -7), Cell(-2, 5)] {
                let n = neighbors(kind, c);
                assert_eq!(n.len(), kind.degree());
                assert!(n.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn rectangles() {
        assert_eq!(make_rectangle(2, 2).unwrap().len(), 4);
        assert_eq!(make_rectangle(7, 7).unwrap().len(), 49);
        let strip = make_rectangle(1, 3).unwrap();
        assert_eq!(strip.cells(), &[Cell(0, 0), Cell(0, 1), Cell(0, 2)]);
        assert!(matches!(make_rectangle(0, 3), Err(Error::EmptyBoard)));
    }

    #[test]
    fn triangles() {
        assert_eq!(make_triangle(2).unwrap().len(), 4);
        assert_eq!(make_triangle(5).unwrap().len(), 25);
        let one = make_triangle(1).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one.has_isolated());
    }

    #[test]
    fn hexagon_sizes() {
        assert_eq!(make_hexagon(0).unwrap().len(), 1);
        assert_eq!(make_hexagon(1).unwrap().len(), 7);
        assert_eq!(make_hexagon(2).unwrap().len(), 19);
    }

    #[test]
    fn isolated() {
        let single = make_rectangle(1, 1).unwrap();
        assert_eq!(single.isolated_cells(), BTreeSet::from([Cell(0, 0)]));
        assert!(make_rectangle(2, 2).unwrap().isolated_cells().is_empty());
        let diag = Board::new(GridKind::Square, [Cell(0, 0), Cell(1, 1)]).unwrap();
        assert_eq!(
            diag.isolated_cells(),
            BTreeSet::from([Cell(0, 0), Cell(1, 1)])
        );
        assert_eq!(
            diag.require_no_isolated(),
            Err(Error::IsolatedCell(Cell(0, 0)))
        );
    }

    #[test]
    fn regular_rectangles_and_triangles() {
        for n in 1..=8 {
            assert!(make_square(n).unwrap().is_regular(), "{n}x{n}");
        }
        for n in 1..=10 {
            assert!(make_triangle(n).unwrap().is_regular(), "triangle {n}");
        }
        for r in 0..=3 {
            assert!(make_hexagon(r).unwrap().is_regular());
        }
    }

    #[test]
    fn three_by_two_minus_middle_is_irregular() {
        let b = make_rectangle(3, 2).unwrap().without(Cell(1, 0)).unwrap();
        assert_eq!(b.len(), 5);
        assert_eq!(b.irregular_pair(), Some((Cell(0, 0), Cell(2, 0))));
        assert_eq!(
            b.require_regular(),
            Err(Error::Irregular(Cell(0, 0), Cell(2, 0)))
        );
    }

    #[test]
    fn hex_line_of_three_is_irregular() {
        let b = Board::new(GridKind::Hexagonal, [Cell(0, 0), Cell(1, 0), Cell(2, 0)]).unwrap();
        assert!(b.is_regular(), "consecutive cells share the middle one");
        let b = Board::new(GridKind::Hexagonal, [Cell(0, 0), Cell(2, 0)]).unwrap();
        assert_eq!(b.irregular_pair(), Some((Cell(0, 0), Cell(2, 0))));
    }

    #[test]
    fn parse_ascii_boards() {
        let b = parse_board("##\n##", BoardFormat::Ascii).unwrap();
        assert_eq!(b, make_rectangle(2, 2).unwrap());
        let b = parse_board("###\n#.#  \n", BoardFormat::Ascii).unwrap();
        assert_eq!(b.len(), 5);
        assert!(!b.contains(Cell(1, 1)));
        let err = parse_board("##\n#x", BoardFormat::Ascii).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 2,
                message: "unexpected character 'x'".into()
            }
        );
        assert_eq!(
            parse_board("..\n", BoardFormat::Ascii),
            Err(Error::EmptyBoard)
        );
    }

    #[test]
    fn parse_cell_lists() {
        let b = parse_board(
            r#"{"kind":"hexagonal","cells":[[0,0],[0,1]]}"#,
            BoardFormat::CellList,
        )
        .unwrap();
        assert_eq!(b.kind(), GridKind::Hexagonal);
        assert_eq!(b.len(), 2);
        let err = parse_board(
            r#"{"kind":"octagonal","cells":[[0,0]]}"#,
            BoardFormat::CellList,
        )
        .unwrap_err();
        assert_eq!(err, Error::UnknownKind("octagonal".into()));
        let err = parse_board(
            "{\"kind\": \"square\",\n \"cells\": [[0,0],]}",
            BoardFormat::CellList,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn ascii_output_rejects_other_grids() {
        assert!(matches!(
            make_triangle(2).unwrap().to_ascii(),
            Err(Error::Format(_))
        ));
        assert_eq!(
            make_rectangle(2, 3).unwrap().to_ascii().unwrap(),
            "###\n###\n"
        );
    }
}
