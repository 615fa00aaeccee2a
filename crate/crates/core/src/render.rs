//! ASCII and SVG pictures of boards, tilings and covers.
//!
//! ASCII layouts put one character per cell. Triangular rows are laid out
//! so that the column is `pos − row`, and hexagonal rows are sheared by
//! half a cell per row, so every grid reads as its own shape.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::covers::MaxFragmentCover;
use crate::grid::{closed_neighborhood, is_upward, Board, Cell, GridKind};
use crate::tilings::FragmentTiling;

const LABELS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

pub const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

fn label(i: usize) -> char {
    LABELS[i % LABELS.len()] as char
}

fn ascii_column(kind: GridKind, c: Cell) -> i64 {
    match kind {
        GridKind::Square => c.1 as i64,
        GridKind::Triangular => c.1 as i64 - c.0 as i64,
        GridKind::Hexagonal => 2 * c.1 as i64 + c.0 as i64,
    }
}

/// Lays out `cells` with the given characters; gaps are `.` on the square
/// grid and spaces elsewhere.
fn ascii_layout(kind: GridKind, chars: &BTreeMap<Cell, char>) -> String {
    let Some(rows) = chars
        .keys()
        .map(|c| c.0)
        .min()
        .zip(chars.keys().map(|c| c.0).max())
    else {
        return String::new();
    };
    let x0 = chars.keys().map(|&c| ascii_column(kind, c)).min().unwrap();
    let x1 = chars.keys().map(|&c| ascii_column(kind, c)).max().unwrap();
    let gap = if kind == GridKind::Square { '.' } else { ' ' };
    let mut out = String::new();
    for r in rows.0..=rows.1 {
        let mut line: Vec<char> = vec![gap; (x1 - x0 + 1) as usize];
        for (&c, &ch) in chars.range(Cell(r, i32::MIN)..=Cell(r, i32::MAX)) {
            line[(ascii_column(kind, c) - x0) as usize] = ch;
        }
        let line: String = line.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Fragment indices in the order their first cell appears scanning the
/// board row-major.
fn row_major_order(t: &FragmentTiling) -> BTreeMap<Cell, usize> {
    let owner: BTreeMap<Cell, usize> = t
        .fragments()
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.cells().map(move |c| (c, i)))
        .collect();
    let mut rank = BTreeMap::new();
    let mut next = 0;
    for c in t.board().cells() {
        let f = owner[c];
        rank.entry(f).or_insert_with(|| {
            next += 1;
            next - 1
        });
    }
    owner.into_iter().map(|(c, f)| (c, rank[&f])).collect()
}

/// One letter per fragment, assigned in row-major order of first cells.
pub fn tiling_ascii(t: &FragmentTiling) -> String {
    let chars = row_major_order(t)
        .into_iter()
        .map(|(c, i)| (c, label(i)))
        .collect();
    ascii_layout(t.board().kind(), &chars)
}

/// Each cell shows the first center covering it; centers on the board are
/// drawn as `*`.
pub fn cover_ascii(cover: &MaxFragmentCover) -> String {
    let b = cover.board();
    let mut chars = BTreeMap::new();
    for (i, &z) in cover.centers().iter().enumerate() {
        for v in closed_neighborhood(b.kind(), z) {
            if b.contains(v) {
                chars.entry(v).or_insert(label(i));
            }
        }
    }
    for &z in cover.centers() {
        if b.contains(z) {
            chars.insert(z, '*');
        }
    }
    ascii_layout(b.kind(), &chars)
}

/// Members as `*`, other cells as `o`.
pub fn marked_ascii(b: &Board, marked: &[Cell]) -> String {
    let marked: BTreeSet<Cell> = marked.iter().copied().collect();
    let chars = b
        .cells()
        .iter()
        .map(|&c| (c, if marked.contains(&c) { '*' } else { 'o' }))
        .collect();
    ascii_layout(b.kind(), &chars)
}

pub fn board_ascii(b: &Board) -> String {
    let chars = b.cells().iter().map(|&c| (c, '#')).collect();
    ascii_layout(b.kind(), &chars)
}

const UNIT: f64 = 24.0;

/// Polygon vertices of a cell and its center point.
fn geometry(kind: GridKind, c: Cell) -> (Vec<(f64, f64)>, (f64, f64)) {
    let (r, q) = (c.0 as f64, c.1 as f64);
    match kind {
        GridKind::Square => {
            let (x, y) = (q * UNIT, r * UNIT);
            (
                vec![(x, y), (x + UNIT, y), (x + UNIT, y + UNIT), (x, y + UNIT)],
                (x + UNIT / 2.0, y + UNIT / 2.0),
            )
        }
        GridKind::Triangular => {
            let h = UNIT * 3f64.sqrt() / 2.0;
            let x = (q - r) * UNIT / 2.0;
            let (top, bottom) = (r * h, (r + 1.0) * h);
            if is_upward(c) {
                let pts = vec![(x, top), (x + UNIT / 2.0, bottom), (x - UNIT / 2.0, bottom)];
                (pts, (x, top + 2.0 * h / 3.0))
            } else {
                let pts = vec![(x - UNIT / 2.0, top), (x + UNIT / 2.0, top), (x, bottom)];
                (pts, (x, top + h / 3.0))
            }
        }
        GridKind::Hexagonal => {
            let s = UNIT / 3f64.sqrt();
            let (cx, cy) = (UNIT * (q + r / 2.0), 1.5 * s * r);
            let pts = (0..6)
                .map(|k| {
                    let a = std::f64::consts::PI / 180.0 * (60.0 * k as f64 - 30.0);
                    (cx + s * a.cos(), cy + s * a.sin())
                })
                .collect();
            (pts, (cx, cy))
        }
    }
}

/// A colored group of cells with an optional marked center.
struct Group {
    cells: Vec<Cell>,
    center: Option<Cell>,
}

fn svg(kind: GridKind, board: &Board, groups: &[Group], pokes: &[Cell]) -> String {
    let all: Vec<Cell> = board.cells().iter().chain(pokes).copied().collect();
    let pts: Vec<(f64, f64)> = all.iter().flat_map(|&c| geometry(kind, c).0).collect();
    let x0 = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - 2.0;
    let y0 = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - 2.0;
    let x1 = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + 2.0;
    let y1 = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + 2.0;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.2} {y0:.2} {:.2} {:.2}" width="{:.0}" height="{:.0}">"#,
        x1 - x0,
        y1 - y0,
        x1 - x0,
        y1 - y0
    );
    out.push_str(concat!(
        r#"<defs><pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" patternTransform="rotate(45)">"#,
        r##"<line x1="0" y1="0" x2="0" y2="6" stroke="#666" stroke-width="2"/></pattern></defs>"##,
        "\n"
    ));
    let polygon = |out: &mut String, c: Cell, fill: &str, extra: &str| {
        let p: Vec<String> = geometry(kind, c)
            .0
            .iter()
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect();
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="{fill}" stroke="#333" stroke-width="0.8"{extra}/>"##,
            p.join(" ")
        );
    };
    let mut grouped = BTreeSet::new();
    for (i, g) in groups.iter().enumerate() {
        for &c in &g.cells {
            polygon(&mut out, c, PALETTE[i % PALETTE.len()], "");
            grouped.insert(c);
        }
    }
    for &c in board.cells() {
        if !grouped.contains(&c) {
            polygon(&mut out, c, "#ffffff", "");
        }
    }
    for &c in pokes {
        polygon(&mut out, c, "url(#hatch)", r#" stroke-dasharray="3,2""#);
    }
    for g in groups {
        if let Some(z) = g.center {
            let (x, y) = geometry(kind, z).1;
            let _ = writeln!(
                out,
                r##"<circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="#000"/>"##,
                UNIT / 8.0
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Fragments colored by palette index in fragment order, centers dotted.
pub fn tiling_svg(t: &FragmentTiling) -> String {
    let groups: Vec<Group> = t
        .fragments()
        .iter()
        .map(|f| Group {
            cells: f.cells().collect(),
            center: Some(f.center()),
        })
        .collect();
    svg(t.board().kind(), t.board(), &groups, &[])
}

/// On-board parts of each maximal fragment colored by the first center
/// reaching them; cells outside the board that fragments reach are hatched.
pub fn cover_svg(cover: &MaxFragmentCover) -> String {
    let b = cover.board();
    let mut taken = BTreeSet::new();
    let mut pokes = BTreeSet::new();
    let mut groups = Vec::new();
    for &z in cover.centers() {
        let mut cells = Vec::new();
        for v in closed_neighborhood(b.kind(), z) {
            if !b.contains(v) {
                pokes.insert(v);
            } else if taken.insert(v) {
                cells.push(v);
            }
        }
        groups.push(Group {
            cells,
            center: Some(z),
        });
    }
    let pokes: Vec<Cell> = pokes.into_iter().collect();
    svg(b.kind(), b, &groups, &pokes)
}

/// Marked cells dotted on a plain board.
pub fn marked_svg(b: &Board, marked: &[Cell]) -> String {
    let groups: Vec<Group> = marked
        .iter()
        .map(|&c| Group {
            cells: Vec::new(),
            center: Some(c),
        })
        .collect();
    svg(b.kind(), b, &groups, &[])
}
