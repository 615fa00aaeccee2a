use proptest::prelude::*;

use satdom::covers::{trim_to_tiling, x_exact};
use satdom::domgraph::{
    adjacency_graph, gamma_exact, gamma_rect_dp, gamma_rect_dp_witness, star_partition,
};
use satdom::grid::{
    are_adjacent, make_hexagon, make_rectangle, make_triangle, neighbors, parse_board, Board,
    BoardFormat, Cell, GridKind,
};
use satdom::oracle::brute_min_tiling;
use satdom::tilings::{d_value, saturated_to_tiling, tiling_to_saturated};
use satdom::{SolverOptions, Witness};

fn kind() -> impl Strategy<Value = GridKind> {
    prop::sample::select(GridKind::ALL.to_vec())
}

fn cell() -> impl Strategy<Value = Cell> {
    (-1000i32..1000, -1000i32..1000).prop_map(|(a, b)| Cell(a, b))
}

/// A board of up to `max` cells picked inside a small window.
fn board(max: usize) -> impl Strategy<Value = Board> {
    (
        kind(),
        prop::collection::btree_set((0i32..4, 0i32..6), 1..=max),
    )
        .prop_map(|(k, cells)| Board::new(k, cells.into_iter().map(|(a, b)| Cell(a, b))).unwrap())
}

/// A rectangle, triangle or hexagon with some cells carved away, keeping
/// only carvings that leave the board regular without isolated cells.
fn regular_board() -> impl Strategy<Value = Board> {
    (
        kind(),
        2usize..5,
        2usize..6,
        prop::collection::vec(any::<prop::sample::Index>(), 0..8),
    )
        .prop_map(|(k, a, b, cuts)| {
            let mut board = match k {
                GridKind::Square => make_rectangle(a, b).unwrap(),
                GridKind::Triangular => make_triangle(a + 1).unwrap(),
                GridKind::Hexagonal => make_hexagon(a / 2).unwrap(),
            };
            for cut in cuts {
                let c = board.cells()[cut.index(board.len())];
                if let Some(next) = board.without(c) {
                    if next.is_regular() && !next.has_isolated() {
                        board = next;
                    }
                }
            }
            board
        })
}

fn no_isolated(max: usize) -> impl Strategy<Value = Board> {
    board(max).prop_filter("no isolated cells", |b| !b.has_isolated())
}

proptest! {
    #[test]
    fn adjacency_is_symmetric(k in kind(), c in cell()) {
        let n = neighbors(k, c);
        prop_assert_eq!(n.len(), k.degree());
        for &v in n.iter() {
            prop_assert!(neighbors(k, v).contains(&c));
            prop_assert!(are_adjacent(k, v, c));
        }
        prop_assert!(!are_adjacent(k, c, c));
    }

    #[test]
    fn cell_lists_round_trip(b in board(20)) {
        let text = b.to_cell_list();
        let back = parse_board(&text, BoardFormat::CellList).unwrap();
        prop_assert_eq!(&back, &b);
        prop_assert_eq!(back.to_cell_list(), text);
    }

    #[test]
    fn ascii_round_trips(cells in prop::collection::btree_set((0i32..5, 0i32..7), 1..25)) {
        let b = Board::new(GridKind::Square, cells.into_iter().map(|(a, c)| Cell(a, c))).unwrap();
        let art = b.to_ascii().unwrap();
        prop_assert_eq!(parse_board(&art, BoardFormat::Ascii).unwrap(), b);
    }

    #[test]
    fn thread_count_keeps_the_value(b in board(18), threads in 2usize..5) {
        let g = adjacency_graph(&b);
        let one = gamma_exact(&g, SolverOptions::default()).unwrap();
        let many = gamma_exact(&g, SolverOptions { threads, ..Default::default() }).unwrap();
        prop_assert_eq!(one.value, many.value);
        prop_assert_eq!(many.witness.len(), many.value);
    }

    #[test]
    fn star_partitions_are_minimal_tilings(b in no_isolated(14)) {
        let g = adjacency_graph(&b);
        let d = gamma_exact(&g, SolverOptions::default()).unwrap();
        let p = star_partition(&g, &d.witness).unwrap();
        prop_assert_eq!(p.len(), d.value);
        let t = p.to_tiling(&g, &b).unwrap();
        prop_assert_eq!(t.len(), brute_min_tiling(&b).unwrap());
        let c = tiling_to_saturated(&t);
        prop_assert!(c.is_saturated());
        prop_assert_eq!(c.len(), b.len() - t.len());
        prop_assert_eq!(saturated_to_tiling(&c).unwrap().partition(), t.partition());
        prop_assert!(Witness::from(&c).validate().is_ok());
    }

    #[test]
    fn removing_a_cell_never_raises_x(b in board(16), pick in any::<prop::sample::Index>()) {
        let c = b.cells()[pick.index(b.len())];
        if let Some(smaller) = b.without(c) {
            let opts = SolverOptions::default();
            prop_assert!(x_exact(&smaller, opts).unwrap().value <= x_exact(&b, opts).unwrap().value);
        }
    }

    #[test]
    fn trimming_never_adds_fragments(b in regular_board()) {
        prop_assert!(b.is_regular());
        let opts = SolverOptions::default();
        let x = x_exact(&b, opts).unwrap();
        let t = trim_to_tiling(&b, &x.witness).unwrap();
        prop_assert!(t.len() <= x.value);
        prop_assert_eq!(t.len(), b.len() - d_value(&b, opts).unwrap());
    }

    #[test]
    fn dp_witnesses_dominate(m in 1usize..10, n in 1usize..16) {
        let r = gamma_rect_dp_witness(m, n).unwrap();
        prop_assert_eq!(r.value, gamma_rect_dp(m, n).unwrap());
        let b = make_rectangle(m, n).unwrap();
        prop_assert!(Witness::dominating_set(&b, &r.witness).validate().is_ok());
    }
}
