//! Adjacency graphs of boards and exact domination numbers.
//!
//! [`gamma_exact`] handles arbitrary graphs by branch and bound;
//! [`gamma_rect_dp`] computes the domination number of the `m × n` grid
//! graph with a cell-by-cell profile sweep.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{make_rectangle, Board, Cell};
use crate::search::{self, CoverProblem, SearchConfig};
use crate::tilings::{Fragment, FragmentTiling};

/// Default node budget for the branch-and-bound solvers.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest strip height accepted by the profile DP.
pub const DP_MAX_ROWS: usize = 14;

/// Largest `3^rows × columns` checkpoint size for DP witness reconstruction.
const DP_WITNESS_CAP: u64 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    /// Worker threads. `1` gives a bit-identical witness on every run.
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: DEFAULT_BUDGET,
            threads: 1,
        }
    }
}

impl SolverOptions {
    pub(crate) fn search(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            threads: self.threads,
        }
    }
}

/// Outcome of an exact solve.
#[derive(Debug, Clone)]
pub struct SolveReport<W> {
    pub value: usize,
    pub witness: W,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    vertices: Vec<Cell>,
    adjacency: Vec<Vec<usize>>,
}

impl AdjacencyGraph {
    /// A graph given by neighbor lists. Vertices get placeholder cells
    /// `(0, i)`.
    pub fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let n = adjacency.len();
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        for (v, list) in adjacency.iter().enumerate() {
            for &u in list {
                if u >= n {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {v} lists missing vertex {u}"
                    )));
                }
                if u == v {
                    return Err(Error::InvalidGraph(format!("self-loop at {v}")));
                }
                if adjacency[u].binary_search(&v).is_err() {
                    return Err(Error::InvalidGraph(format!(
                        "edge {v}-{u} is one-directional"
                    )));
                }
            }
        }
        let vertices = (0..n as i32).map(|i| Cell(0, i)).collect();
        Ok(AdjacencyGraph {
            vertices,
            adjacency,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} out of range")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Self::from_adjacency(adj)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Cell] {
        &self.vertices
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `v` together with its neighbors, ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adjacency[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }
}

/// The graph on a board's cells joining cells that are adjacent on the board.
pub fn adjacency_graph(b: &Board) -> AdjacencyGraph {
    let adjacency = b
        .cells()
        .iter()
        .map(|&c| {
            b.board_neighbors(c)
                .into_iter()
                .filter_map(|v| b.index_of(v))
                .collect()
        })
        .collect();
    AdjacencyGraph {
        vertices: b.cells().to_vec(),
        adjacency,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatingSet {
    members: Vec<usize>,
}

impl DominatingSet {
    pub fn new(g: &AdjacencyGraph, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&v| v >= g.len()) {
            return Err(Error::InvalidGraph(format!("vertex {bad} out of range")));
        }
        let mut dominated = vec![false; g.len()];
        for &v in &members {
            dominated[v] = true;
            for &u in g.neighbors(v) {
                dominated[u] = true;
            }
        }
        if let Some(v) = dominated.iter().position(|&d| !d) {
            return Err(Error::NotDominating(v));
        }
        Ok(DominatingSet { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn cells(&self, g: &AdjacencyGraph) -> Vec<Cell> {
        self.members.iter().map(|&v| g.vertices[v]).collect()
    }
}

/// Minimum dominating set by branch and bound.
///
/// The search branches on the least undominated vertex and tries the
/// members of its closed neighborhood by decreasing residual coverage. The
/// incumbent starts from a greedy max-coverage pass. With one thread the
/// witness is reproducible.
pub fn gamma_exact(
    g: &AdjacencyGraph,
    options: SolverOptions,
) -> Result<SolveReport<DominatingSet>> {
    if g.is_empty() {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    let start = Instant::now();
    let sets: Vec<Vec<usize>> = (0..g.len()).map(|v| g.closed_neighborhood(v)).collect();
    let problem = CoverProblem::new(g.len(), &sets);
    let cover = search::solve(&problem, options.search()).map_err(|e| Error::Unsolved {
        budget: options.budget,
        lower: e.lower,
        upper: e.upper,
    })?;
    let witness = DominatingSet::new(g, cover.chosen)?;
    Ok(SolveReport {
        value: witness.len(),
        witness,
        nodes_explored: cover.nodes,
        elapsed: start.elapsed(),
    })
}

// Profile trits. Row 0 is the least significant trit.
const DOM: u32 = 0;
const NEED: u32 = 1;
const IN: u32 = 2;

const UNREACHED: u32 = u32::MAX;

struct Sweep {
    rows: usize,
    cols: usize,
    pow3: Vec<u32>,
}

impl Sweep {
    fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyBoard);
        }
        let (rows, cols) = if m <= n { (m, n) } else { (n, m) };
        if rows > DP_MAX_ROWS {
            return Err(Error::Capacity(format!(
                "profile DP handles grids with a side of at most {DP_MAX_ROWS}, got {m}x{n}"
            )));
        }
        let pow3 = (0..=rows).map(|i| 3u32.pow(i as u32)).collect();
        Ok(Sweep { rows, cols, pow3 })
    }

    fn states(&self) -> usize {
        self.pow3[self.rows] as usize
    }

    /// Runs the sweep from the empty profile, handing each column-start
    /// cost table to `checkpoint`.
    fn run(&self, mut checkpoint: impl FnMut(&[u32])) -> Vec<u32> {
        let states = self.states();
        let mut cur = vec![UNREACHED; states];
        let mut next = vec![UNREACHED; states];
        // Before the first column every slot behaves as an already dominated
        // phantom cell.
        cur[0] = 0;
        for _ in 0..self.cols {
            checkpoint(&cur);
            self.column(&mut cur, &mut next, None);
        }
        cur
    }

    /// Advances `cur` by one column. When `back` is given, one nibble per
    /// (step, state) is pushed: bit 0 = cell chosen, bits 1-2 = displaced
    /// trit, bit 3 = the cell above switched from NEED to DOM.
    fn column(&self, cur: &mut Vec<u32>, next: &mut Vec<u32>, mut back: Option<&mut Vec<Vec<u8>>>) {
        let states = self.states();
        for i in 0..self.rows {
            next.fill(UNREACHED);
            let mut nib = back.as_ref().map(|_| vec![0u8; states.div_ceil(2)]);
            let p = self.pow3[i];
            let pu = if i > 0 { self.pow3[i - 1] } else { 0 };
            for (s, &cost) in cur.iter().enumerate() {
                if cost == UNREACHED {
                    continue;
                }
                let s = s as u32;
                let left = (s / p) % 3;
                let up = if i > 0 { (s / pu) % 3 } else { DOM };
                let base = s - left * p;
                // Leave the cell out: the cell to its left leaves the
                // profile and must already be dominated.
                if left != NEED {
                    let t = if left == IN || up == IN { DOM } else { NEED };
                    let s2 = (base + t * p) as usize;
                    if cost < next[s2] {
                        next[s2] = cost;
                        if let Some(nib) = nib.as_mut() {
                            put_nibble(nib, s2, (left << 1) as u8);
                        }
                    }
                }
                // Put the cell in the set.
                let mut s2 = base + IN * p;
                let up_changed = i > 0 && up == NEED;
                if up_changed {
                    s2 -= (NEED - DOM) * pu;
                }
                let s2 = s2 as usize;
                if cost + 1 < next[s2] {
                    next[s2] = cost + 1;
                    if let Some(nib) = nib.as_mut() {
                        put_nibble(nib, s2, 1 | (left << 1) as u8 | (u8::from(up_changed) << 3));
                    }
                }
            }
            if let (Some(back), Some(nib)) = (back.as_mut(), nib) {
                back.push(nib);
            }
            std::mem::swap(cur, next);
        }
    }

    /// Final profiles with no cell still awaiting domination.
    fn accepting(&self, s: usize) -> bool {
        let mut s = s as u32;
        for _ in 0..self.rows {
            if s % 3 == NEED {
                return false;
            }
            s /= 3;
        }
        true
    }

    fn best_final(&self, costs: &[u32]) -> (usize, u32) {
        costs
            .iter()
            .enumerate()
            .filter(|&(s, &c)| c != UNREACHED && self.accepting(s))
            .map(|(s, &c)| (s, c))
            .min_by_key(|&(s, c)| (c, s))
            .expect("choosing every cell is always feasible")
    }
}

fn put_nibble(buf: &mut [u8], idx: usize, v: u8) {
    let byte = &mut buf[idx / 2];
    if idx.is_multiple_of(2) {
        *byte = (*byte & 0xF0) | v;
    } else {
        *byte = (*byte & 0x0F) | (v << 4);
    }
}

fn get_nibble(buf: &[u8], idx: usize) -> u8 {
    let byte = buf[idx / 2];
    if idx.is_multiple_of(2) {
        byte & 0x0F
    } else {
        byte >> 4
    }
}

/// Domination number of the `m × n` grid graph.
///
/// The shorter side becomes the profile height, which must not exceed
/// [`DP_MAX_ROWS`]. Each profile trit records whether the frontier cell of
/// its row is in the set, dominated, or still waiting for a neighbor further
/// along the sweep.
pub fn gamma_rect_dp(m: usize, n: usize) -> Result<usize> {
    let sweep = Sweep::new(m, n)?;
    let costs = sweep.run(|_| {});
    Ok(sweep.best_final(&costs).1 as usize)
}

/// Like [`gamma_rect_dp`] but also reconstructs a minimum dominating set of
/// `adjacency_graph(make_rectangle(m, n))`.
///
/// The forward sweep keeps two bytes per profile state at every column
/// boundary; the trace-back then re-sweeps one column at a time with
/// back-pointers, working from the last column to the first.
pub fn gamma_rect_dp_witness(m: usize, n: usize) -> Result<SolveReport<DominatingSet>> {
    let start = Instant::now();
    let sweep = Sweep::new(m, n)?;
    let states = sweep.states();
    let work = 2 * states as u64 * sweep.cols as u64;
    if work > DP_WITNESS_CAP || m * n >= u16::MAX as usize {
        return Err(Error::Capacity(format!(
            "witness reconstruction for {m}x{n} needs {work} checkpoint bytes (cap {DP_WITNESS_CAP})"
        )));
    }
    let to_u16 = |c: u32| if c == UNREACHED { u16::MAX } else { c as u16 };
    let mut checkpoints: Vec<Vec<u16>> = Vec::with_capacity(sweep.cols);
    let costs = sweep.run(|cur| checkpoints.push(cur.iter().map(|&c| to_u16(c)).collect()));
    let (mut s, value) = sweep.best_final(&costs);

    let transposed = m > n;
    let mut chosen = Vec::new();
    let mut cur = vec![UNREACHED; states];
    let mut next = vec![UNREACHED; states];
    let mut back = Vec::with_capacity(sweep.rows);
    for j in (0..sweep.cols).rev() {
        for (c, &b) in cur.iter_mut().zip(&checkpoints[j]) {
            *c = if b == u16::MAX { UNREACHED } else { b as u32 };
        }
        back.clear();
        sweep.column(&mut cur, &mut next, Some(&mut back));
        for (i, nib) in back.iter().enumerate().rev() {
            let info = get_nibble(nib, s) as u32;
            let p = sweep.pow3[i];
            let trit = (s as u32 / p) % 3;
            let mut prev = s as u32 - trit * p + ((info >> 1) & 3) * p;
            if info & 8 != 0 {
                prev += (NEED - DOM) * sweep.pow3[i - 1];
            }
            if info & 1 != 0 {
                let (r, c) = if transposed { (j, i) } else { (i, j) };
                chosen.push(r * n + c);
            }
            s = prev as usize;
        }
    }
    debug_assert_eq!(s, 0);
    let g = adjacency_graph(&make_rectangle(m, n)?);
    let witness = DominatingSet::new(&g, chosen)?;
    debug_assert_eq!(witness.len(), value as usize);
    Ok(SolveReport {
        value: witness.len(),
        witness,
        nodes_explored: (2 * sweep.rows * sweep.cols) as u64,
        elapsed: start.elapsed(),
    })
}

/// A partition of a graph's vertices into stars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPartition {
    /// `(center, leaves)` pairs ordered by center; leaves ascending.
    pub stars: Vec<(usize, Vec<usize>)>,
}

impl StarPartition {
    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    /// The tiling of `board` these stars describe. `g` must be
    /// `adjacency_graph(board)`.
    pub fn to_tiling(&self, g: &AdjacencyGraph, board: &Board) -> Result<FragmentTiling> {
        let fragments = self
            .stars
            .iter()
            .map(|(c, leaves)| {
                Fragment::new(
                    board.kind(),
                    g.vertices[*c],
                    leaves.iter().map(|&v| g.vertices[v]),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        FragmentTiling::new(board.clone(), fragments)
    }
}

/// Working state shared by the star-partition and trimming procedures:
/// stars keyed by center plus the owning center of every vertex.
pub(crate) struct Stars<'g> {
    g: &'g AdjacencyGraph,
    pub(crate) stars: BTreeMap<usize, Vec<usize>>,
    owner: Vec<usize>,
}

impl<'g> Stars<'g> {
    pub(crate) fn new(g: &'g AdjacencyGraph, stars: BTreeMap<usize, Vec<usize>>) -> Self {
        let mut owner = vec![usize::MAX; g.len()];
        for (&c, leaves) in &stars {
            owner[c] = c;
            for &l in leaves {
                owner[l] = c;
            }
        }
        debug_assert!(owner.iter().all(|&o| o != usize::MAX));
        Stars { g, stars, owner }
    }

    /// Eliminates single-vertex stars without increasing the star count.
    ///
    /// A singleton `s` looks at its least neighbor `t`. If `t` is a center,
    /// `s` joins that star. If `t` is a leaf of a star with other leaves,
    /// `t` moves over to `s`. If `t` is the only leaf of `c`, the three
    /// vertices become one star centered at `t`.
    pub(crate) fn absorb_singletons(&mut self) -> Result<()> {
        while let Some(s) = self
            .stars
            .iter()
            .find(|(_, l)| l.is_empty())
            .map(|(&c, _)| c)
        {
            let &t = self
                .g
                .neighbors(s)
                .first()
                .ok_or(Error::IsolatedCell(self.g.vertices[s]))?;
            let c = self.owner[t];
            self.stars.remove(&s);
            if c == t {
                let leaves = self.stars.get_mut(&t).expect("owner is a center");
                insert_sorted(leaves, s);
                self.owner[s] = t;
            } else if self.stars[&c].len() >= 2 {
                self.stars.get_mut(&c).unwrap().retain(|&x| x != t);
                self.stars.insert(s, vec![t]);
                self.owner[t] = s;
            } else {
                self.stars.remove(&c);
                let mut leaves = vec![c, s];
                leaves.sort_unstable();
                self.stars.insert(t, leaves);
                self.owner[t] = t;
                self.owner[c] = t;
                self.owner[s] = t;
            }
        }
        Ok(())
    }

    pub(crate) fn into_partition(self) -> StarPartition {
        StarPartition {
            stars: self.stars.into_iter().collect(),
        }
    }
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

/// Turns a dominating set into a star partition with at most `|d|` stars.
///
/// Every non-member joins its least adjacent member; members left without
/// leaves are then absorbed into neighboring stars.
pub fn star_partition(g: &AdjacencyGraph, d: &DominatingSet) -> Result<StarPartition> {
    let d = DominatingSet::new(g, d.members().iter().copied())?;
    let mut is_center = vec![false; g.len()];
    for &c in d.members() {
        is_center[c] = true;
    }
    let mut stars: BTreeMap<usize, Vec<usize>> =
        d.members().iter().map(|&c| (c, Vec::new())).collect();
    for v in 0..g.len() {
        if !is_center[v] {
            let c = *g
                .neighbors(v)
                .iter()
                .find(|&&u| is_center[u])
                .expect("d dominates g");
            stars.get_mut(&c).unwrap().push(v);
        }
    }
    let mut work = Stars::new(g, stars);
    work.absorb_singletons()?;
    Ok(work.into_partition())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_square, make_triangle};

    fn path(n: usize) -> AdjacencyGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        AdjacencyGraph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> AdjacencyGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        AdjacencyGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_adjacency_graphs() {
        let g = adjacency_graph(&make_rectangle(2, 2).unwrap());
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.neighbors(v).len() == 2));
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.neighbors(3), &[1, 2]);
        let g = adjacency_graph(&make_rectangle(1, 3).unwrap());
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        let g = adjacency_graph(&make_triangle(2).unwrap());
        // (0,0) (1,0) (1,1) (1,2): the down cell (1,1) is the hub of K_{1,3}.
        assert_eq!(g.neighbors(2), &[0, 1, 3]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(AdjacencyGraph::from_adjacency(vec![vec![0]]).is_err());
        assert!(AdjacencyGraph::from_adjacency(vec![vec![1], vec![]]).is_err());
        assert!(gamma_exact(
            &AdjacencyGraph::from_adjacency(vec![]).unwrap(),
            SolverOptions::default()
        )
        .is_err());
    }

    #[test]
    fn gamma_of_small_graphs() {
        let opts = SolverOptions::default();
        assert_eq!(gamma_exact(&path(3), opts).unwrap().value, 1);
        assert_eq!(gamma_exact(&path(3), opts).unwrap().witness.members(), &[1]);
        assert_eq!(gamma_exact(&cycle(4), opts).unwrap().value, 2);
        assert_eq!(gamma_exact(&path(10), opts).unwrap().value, 4);
    }

    #[test]
    fn gamma_of_squares() {
        let opts = SolverOptions::default();
        let g5 = adjacency_graph(&make_square(5).unwrap());
        assert_eq!(gamma_exact(&g5, opts).unwrap().value, 7);
        let g7 = adjacency_graph(&make_square(7).unwrap());
        assert_eq!(gamma_exact(&g7, opts).unwrap().value, 12);
    }

    #[test]
    fn single_thread_witness_is_reproducible() {
        let g = adjacency_graph(&make_square(6).unwrap());
        let a = gamma_exact(&g, SolverOptions::default()).unwrap();
        let b = gamma_exact(&g, SolverOptions::default()).unwrap();
        assert_eq!(a.witness, b.witness);
        let par = gamma_exact(
            &g,
            SolverOptions {
                threads: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(par.value, a.value);
    }

    #[test]
    fn budget_exhaustion_is_explicit() {
        let g = adjacency_graph(&make_square(8).unwrap());
        match gamma_exact(
            &g,
            SolverOptions {
                budget: 10,
                threads: 1,
            },
        ) {
            Err(Error::Unsolved {
                lower,
                upper,
                budget: 10,
            }) => {
                assert!(lower <= 16 && upper >= 16, "{lower}..{upper}");
            }
            other => panic!("expected an unsolved outcome, got {other:?}"),
        }
    }

    #[test]
    fn dp_matches_known_values() {
        for n in 1..=30 {
            assert_eq!(gamma_rect_dp(1, n).unwrap(), n.div_ceil(3));
        }
        assert_eq!(gamma_rect_dp(7, 7).unwrap(), 12);
        assert_eq!(gamma_rect_dp(4, 4).unwrap(), 4);
        assert_eq!(gamma_rect_dp(9, 2).unwrap(), gamma_rect_dp(2, 9).unwrap());
        assert!(matches!(gamma_rect_dp(15, 15), Err(Error::Capacity(_))));
        assert!(gamma_rect_dp(15, 3).is_ok());
    }

    #[test]
    fn dp_witness_dominates() {
        for (m, n) in [(1, 1), (1, 5), (3, 4), (5, 2), (6, 6), (7, 7), (4, 9)] {
            let r = gamma_rect_dp_witness(m, n).unwrap();
            assert_eq!(r.value, gamma_rect_dp(m, n).unwrap(), "{m}x{n}");
        }
        assert!(matches!(
            gamma_rect_dp_witness(14, 80),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn star_partitions() {
        let c4 = cycle(4);
        let d = DominatingSet::new(&c4, [0, 2]).unwrap();
        let p = star_partition(&c4, &d).unwrap();
        // Vertex 2 starts alone and takes leaf 1 from the star at 0.
        assert_eq!(p.stars, vec![(0, vec![3]), (2, vec![1])]);

        let b = make_rectangle(2, 2).unwrap();
        let g = adjacency_graph(&b);
        // Opposite corners (0,0) and (1,1).
        let d = DominatingSet::new(&g, [0, 3]).unwrap();
        let p = star_partition(&g, &d).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.stars.iter().all(|(_, l)| l.len() == 1));

        let p3 = path(3);
        let d = DominatingSet::new(&p3, [1]).unwrap();
        assert_eq!(
            star_partition(&p3, &d).unwrap().stars,
            vec![(1, vec![0, 2])]
        );

        assert_eq!(DominatingSet::new(&p3, [0]), Err(Error::NotDominating(2)));
    }

    #[test]
    fn star_partition_of_three_by_three() {
        let b = make_square(3).unwrap();
        let g = adjacency_graph(&b);
        let r = gamma_exact(&g, SolverOptions::default()).unwrap();
        assert_eq!(r.value, 3);
        let t = star_partition(&g, &r.witness)
            .unwrap()
            .to_tiling(&g, &b)
            .unwrap();
        assert_eq!(t.fragments().len(), 3);
    }

    #[test]
    fn star_partition_resolves_singletons() {
        // Path 0-1-2-3 with every vertex a center.
        let p4 = path(4);
        let d = DominatingSet::new(&p4, 0..4).unwrap();
        let p = star_partition(&p4, &d).unwrap();
        let mut seen: Vec<usize> = p
            .stars
            .iter()
            .flat_map(|(c, l)| std::iter::once(*c).chain(l.iter().copied()))
            .collect();
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1, 2, 3]);
        assert!(p.len() <= 4);
        assert!(p.stars.iter().all(|(_, l)| !l.is_empty()));
    }
}
