//! Exact minimum set cover by depth-first branch and bound.
//!
//! Both domination (sets are closed neighborhoods of vertices) and
//! maximal-fragment covering (sets are closed neighborhoods of ambient
//! centers, clipped to the board) reduce to this problem.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

/// Nodes a worker explores between checks of the shared budget.
const BUDGET_STRIDE: u64 = 1024;

pub(crate) struct CoverProblem {
    universe: usize,
    words: usize,
    /// Set bitmasks, `words` u64 each.
    sets: Vec<u64>,
    /// For each element, the sets that contain it, ascending.
    containing: Vec<Vec<usize>>,
}

impl CoverProblem {
    /// `sets[s]` lists the elements of set `s`; every element must be
    /// covered by at least one set.
    pub(crate) fn new(universe: usize, sets: &[Vec<usize>]) -> Self {
        let words = universe.div_ceil(64).max(1);
        let mut bits = vec![0u64; sets.len() * words];
        let mut containing = vec![Vec::new(); universe];
        for (s, elems) in sets.iter().enumerate() {
            for &e in elems {
                bits[s * words + e / 64] |= 1 << (e % 64);
                if containing[e].last() != Some(&s) {
                    containing[e].push(s);
                }
            }
        }
        debug_assert!(containing.iter().all(|c| !c.is_empty()));
        CoverProblem {
            universe,
            words,
            sets: bits,
            containing,
        }
    }

    fn set(&self, s: usize) -> &[u64] {
        &self.sets[s * self.words..(s + 1) * self.words]
    }

    fn num_sets(&self) -> usize {
        self.sets.len() / self.words
    }

    fn full(&self) -> Vec<u64> {
        let mut u = vec![!0u64; self.words];
        let extra = self.words * 64 - self.universe;
        if extra > 0 {
            u[self.words - 1] >>= extra;
        }
        if self.universe == 0 {
            u.fill(0);
        }
        u
    }

    fn coverage(&self, s: usize, uncovered: &[u64]) -> u32 {
        self.set(s)
            .iter()
            .zip(uncovered)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// Greedy max-coverage cover; ties go to the lowest set index.
    pub(crate) fn greedy(&self) -> Vec<usize> {
        let mut uncovered = self.full();
        let mut chosen = Vec::new();
        while uncovered.iter().any(|&w| w != 0) {
            let best = (0..self.num_sets())
                .max_by_key(|&s| (self.coverage(s, &uncovered), std::cmp::Reverse(s)))
                .expect("nonempty family");
            for (u, m) in uncovered.iter_mut().zip(self.set(best)) {
                *u &= !m;
            }
            chosen.push(best);
        }
        chosen.sort_unstable();
        chosen
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchConfig {
    pub budget: u64,
    pub threads: usize,
}

#[derive(Debug)]
pub(crate) struct Cover {
    /// Chosen set indices, ascending.
    pub chosen: Vec<usize>,
    pub nodes: u64,
}

#[derive(Debug)]
pub(crate) struct Exhausted {
    pub lower: usize,
    pub upper: usize,
}

struct Shared<'a> {
    problem: &'a CoverProblem,
    best: AtomicUsize,
    nodes: AtomicU64,
    abort: AtomicBool,
    budget: u64,
}

struct Worker<'a, 'b> {
    shared: &'b Shared<'a>,
    stack: Vec<u64>,
    cov: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    chosen: Vec<usize>,
    found: Option<Vec<usize>>,
    local_nodes: u64,
    pending: u64,
}

impl<'a, 'b> Worker<'a, 'b> {
    fn new(shared: &'b Shared<'a>) -> Self {
        let p = shared.problem;
        let depth = p.universe + 2;
        Worker {
            shared,
            stack: vec![0; depth * p.words],
            cov: vec![0; p.num_sets()],
            stamp: vec![0; p.num_sets()],
            epoch: 0,
            chosen: Vec::new(),
            found: None,
            local_nodes: 0,
            pending: 0,
        }
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        self.pending += 1;
        if self.pending >= BUDGET_STRIDE {
            let total = self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
            self.pending = 0;
            if total > self.shared.budget {
                self.shared.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.abort.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        let total = self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if total > self.shared.budget {
            self.shared.abort.store(true, Ordering::Relaxed);
        }
    }

    /// Lower bound on the sets still needed to cover the uncovered elements
    /// at `level`. Also refreshes `self.cov`.
    fn lower_bound(&mut self, level: usize) -> usize {
        let p = self.shared.problem;
        let w = p.words;
        let (unc, _) = self.stack[level * w..].split_at(w);
        for s in 0..p.num_sets() {
            self.cov[s] = p.coverage(s, unc);
        }
        // Fractional bound: element e carries weight 1 / (largest residual
        // coverage of a set containing e); each chosen set absorbs at most 1.
        let mut weight = 0.0f64;
        // Packing bound: elements with pairwise disjoint candidate lists each
        // need their own set.
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let mut packing = 0usize;
        for (wi, &word) in unc.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let e = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let sets = &p.containing[e];
                let maxcov = sets.iter().map(|&s| self.cov[s]).max().unwrap_or(1).max(1);
                weight += 1.0 / maxcov as f64;
                if sets.iter().all(|&s| self.stamp[s] != self.epoch) {
                    packing += 1;
                    for &s in sets {
                        self.stamp[s] = self.epoch;
                    }
                }
            }
        }
        let fractional = (weight - 1e-9).ceil().max(0.0) as usize;
        packing.max(fractional)
    }

    fn first_uncovered(&self, level: usize) -> Option<usize> {
        let w = self.shared.problem.words;
        self.stack[level * w..(level + 1) * w]
            .iter()
            .enumerate()
            .find(|(_, &x)| x != 0)
            .map(|(i, &x)| i * 64 + x.trailing_zeros() as usize)
    }

    /// Branch candidates at `level`: sets containing the least uncovered
    /// element, by decreasing residual coverage then ascending index.
    /// Requires `self.cov` to be fresh for `level`.
    fn candidates(&self, level: usize) -> Option<Vec<usize>> {
        let e = self.first_uncovered(level)?;
        let mut c = self.shared.problem.containing[e].clone();
        c.sort_by_key(|&s| (std::cmp::Reverse(self.cov[s]), s));
        Some(c)
    }

    fn apply(&mut self, level: usize, s: usize) {
        let p = self.shared.problem;
        let w = p.words;
        let (lo, hi) = self.stack.split_at_mut((level + 1) * w);
        let src = &lo[level * w..];
        for ((dst, &u), &m) in hi[..w].iter_mut().zip(src).zip(p.set(s)) {
            *dst = u & !m;
        }
    }

    fn record(&mut self) {
        let size = self.chosen.len();
        let mut cur = self.shared.best.load(Ordering::Relaxed);
        while size < cur {
            match self
                .shared
                .best
                .compare_exchange(cur, size, Ordering::Relaxed, Ordering::Relaxed)
            {
                Ok(_) => break,
                Err(actual) => cur = actual,
            }
        }
        let mut sorted = self.chosen.clone();
        sorted.sort_unstable();
        let better = match &self.found {
            None => true,
            Some(prev) => (sorted.len(), &sorted) < (prev.len(), prev),
        };
        if better {
            self.found = Some(sorted);
        }
    }

    fn dfs(&mut self, level: usize) {
        if !self.tick() {
            return;
        }
        if self.first_uncovered(level).is_none() {
            if self.chosen.len() < self.shared.best.load(Ordering::Relaxed) {
                self.record();
            }
            return;
        }
        let lb = self.lower_bound(level);
        if self.chosen.len() + lb >= self.shared.best.load(Ordering::Relaxed) {
            return;
        }
        let cands = self.candidates(level).expect("uncovered element exists");
        for s in cands {
            // The incumbent may have improved while exploring siblings.
            if self.chosen.len() + lb >= self.shared.best.load(Ordering::Relaxed) {
                break;
            }
            self.apply(level, s);
            self.chosen.push(s);
            self.dfs(level + 1);
            self.chosen.pop();
            if self.shared.abort.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

/// Finds a minimum cover. With `threads <= 1` the search order, and hence
/// the reported cover, is fully deterministic.
pub(crate) fn solve(problem: &CoverProblem, config: SearchConfig) -> Result<Cover, Exhausted> {
    let greedy = problem.greedy();
    let shared = Shared {
        problem,
        best: AtomicUsize::new(greedy.len()),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        budget: config.budget,
    };

    let mut root = Worker::new(&shared);
    root.stack[..problem.words].copy_from_slice(&problem.full());
    let root_lb = root.lower_bound(0);
    root.tick();
    root.flush();
    if root_lb >= greedy.len() || root.first_uncovered(0).is_none() {
        return Ok(Cover {
            chosen: greedy,
            nodes: root.local_nodes,
        });
    }
    let root_cands = root.candidates(0).expect("uncovered element exists");
    let root_stack = root.stack[..problem.words].to_vec();

    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Vec<usize>>>> = Mutex::new(Vec::new());
    let run = |worker: &mut Worker| {
        worker.stack[..problem.words].copy_from_slice(&root_stack);
        loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            if i >= root_cands.len() || shared.abort.load(Ordering::Relaxed) {
                break;
            }
            if root_lb >= shared.best.load(Ordering::Relaxed) {
                break;
            }
            let s = root_cands[i];
            worker.apply(0, s);
            worker.chosen.push(s);
            worker.dfs(1);
            worker.chosen.pop();
        }
        worker.flush();
        results.lock().unwrap().push(worker.found.take());
    };

    let threads = config.threads.max(1);
    if threads == 1 {
        let mut w = Worker::new(&shared);
        run(&mut w);
    } else {
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| {
                    let mut w = Worker::new(&shared);
                    run(&mut w);
                });
            }
        });
    }

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let best_found = results
        .into_inner()
        .unwrap()
        .into_iter()
        .flatten()
        .min_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let best = best_found.unwrap_or(greedy);
    if shared.abort.load(Ordering::Relaxed) {
        return Err(Exhausted {
            lower: root_lb,
            upper: best.len(),
        });
    }
    Ok(Cover {
        chosen: best,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SearchConfig {
        SearchConfig {
            budget: 1 << 40,
            threads: 1,
        }
    }

    #[test]
    fn trivial_cover() {
        let p = CoverProblem::new(3, &[vec![0, 1, 2]]);
        assert_eq!(solve(&p, cfg()).unwrap().chosen, vec![0]);
    }

    #[test]
    fn greedy_is_not_optimal_here() {
        // Classic trap: greedy takes the big middle set first.
        let sets = vec![
            vec![0, 1, 2, 3, 4, 5, 6],
            vec![0, 1, 2, 3, 7],
            vec![4, 5, 6, 8],
        ];
        let p = CoverProblem::new(9, &sets);
        assert_eq!(p.greedy().len(), 3);
        let sol = solve(&p, cfg()).unwrap();
        assert_eq!(sol.chosen, vec![1, 2]);
    }

    #[test]
    fn threads_agree_on_value() {
        // Cycle of 12 vertices: domination number 4.
        let n = 12;
        let sets: Vec<Vec<usize>> = (0..n)
            .map(|v| vec![(v + n - 1) % n, v, (v + 1) % n])
            .collect();
        let p = CoverProblem::new(n, &sets);
        let one = solve(&p, cfg()).unwrap();
        let four = solve(
            &p,
            SearchConfig {
                budget: 1 << 40,
                threads: 4,
            },
        )
        .unwrap();
        assert_eq!(one.chosen.len(), 4);
        assert_eq!(four.chosen.len(), 4);
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let n = 40;
        let sets: Vec<Vec<usize>> = (0..n)
            .map(|v| vec![(v + n - 1) % n, v, (v + 1) % n])
            .collect();
        let p = CoverProblem::new(n, &sets);
        let err = solve(
            &p,
            SearchConfig {
                budget: 1,
                threads: 1,
            },
        );
        match err {
            Err(Exhausted { lower, upper }) => assert!(lower <= 14 && 14 <= upper),
            Ok(c) => assert_eq!(c.chosen.len(), 14),
        }
    }
}
