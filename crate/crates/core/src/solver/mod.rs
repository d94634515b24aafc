//! Exact tree-depth with certificates.
//!
//! For a connected graph, `td = 1 + min_v td(G - v)` where the tree-depth of a
//! disconnected graph is the maximum over its components; a single vertex has
//! tree-depth 1. Every subproblem reached this way is a connected induced
//! subgraph of the input, so a subproblem is identified by one `u64` vertex
//! mask and all results go into a shared memo of `(lower, upper)` pairs.
//!
//! The search answers decision queries `td(S) <= k` ([`Solver::treedepth_le`]).
//! The exact value is the first `k`, counting up from a lower bound, for
//! which the answer is yes. Inside a query:
//!
//! * `|S| <= k` is always yes; a memoised bound may settle the query.
//! * `degeneracy + 1` and the DFS path bound may refute it.
//! * A vertex adjacent to all of `S` is always an optimal root, so it is the
//!   only root tried. Pendant vertices are never tried as roots when
//!   `|S| > 2`; rooting at their neighbour is never worse.
//! * Remaining roots are tried by decreasing degree in `S`, ties by index.
//!   Components of `S - v` are checked largest first against `k - 1`.
//!
//! Witness rankings are rebuilt after the value is known by walking the
//! same branch order and taking the first root whose components all fit:
//! the root of a subproblem with budget `k` gets label `k`. That pass only
//! reads memoised answers, so the witness does not depend on thread timing.

mod bounds;
mod brute;

pub use bounds::{bounds, Bounds};
pub use brute::{brute_force_td, BRUTE_FORCE_CAP};

pub(crate) use bounds::dfs_ranking;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::ranking::Ranking;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Worker threads; 1 runs everything on the calling thread.
    pub threads: usize,
    /// Maximum number of expanded search nodes.
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Stop adding memo entries past this many.
    pub memo_capacity: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            threads: 1,
            node_budget: None,
            time_budget: None,
            memo_capacity: None,
        }
    }
}

impl SolverConfig {
    pub fn sequential() -> Self {
        Self::default()
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = Some(nodes);
        self
    }

    pub fn with_time_budget(mut self, t: Duration) -> Self {
        self.time_budget = Some(t);
        self
    }

    pub fn with_memo_capacity(mut self, entries: usize) -> Self {
        self.memo_capacity = Some(entries);
        self
    }
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolverStats {
    pub nodes: u64,
    pub memo_entries: usize,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

/// Tree-depth together with an optimal ranking.
#[derive(Debug, Clone, Serialize)]
pub struct TdCertificate {
    pub value: u32,
    pub witness: Ranking,
    pub stats: SolverStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("search budget exhausted; tree-depth is between {} and {}", bounds.lower, bounds.upper)]
    Exhausted { bounds: Bounds, stats: SolverStats },
}

impl SolverError {
    pub fn bounds(&self) -> Bounds {
        match self {
            SolverError::Exhausted { bounds, .. } => *bounds,
        }
    }
}

#[derive(Debug)]
struct OutOfBudget;

#[derive(Clone, Copy)]
struct Entry {
    lower: u8,
    upper: u8,
}

/// Exact solver bound to one graph. The memo persists across queries, so
/// repeated [`Solver::treedepth_le`] calls and a later [`Solver::treedepth`]
/// share work. `&Solver` may be used from several threads.
pub struct Solver<'g> {
    graph: &'g Graph,
    config: SolverConfig,
    memo: DashMap<u64, Entry>,
    nodes: AtomicU64,
    exhausted: AtomicBool,
    started: Instant,
    pool: Option<rayon::ThreadPool>,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, config: SolverConfig) -> Self {
        let pool = (config.threads > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build()
                .expect("thread pool")
        });
        Solver {
            graph,
            config,
            memo: DashMap::with_shard_amount(4),
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            started: Instant::now(),
            pool,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn stats(&self) -> SolverStats {
        SolverStats {
            nodes: self.nodes.load(Ordering::Relaxed),
            memo_entries: self.memo.len(),
            elapsed: self.started.elapsed(),
        }
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match &self.pool {
            Some(pool) => pool.install(f),
            None => f(),
        }
    }

    /// Exact tree-depth and a ranking attaining it.
    pub fn treedepth(&self) -> Result<TdCertificate, SolverError> {
        self.run(|| self.solve_all())
            .map_err(|_| self.exhausted_error())
    }

    /// Whether `td(G) <= k`.
    pub fn treedepth_le(&self, k: u32) -> Result<bool, SolverError> {
        let comps = self.graph.components();
        self.run(|| {
            for c in comps {
                if !self.le(c, k, 0)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .map_err(|_: OutOfBudget| self.exhausted_error())
    }

    fn exhausted_error(&self) -> SolverError {
        let mut lower = 0;
        let mut upper = 0;
        let (_, dfs_height) = dfs_ranking(self.graph, self.graph.vertices());
        for c in self.graph.components() {
            let (lo, hi) = match self.memo.get(&c.0) {
                Some(e) => (e.lower as u32, e.upper as u32),
                None => (0, c.len() as u32),
            };
            lower = lower.max(lo.max(bounds::quick_lower(self.graph, c)));
            upper = upper.max(hi);
        }
        SolverError::Exhausted {
            bounds: Bounds {
                lower,
                upper: upper.min(dfs_height),
            },
            stats: self.stats(),
        }
    }

    fn solve_all(&self) -> Result<TdCertificate, OutOfBudget> {
        let mut labels = vec![0u32; self.graph.n()];
        let mut value = 0;
        for c in self.graph.components() {
            let td = self.solve_component(c)?;
            self.build_witness(c, td, &mut labels)?;
            value = value.max(td);
        }
        let witness = Ranking::new(value, labels).expect("witness labels lie in 1..=td");
        Ok(TdCertificate {
            value,
            witness,
            stats: self.stats(),
        })
    }

    fn solve_component(&self, set: VertexSet) -> Result<u32, OutOfBudget> {
        let (_, upper) = dfs_ranking(self.graph, set);
        self.record(set, 0, upper);
        let mut k = bounds::quick_lower(self.graph, set).max(self.lower_of(set));
        while k < upper {
            if self.le(set, k, 0)? {
                return Ok(k);
            }
            k += 1;
        }
        Ok(upper)
    }

    fn lower_of(&self, set: VertexSet) -> u32 {
        self.memo.get(&set.0).map_or(1, |e| e.lower as u32)
    }

    fn record(&self, set: VertexSet, lower: u32, upper: u32) {
        let (lower, upper) = (lower as u8, upper as u8);
        if let Some(mut e) = self.memo.get_mut(&set.0) {
            e.lower = e.lower.max(lower);
            e.upper = e.upper.min(upper);
            return;
        }
        if self
            .config
            .memo_capacity
            .is_some_and(|cap| self.memo.len() >= cap)
        {
            return;
        }
        self.memo
            .entry(set.0)
            .and_modify(|e| {
                e.lower = e.lower.max(lower);
                e.upper = e.upper.min(upper);
            })
            .or_insert(Entry { lower, upper });
    }

    fn tick(&self) -> Result<(), OutOfBudget> {
        if self.exhausted.load(Ordering::Relaxed) {
            return Err(OutOfBudget);
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.config.node_budget.is_some_and(|b| n > b);
        let over_time = n.is_multiple_of(256)
            && self
                .config
                .time_budget
                .is_some_and(|t| self.started.elapsed() > t);
        if over_nodes || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            return Err(OutOfBudget);
        }
        Ok(())
    }

    /// Candidate roots of the connected subproblem `set`.
    fn branch_order(&self, set: VertexSet) -> Vec<usize> {
        let g = self.graph;
        let size = set.len();
        let mut cands: Vec<(usize, usize)> = set
            .iter()
            .map(|v| (v, g.neighbors(v).intersection(set).len()))
            .collect();
        if let Some(&(u, _)) = cands.iter().find(|&&(_, d)| d + 1 == size) {
            return vec![u];
        }
        if size > 2 {
            cands.retain(|&(_, d)| d > 1);
        }
        cands.sort_by_key(|&(v, d)| (std::cmp::Reverse(d), v));
        cands.into_iter().map(|(v, _)| v).collect()
    }

    /// Decides `td(G[set]) <= k` for a connected `set`.
    fn le(&self, set: VertexSet, k: u32, depth: u32) -> Result<bool, OutOfBudget> {
        let size = set.len() as u32;
        if size <= k {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        if let Some(e) = self.memo.get(&set.0) {
            if e.upper as u32 <= k {
                return Ok(true);
            }
            if e.lower as u32 > k {
                return Ok(false);
            }
        }
        self.tick()?;
        let lower = bounds::quick_lower(self.graph, set);
        if lower > k {
            self.record(set, lower, size);
            return Ok(false);
        }
        let order = self.branch_order(set);
        let fits = if depth == 0 && self.pool.is_some() && order.len() > 1 {
            order
                .par_iter()
                .map(|&v| self.root_fits(set, v, k, depth))
                .find_any(|r| !matches!(r, Ok(false)))
                .unwrap_or(Ok(false))?
        } else {
            let mut found = false;
            for &v in &order {
                if self.root_fits(set, v, k, depth)? {
                    found = true;
                    break;
                }
            }
            found
        };
        if fits {
            self.record(set, lower, k);
        } else {
            self.record(set, k + 1, size);
        }
        Ok(fits)
    }

    /// Whether every component of `set - v` has tree-depth at most `k - 1`.
    fn root_fits(&self, set: VertexSet, v: usize, k: u32, depth: u32) -> Result<bool, OutOfBudget> {
        let rest = set.without(v);
        let mut comps = self.graph.components_in(rest);
        if comps
            .iter()
            .any(|c| self.lower_of(*c) > k - 1 || c.len() > 1 && k == 1)
        {
            return Ok(false);
        }
        comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
        for c in comps {
            if !self.le(c, k - 1, depth + 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Labels `set` with `1..=k`, assuming `td(G[set]) <= k` is known.
    fn build_witness(&self, set: VertexSet, k: u32, labels: &mut [u32]) -> Result<(), OutOfBudget> {
        if set.len() == 1 {
            labels[set.first().expect("non-empty")] = k;
            return Ok(());
        }
        for v in self.branch_order(set) {
            if self.root_fits(set, v, k, 1)? {
                labels[v] = k;
                for c in self.graph.components_in(set.without(v)) {
                    self.build_witness(c, k - 1, labels)?;
                }
                return Ok(());
            }
        }
        unreachable!("build_witness called with k below the tree-depth")
    }
}

/// Tree-depth of `g` with the default sequential configuration.
pub fn treedepth(g: &Graph) -> Result<TdCertificate, SolverError> {
    Solver::new(g, SolverConfig::default()).treedepth()
}

pub fn treedepth_with(g: &Graph, config: &SolverConfig) -> Result<TdCertificate, SolverError> {
    Solver::new(g, config.clone()).treedepth()
}

/// Whether `td(g) <= k`.
pub fn treedepth_le(g: &Graph, k: u32) -> Result<bool, SolverError> {
    Solver::new(g, SolverConfig::default()).treedepth_le(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::ranking::verify_ranking;

    fn td(g: &Graph) -> u32 {
        let cert = treedepth(g).unwrap();
        assert!(verify_ranking(g, &cert.witness).unwrap().is_valid());
        assert_eq!(cert.witness.max_label(), cert.value);
        cert.value
    }

    #[test]
    fn small_values() {
        assert_eq!(td(&complete(1).unwrap()), 1);
        assert_eq!(td(&cycle(5).unwrap()), 4);
        assert_eq!(td(&path(4).unwrap()), 3);
        assert_eq!(td(&path(7).unwrap()), 3);
        assert_eq!(td(&path(8).unwrap()), 4);
        assert_eq!(td(&complete(7).unwrap()), 7);
        assert_eq!(td(&Graph::empty(4).unwrap()), 1);
    }

    #[test]
    fn families() {
        for k in 1..=8 {
            assert_eq!(td(&k_net(k).unwrap()), k as u32 + 1, "net {k}");
        }
        for a in 1..=7 {
            assert_eq!(
                td(&cartesian_k2(a).unwrap()),
                (3 * a as u32).div_ceil(2),
                "prism {a}"
            );
        }
        for n in 3..=8 {
            assert_eq!(td(&h_n(n).unwrap().0), n as u32 + 1, "h_n {n}");
        }
    }

    #[test]
    fn decision_queries() {
        assert!(!treedepth_le(&cycle(5).unwrap(), 3).unwrap());
        assert!(treedepth_le(&cycle(5).unwrap(), 4).unwrap());
        assert!(!treedepth_le(&h_n(5).unwrap().0, 5).unwrap());
        let g = k_net(4).unwrap();
        assert!(treedepth_le(&g, g.n() as u32).unwrap());
        assert!(!treedepth_le(&g, 0).unwrap());
    }

    #[test]
    fn shared_memo_between_queries() {
        let (g, _) = h_n(6).unwrap();
        let s = Solver::new(&g, SolverConfig::default());
        assert!(!s.treedepth_le(6).unwrap());
        let before = s.stats().memo_entries;
        assert!(before > 0);
        assert_eq!(s.treedepth().unwrap().value, 7);
    }

    #[test]
    fn node_budget_reports_bounds() {
        let (g, _) = h_n(8).unwrap();
        let err = treedepth_with(&g, &SolverConfig::default().with_node_budget(3)).unwrap_err();
        let b = err.bounds();
        assert!(b.lower <= 9 && 9 <= b.upper, "{b:?}");
    }

    #[test]
    fn threads_give_same_certificate() {
        let (g, _) = h_n(7).unwrap();
        let a = treedepth(&g).unwrap();
        let b = treedepth_with(&g, &SolverConfig::default().with_threads(3)).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn tiny_memo_still_exact() {
        let (g, _) = h_n(6).unwrap();
        let c = treedepth_with(&g, &SolverConfig::default().with_memo_capacity(4)).unwrap();
        assert_eq!(c.value, 7);
        assert!(c.stats.memo_entries <= 4);
    }
}
