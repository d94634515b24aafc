//! Exhaustive and randomized cross-checks between independent routes:
//! solver against brute force, star-clique against direct search, component
//! criterion against path enumeration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::critical::{
    map_items, min_colors_by_enumeration, starclique_check_with_td, unique_one_labeling,
};
use crate::graph::Graph;
use crate::ranking::{feasible_by_paths, is_feasible};
use crate::solver::{brute_force_td, treedepth, SolverConfig};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub checked: usize,
    pub disagreements: Vec<String>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.checked += other.checked;
        self.disagreements.extend(other.disagreements);
        self
    }
}

/// All connected graphs on vertex set `0..n` (labeled, not up to
/// isomorphism), in increasing order of edge mask.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=7).contains(&n),
        "exhaustive enumeration supports 1..=7 vertices"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let g = Graph::from_adjacency(adj).expect("symmetric by construction");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// `G(n, p)` graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut adj = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    Graph::from_adjacency(adj).expect("symmetric by construction")
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn oracle_check(g: &Graph) -> SweepSummary {
    let cert = match treedepth(g) {
        Ok(c) => c,
        Err(e) => {
            return SweepSummary {
                checked: 1,
                disagreements: vec![format!("{g:?}: solver failed: {e}")],
            }
        }
    };
    let brute = brute_force_td(g).expect("within brute-force cap");
    let mut d = Vec::new();
    if brute != cert.value {
        d.push(format!(
            "{g:?}: solver {} vs brute force {brute}",
            cert.value
        ));
    }
    if !is_feasible(g, cert.witness.labels()) || cert.witness.max_label() != cert.value {
        d.push(format!("{g:?}: unsound certificate {}", cert.witness));
    }
    SweepSummary {
        checked: 1,
        disagreements: d,
    }
}

/// Solver against [`brute_force_td`] on every connected graph with
/// `1..=max_n` vertices.
pub fn oracle_sweep(max_n: usize, threads: usize) -> SweepSummary {
    (1..=max_n)
        .map(|n| {
            let graphs = connected_graphs(n);
            map_items(threads, &graphs, oracle_check)
                .into_iter()
                .fold(SweepSummary::default(), SweepSummary::merge)
        })
        .fold(SweepSummary::default(), SweepSummary::merge)
}

/// Solver against [`brute_force_td`] on `count` random graphs whose vertex
/// counts are drawn from `sizes`.
pub fn random_oracle_sweep(
    seed: u64,
    count: usize,
    sizes: std::ops::RangeInclusive<usize>,
    threads: usize,
) -> SweepSummary {
    let mut rng = seeded_rng(seed);
    let graphs: Vec<Graph> = (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let p = rng.gen_range(0.2..0.8);
            random_graph(&mut rng, n, p)
        })
        .collect();
    map_items(threads, &graphs, oracle_check)
        .into_iter()
        .fold(SweepSummary::default(), SweepSummary::merge)
}

fn starclique_check_graph(g: &Graph) -> SweepSummary {
    let config = SolverConfig::default();
    let mut out = SweepSummary::default();
    let td = match treedepth(g) {
        Ok(c) => c.value,
        Err(e) => {
            out.disagreements.push(format!("{g:?}: solver failed: {e}"));
            return out;
        }
    };
    let k = min_colors_by_enumeration(g).expect("within direct cap");
    if k != td {
        out.disagreements
            .push(format!("{g:?}: solver td {td} vs enumerated {k}"));
    }
    for v in 0..g.n() {
        out.checked += 1;
        let star = starclique_check_with_td(g, v, td, &config).expect("solver has no budget");
        let direct = unique_one_labeling(g, v, k).expect("within direct cap");
        if star.one_unique() != direct.is_some() {
            out.disagreements.push(format!(
                "{g:?} vertex {v}: star-clique says {}, direct search says {}",
                star.one_unique(),
                direct.is_some()
            ));
        }
        if let Some(w) = &star.witness {
            if !is_feasible(g, w.labels())
                || w.label(v) != 1
                || w.vertices_with(1).len() != 1
                || w.max_label() != td
            {
                out.disagreements
                    .push(format!("{g:?} vertex {v}: bad star-clique witness {w}"));
            }
        }
    }
    out
}

/// Star-clique test against the direct search for every vertex of every
/// connected graph with `2..=max_n` vertices. `checked` counts
/// (graph, vertex) pairs.
pub fn starclique_sweep(max_n: usize, threads: usize) -> SweepSummary {
    (2..=max_n)
        .map(|n| {
            let graphs = connected_graphs(n);
            map_items(threads, &graphs, starclique_check_graph)
                .into_iter()
                .fold(SweepSummary::default(), SweepSummary::merge)
        })
        .fold(SweepSummary::default(), SweepSummary::merge)
}

/// Component criterion against path enumeration on every labeling with
/// labels `1..=max_k` of every graph (connected or not) on `n` vertices.
pub fn verifier_sweep(n: usize, max_k: u32) -> SweepSummary {
    assert!((1..=5).contains(&n));
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = SweepSummary::default();
    let total_labelings = (max_k as usize).pow(n as u32);
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let g = Graph::from_adjacency(adj).expect("symmetric by construction");
        let mut labels = vec![0u32; n];
        for code in 0..total_labelings {
            let mut c = code;
            for l in labels.iter_mut() {
                *l = (c % max_k as usize) as u32 + 1;
                c /= max_k as usize;
            }
            out.checked += 1;
            if is_feasible(&g, &labels) != feasible_by_paths(&g, &labels) {
                out.disagreements.push(format!("{g:?} labels {labels:?}"));
            }
        }
    }
    out
}
