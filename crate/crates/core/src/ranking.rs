//! Vertex rankings and their verification.
//!
//! A labeling is a ranking when every path joining two vertices with the same
//! label `l` passes through a vertex labelled above `l`.
//!
//! [`verify_ranking`] checks an equivalent condition one label at a time: for
//! each `l`, every connected component of the subgraph induced on
//! `{x : label(x) <= l}` holds at most one vertex labelled `l`.
//!
//! Equivalence: a path avoids every label above `l` exactly when all of its
//! vertices are labelled at most `l`, i.e. when it lies inside that induced
//! subgraph. So two `l`-labelled vertices are joined by an offending path iff
//! they share a component of it. Each label costs one bit-parallel component
//! sweep, against exponentially many paths for the direct definition
//! ([`feasible_by_paths`], kept as a test oracle).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankingError {
    #[error("ranking has {labels} labels but the graph has {vertices} vertices")]
    LengthMismatch { labels: usize, vertices: usize },
    #[error("label {label} at vertex {vertex} outside 1..={k}")]
    LabelOutOfRange { vertex: usize, label: u32, k: u32 },
    #[error("malformed ranking: {0}")]
    Malformed(String),
}

/// Labels `1..=k`, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ranking {
    k: u32,
    labels: Vec<u32>,
}

impl Ranking {
    pub fn new(k: u32, labels: Vec<u32>) -> Result<Self, RankingError> {
        if let Some((vertex, &label)) = labels.iter().enumerate().find(|(_, &l)| l == 0 || l > k) {
            return Err(RankingError::LabelOutOfRange { vertex, label, k });
        }
        Ok(Ranking { k, labels })
    }

    /// Uses the largest label as the colour budget.
    pub fn from_labels(labels: Vec<u32>) -> Result<Self, RankingError> {
        let k = labels.iter().copied().max().unwrap_or(0);
        Ranking::new(k, labels)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn max_label(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn vertices_with(&self, label: u32) -> VertexSet {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .map(|(v, _)| v)
            .collect()
    }

    /// Labels of the vertices in `set`, in ascending vertex order. Matches
    /// the numbering of [`Graph::induced`].
    pub fn restrict(&self, set: VertexSet) -> Ranking {
        Ranking {
            k: self.k,
            labels: set.iter().map(|v| self.labels[v]).collect(),
        }
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.k)?;
        for l in &self.labels {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for Ranking {
    type Err = RankingError;

    /// Parses `k: l_0 l_1 ... l_{n-1}`.
    fn from_str(s: &str) -> Result<Self, RankingError> {
        let line = s
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| RankingError::Malformed("empty input".into()))?;
        let (k, rest) = line
            .split_once(':')
            .ok_or_else(|| RankingError::Malformed("expected 'k: labels...'".into()))?;
        let k = k
            .trim()
            .parse::<u32>()
            .map_err(|_| RankingError::Malformed(format!("bad colour count '{}'", k.trim())))?;
        let labels = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| RankingError::Malformed(format!("bad label '{t}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ranking::new(k, labels)
    }
}

impl Serialize for Ranking {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels.serialize(s)
    }
}

/// Two equally labelled vertices joined by a path with no higher label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub label: u32,
    pub endpoints: (usize, usize),
    /// From `endpoints.0` to `endpoints.1`, inclusive.
    pub path: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "vertices {} and {} share label {} and are joined by {} with no higher label",
            self.endpoints.0,
            self.endpoints.1,
            self.label,
            path.join("-")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Valid,
    Invalid(Violation),
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verification::Valid => None,
            Verification::Invalid(v) => Some(v),
        }
    }
}

fn check_shape(g: &Graph, r: &Ranking) -> Result<(), RankingError> {
    if r.len() != g.n() {
        return Err(RankingError::LengthMismatch {
            labels: r.len(),
            vertices: g.n(),
        });
    }
    Ok(())
}

/// Checks `r` on `g`. Reports the violation with the smallest label; among
/// those, the lowest-indexed endpoint and a shortest offending path to the
/// nearest equally labelled vertex (ties broken by vertex index).
pub fn verify_ranking(g: &Graph, r: &Ranking) -> Result<Verification, RankingError> {
    check_shape(g, r)?;
    Ok(match first_violation(g, r.labels()) {
        None => Verification::Valid,
        Some(v) => Verification::Invalid(v),
    })
}

/// Bare feasibility test on a raw label slice; no range checks.
pub fn is_feasible(g: &Graph, labels: &[u32]) -> bool {
    debug_assert_eq!(labels.len(), g.n());
    let k = labels.iter().copied().max().unwrap_or(0) as usize;
    let mut by_label = vec![0u64; k + 1];
    for (v, &l) in labels.iter().enumerate() {
        by_label[l as usize] |= 1 << v;
    }
    let mut below = 0u64;
    for same in by_label.into_iter().skip(1) {
        below |= same;
        if same.count_ones() < 2 {
            continue;
        }
        let mut rest = VertexSet(same);
        while let Some(x) = rest.first() {
            let comp = g.component_of(VertexSet(below), x);
            if comp.0 & same != 1 << x {
                return false;
            }
            rest.remove(x);
        }
    }
    true
}

fn first_violation(g: &Graph, labels: &[u32]) -> Option<Violation> {
    let k = labels.iter().copied().max().unwrap_or(0) as usize;
    let mut by_label = vec![0u64; k + 1];
    for (v, &l) in labels.iter().enumerate() {
        by_label[l as usize] |= 1 << v;
    }
    let mut below = 0u64;
    for (label, &same) in by_label.iter().enumerate().skip(1) {
        below |= same;
        if same.count_ones() < 2 {
            continue;
        }
        let mut rest = VertexSet(same);
        while let Some(x) = rest.first() {
            let comp = g.component_of(VertexSet(below), x);
            if comp.0 & same != 1 << x {
                let path = shortest_path_to(g, VertexSet(below), x, VertexSet(same).without(x));
                let y = *path.last().expect("component holds another target");
                return Some(Violation {
                    label: label as u32,
                    endpoints: (x, y),
                    path,
                });
            }
            rest.remove(x);
        }
    }
    None
}

/// Breadth-first search inside `within` from `src` to the nearest member of
/// `targets`; neighbours are scanned in ascending order.
fn shortest_path_to(g: &Graph, within: VertexSet, src: usize, targets: VertexSet) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(src);
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x).intersection(within).difference(seen) {
            seen.insert(y);
            parent[y] = x;
            if targets.contains(y) {
                let mut path = vec![y];
                let mut cur = y;
                while cur != src {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            queue.push_back(y);
        }
    }
    Vec::new()
}

/// Feasibility straight from the path definition: enumerate simple paths out
/// of every labelled vertex and look for one reaching an equal label with no
/// higher label in between. Exponential; intended for graphs of a handful of
/// vertices.
pub fn feasible_by_paths(g: &Graph, labels: &[u32]) -> bool {
    assert_eq!(labels.len(), g.n());
    let n = g.n();
    let mut on_path = vec![false; n];
    for x in 0..n {
        on_path[x] = true;
        let bad = walk(g, labels, labels[x], x, &mut on_path);
        on_path[x] = false;
        if bad {
            return false;
        }
    }
    true
}

fn walk(g: &Graph, labels: &[u32], label: u32, at: usize, on_path: &mut [bool]) -> bool {
    for y in g.neighbors(at) {
        if on_path[y] {
            continue;
        }
        if labels[y] == label {
            return true;
        }
        // any extension keeps `y` as an interior vertex
        if labels[y] > label {
            continue;
        }
        on_path[y] = true;
        let found = walk(g, labels, label, y, on_path);
        on_path[y] = false;
        if found {
            return true;
        }
    }
    false
}
