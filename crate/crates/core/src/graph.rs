//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` word per vertex, so every vertex subset of a graph
//! fits in a single [`VertexSet`]. Minor operations return new graphs and use a
//! fixed re-indexing convention: when a vertex disappears (deletion or the
//! absorbed endpoint of a contraction) every vertex above it moves down by one.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} does not exist in a graph on {n} vertices")]
    NoSuchVertex { vertex: usize, n: usize },
    #[error("{0} and {1} are not adjacent")]
    NoSuchEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("cannot remove the only vertex of a graph")]
    WouldBeEmpty,
    #[error("{family} parameter {value} outside {min}..={max}")]
    Parameter {
        family: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("isomorphism search is capped at {cap} vertices, got {n}")]
    TooLargeForIsomorphism { n: usize, cap: usize },
}

/// A set of vertices stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// One elementary minor move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MinorStep {
    DeleteEdge(usize, usize),
    ContractEdge(usize, usize),
    DeleteVertex(usize),
}

impl fmt::Display for MinorStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MinorStep::DeleteEdge(u, v) => write!(f, "delete {u}-{v}"),
            MinorStep::ContractEdge(u, v) => write!(f, "contract {u}-{v}"),
            MinorStep::DeleteVertex(v) => write!(f, "delete vertex {v}"),
        }
    }
}

/// A simple undirected graph on `1..=64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency words. Bits outside `0..n`, loops and
    /// asymmetric entries are rejected.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        let g = Graph::empty(n).map(|_| Graph { adj })?;
        let full = VertexSet::full(n).0;
        for u in 0..n {
            let row = g.adj[u];
            if row & !full != 0 {
                let bad = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::NoSuchVertex { vertex: bad, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in VertexSet(row) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(GraphError::NoSuchEdge(v, u));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(GraphError::NoSuchEdge(u, v))
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            let above = self.adj[u] & !VertexSet::full(u + 1).0;
            out.extend(VertexSet(above).iter().map(|v| (u, v)));
        }
        out
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertices of `set` reachable from `start` inside `set`.
    pub fn component_of(&self, set: VertexSet, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= set.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components of the subgraph induced on `set`, ordered by
    /// their lowest vertex.
    pub fn components_in(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(set, v);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_in(self.vertices())
    }

    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.component_of(set, v) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Induced subgraph on `set`, vertices renumbered in ascending order.
    pub fn induced(&self, set: VertexSet) -> Result<Self, GraphError> {
        let members: Vec<usize> = set.iter().collect();
        if members.last().is_some_and(|&v| v >= self.n()) {
            return Err(GraphError::NoSuchVertex {
                vertex: *members.last().unwrap(),
                n: self.n(),
            });
        }
        let mut g = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.link(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `G - uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// `G - v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        if self.n() == 1 {
            return Err(GraphError::WouldBeEmpty);
        }
        let adj = (0..self.n())
            .filter(|&u| u != v)
            .map(|u| remove_bit(self.adj[u], v))
            .collect();
        Ok(Graph { adj })
    }

    /// `G / uv`: the endpoint with the larger index is merged into the smaller
    /// one, loops and parallel edges are dropped, and vertices above the
    /// absorbed endpoint shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_edge(u, v)?;
        let (keep, gone) = (u.min(v), u.max(v));
        let mut g = self.clone();
        let merged = (g.adj[keep] | g.adj[gone]) & !(1u64 << keep) & !(1u64 << gone);
        for w in VertexSet(g.adj[gone]) {
            g.unlink(gone, w);
        }
        for w in VertexSet(merged) {
            g.link(keep, w);
        }
        g.delete_vertex(gone)
    }

    /// Star-clique transform: remove `v` and make its former neighbourhood a
    /// clique. Re-indexing follows [`Graph::delete_vertex`].
    pub fn star_clique(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let nbrs = self.neighbors(v);
        let mut g = self.clone();
        for a in nbrs {
            g.adj[a] |= nbrs.without(a).0;
        }
        g.delete_vertex(v)
    }

    pub fn apply(&self, step: MinorStep) -> Result<Self, GraphError> {
        match step {
            MinorStep::DeleteEdge(u, v) => self.delete_edge(u, v),
            MinorStep::ContractEdge(u, v) => self.contract_edge(u, v),
            MinorStep::DeleteVertex(v) => self.delete_vertex(v),
        }
    }

    /// Every one-step minor move: edge deletions and contractions for each
    /// edge, then every vertex deletion.
    pub fn one_step_minors(&self) -> Vec<MinorStep> {
        let mut steps = Vec::new();
        for (u, v) in self.edges() {
            steps.push(MinorStep::DeleteEdge(u, v));
            steps.push(MinorStep::ContractEdge(u, v));
        }
        if self.n() > 1 {
            steps.extend((0..self.n()).map(MinorStep::DeleteVertex));
        }
        steps
    }

    /// Checks symmetry, irreflexivity and range of every adjacency word.
    pub fn is_well_formed(&self) -> bool {
        Graph::from_adjacency(self.adj.clone()).is_ok()
    }
}

/// Drops bit `v` from `word`, shifting higher bits down by one.
#[inline]
pub(crate) fn remove_bit(word: u64, v: usize) -> u64 {
    let low = word & ((1u64 << v) - 1);
    let high = if v >= 63 { 0 } else { (word >> (v + 1)) << v };
    low | high
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
