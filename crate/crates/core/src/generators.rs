//! Graph families with fixed vertex numbering.
//!
//! | family           | vertices                                                   |
//! |------------------|------------------------------------------------------------|
//! | `complete(k)`    | `0..k`                                                     |
//! | `k_net(k)`       | clique `0..k`, vertex `k+i` pendant to `i`                 |
//! | `cartesian_k2(a)`| cliques `0..a` and `a..2a`, rungs `i - (a+i)`              |
//! | `h_n(n)`         | hub `0`, clique `1..n`, subdivision vertices `n..2n-1`     |
//! | `cycle(n)`       | `0-1-..-(n-1)-0`                                           |
//! | `path(n)`        | `0-1-..-(n-1)`                                             |

use serde::Serialize;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

fn check(family: &'static str, value: usize, min: usize, max: usize) -> Result<(), GraphError> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(GraphError::Parameter {
            family,
            value,
            min,
            max,
        })
    }
}

/// The complete graph `K_k`.
pub fn complete(k: usize) -> Result<Graph, GraphError> {
    check("complete", k, 1, MAX_VERTICES)?;
    let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
    Graph::from_edges(k, edges)
}

/// `K_k` with one pendant vertex hung on each clique vertex.
pub fn k_net(k: usize) -> Result<Graph, GraphError> {
    check("k_net", k, 1, 32)?;
    let clique = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
    let pendants = (0..k).map(|i| (i, k + i));
    Graph::from_edges(2 * k, clique.chain(pendants))
}

/// `K_a □ K_2`: two copies of `K_a` joined by a perfect matching.
pub fn cartesian_k2(a: usize) -> Result<Graph, GraphError> {
    check("cartesian_k2", a, 1, 32)?;
    let mut edges = Vec::with_capacity(a * a);
    for side in [0, a] {
        for u in 0..a {
            for v in u + 1..a {
                edges.push((side + u, side + v));
            }
        }
    }
    edges.extend((0..a).map(|i| (i, a + i)));
    Graph::from_edges(2 * a, edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    check("cycle", n, 3, MAX_VERTICES)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    check("path", n, 1, MAX_VERTICES)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Vertex roles in [`h_n`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HnLayout {
    pub n: usize,
    /// The vertex whose incident edges were subdivided.
    pub hub: usize,
    /// The remaining `n - 1` vertices of `K_n`; a clique.
    pub clique: Vec<usize>,
    /// Subdivision vertices; `subdivision[i]` sits between the hub and
    /// `clique[i]`.
    pub subdivision: Vec<usize>,
}

impl HnLayout {
    pub fn new(n: usize) -> Self {
        HnLayout {
            n,
            hub: 0,
            clique: (1..n).collect(),
            subdivision: (n..2 * n - 1).collect(),
        }
    }

    pub fn is_clique_vertex(&self, x: usize) -> bool {
        (1..self.n).contains(&x)
    }

    pub fn is_subdivision_vertex(&self, x: usize) -> bool {
        (self.n..2 * self.n - 1).contains(&x)
    }

    /// The clique vertex paired with a subdivision vertex, or vice versa.
    pub fn partner(&self, x: usize) -> Option<usize> {
        if self.is_clique_vertex(x) {
            Some(x + self.n - 1)
        } else if self.is_subdivision_vertex(x) {
            Some(x + 1 - self.n)
        } else {
            None
        }
    }
}

/// `K_n` with every edge at one vertex subdivided once. `n = 3` gives `C_5`.
pub fn h_n(n: usize) -> Result<(Graph, HnLayout), GraphError> {
    check("h_n", n, 3, 32)?;
    let layout = HnLayout::new(n);
    let mut edges = Vec::new();
    for (i, &b) in layout.clique.iter().enumerate() {
        for &c in &layout.clique[i + 1..] {
            edges.push((b, c));
        }
    }
    for (&b, &a) in layout.clique.iter().zip(&layout.subdivision) {
        edges.push((b, a));
        edges.push((layout.hub, a));
    }
    Ok((Graph::from_edges(2 * n - 1, edges)?, layout))
}
