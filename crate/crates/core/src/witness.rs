//! Explicit rankings for the graph families, built without any search.
//!
//! Every injective assignment pairs ascending vertex ids with ascending
//! labels, so the output is stable across runs.

use crate::generators::{h_n, HnLayout};
use crate::graph::{Graph, GraphError, MinorStep, VertexSet};
use crate::ranking::Ranking;

fn param(family: &'static str, value: usize, min: usize, max: usize) -> Result<(), GraphError> {
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

fn label_ascending(labels: &mut [u32], vertices: impl IntoIterator<Item = usize>, first: u32) {
    for (offset, v) in vertices.into_iter().enumerate() {
        labels[v] = first + offset as u32;
    }
}

/// `(n+1)`-ranking of `h_n(n)`: hub `n+1`, subdivision vertices `1`, clique
/// vertices `2..=n`.
pub fn witness_hn(n: usize) -> Result<Ranking, GraphError> {
    param("witness_hn", n, 3, 32)?;
    let layout = HnLayout::new(n);
    let mut labels = vec![1u32; 2 * n - 1];
    labels[layout.hub] = n as u32 + 1;
    label_ascending(&mut labels, layout.clique.iter().copied(), 2);
    Ok(Ranking::new(n as u32 + 1, labels).expect("labels within 1..=n+1"))
}

/// `ceil(3a/2)`-ranking of `cartesian_k2(a)`.
///
/// The separator takes the first `floor(a/2)` vertices of the first clique and
/// the last `ceil(a/2)` of the second; these never share a rung. Separator
/// vertices get `ceil(a/2)+1..=ceil(3a/2)`, and the rest of each clique counts
/// up from 1. The second clique keeps only `floor(a/2)` vertices outside the
/// separator, so for odd `a` label `ceil(a/2)` is unused there.
pub fn witness_kak2(a: usize) -> Result<Ranking, GraphError> {
    param("witness_kak2", a, 3, 32)?;
    let lo = a / 2;
    let hi = a.div_ceil(2);
    let top = (3 * a).div_ceil(2) as u32;
    let separator = (0..lo).chain(a + lo..2 * a);
    let mut labels = vec![0u32; 2 * a];
    label_ascending(&mut labels, separator, hi as u32 + 1);
    label_ascending(&mut labels, lo..a, 1);
    label_ascending(&mut labels, a..a + lo, 1);
    Ok(Ranking::new(top, labels).expect("labels within 1..=ceil(3a/2)"))
}

/// Applies `step` to `h_n(n)` and returns the minor with an `n`-ranking of
/// it, showing that the move lowers the tree-depth.
///
/// Edge moves use one of five colourings according to the edge type (hub to
/// subdivision vertex, subdivision vertex to its clique partner, or inside the
/// clique) and the operation. Deleting a vertex restricts the colouring for
/// deleting its lowest incident edge. Labels are written in `h_n` numbering
/// and then carried through the minor's re-indexing.
pub fn hn_minor_witness(n: usize, step: MinorStep) -> Result<(Graph, Ranking), GraphError> {
    param("hn_minor_witness", n, 4, 32)?;
    let (g, layout) = h_n(n)?;
    let minor = g.apply(step)?;
    let (labels, removed) = match step {
        MinorStep::DeleteEdge(x, y) => (edge_coloring(&layout, x, y, false), None),
        MinorStep::ContractEdge(x, y) => (edge_coloring(&layout, x, y, true), Some(x.max(y))),
        MinorStep::DeleteVertex(x) => {
            let y = g.neighbors(x).first().expect("h_n has minimum degree 2");
            (edge_coloring(&layout, x, y, false), Some(x))
        }
    };
    let kept = match removed {
        Some(r) => g.vertices().without(r),
        None => g.vertices(),
    };
    let labels = kept.iter().map(|v| labels[v]).collect();
    let ranking = Ranking::new(n as u32, labels).expect("colourings use 1..=n");
    Ok((minor, ranking))
}

/// Colouring, in `h_n` numbering, of `h_n - xy` or `h_n / xy`. For a
/// contraction the merged vertex sits at `min(x, y)`; the label at
/// `max(x, y)` is discarded by the caller.
fn edge_coloring(layout: &HnLayout, x: usize, y: usize, contract: bool) -> Vec<u32> {
    let n = layout.n;
    let hub = layout.hub;
    let clique: VertexSet = layout.clique.iter().copied().collect();
    let mut labels = vec![0u32; 2 * n - 1];
    let (x, y) = (x.min(y), x.max(y));

    if clique.contains(x) && clique.contains(y) {
        let rest = clique.without(x).without(y);
        for &a in &layout.subdivision {
            labels[a] = if contract { 1 } else { 2 };
        }
        if contract {
            labels[x] = 2;
        } else {
            labels[x] = 1;
            labels[y] = 1;
        }
        labels[hub] = 3;
        label_ascending(&mut labels, rest, 4);
        return labels;
    }

    // The edge touches a subdivision vertex `a`; `w` is its clique partner.
    let a = if layout.is_subdivision_vertex(y) {
        y
    } else {
        x
    };
    let w = layout.partner(a).expect("subdivision vertex has a partner");
    for &s in &layout.subdivision {
        labels[s] = 1;
    }
    let rest = clique.without(w);
    if !contract {
        labels[hub] = 2;
        labels[w] = 2;
        label_ascending(&mut labels, rest, 3);
    } else {
        // Either way the result is h_{n-1} plus a vertex adjacent to its hub
        // and its whole clique. Contracting hub-a keeps the merged vertex as
        // the hub and `w` becomes the extra vertex; contracting a-w makes the
        // merged vertex (at w's index) the extra one.
        labels[hub] = 2;
        labels[w] = 1;
        label_ascending(&mut labels, rest, 3);
    }
    labels
}
