//! Tree-depth by exhaustive labeling search, independent of the exact solver.

use crate::graph::{Graph, GraphError};
use crate::ranking::feasible_by_paths;

pub const BRUTE_FORCE_CAP: usize = 8;

/// Smallest `k` such that some labeling with `1..=k` passes the path
/// definition, trying `k = 1, 2, ...`.
///
/// Labelings are enumerated vertex by vertex; a partial labeling that gives
/// two adjacent vertices the same label is abandoned, since the edge alone is
/// an offending path. Complete labelings go to [`feasible_by_paths`].
pub fn brute_force_td(g: &Graph) -> Result<u32, GraphError> {
    if g.n() > BRUTE_FORCE_CAP {
        return Err(GraphError::VertexCount(g.n()));
    }
    let mut labels = vec![0u32; g.n()];
    for k in 1..=g.n() as u32 {
        if extend(g, k, 0, &mut labels) {
            return Ok(k);
        }
    }
    unreachable!("an injective labeling is always feasible")
}

fn extend(g: &Graph, k: u32, v: usize, labels: &mut [u32]) -> bool {
    if v == g.n() {
        return feasible_by_paths(g, labels);
    }
    for l in 1..=k {
        let clash = g.neighbors(v).iter().any(|u| u < v && labels[u] == l);
        if clash {
            continue;
        }
        labels[v] = l;
        if extend(g, k, v + 1, labels) {
            return true;
        }
    }
    labels[v] = 0;
    false
}
