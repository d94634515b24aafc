//! Cheap tree-depth bounds.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// `lower <= td(G) <= upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: u32,
    pub upper: u32,
}

/// Smallest `t` with `2^t >= x`.
pub(crate) fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// A path on `m` vertices has tree-depth `ceil(log2(m + 1))`, and tree-depth
/// is monotone under subgraphs.
pub(crate) fn path_bound(vertices_on_path: usize) -> u32 {
    ceil_log2(vertices_on_path as u64 + 1)
}

/// Depth-first search tree of the component of `root` inside `set`.
/// Returns `(depth per vertex, height)`; the root has depth 1. Every non-tree
/// edge joins an ancestor to a descendant, so the tree is an elimination tree.
pub(crate) fn dfs_tree(g: &Graph, set: VertexSet, root: usize) -> (Vec<u32>, u32) {
    let mut depth = vec![0u32; g.n()];
    let mut seen = VertexSet::singleton(root);
    depth[root] = 1;
    let mut height = 1;
    let mut stack = vec![root];
    while let Some(&top) = stack.last() {
        match g.neighbors(top).intersection(set).difference(seen).first() {
            Some(next) => {
                seen.insert(next);
                depth[next] = depth[top] + 1;
                height = height.max(depth[next]);
                stack.push(next);
            }
            None => {
                stack.pop();
            }
        }
    }
    (depth, height)
}

/// Largest minimum degree over all subgraphs of `G[set]`.
pub(crate) fn degeneracy(g: &Graph, set: VertexSet) -> u32 {
    let mut rest = set;
    let mut best = 0;
    while !rest.is_empty() {
        let (v, d) = rest
            .iter()
            .map(|v| (v, g.neighbors(v).intersection(rest).len()))
            .min_by_key(|&(_, d)| d)
            .expect("non-empty");
        best = best.max(d as u32);
        rest.remove(v);
    }
    best
}

/// Lower bound on the tree-depth of a connected `G[set]` used inside the
/// exact search: `degeneracy + 1` (at least the clique number) and the path
/// bound from one DFS.
pub(crate) fn quick_lower(g: &Graph, set: VertexSet) -> u32 {
    let Some(root) = set.first() else { return 0 };
    let (_, height) = dfs_tree(g, set, root);
    (degeneracy(g, set) + 1).max(path_bound(height as usize))
}

/// Clique number of `G[set]`, exact via Bron-Kerbosch with pivoting when
/// `|set| <= 40`, greedy otherwise.
pub(crate) fn clique_number(g: &Graph, set: VertexSet) -> u32 {
    if set.len() <= 40 {
        let mut best = 0;
        bron_kerbosch(g, 0, set.0, 0, &mut best);
        best
    } else {
        greedy_clique(g, set)
    }
}

fn bron_kerbosch(g: &Graph, size: u32, mut cand: u64, mut excl: u64, best: &mut u32) {
    if cand == 0 {
        if excl == 0 {
            *best = (*best).max(size);
        }
        return;
    }
    if size + cand.count_ones() <= *best {
        return;
    }
    let pivot = VertexSet(cand | excl)
        .iter()
        .max_by_key(|&u| (g.adjacency()[u] & cand).count_ones())
        .expect("non-empty");
    for v in VertexSet(cand & !g.adjacency()[pivot]) {
        let nv = g.adjacency()[v];
        bron_kerbosch(g, size + 1, cand & nv, excl & nv, best);
        cand &= !(1 << v);
        excl |= 1 << v;
    }
}

fn greedy_clique(g: &Graph, set: VertexSet) -> u32 {
    let mut best = 0;
    for start in set {
        let mut cand = g.neighbors(start).intersection(set);
        let mut size = 1;
        while let Some(v) = cand
            .iter()
            .max_by_key(|&u| g.neighbors(u).intersection(cand).len())
        {
            size += 1;
            cand = cand.intersection(g.neighbors(v));
        }
        best = best.max(size);
    }
    best
}

/// DFS elimination-tree ranking of `G[set]` (which may be disconnected): in
/// each component the root gets the tree height and labels fall by one per
/// level. Roots are chosen to minimise each component's height. Returns the
/// labels (indexed by vertex, zero outside `set`) and the largest height.
pub(crate) fn dfs_ranking(g: &Graph, set: VertexSet) -> (Vec<u32>, u32) {
    let mut labels = vec![0u32; g.n()];
    let mut overall = 0;
    for comp in g.components_in(set) {
        let (depth, height) = comp
            .iter()
            .map(|r| dfs_tree(g, comp, r))
            .min_by_key(|(_, h)| *h)
            .expect("component is non-empty");
        for v in comp {
            labels[v] = height - depth[v] + 1;
        }
        overall = overall.max(height);
    }
    (labels, overall)
}

/// Cheap bounds for `td(G)`: the clique number and a DFS path give the lower
/// bound, the shallowest DFS elimination tree the upper.
pub fn bounds(g: &Graph) -> Bounds {
    let mut lower = 0;
    let mut upper = 0;
    for comp in g.components() {
        let heights: Vec<u32> = comp.iter().map(|r| dfs_tree(g, comp, r).1).collect();
        let longest = *heights.iter().max().expect("non-empty");
        let shallowest = *heights.iter().min().expect("non-empty");
        lower = lower
            .max(clique_number(g, comp))
            .max(path_bound(longest as usize));
        upper = upper.max(shallowest);
    }
    Bounds { lower, upper }
}
