//! Exhaustive isomorphism test for small graphs.

use crate::graph::{Graph, GraphError};

/// Largest vertex count accepted by [`is_isomorphic`].
pub const ISO_CAP: usize = 10;

/// Returns whether an edge-preserving bijection exists between `g` and `h`.
///
/// Backtracking over partial maps, vertices of `g` taken in order of
/// decreasing degree; a candidate image must have the same degree and agree
/// on adjacency with every vertex already mapped.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.n() > ISO_CAP {
            return Err(GraphError::TooLargeForIsomorphism {
                n: x.n(),
                cap: ISO_CAP,
            });
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut image = vec![usize::MAX; g.n()];
    let mut used = 0u64;
    Ok(extend(g, h, &order, 0, &mut image, &mut used))
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for x in 0..h.n() {
        if *used >> x & 1 == 1 || h.degree(x) != g.degree(u) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(u, w) == h.has_edge(x, image[w]));
        if !consistent {
            continue;
        }
        image[u] = x;
        *used |= 1 << x;
        if extend(g, h, order, depth + 1, image, used) {
            return true;
        }
        *used &= !(1 << x);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn hn3_is_c5() {
        let (h3, _) = h_n(3).unwrap();
        assert!(is_isomorphic(&h3, &cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn triangle_is_not_path() {
        assert!(!is_isomorphic(&complete(3).unwrap(), &path(3).unwrap()).unwrap());
    }

    #[test]
    fn hub_deletion_gives_net() {
        let (h4, l) = h_n(4).unwrap();
        let g = h4.delete_vertex(l.hub).unwrap();
        assert!(is_isomorphic(&g, &k_net(3).unwrap()).unwrap());
    }

    #[test]
    fn star_clique_at_hub_gives_prism() {
        for n in 4..=6 {
            let (h, l) = h_n(n).unwrap();
            let s = h.star_clique(l.hub).unwrap();
            assert!(is_isomorphic(&s, &cartesian_k2(n - 1).unwrap()).unwrap());
        }
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 versus two triangles
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&cycle(6).unwrap(), &two_triangles).unwrap());
    }

    #[test]
    fn relabelled_copy() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = Graph::from_edges(5, [(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let big = path(11).unwrap();
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(GraphError::TooLargeForIsomorphism { n: 11, .. })
        ));
    }
}
