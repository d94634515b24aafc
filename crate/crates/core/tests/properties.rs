mod common;

use proptest::prelude::*;
use proptest::test_runner::Config;
use rand::Rng;
use std::collections::HashSet;

use common::*;
use tdlab::critical::{criticality_steps, is_critical};
use tdlab::generators::{cartesian_k2, complete, cycle, h_n, path};
use tdlab::ranking::{feasible_by_paths, is_feasible};
use tdlab::sweep::verifier_sweep;
use tdlab::sweep::{connected_graphs, random_graph, seeded_rng};
use tdlab::witness::{witness_hn, witness_kak2};
use tdlab::{Graph, MinorStep, Ranking, SolverConfig, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_between(1, max_n)
}

fn graph_between(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
            let mut adj = vec![0u64; n];
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        adj[u] |= 1 << v;
                        adj[v] |= 1 << u;
                    }
                    i += 1;
                }
            }
            Graph::from_adjacency(adj).unwrap()
        })
    })
}

fn graph_and_labels(max_n: usize, max_k: u32) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(1..=max_k, n))
    })
}

fn graph_and_vertex(max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 0..n)
    })
}

fn cfg(cases: u32) -> Config {
    Config {
        cases,
        ..Config::default()
    }
}

/// Searches every graph reachable from `g` in `1..=depth` minor moves for one
/// with tree-depth at least `bound`.
fn deep_minor_at_least(g: &Graph, depth: usize, bound: u32) -> Option<Graph> {
    let mut seen = HashSet::new();
    let mut frontier = vec![g.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for h in &frontier {
            if h.n() == 1 {
                continue;
            }
            for step in h.one_step_minors() {
                let m = h.apply(step).unwrap();
                if !seen.insert(m.adjacency().to_vec()) {
                    continue;
                }
                if td(&m) >= bound {
                    return Some(m);
                }
                next.push(m);
            }
        }
        frontier = next;
    }
    None
}

proptest! {
    #![proptest_config(cfg(256))]

    #[test]
    fn adjacency_invariants(g in graph(20)) {
        prop_assert!(g.is_well_formed());
        for (u, v) in g.edges() {
            prop_assert!(u < v);
            prop_assert!(g.has_edge(v, u));
        }
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn serialization_round_trips(g in graph(64)) {
        prop_assert_eq!(round_trips(&g), Ok(()));
    }

    #[test]
    fn minor_step_counts((g, v) in graph_and_vertex(16)) {
        for (a, b) in g.edges() {
            let d = g.delete_edge(a, b).unwrap();
            prop_assert_eq!(d.n(), g.n());
            prop_assert_eq!(d.edge_count(), g.edge_count() - 1);
            let c = g.contract_edge(a, b).unwrap();
            let common = g.neighbors(a).intersection(g.neighbors(b)).len();
            prop_assert_eq!(c.n(), g.n() - 1);
            prop_assert_eq!(c.edge_count(), g.edge_count() - 1 - common);
            prop_assert!(c.is_well_formed());
        }
        if g.n() > 1 {
            let d = g.delete_vertex(v).unwrap();
            prop_assert_eq!(d.n(), g.n() - 1);
            prop_assert_eq!(d.edge_count(), g.edge_count() - g.degree(v));
        }
    }

    #[test]
    fn star_clique_edges((g, v) in graph_and_vertex(16)) {
        prop_assume!(g.n() > 1);
        let h = g.star_clique(v).unwrap();
        let back = |x: usize| if x < v { x } else { x + 1 };
        let nv = g.neighbors(v);
        for x in 0..h.n() {
            for y in x + 1..h.n() {
                let (gx, gy) = (back(x), back(y));
                let expected = g.has_edge(gx, gy) || (nv.contains(gx) && nv.contains(gy));
                prop_assert_eq!(h.has_edge(x, y), expected);
            }
        }
    }

    #[test]
    fn verifier_matches_path_definition((g, labels) in graph_and_labels(7, 4)) {
        prop_assert_eq!(is_feasible(&g, &labels), feasible_by_paths(&g, &labels));
    }

    #[test]
    fn restriction_stays_valid((g, mask) in graph(10).prop_flat_map(|g| { let n = g.n(); (Just(g), 1u64..(1 << n)) })) {
        let cert = tdlab::treedepth(&g).unwrap();
        let set = VertexSet(mask);
        let sub = g.induced(set).unwrap();
        let r: Ranking = cert.witness.restrict(set);
        prop_assert!(is_feasible(&sub, r.labels()));
    }

    #[test]
    fn certificates_are_sound(g in graph(11)) {
        prop_assert_eq!(certificate_sound(&g), Ok(()));
    }

    #[test]
    fn component_max_rule(g in graph(11)) {
        prop_assert_eq!(component_max(&g), Ok(()));
    }

    #[test]
    fn thread_count_does_not_change_results(g in graph(12)) {
        let one = tdlab::solver::treedepth_with(&g, &SolverConfig::default()).unwrap();
        let four = tdlab::solver::treedepth_with(&g, &SolverConfig::default().with_threads(4)).unwrap();
        prop_assert_eq!(one.value, four.value);
        prop_assert_eq!(one.witness, four.witness);
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn minors_never_deepen(g in graph(12)) {
        prop_assert_eq!(minor_monotone(&g), Ok(()));
    }

    /// If no single move keeps the tree-depth, no sequence of moves does.
    #[test]
    fn one_step_check_suffices(g in graph_between(2, 9)) {
        let report = is_critical(&g, &SolverConfig::default()).unwrap();
        prop_assert_eq!(report.steps.len(), criticality_steps(&g).len());
        if report.is_critical {
            prop_assert_eq!(deep_minor_at_least(&g, 2, report.base_td), None);
        }
    }
}

#[test]
fn verifier_exhaustive_small() {
    for n in 1..=5 {
        let s = verifier_sweep(n, 4);
        assert!(s.passed(), "{:?}", s.disagreements);
    }
}

#[test]
fn verifier_random_sample() {
    let mut rng = seeded_rng(0x5eed);
    for _ in 0..100_000 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let labels: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=4)).collect();
        assert_eq!(
            is_feasible(&g, &labels),
            feasible_by_paths(&g, &labels),
            "{g:?} {labels:?}"
        );
    }
}

#[test]
fn generator_witnesses_restrict() {
    let mut rng = seeded_rng(11);
    let mut cases = Vec::new();
    for n in 3..=10 {
        cases.push((h_n(n).unwrap().0, witness_hn(n).unwrap()));
        cases.push((cartesian_k2(n).unwrap(), witness_kak2(n).unwrap()));
    }
    for (g, r) in cases {
        for _ in 0..50 {
            let set = VertexSet(rng.gen_range(1..1u64 << g.n()));
            let sub = g.induced(set).unwrap();
            assert!(
                is_feasible(&sub, r.restrict(set).labels()),
                "{g:?} on {set:?}"
            );
        }
    }
}

/// Every critical connected graph on up to 6 vertices, plus some larger
/// critical families, stays critical under three-move searches.
#[test]
fn one_step_check_suffices_on_critical_graphs() {
    let config = SolverConfig::default();
    let mut critical = Vec::new();
    for n in 2..=6 {
        for g in connected_graphs(n) {
            if is_critical(&g, &config).unwrap().is_critical {
                critical.push(g);
            }
        }
    }
    assert!(critical.len() > 10);
    for g in &critical {
        assert_eq!(deep_minor_at_least(g, 3, td(g)), None, "{g:?}");
    }
    let larger = [h_n(4).unwrap().0, complete(7).unwrap(), cycle(9).unwrap()];
    for g in &larger {
        assert!(is_critical(g, &config).unwrap().is_critical, "{g:?}");
        assert_eq!(deep_minor_at_least(g, 2, td(g)), None, "{g:?}");
    }
    assert!(!is_critical(&path(3).unwrap(), &config).unwrap().is_critical);
}

#[test]
fn hn_strictly_deepens() {
    for k in 3..=7 {
        let a = td(&h_n(k).unwrap().0);
        let b = td(&h_n(k + 1).unwrap().0);
        assert!(b > a, "td(H_{}) = {b}, td(H_{k}) = {a}", k + 1);
    }
}

#[test]
fn hn_one_step_minor_list() {
    let (g, _) = h_n(4).unwrap();
    let steps = criticality_steps(&g);
    assert_eq!(steps.len(), 2 * g.edge_count());
    assert!(steps
        .iter()
        .all(|s| !matches!(s, MinorStep::DeleteVertex(_))));
}
