//! Minor-criticality and 1-uniqueness.
//!
//! A graph is critical when every proper minor has smaller tree-depth. Every
//! proper minor is reachable through a first move that deletes or contracts
//! an edge, or deletes a vertex; deleting a vertex with an incident edge `e`
//! yields a minor of `G - e`, and tree-depth is minor-monotone. So it is
//! enough to check `G - e` and `G / e` for every edge, plus `G - v` for
//! isolated vertices `v`.
//!
//! A vertex `v` is 1-unique when some optimal ranking gives label 1 to `v`
//! alone. Two independent tests are provided:
//!
//! * star-clique: `v` is 1-unique iff the star-clique transform at `v` has
//!   smaller tree-depth than `G`;
//! * direct: enumerate labelings with `v` at 1 and every other vertex in
//!   `2..=td(G)`, where `td(G)` also comes from enumeration.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, MinorStep};
use crate::ranking::{is_feasible, Ranking};
use crate::solver::{Solver, SolverConfig, SolverError};

/// Largest graph handled by [`one_unique_direct`].
pub const DIRECT_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{what} needs at least {min} vertices, got {n}")]
    TooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },
    #[error("{what} is capped at {cap} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
}

/// Runs `f` on a pool of `threads` workers, or inline for one thread.
pub(crate) fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads <= 1 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Maps `f` over `items`, in parallel when `threads > 1`; output order
/// follows `items`.
pub(crate) fn map_items<I: Sync, T: Send>(
    threads: usize,
    items: &[I],
    f: impl Fn(&I) -> T + Sync + Send,
) -> Vec<T> {
    if threads <= 1 {
        items.iter().map(f).collect()
    } else {
        with_threads(threads, || items.par_iter().map(f).collect())
    }
}

fn inner_config(config: &SolverConfig) -> SolverConfig {
    SolverConfig {
        threads: 1,
        ..config.clone()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepOutcome {
    pub step: MinorStep,
    /// `None` when the solver ran out of budget on this minor.
    pub td: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub base_td: u32,
    /// One entry per checked move, edges in lexicographic order (deletion
    /// before contraction), then isolated-vertex deletions.
    pub steps: Vec<StepOutcome>,
    /// True iff no move keeps the tree-depth and none is inconclusive.
    pub is_critical: bool,
    pub failing_steps: Vec<MinorStep>,
    pub inconclusive_steps: Vec<MinorStep>,
}

impl CriticalityReport {
    pub fn is_conclusive(&self) -> bool {
        self.inconclusive_steps.is_empty()
    }
}

/// The moves [`is_critical`] checks.
pub fn criticality_steps(g: &Graph) -> Vec<MinorStep> {
    let mut steps = Vec::new();
    for (u, v) in g.edges() {
        steps.push(MinorStep::DeleteEdge(u, v));
        steps.push(MinorStep::ContractEdge(u, v));
    }
    steps.extend(
        (0..g.n())
            .filter(|&v| g.degree(v) == 0)
            .map(MinorStep::DeleteVertex),
    );
    steps
}

pub fn is_critical(g: &Graph, config: &SolverConfig) -> Result<CriticalityReport, AnalysisError> {
    if g.n() < 2 {
        return Err(AnalysisError::TooSmall {
            what: "criticality check",
            n: g.n(),
            min: 2,
        });
    }
    let base_td = Solver::new(g, config.clone()).treedepth()?.value;
    let steps = criticality_steps(g);
    let inner = inner_config(config);
    let outcomes = map_items(
        config.threads,
        &steps,
        |&step| -> Result<StepOutcome, GraphError> {
            let minor = g.apply(step)?;
            let td = Solver::new(&minor, inner.clone())
                .treedepth()
                .ok()
                .map(|c| c.value);
            Ok(StepOutcome { step, td })
        },
    )
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let failing_steps: Vec<MinorStep> = outcomes
        .iter()
        .filter(|o| o.td.is_some_and(|t| t >= base_td))
        .map(|o| o.step)
        .collect();
    let inconclusive_steps: Vec<MinorStep> = outcomes
        .iter()
        .filter(|o| o.td.is_none())
        .map(|o| o.step)
        .collect();
    Ok(CriticalityReport {
        base_td,
        is_critical: failing_steps.is_empty() && inconclusive_steps.is_empty(),
        steps: outcomes,
        failing_steps,
        inconclusive_steps,
    })
}

/// Outcome of the star-clique test at one vertex.
#[derive(Debug, Clone)]
pub struct StarCliqueCheck {
    pub td: u32,
    pub starclique_td: u32,
    /// An optimal ranking of `G` with `v` alone at label 1, present iff
    /// `starclique_td < td`.
    pub witness: Option<Ranking>,
}

impl StarCliqueCheck {
    pub fn one_unique(&self) -> bool {
        self.starclique_td < self.td
    }
}

/// Star-clique test with the tree-depth of `G` already known.
///
/// When it succeeds, shifting an optimal ranking of the transform up by one
/// and giving `v` label 1 is an optimal ranking of `G`: a path through `v`
/// enters and leaves via two neighbours of `v`, which are adjacent after the
/// transform, so any offending path in `G` shortcuts to one in the transform.
pub fn starclique_check_with_td(
    g: &Graph,
    v: usize,
    td: u32,
    config: &SolverConfig,
) -> Result<StarCliqueCheck, AnalysisError> {
    if g.n() < 2 {
        return Err(AnalysisError::TooSmall {
            what: "star-clique test",
            n: g.n(),
            min: 2,
        });
    }
    let h = g.star_clique(v)?;
    let cert = Solver::new(&h, config.clone()).treedepth()?;
    let witness = (cert.value < td).then(|| {
        let mut labels = Vec::with_capacity(g.n());
        labels.extend(cert.witness.labels()[..v].iter().map(|l| l + 1));
        labels.push(1);
        labels.extend(cert.witness.labels()[v..].iter().map(|l| l + 1));
        Ranking::new(td, labels).expect("shifted labels lie in 1..=td")
    });
    Ok(StarCliqueCheck {
        td,
        starclique_td: cert.value,
        witness,
    })
}

pub fn starclique_check(
    g: &Graph,
    v: usize,
    config: &SolverConfig,
) -> Result<StarCliqueCheck, AnalysisError> {
    if v >= g.n() {
        return Err(GraphError::NoSuchVertex {
            vertex: v,
            n: g.n(),
        }
        .into());
    }
    let td = Solver::new(g, config.clone()).treedepth()?.value;
    starclique_check_with_td(g, v, td, config)
}

/// `td(star_clique(G, v)) < td(G)`.
pub fn one_unique_starclique(
    g: &Graph,
    v: usize,
    config: &SolverConfig,
) -> Result<bool, AnalysisError> {
    Ok(starclique_check(g, v, config)?.one_unique())
}

fn check_direct_size(g: &Graph) -> Result<(), AnalysisError> {
    if g.n() > DIRECT_CAP {
        return Err(AnalysisError::TooLarge {
            what: "direct 1-uniqueness search",
            n: g.n(),
            cap: DIRECT_CAP,
        });
    }
    Ok(())
}

/// Fewest colours in a feasible labeling, by enumeration. Only proper
/// colourings are generated; feasibility of complete labelings uses the
/// component criterion.
pub fn min_colors_by_enumeration(g: &Graph) -> Result<u32, AnalysisError> {
    check_direct_size(g)?;
    let mut labels = vec![0u32; g.n()];
    for k in 1..=g.n() as u32 {
        if search(g, &mut labels, 0, None, k) {
            return Ok(k);
        }
    }
    unreachable!("an injective labeling is always feasible")
}

/// A feasible `k`-labeling with `v` alone at label 1, if one exists.
pub fn unique_one_labeling(g: &Graph, v: usize, k: u32) -> Result<Option<Ranking>, AnalysisError> {
    check_direct_size(g)?;
    if v >= g.n() {
        return Err(GraphError::NoSuchVertex {
            vertex: v,
            n: g.n(),
        }
        .into());
    }
    let mut labels = vec![0u32; g.n()];
    Ok(search(g, &mut labels, 0, Some(v), k)
        .then(|| Ranking::new(k, labels).expect("labels within 1..=k")))
}

fn search(g: &Graph, labels: &mut [u32], x: usize, pinned: Option<usize>, k: u32) -> bool {
    if x == g.n() {
        return is_feasible(g, labels);
    }
    let choices = match pinned {
        Some(p) if p == x => 1..=1,
        Some(_) => 2..=k,
        None => 1..=k,
    };
    for l in choices {
        if g.neighbors(x).iter().any(|y| y < x && labels[y] == l) {
            continue;
        }
        labels[x] = l;
        if search(g, labels, x + 1, pinned, k) {
            return true;
        }
    }
    labels[x] = 0;
    false
}

/// An optimal ranking of `g` in which `v` alone has label 1, found by
/// exhaustive search; `None` when no such ranking exists.
pub fn one_unique_direct(g: &Graph, v: usize) -> Result<Option<Ranking>, AnalysisError> {
    let k = min_colors_by_enumeration(g)?;
    unique_one_labeling(g, v, k)
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexUniqueness {
    pub vertex: usize,
    /// `None` when neither method reached a verdict.
    pub one_unique: Option<bool>,
    pub starclique: Option<bool>,
    pub starclique_td: Option<u32>,
    /// `None` when the graph is too large for the direct search.
    pub direct: Option<bool>,
    pub witness: Option<Ranking>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniquenessReport {
    pub td: u32,
    pub vertices: Vec<VertexUniqueness>,
    /// `Some(true)` iff every vertex is 1-unique.
    pub one_unique: Option<bool>,
    pub non_one_unique: Vec<usize>,
    pub inconclusive: Vec<usize>,
    pub direct_ran: bool,
    /// Vertices where the two methods disagree.
    pub disagreements: Vec<usize>,
}

/// Star-clique test at every vertex, plus the direct search when the graph
/// has at most [`DIRECT_CAP`] vertices.
pub fn uniqueness_report(
    g: &Graph,
    config: &SolverConfig,
) -> Result<UniquenessReport, AnalysisError> {
    if g.n() < 2 {
        return Err(AnalysisError::TooSmall {
            what: "uniqueness report",
            n: g.n(),
            min: 2,
        });
    }
    let td = Solver::new(g, config.clone()).treedepth()?.value;
    let direct_k = if g.n() <= DIRECT_CAP {
        Some(min_colors_by_enumeration(g)?)
    } else {
        None
    };
    let inner = inner_config(config);
    let vertices: Vec<usize> = (0..g.n()).collect();
    let rows = map_items(
        config.threads,
        &vertices,
        |&v| -> Result<VertexUniqueness, AnalysisError> {
            let star = match starclique_check_with_td(g, v, td, &inner) {
                Ok(c) => Some(c),
                Err(AnalysisError::Solver(_)) => None,
                Err(e) => return Err(e),
            };
            let direct = match direct_k {
                Some(k) => Some(unique_one_labeling(g, v, k)?),
                None => None,
            };
            let starclique = star.as_ref().map(StarCliqueCheck::one_unique);
            let starclique_td = star.as_ref().map(|s| s.starclique_td);
            let direct_verdict = direct.as_ref().map(Option::is_some);
            let witness = star.and_then(|s| s.witness).or_else(|| direct.flatten());
            Ok(VertexUniqueness {
                vertex: v,
                one_unique: starclique.or(direct_verdict),
                starclique,
                starclique_td,
                direct: direct_verdict,
                witness,
            })
        },
    )
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble_report(td, direct_k.is_some(), rows))
}

fn assemble_report(td: u32, direct_ran: bool, rows: Vec<VertexUniqueness>) -> UniquenessReport {
    let non_one_unique = rows
        .iter()
        .filter(|r| r.one_unique == Some(false))
        .map(|r| r.vertex)
        .collect::<Vec<_>>();
    let inconclusive = rows
        .iter()
        .filter(|r| r.one_unique.is_none())
        .map(|r| r.vertex)
        .collect::<Vec<_>>();
    let disagreements = rows
        .iter()
        .filter(|r| matches!((r.starclique, r.direct), (Some(a), Some(b)) if a != b))
        .map(|r| r.vertex)
        .collect();
    let one_unique = if !non_one_unique.is_empty() {
        Some(false)
    } else if inconclusive.is_empty() {
        Some(true)
    } else {
        None
    };
    UniquenessReport {
        td,
        vertices: rows,
        one_unique,
        non_one_unique,
        inconclusive,
        direct_ran,
        disagreements,
    }
}
