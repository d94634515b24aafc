//! End-to-end check of the `h_n` family: tree-depth `n + 1`, criticality,
//! the hub as the only non-1-unique vertex, the star-clique transform at the
//! hub, and every explicit colouring.

use std::fmt::Write as _;

use serde::Serialize;

use crate::critical::{is_critical, uniqueness_report, AnalysisError};
use crate::generators::{cartesian_k2, h_n, k_net};
use crate::graph::GraphError;
use crate::iso::{is_isomorphic, ISO_CAP};
use crate::ranking::verify_ranking;
use crate::solver::{Solver, SolverConfig};
use crate::witness::{hn_minor_witness, witness_hn};

pub const REPRODUCE_MIN: usize = 4;
pub const REPRODUCE_MAX: usize = 8;

/// One row per `n`. Stable field names: `n`, `td`, `critical`,
/// `non_1_unique`, `starclique_td`, `witnesses_ok`; the remaining fields
/// carry expectations and the derived pass flags. `None` marks a quantity the
/// solver could not settle within budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HnRow {
    pub n: usize,
    pub td: Option<u32>,
    pub td_expected: u32,
    pub critical: Option<bool>,
    pub non_1_unique: Option<Vec<usize>>,
    pub starclique_td: Option<u32>,
    pub starclique_td_expected: u32,
    /// Star-clique at the hub is isomorphic to `K_{n-1} □ K_2`; `None`
    /// above the isomorphism cap.
    pub starclique_is_prism: Option<bool>,
    /// Deleting the hub leaves an `(n-1)`-net; `None` above the cap.
    pub hub_deletion_is_net: Option<bool>,
    /// `witness_hn(n)` is an `(n+1)`-ranking and every minor colouring is a
    /// valid ranking with at most `n` colours.
    pub witnesses_ok: bool,
    pub complete: bool,
    pub all_ok: bool,
}

fn iso_or_skip(a: &crate::Graph, b: &crate::Graph) -> Result<Option<bool>, GraphError> {
    if a.n() > ISO_CAP || b.n() > ISO_CAP {
        Ok(None)
    } else {
        is_isomorphic(a, b).map(Some)
    }
}

pub fn witnesses_ok(n: usize) -> Result<bool, GraphError> {
    let (g, _) = h_n(n)?;
    let top = witness_hn(n)?;
    let mut ok =
        top.max_label() == n as u32 + 1 && verify_ranking(&g, &top).is_ok_and(|v| v.is_valid());
    for step in g.one_step_minors() {
        let (minor, r) = hn_minor_witness(n, step)?;
        ok &= r.max_label() <= n as u32 && verify_ranking(&minor, &r).is_ok_and(|v| v.is_valid());
    }
    Ok(ok)
}

pub fn hn_row(n: usize, config: &SolverConfig) -> Result<HnRow, AnalysisError> {
    let (g, layout) = h_n(n)?;
    let td_expected = n as u32 + 1;
    let starclique_td_expected = (3 * (n as u32 - 1)).div_ceil(2);

    let td = Solver::new(&g, config.clone())
        .treedepth()
        .ok()
        .map(|c| c.value);
    let critical = match is_critical(&g, config) {
        Ok(r) if r.is_conclusive() => Some(r.is_critical),
        Ok(_) | Err(AnalysisError::Solver(_)) => None,
        Err(e) => return Err(e),
    };
    let (non_1_unique, starclique_td) = match uniqueness_report(&g, config) {
        Ok(r) => {
            let hub_td = r.vertices[layout.hub].starclique_td;
            let set = r.inconclusive.is_empty().then_some(r.non_one_unique);
            (set, hub_td)
        }
        Err(AnalysisError::Solver(_)) => (None, None),
        Err(e) => return Err(e),
    };
    let transform = g.star_clique(layout.hub)?;
    let starclique_is_prism = iso_or_skip(&transform, &cartesian_k2(n - 1)?)?;
    let hub_deletion_is_net = iso_or_skip(&g.delete_vertex(layout.hub)?, &k_net(n - 1)?)?;
    let witnesses_ok = witnesses_ok(n)?;

    let complete =
        td.is_some() && critical.is_some() && non_1_unique.is_some() && starclique_td.is_some();
    let all_ok = complete
        && td == Some(td_expected)
        && critical == Some(true)
        && non_1_unique.as_deref() == Some(&[layout.hub][..])
        && starclique_td == Some(starclique_td_expected)
        && starclique_is_prism != Some(false)
        && hub_deletion_is_net != Some(false)
        && witnesses_ok;
    Ok(HnRow {
        n,
        td,
        td_expected,
        critical,
        non_1_unique,
        starclique_td,
        starclique_td_expected,
        starclique_is_prism,
        hub_deletion_is_net,
        witnesses_ok,
        complete,
        all_ok,
    })
}

/// Rows for `n = 4..=n_max`.
pub fn reproduce_theorem4(
    n_max: usize,
    config: &SolverConfig,
) -> Result<Vec<HnRow>, AnalysisError> {
    if !(REPRODUCE_MIN..=REPRODUCE_MAX).contains(&n_max) {
        return Err(GraphError::Parameter {
            family: "reproduce",
            value: n_max,
            min: REPRODUCE_MIN,
            max: REPRODUCE_MAX,
        }
        .into());
    }
    (REPRODUCE_MIN..=n_max).map(|n| hn_row(n, config)).collect()
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "?".to_string(), T::to_string)
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

/// Plain-text table, one line per row.
pub fn render_table(rows: &[HnRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>2}  {:>7}  {:>8}  {:>12}  {:>13}  {:>5}  {:>3}  {:>9}  status",
        "n", "td", "critical", "non-1-unique", "td(starclq)", "prism", "net", "witnesses"
    );
    for r in rows {
        let non = match &r.non_1_unique {
            Some(set) => format!(
                "{{{}}}",
                set.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            None => "?".into(),
        };
        let status = if r.all_ok {
            "ok"
        } else if !r.complete {
            "incomplete"
        } else {
            "MISMATCH"
        };
        let _ = writeln!(
            out,
            "{:>2}  {:>7}  {:>8}  {:>12}  {:>13}  {:>5}  {:>3}  {:>9}  {}",
            r.n,
            format!("{}/{}", cell(&r.td), r.td_expected),
            yes_no(r.critical),
            non,
            format!("{}/{}", cell(&r.starclique_td), r.starclique_td_expected),
            yes_no(r.starclique_is_prism),
            yes_no(r.hub_deletion_is_net),
            if r.witnesses_ok { "valid" } else { "INVALID" },
            status
        );
    }
    out
}
