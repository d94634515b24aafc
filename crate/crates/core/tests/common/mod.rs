#![allow(dead_code)]

use tdlab::format::{parse_graph, write_graph, GraphFormat};
use tdlab::ranking::is_feasible;
use tdlab::solver::treedepth;
use tdlab::{Graph, MinorStep};

pub type Check = Result<(), String>;

pub fn td(g: &Graph) -> u32 {
    treedepth(g).expect("no budget set").value
}

/// No one-step minor has larger tree-depth.
pub fn minor_monotone(g: &Graph) -> Check {
    let base = td(g);
    for step in g.one_step_minors() {
        // deleting the last vertex is not a graph we can represent
        if matches!(step, MinorStep::DeleteVertex(_)) && g.n() == 1 {
            continue;
        }
        let m = g.apply(step).map_err(|e| e.to_string())?;
        let t = td(&m);
        if t > base {
            return Err(format!("{g:?}: {step} raises td {base} -> {t}"));
        }
    }
    Ok(())
}

/// Tree-depth of a graph is the maximum over its components.
pub fn component_max(g: &Graph) -> Check {
    let whole = td(g);
    let parts = g
        .components()
        .into_iter()
        .map(|c| td(&g.induced(c).expect("component is non-empty")))
        .max()
        .unwrap_or(0);
    if whole != parts {
        return Err(format!("{g:?}: td {whole} but components give {parts}"));
    }
    Ok(())
}

/// The witness is a feasible labeling with exactly `value` colours, and no
/// `value - 1` ranking exists.
pub fn certificate_sound(g: &Graph) -> Check {
    let cert = treedepth(g).map_err(|e| e.to_string())?;
    let w = &cert.witness;
    if w.len() != g.n() || !is_feasible(g, w.labels()) {
        return Err(format!("{g:?}: infeasible witness {w}"));
    }
    if w.max_label() != cert.value {
        return Err(format!(
            "{g:?}: witness uses {} colours, value {}",
            w.max_label(),
            cert.value
        ));
    }
    if tdlab::treedepth_le(g, cert.value - 1).map_err(|e| e.to_string())? {
        return Err(format!("{g:?}: a {}-ranking exists", cert.value - 1));
    }
    Ok(())
}

pub fn round_trips(g: &Graph) -> Check {
    for format in [GraphFormat::EdgeList, GraphFormat::Graph6] {
        let text = write_graph(g, format);
        let back = parse_graph(&text, Some(format)).map_err(|e| format!("{format}: {e}"))?;
        if &back != g {
            return Err(format!("{format}: {g:?} came back as {back:?}"));
        }
        let sniffed = parse_graph(&text, None).map_err(|e| format!("{format} (detected): {e}"))?;
        if &sniffed != g {
            return Err(format!(
                "{format} (detected): {g:?} came back as {sniffed:?}"
            ));
        }
    }
    Ok(())
}

pub fn all_properties(g: &Graph) -> Check {
    round_trips(g)?;
    certificate_sound(g)?;
    component_max(g)?;
    minor_monotone(g)
}
