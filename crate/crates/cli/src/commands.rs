use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use serde::Serialize;
use serde_json::json;
use tdlab::critical::{
    is_critical, uniqueness_report, CriticalityReport, UniquenessReport, VertexUniqueness,
};
use tdlab::format::{parse_graph, write_graph, GraphFormat};
use tdlab::generators::{cartesian_k2, complete, cycle, h_n, k_net, path};
use tdlab::reproduce::{render_table, reproduce_theorem4};
use tdlab::sweep::{
    oracle_sweep, random_oracle_sweep, starclique_sweep, verifier_sweep, SweepSummary,
};
use tdlab::{verify_ranking, Graph, Ranking, Solver, SolverError, TdCertificate, Verification};

use crate::error::{CliError, EXIT_BUDGET, EXIT_FAILED};
use crate::{Cli, Command, Family, Global};

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Td { input } => td(g, input),
        Command::Verify { graph, ranking } => verify(g, graph, ranking),
        Command::Gen { family, size } => generate(g, *family, *size),
        Command::Critical { input } => critical(g, input),
        Command::Unique1 { input, vertex } => unique1(g, input, *vertex),
        Command::Reproduce { n_max } => reproduce(g, *n_max as usize),
        Command::Selftest => selftest(g),
    }
}

fn read_text(path: &Path) -> Result<(String, String), CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("stdin: {e}")))?;
        Ok(("stdin".into(), text))
    } else {
        let name = path.display().to_string();
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{name}: {e}")))?;
        Ok((name, text))
    }
}

fn read_graph(global: &Global, path: &Path) -> Result<Graph, CliError> {
    let (name, text) = read_text(path)?;
    parse_graph(&text, global.graph_format()).map_err(|e| CliError::parse(&name, e))
}

fn read_ranking(path: &Path) -> Result<Ranking, CliError> {
    let (name, text) = read_text(path)?;
    let parsed = if text.contains(':') {
        text.parse::<Ranking>()
    } else {
        text.split_whitespace()
            .map(|t| {
                t.parse::<u32>().map_err(|_| {
                    tdlab::ranking::RankingError::Malformed(format!("bad label '{t}'"))
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .and_then(Ranking::from_labels)
    };
    parsed.map_err(|e| CliError::ranking(&name, e))
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn exhausted(global: &Global, e: &SolverError) -> Result<u8, CliError> {
    let SolverError::Exhausted { bounds, stats } = e;
    if global.json {
        print_json(&json!({ "exhausted": true, "bounds": bounds, "stats": stats }))?;
    } else {
        println!(
            "td: between {} and {} (budget exhausted)",
            bounds.lower, bounds.upper
        );
        println!("nodes: {}", stats.nodes);
    }
    Ok(EXIT_BUDGET)
}

fn td(global: &Global, input: &Path) -> Result<u8, CliError> {
    let g = read_graph(global, input)?;
    let solver = Solver::new(&g, global.solver_config());
    let cert: TdCertificate = match solver.treedepth() {
        Ok(c) => c,
        Err(e) => return exhausted(global, &e),
    };
    if global.json {
        print_json(&cert)?;
    } else {
        println!("td: {}", cert.value);
        println!("witness: {}", cert.witness);
        println!(
            "nodes: {}  memo entries: {}  elapsed: {:.3} ms",
            cert.stats.nodes,
            cert.stats.memo_entries,
            cert.stats.elapsed.as_secs_f64() * 1e3
        );
    }
    Ok(0)
}

fn verify(global: &Global, graph: &Path, ranking: &Path) -> Result<u8, CliError> {
    if graph.as_os_str() == "-" && ranking.as_os_str() == "-" {
        return Err(CliError::usage(
            "graph and ranking cannot both come from stdin",
        ));
    }
    let g = read_graph(global, graph)?;
    let r = read_ranking(ranking)?;
    let verdict = verify_ranking(&g, &r).map_err(|e| CliError::input(e.to_string()))?;
    if global.json {
        print_json(&json!({
            "valid": verdict.is_valid(),
            "colours": r.max_label(),
            "violation": verdict.violation(),
        }))?;
    } else {
        match &verdict {
            Verification::Valid => println!("valid"),
            Verification::Invalid(v) => println!("invalid: {v}"),
        }
    }
    Ok(if verdict.is_valid() { 0 } else { EXIT_FAILED })
}

fn generate(global: &Global, family: Family, size: usize) -> Result<u8, CliError> {
    let g = match family {
        Family::Hn => h_n(size)?.0,
        Family::Knet => k_net(size)?,
        Family::Kak2 => cartesian_k2(size)?,
        Family::Complete => complete(size)?,
        Family::Cycle => cycle(size)?,
        Family::Path => path(size)?,
    };
    let format = global.graph_format().unwrap_or(GraphFormat::EdgeList);
    if global.json {
        print_json(
            &json!({ "n": g.n(), "edges": g.edges(), "graph6": write_graph(&g, GraphFormat::Graph6).trim_end() }),
        )?;
    } else {
        print!("{}", write_graph(&g, format));
    }
    Ok(0)
}

fn critical_text(r: &CriticalityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "td: {}", r.base_td);
    for s in &r.steps {
        let td = s.td.map_or_else(|| "?".to_string(), |t| t.to_string());
        let mark = match s.td {
            Some(t) if t >= r.base_td => "  keeps td",
            None => "  budget exhausted",
            _ => "",
        };
        let _ = writeln!(out, "  {:<16} td {td}{mark}", s.step.to_string());
    }
    let verdict = if !r.is_conclusive() {
        "inconclusive"
    } else if r.is_critical {
        "yes"
    } else {
        "no"
    };
    let _ = writeln!(out, "critical: {verdict}");
    out
}

fn critical(global: &Global, input: &Path) -> Result<u8, CliError> {
    let g = read_graph(global, input)?;
    let r = is_critical(&g, &global.solver_config())?;
    if global.json {
        print_json(&r)?;
    } else {
        print!("{}", critical_text(&r));
    }
    Ok(if r.is_conclusive() { 0 } else { EXIT_BUDGET })
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn set_text(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn vertex_line(row: &VertexUniqueness) -> String {
    let verdict = match row.one_unique {
        Some(true) => "1-unique",
        Some(false) => "non-1-unique",
        None => "inconclusive",
    };
    let star = row
        .starclique_td
        .map_or_else(|| "?".to_string(), |t| t.to_string());
    let witness = row
        .witness
        .as_ref()
        .map_or_else(String::new, |w| format!("  witness {w}"));
    format!(
        "vertex {}: {verdict}  (star-clique td {star}, direct {}){witness}",
        row.vertex,
        yes_no(row.direct)
    )
}

fn uniqueness_text(r: &UniquenessReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "td: {}", r.td);
    for row in &r.vertices {
        let _ = writeln!(out, "{}", vertex_line(row));
    }
    if !r.direct_ran {
        let _ = writeln!(
            out,
            "direct search skipped: more than {} vertices",
            tdlab::critical::DIRECT_CAP
        );
    }
    if !r.disagreements.is_empty() {
        let _ = writeln!(out, "methods disagree at: {}", set_text(&r.disagreements));
    }
    if !r.inconclusive.is_empty() {
        let _ = writeln!(out, "inconclusive: {}", set_text(&r.inconclusive));
    }
    let _ = writeln!(out, "non-1-unique: {}", set_text(&r.non_one_unique));
    out
}

fn unique1(global: &Global, input: &Path, vertex: Option<usize>) -> Result<u8, CliError> {
    let g = read_graph(global, input)?;
    if let Some(v) = vertex {
        if v >= g.n() {
            return Err(CliError::usage(format!(
                "vertex {v} does not exist in a graph on {} vertices",
                g.n()
            )));
        }
    }
    let r = uniqueness_report(&g, &global.solver_config())?;
    let code = if !r.disagreements.is_empty() {
        EXIT_FAILED
    } else if !r.inconclusive.is_empty() && vertex.is_none_or(|v| r.inconclusive.contains(&v)) {
        EXIT_BUDGET
    } else {
        0
    };
    match (vertex, global.json) {
        (Some(v), true) => print_json(&r.vertices[v])?,
        (Some(v), false) => println!("{}", vertex_line(&r.vertices[v])),
        (None, true) => print_json(&r)?,
        (None, false) => print!("{}", uniqueness_text(&r)),
    }
    Ok(code)
}

fn reproduce(global: &Global, n_max: usize) -> Result<u8, CliError> {
    let rows = reproduce_theorem4(n_max, &global.solver_config())?;
    if global.json {
        print_json(&rows)?;
    } else {
        print!("{}", render_table(&rows));
    }
    Ok(if rows.iter().all(|r| r.all_ok) {
        0
    } else if rows.iter().any(|r| r.complete && !r.all_ok) {
        EXIT_FAILED
    } else {
        EXIT_BUDGET
    })
}

fn selftest(global: &Global) -> Result<u8, CliError> {
    let threads = global.threads as usize;
    let suites: Vec<(&str, SweepSummary)> = vec![
        (
            "solver = brute force, connected graphs <= 5 vertices",
            oracle_sweep(5, threads),
        ),
        (
            "solver = brute force, 200 random graphs on 4-5 vertices",
            random_oracle_sweep(global.seed, 200, 4..=5, threads),
        ),
        (
            "star-clique test = direct search, connected graphs <= 5 vertices",
            starclique_sweep(5, threads),
        ),
        (
            "component criterion = path definition, <= 4 vertices, <= 4 colours",
            verifier_all(4, 4),
        ),
    ];
    let passed = suites.iter().all(|(_, s)| s.passed());
    if global.json {
        let list: Vec<_> = suites
            .iter()
            .map(|(name, s)| json!({ "name": name, "checked": s.checked, "disagreements": s.disagreements }))
            .collect();
        print_json(&json!({ "seed": global.seed, "suites": list, "passed": passed }))?;
    } else {
        for (name, s) in &suites {
            let status = if s.passed() { "pass" } else { "FAIL" };
            println!("{status}  {name}  ({} checked)", s.checked);
            for d in s.disagreements.iter().take(5) {
                println!("      {d}");
            }
        }
        println!("selftest: {}", if passed { "pass" } else { "FAIL" });
    }
    Ok(if passed { 0 } else { EXIT_FAILED })
}

fn verifier_all(max_n: usize, max_k: u32) -> SweepSummary {
    let mut total = SweepSummary::default();
    for n in 1..=max_n {
        let s = verifier_sweep(n, max_k);
        total.checked += s.checked;
        total.disagreements.extend(s.disagreements);
    }
    total
}
