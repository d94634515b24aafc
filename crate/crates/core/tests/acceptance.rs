//! Runs each acceptance criterion once and prints one PASS/FAIL line per
//! criterion. Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{all_properties, td, Check};
use rand::Rng;
use tdlab::critical::{is_critical, uniqueness_report};
use tdlab::generators::{cartesian_k2, h_n, k_net};
use tdlab::iso::is_isomorphic;
use tdlab::sweep::{oracle_sweep, random_graph, random_oracle_sweep, seeded_rng, starclique_sweep};
use tdlab::witness::{hn_minor_witness, witness_hn, witness_kak2};
use tdlab::{verify_ranking, SolverConfig};

const SEED: u64 = 20240601;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hn_treedepth() -> Check {
    for n in 3..=8 {
        let (g, _) = h_n(n).unwrap();
        let t = td(&g);
        ensure(t == n as u32 + 1, || {
            format!("td(H_{n}) = {t}, expected {}", n + 1)
        })?;
    }
    Ok(())
}

fn hn_critical() -> Check {
    for n in 4..=7 {
        let (g, _) = h_n(n).unwrap();
        let r = is_critical(&g, &SolverConfig::default()).map_err(|e| e.to_string())?;
        ensure(
            r.is_conclusive() && r.is_critical && r.base_td == n as u32 + 1,
            || {
                format!(
                    "H_{n}: failing {:?}, inconclusive {:?}",
                    r.failing_steps, r.inconclusive_steps
                )
            },
        )?;
    }
    Ok(())
}

fn hn_uniqueness() -> Check {
    for n in 4..=7 {
        let (g, layout) = h_n(n).unwrap();
        let r = uniqueness_report(&g, &SolverConfig::default()).map_err(|e| e.to_string())?;
        ensure(
            r.non_one_unique == [layout.hub] && r.inconclusive.is_empty(),
            || {
                format!(
                    "H_{n}: non-1-unique {:?}, inconclusive {:?}",
                    r.non_one_unique, r.inconclusive
                )
            },
        )?;
        ensure(r.disagreements.is_empty(), || {
            format!("H_{n}: methods disagree at {:?}", r.disagreements)
        })?;
        let direct_expected = g.n() <= tdlab::critical::DIRECT_CAP;
        ensure(r.direct_ran == direct_expected, || {
            format!("H_{n}: direct_ran = {}", r.direct_ran)
        })?;
        if direct_expected {
            for row in &r.vertices {
                ensure(row.direct == Some(row.vertex != layout.hub), || {
                    format!(
                        "H_{n}: direct verdict {:?} at vertex {}",
                        row.direct, row.vertex
                    )
                })?;
            }
        }
        for row in &r.vertices {
            if let Some(w) = &row.witness {
                let valid = verify_ranking(&g, w).is_ok_and(|v| v.is_valid());
                ensure(
                    valid && w.max_label() == r.td && w.vertices_with(1).len() == 1,
                    || format!("H_{n}: bad witness {w} at vertex {}", row.vertex),
                )?;
            }
        }
    }
    Ok(())
}

fn net_treedepth() -> Check {
    for k in 1..=8 {
        let t = td(&k_net(k).unwrap());
        ensure(t == k as u32 + 1, || format!("td({k}-net) = {t}"))?;
    }
    Ok(())
}

fn prism_treedepth() -> Check {
    for a in 1..=7 {
        let g = cartesian_k2(a).unwrap();
        let t = td(&g);
        let expected = (3 * a as u32).div_ceil(2);
        ensure(t == expected, || {
            format!("td(K_{a} x K_2) = {t}, expected {expected}")
        })?;
        if a >= 3 {
            let w = witness_kak2(a).unwrap();
            let valid = verify_ranking(&g, &w).is_ok_and(|v| v.is_valid());
            ensure(valid && w.max_label() == expected, || {
                format!("witness_kak2({a}) = {w}")
            })?;
        }
    }
    Ok(())
}

fn star_clique_is_prism() -> Check {
    for n in 4..=6 {
        let (g, layout) = h_n(n).unwrap();
        let h = g.star_clique(layout.hub).unwrap();
        let iso = is_isomorphic(&h, &cartesian_k2(n - 1).unwrap()).map_err(|e| e.to_string())?;
        ensure(iso, || format!("star-clique of H_{n} at the hub"))?;
    }
    Ok(())
}

fn starclique_vs_direct() -> Check {
    let s = starclique_sweep(6, 1);
    ensure(s.passed(), || {
        format!(
            "{} disagreements, first: {}",
            s.disagreements.len(),
            s.disagreements[0]
        )
    })?;
    ensure(s.checked > 0, || "nothing checked".into())
}

fn solver_vs_brute_force() -> Check {
    let exhaustive = oracle_sweep(6, 1);
    ensure(exhaustive.passed(), || {
        format!("exhaustive: {:?}", exhaustive.disagreements)
    })?;
    let random = random_oracle_sweep(SEED, 1000, 7..=8, 1);
    ensure(random.passed(), || {
        format!("random: {:?}", random.disagreements)
    })?;
    ensure(random.checked == 1000, || {
        format!("random checked {}", random.checked)
    })
}

fn witness_suite() -> Check {
    for n in 4..=7 {
        let (g, _) = h_n(n).unwrap();
        let top = witness_hn(n).unwrap();
        let valid = verify_ranking(&g, &top).is_ok_and(|v| v.is_valid());
        ensure(valid && top.max_label() == n as u32 + 1, || {
            format!("witness_hn({n}) = {top}")
        })?;
        for step in g.one_step_minors() {
            let (m, r) = hn_minor_witness(n, step).map_err(|e| e.to_string())?;
            let valid = verify_ranking(&m, &r).is_ok_and(|v| v.is_valid());
            ensure(valid && r.max_label() <= n as u32, || {
                format!("H_{n}, {step}: {r}")
            })?;
        }
    }
    Ok(())
}

fn property_suite() -> Check {
    let mut rng = seeded_rng(SEED);
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        all_properties(&random_graph(&mut rng, n, p))?;
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("td(H_n) = n+1 for n = 3..8", hn_treedepth),
        ("H_n is critical for n = 4..7", hn_critical),
        (
            "only the hub of H_n is non-1-unique for n = 4..7",
            hn_uniqueness,
        ),
        ("td(k-net) = k+1 for k = 1..8", net_treedepth),
        (
            "td(K_a x K_2) = ceil(3a/2) for a = 1..7, witnesses for a = 3..7",
            prism_treedepth,
        ),
        (
            "star-clique of H_n at the hub is K_(n-1) x K_2 for n = 4..6",
            star_clique_is_prism,
        ),
        (
            "star-clique test = direct search on connected graphs with <= 6 vertices",
            starclique_vs_direct,
        ),
        (
            "solver = brute force on <= 6 vertices and 1000 random 7-8 vertex graphs",
            solver_vs_brute_force,
        ),
        (
            "explicit colourings of H_n and its one-step minors for n = 4..7",
            witness_suite,
        ),
        ("property suite with a fixed seed", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name}  ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}  ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
