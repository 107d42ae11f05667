//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p permlab --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use permlab::bounds::write_sweep_csv;
use permlab::claims::{check_l1, check_l2, check_l3, check_l4, check_l5, check_sandwich, check_t32, check_t41};
use permlab::graphs::{enumerate_maximal, is_maximal, is_permutation_labeling, EnumerationCaps, VertexLabeledGraph};
use permlab::labels::{distinct_value_count, CollisionTable, TableMode};
use permlab::numtheory::{falling_factorial, m_index};
use permlab::witness::{closed_form_cardinalities, s1, s6, WitnessConfig};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1_complete_graphs() -> Outcome {
    for n in 2..=5 {
        ensure(is_permutation_labeling(&VertexLabeledGraph::complete(n)), || format!("K_{n} rejected"))?;
    }
    for n in 6..=10 {
        ensure(!is_permutation_labeling(&VertexLabeledGraph::complete(n)), || format!("K_{n} accepted"))?;
    }
    Ok(())
}

fn k6_minus(missing: [(u32, u32); 2]) -> VertexLabeledGraph {
    let mut g = VertexLabeledGraph::complete(6);
    for (u, v) in missing {
        g.remove_edge(u, v);
    }
    g
}

fn ac2_six_vertex_graphs() -> Outcome {
    let all: Vec<_> = enumerate_maximal(6, EnumerationCaps::default()).map_err(|e| e.to_string())?.collect();
    ensure(all.len() == 4, || format!("{} graphs, expected 4", all.len()))?;
    ensure(all.iter().all(|g| g.edge_count() == 13), || "edge count != 13".into())?;
    let sets: Vec<BTreeSet<_>> = all.iter().map(|g| g.edges().collect()).collect();
    for missing in [[(1, 6), (3, 6)], [(1, 6), (4, 5)]] {
        let g = k6_minus(missing);
        let edges: BTreeSet<_> = g.edges().collect();
        ensure(sets.contains(&edges), || format!("graph missing {missing:?} not enumerated"))?;
        ensure(is_maximal(&g).map_err(|e| e.to_string())?, || format!("graph missing {missing:?} not maximal"))?;
    }
    Ok(())
}

fn ac3_oracle_values() -> Outcome {
    for (n, expected) in [(5u32, 10usize), (6, 13), (7, 19)] {
        let mut values = BTreeSet::new();
        for high in 2..=n as u64 {
            for low in 1..high {
                values.insert(falling_factorial(high, low).unwrap());
            }
        }
        ensure(values.len() == expected, || format!("brute D({n}) = {}", values.len()))?;
        let d = distinct_value_count(n).map_err(|e| e.to_string())?;
        ensure(d == expected, || format!("table D({n}) = {d}"))?;
    }
    Ok(())
}

fn ac4_sandwich() -> Outcome {
    for s_min in [2, 3] {
        let report = check_sandwich(200, WitnessConfig::new(s_min, false), 300).map_err(|e| e.to_string())?;
        ensure(report.checked == 2 * 198, || format!("s_min={s_min}: checked {}", report.checked))?;
        ensure(report.counterexamples.is_empty(), || {
            format!("s_min={s_min}: {} violations, first {:?}", report.counterexamples.len(), report.counterexamples[0])
        })?;
    }
    Ok(())
}

fn ac5_closed_forms() -> Outcome {
    for n in 3..=200u32 {
        let cf = closed_form_cardinalities(n).map_err(|e| e.to_string())?;
        let s1_direct = s1(n).map_err(|e| e.to_string())?.len() as i64;
        if n >= 7 {
            ensure(cf.s1_formula == s1_direct, || format!("n={n}: s1_formula {} != {s1_direct}", cf.s1_formula))?;
        } else {
            ensure(s1_direct - cf.s1_formula == 2, || format!("n={n}: |S1| - s1_formula = {}", s1_direct - cf.s1_formula))?;
        }
        if n >= 6 {
            let s6_direct = s6(n).map_err(|e| e.to_string())?.len() as i64;
            ensure(cf.s6_formula == s6_direct, || format!("n={n}: s6_formula {} != {s6_direct}", cf.s6_formula))?;
        }
    }
    Ok(())
}

fn ac6_theorem_w_h() -> Outcome {
    let report = check_t41(5000).map_err(|e| e.to_string())?;
    let expected: u64 = (3..=5000u64).map(|n| (m_index(n).unwrap() as u64).saturating_sub(2)).sum();
    ensure(report.checked == expected, || format!("checked {} of {expected}", report.checked))?;
    ensure(report.is_verified(), || format!("{:?}", report.counterexamples.first()))
}

fn ac7_lemmas() -> Outcome {
    let reports = [
        check_l1(300),
        check_l2(300),
        check_l3(300),
        check_l4(300),
        check_l5(1000),
    ];
    for r in reports {
        let r = r.map_err(|e| e.to_string())?;
        ensure(r.checked > 0, || format!("{}: nothing checked", r.claim_id))?;
        ensure(r.is_verified(), || format!("{}: {:?}", r.claim_id, r.counterexamples.first()))?;
    }
    Ok(())
}

fn ac8_theorem_disjoint() -> Outcome {
    let cfg = WitnessConfig::default();
    let first = check_t32(300, cfg).map_err(|e| e.to_string())?;
    let again = check_t32(300, cfg).map_err(|e| e.to_string())?;
    ensure(
        serde_json::to_string(&first).unwrap() == serde_json::to_string(&again).unwrap(),
        || "report not deterministic".into(),
    )?;
    for c in &first.counterexamples {
        let which = c.params["intersection"].as_str().unwrap_or_default();
        ensure(!matches!(which, "S1∩S2" | "S1∩S3" | "S1∩S6"), || format!("unexpected {which}: {}", c.value_decimal))?;
    }
    let s4 = first
        .counterexamples
        .iter()
        .find(|c| c.params["intersection"] == "S1∩S4" && c.value_decimal == "3");
    ensure(s4.is_some_and(|c| c.params["n_first"] == 3), || "S1∩S4 witness 3 at n=3 not reported".into())
}

fn ac9_determinism() -> Outcome {
    let cfg = WitnessConfig::default();
    let mut a = Vec::new();
    let mut b = Vec::new();
    write_sweep_csv(3, 100, cfg, 300, &mut a).map_err(|e| e.to_string())?;
    write_sweep_csv(3, 100, cfg, 300, &mut b).map_err(|e| e.to_string())?;
    ensure(a == b, || "sweep output differs between runs".into())?;
    ensure(String::from_utf8_lossy(&a).lines().count() == 1 + 98 + 1, || "unexpected sweep row count".into())?;
    for n in 2..=200 {
        let exact = CollisionTable::build(n, TableMode::Exact).map_err(|e| e.to_string())?;
        let fp = CollisionTable::build(n, TableMode::Fingerprint).map_err(|e| e.to_string())?;
        ensure(exact == fp, || format!("n={n}: fingerprint table differs"))?;
    }
    Ok(())
}

struct Criterion {
    id: &'static str,
    what: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: "AC1", what: "K_n permutation iff n <= 5 (n = 2..10)", limit: secs(1), run: ac1_complete_graphs },
        Criterion { id: "AC2", what: "n = 6: four maximal graphs, both known graphs present", limit: secs(1), run: ac2_six_vertex_graphs },
        Criterion { id: "AC3", what: "D(5)=10, D(6)=13, D(7)=19", limit: secs(1), run: ac3_oracle_values },
        Criterion { id: "AC4", what: "lower_union <= D(n) <= upper, n = 3..200, s_min in {2,3}", limit: secs(60), run: ac4_sandwich },
        Criterion { id: "AC5", what: "closed-form S1/S6 cardinalities, n = 3..200", limit: None, run: ac5_closed_forms },
        Criterion { id: "AC6", what: "|W_h(n)| = i_h - h, n <= 5000", limit: secs(30), run: ac6_theorem_w_h },
        Criterion { id: "AC7", what: "L1-L4 at n_max = 300, L5 at n_max = 1000", limit: secs(60), run: ac7_lemmas },
        Criterion { id: "AC8", what: "S1 disjoint from S2, S3, S6; S1∩S4 witness 3 reported", limit: None, run: ac8_theorem_disjoint },
        Criterion { id: "AC9", what: "byte-identical sweeps; fingerprint = exact tables, n <= 200", limit: None, run: ac9_determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, c.limit) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("[PASS] {} {} ({elapsed:.2?})", c.id, c.what),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {} {} ({elapsed:.2?}): {msg}", c.id, c.what);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
