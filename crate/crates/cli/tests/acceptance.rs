//! One PASS/FAIL line per acceptance criterion. Every comparison is exact;
//! the only tolerances are the wall-clock budgets below, which are checked
//! against the optimized test profile.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use tworow::alpha::alpha_tables;
use tworow::paths::{enumerate_paths, PathClass};
use tworow::suite::{
    a0_identity, alpha_ratio_claims, lem15, lem16, lem20, lem21, oracle_equivalence, rem12, rem20, restricted_counts,
    thm1, thm2, SuiteConfig,
};
use tworow::verify::InequalityVerdict;

const BUDGET_1: Duration = Duration::from_secs(1);
const BUDGET_2: Duration = Duration::from_secs(1);
const BUDGET_3: Duration = Duration::from_secs(1);
const BUDGET_4: Duration = Duration::from_secs(300);
const BUDGET_5: Duration = Duration::from_secs(120);
const BUDGET_6: Duration = Duration::from_secs(120);
const BUDGET_7: Duration = Duration::from_secs(120);
const BUDGET_8: Duration = Duration::from_secs(30);
const BUDGET_9: Duration = Duration::from_secs(60);
const BUDGET_10: Duration = Duration::from_secs(120);
const BUDGET_11: Duration = Duration::from_secs(30);

/// Criteria whose statement is contradicted by exact computation. They still
/// print FAIL; the target only exits nonzero when the set of failing
/// criteria differs from this one.
const KNOWN_FAILING: [usize; 1] = [8];

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome { ok, note: note.into() }
}

fn tworow(args: &[&str]) -> Value {
    let o = Command::new(env!("CARGO_BIN_EXE_tworow"))
        .args(args)
        .env_remove("TWOROW_OUTPUT_DIR")
        .output()
        .expect("binary runs");
    assert!(o.status.success(), "tworow {args:?} failed: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("one JSON object")
}

fn tworow_text(args: &[&str]) -> String {
    let o = Command::new(env!("CARGO_BIN_EXE_tworow")).args(args).output().expect("binary runs");
    String::from_utf8(o.stdout).unwrap().trim().to_string()
}

fn rows(table: &[&[u64]]) -> Value {
    json!(table.iter().map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn tally(v: &[InequalityVerdict]) -> (usize, Vec<&InequalityVerdict>) {
    (v.len(), v.iter().filter(|x| x.is_failure()).collect())
}

fn failures_note(fails: &[&InequalityVerdict], limit: usize) -> String {
    let shown: Vec<String> = fails.iter().take(limit).map(|v| format!("{} {}", v.claim, v.params_string())).collect();
    format!("{} failing: {}{}", fails.len(), shown.join(", "), if fails.len() > limit { ", ..." } else { "" })
}

fn criterion_1() -> Outcome {
    let expected: [(usize, Vec<&[u64]>); 3] = [
        (6, vec![&[1, 5, 9, 5], &[1, 4, 6, 3], &[1, 3, 4, 2], &[1, 2, 3, 1]]),
        (7, vec![&[1, 6, 14, 14], &[1, 5, 10, 9], &[1, 4, 7, 6], &[1, 3, 5, 4]]),
        (8, vec![&[1, 7, 20, 28, 14], &[1, 6, 15, 19, 9], &[1, 5, 11, 13, 6], &[1, 4, 8, 9, 4], &[1, 3, 6, 6, 3]]),
    ];
    let mut bad = Vec::new();
    for (n, table) in &expected {
        let ns = n.to_string();
        for method in ["recursive", "characters"] {
            let got = tworow(&["alpha-table", &ns, "--format", "json", "--method", method]);
            if got["rows"] != rows(table) {
                bad.push(format!("n={n} via {method}"));
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "n=6,7,8 tables exact, both methods".into() } else { bad.join("; ") })
}

fn criterion_2() -> Outcome {
    let table: Vec<&[u64]> = vec![
        &[1],
        &[1, 0],
        &[1, 1, 1],
        &[1, 2, 3, 1],
        &[1, 3, 6, 6, 3],
        &[1, 4, 10, 15, 15, 6],
        &[1, 5, 15, 29, 40, 36, 15],
        &[1, 6, 21, 49, 84, 105, 91, 36],
        &[1, 7, 28, 76, 154, 238, 280, 232, 91],
        &[1, 8, 36, 111, 258, 468, 672, 750, 603, 232],
    ];
    let both = tworow(&["last-table", "9", "--format", "json"]);
    let tri = tworow(&["last-table", "9", "--format", "json", "--method", "trinomial"]);
    let rec = tworow(&["last-table", "9", "--format", "json", "--method", "recursion"]);
    let want = rows(&table);
    let ok = both["methods_agree"] == true && tri["rows"] == want && rec["rows"] == want;
    outcome(ok, format!("trinomial matches: {}, recursion matches: {}", tri["rows"] == want, rec["rows"] == want))
}

fn criterion_3() -> Outcome {
    let p31 = tworow_text(&["immanant", "--tree", "path:4", "--shape", "3,1", "--normalized"]);
    let p22 = tworow_text(&["immanant", "--tree", "path:4", "--shape", "2,2", "--normalized"]);
    let verdict = |tree: &str| -> Vec<bool> {
        let o = Command::new(env!("CARGO_BIN_EXE_tworow"))
            .args(["verify", "two-row", "--tree", tree])
            .output()
            .expect("binary runs");
        String::from_utf8(o.stdout)
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str::<Value>(l).unwrap())
            .filter(|v| v["claim"] == "thm2")
            .map(|v| v["holds"] == true)
            .collect()
    };
    let p4 = verdict("path:4");
    let s4 = verdict("star:4");
    let ok = p31 == "1 + 3q^2 + 4/3 q^4" && p22 == "1 + 2q^2 + 2q^4" && p4 == [false] && !s4.is_empty() && s4.iter().all(|&h| h);
    outcome(ok, format!("(3,1): {p31}; (2,2): {p22}; P4 k=2 holds {p4:?}; S4 holds {s4:?}"))
}

fn criterion_4() -> Outcome {
    let cfg = SuiteConfig { n_max: 8, random_trees: 1000, random_n: 8, ..SuiteConfig::default() };
    let v = thm2(&cfg);
    let mut by_n = [BTreeSet::new(), BTreeSet::new(), BTreeSet::new(), BTreeSet::new()];
    let mut random_seen = 0usize;
    for x in &v {
        let tree = &x.params.iter().find(|(k, _)| k == "tree").unwrap().1;
        let n: usize = tree[2..tree.find(':').unwrap()].parse().unwrap();
        if n == 8 && x.params.iter().any(|(k, v)| k == "k" && v == "2") {
            random_seen += 1;
        }
        by_n[n - 5].insert(tree.clone());
    }
    let counts = [by_n[0].len(), by_n[1].len(), by_n[2].len()];
    let (total, fails) = tally(&v);
    let ok = fails.is_empty() && counts == [125, 1296, 16807] && random_seen >= 1000;
    outcome(ok, format!("{total} verdicts; trees {counts:?} + {random_seen} random n=8; {} failing", fails.len()))
}

fn criterion_5() -> Outcome {
    let cfg = SuiteConfig { n_max: 6, ..SuiteConfig::default() };
    let v = oracle_equivalence(&cfg);
    let (total, fails) = tally(&v);
    outcome(fails.is_empty() && total == 1441, format!("{total} trees n=2..6, every shape; {} mismatches", fails.len()))
}

fn criterion_6() -> Outcome {
    let cfg = SuiteConfig { n_max: 6, ..SuiteConfig::default() };
    let v = a0_identity(&cfg);
    let (total, fails) = tally(&v);
    let note = if fails.is_empty() { format!("{total} trees") } else { failures_note(&fails, 6) };
    outcome(fails.is_empty() && total == 1441, note)
}

fn criterion_7() -> Outcome {
    let cfg = SuiteConfig { n_max: 6, ..SuiteConfig::default() };
    let v = thm1(&cfg);
    let (total, fails) = tally(&v);
    let grid = cfg.q_grid.len();
    outcome(fails.is_empty() && total > 0 && grid == 41, format!("{total} verdicts over {grid} grid points; {} failing", fails.len()))
}

fn criterion_8() -> Outcome {
    let cfg = SuiteConfig::default();
    let mut ratios = alpha_ratio_claims(&cfg);
    let sr = rem12(&cfg);
    let mut notes = Vec::new();
    let mut ok = true;
    for claim in ["lem13", "lem11", "cor10"] {
        let v = &ratios[claim];
        let (total, fails) = tally(v);
        if !fails.is_empty() {
            ok = false;
            notes.push(format!("{claim}: {total} checked, {}", failures_note(&fails, usize::MAX)));
        } else {
            notes.push(format!("{claim}: {total} checked, all hold"));
        }
    }
    let (total, fails) = tally(&sr);
    ok &= fails.is_empty();
    notes.push(format!("rem12: {total} checked, {} failing", fails.len()));
    let lem9 = ratios.remove("lem9").unwrap();
    let l2_degenerate = lem9.iter().filter(|v| v.params_string().starts_with("l=2;")).all(|v| v.degenerate);
    ok &= l2_degenerate;
    notes.push(format!("lem9 l=2 degenerate: {l2_degenerate}"));
    outcome(ok, notes.join(" | "))
}

fn criterion_9() -> Outcome {
    let cfg = SuiteConfig::default();
    let callan = lem15(&cfg);
    let doubling = lem16(&cfg);
    let goldens_ok = callan.iter().filter(|v| v.params_string().starts_with("golden=")).all(|v| v.holds);
    let sizes: Vec<usize> = (0..=4).rev().map(|h| enumerate_paths(PathClass::Grp, 4, h).unwrap().len()).collect();
    let (tc, fc) = tally(&callan);
    let (td, fd) = tally(&doubling);
    let ok = goldens_ok && fc.is_empty() && fd.is_empty() && sizes == [1, 3, 6, 6, 3];
    outcome(ok, format!("callan {tc} checks, {} failing; doubling {td} checks, {} failing; GRP(4,*) sizes {sizes:?}", fc.len(), fd.len()))
}

fn criterion_10() -> Outcome {
    let cfg = SuiteConfig::default();
    let mut v = restricted_counts(&cfg, 0);
    v.extend(restricted_counts(&cfg, 1));
    let rem = rem20(&cfg);
    let (total, fails) = tally(&v);
    let a840 = alpha_tables(8)[8].get(4, 0);
    let catalan_paths = enumerate_paths(PathClass::Nlp, 8, 0).unwrap().len();
    let c4 = rem.iter().find(|x| x.params_string() == "l=4").map(|x| x.holds).unwrap_or(false);
    let ok = fails.is_empty() && rem.iter().all(|x| x.holds) && a840 == 14.into() && catalan_paths == 14 && c4;
    outcome(ok, format!("{total} counts n<=14, {} failing; alpha_(8,4,0) = {a840}; Dyck paths of length 8 = {catalan_paths}; C_4 decomposition {c4}", fails.len()))
}

fn criterion_11() -> Outcome {
    let cfg = SuiteConfig::default();
    let paths = lem20(&cfg);
    let tableaux = lem21(&cfg);
    let (tp, fp) = tally(&paths);
    let (tt, ft) = tally(&tableaux);
    outcome(fp.is_empty() && ft.is_empty(), format!("{tp} path sequences, {tt} tableau sequences, n<=14; {} failing", fp.len() + ft.len()))
}

fn main() {
    let criteria: [(usize, &str, Duration, fn() -> Outcome); 11] = [
        (1, "alpha tables n=6,7,8", BUDGET_1, criterion_1),
        (2, "last-row table l<=9, two methods", BUDGET_2, criterion_2),
        (3, "P4 immanants and two-row verdicts", BUDGET_3, criterion_3),
        (4, "two-row chain on all trees n=5..7 and 1000 random n=8", BUDGET_4, criterion_4),
        (5, "matching immanant equals permutation sum, n<=6", BUDGET_5, criterion_5),
        (6, "a-coefficient properties and reconstruction", BUDGET_6, criterion_6),
        (7, "hook chains, weak and strong, n=5,6", BUDGET_7, criterion_7),
        (8, "alpha and last-row ratio inequalities", BUDGET_8, criterion_8),
        (9, "Callan and doubling bijections", BUDGET_9, criterion_9),
        (10, "restricted path counts equal alpha, n<=14", BUDGET_10, criterion_10),
        (11, "probability monotonicity, n<=14", BUDGET_11, criterion_11),
    ];
    let mut failing = Vec::new();
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let o = run();
        let took = start.elapsed();
        let in_time = took <= budget;
        let pass = o.ok && in_time;
        if !pass {
            failing.push(id);
        }
        let timing = format!("{:.2}s of {}s", took.as_secs_f64(), budget.as_secs());
        let slow = if in_time { "" } else { " [over budget]" };
        println!("{} criterion {id:>2}: {name} ({timing}){slow} :: {}", if pass { "PASS" } else { "FAIL" }, o.note);
    }
    println!("{} of 11 criteria pass", 11 - failing.len());
    if failing != KNOWN_FAILING {
        println!("failing criteria {failing:?} differ from the known set {KNOWN_FAILING:?}");
        std::process::exit(1);
    }
}
