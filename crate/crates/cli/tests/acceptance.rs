//! Acceptance checks, one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p factorlab-cli --test acceptance`. The process
//! exits non-zero if any criterion outside `KNOWN_FAILING` fails, or if a
//! known failure starts passing (so the list cannot go stale).

use std::process::Command;
use std::time::{Duration, Instant};

use factorlab::constructions::{all_connected, clique_blowup, corpus, lowerbound_family, petersen, CorpusSpec};
use factorlab::factors::{check_gf_criterion, check_near_f_criterion, find_f_factor, find_gf_factor, find_near_f_factor};
use factorlab::independent::{caro_wei, greedy_weighted_independent, independence_number};
use factorlab::rational::{ceil_q, Q};
use factorlab::resilience::{toughness, Mode};
use factorlab::theorems::{campaign, epsilon0, eval_t0, TheoremSpec};
use factorlab::treeconn::{even_subgraphs, mtc_components, omega, tree_packing, worst_omega_set};
use factorlab::{Budget, ExtQ, MultiGraph, VertexFn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criterion 2 as stated disagrees with brute force whenever f exceeds a
/// vertex degree (K_1 with f = 1 is the smallest case): the pair condition
/// holds there but no near f-factor exists. The line still prints FAIL.
const KNOWN_FAILING: &[usize] = &[2];

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn within(o: Outcome, took: Duration, limit: Duration) -> Outcome {
    if o.ok && took > limit {
        return fail(format!("{} (took {took:?}, limit {limit:?})", o.detail));
    }
    o
}

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p_percent: u32, multi: bool) -> MultiGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let copies = if multi { rng.random_range(0..3) } else { 1 };
            for _ in 0..copies {
                if rng.random_range(0..100) < p_percent {
                    edges.push((u, v));
                }
            }
        }
    }
    MultiGraph::new(n, edges).unwrap()
}

fn count_components(g: &MultiGraph) -> usize {
    let mut root: Vec<usize> = (0..g.n()).collect();
    fn find(root: &mut [usize], x: usize) -> usize {
        if root[x] != x {
            root[x] = find(root, root[x]);
        }
        root[x]
    }
    let mut count = g.n();
    for &(u, v) in g.edges() {
        let (a, b) = (find(&mut root, u), find(&mut root, v));
        if a != b {
            root[a] = b;
            count -= 1;
        }
    }
    count
}

fn petersen_constants() -> Outcome {
    let g = petersen();
    let b = Budget::default();
    let t = toughness(&g, Mode::Exact, &b).unwrap().value;
    if t != ExtQ::Finite(Q::new(4, 3)) {
        return fail(format!("toughness {t}"));
    }
    let (alpha, _) = independence_number(&g).unwrap();
    if alpha != 4 {
        return fail(format!("alpha {alpha}"));
    }
    let cw = caro_wei(&g);
    if cw != Q::new(5, 2) {
        return fail(format!("Caro-Wei {cw}"));
    }
    let euler = even_subgraphs(&g, |d| d % 2 == 0 && d >= 2, &b).unwrap();
    if euler.candidates != 64 || euler.certificate.is_some() {
        return fail(format!("Eulerian scan {} candidates, found {}", euler.candidates, euler.certificate.is_some()));
    }
    let one = VertexFn::constant_int(10, 1);
    match find_f_factor(&g, &one).unwrap() {
        Some(c) if c.audit_exact(&g, &one) => pass("4/3, alpha 4, 5/2, 64 even subgraphs none spanning, perfect matching"),
        _ => fail("no perfect matching"),
    }
}

fn near_equivalence() -> Outcome {
    let b = Budget::default();
    let graphs = all_connected(7).unwrap();
    let mut cases = 0;
    let mut bad = Vec::new();
    for g in &graphs {
        for f in 1..=3 {
            let fv = VertexFn::constant_int(g.n(), f);
            let crit = check_near_f_criterion(g, &fv, &b).unwrap().is_ok();
            let found = find_near_f_factor(g, &fv, None).unwrap();
            if let Some(c) = &found {
                assert!(c.audit_near(g, &fv), "finder returned an invalid near factor");
            }
            cases += 1;
            if crit != found.is_some() {
                bad.push((g.n(), g.m(), f, g.min_degree() as i64));
            }
        }
    }
    if bad.is_empty() {
        pass(format!("{cases} instances agree"))
    } else {
        let above = bad.iter().filter(|&&(_, _, f, d)| f > d).count();
        let first: Vec<String> = bad.iter().take(3).map(|(n, m, f, _)| format!("n={n} m={m} f={f}")).collect();
        fail(format!(
            "{} of {cases} disagree ({above} with f above the minimum degree), first: {}",
            bad.len(),
            first.join("; ")
        ))
    }
}

fn lovasz_equivalence() -> Outcome {
    let b = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = 0;
    let mut found = 0;
    for _ in 0..300 {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(20..90);
        let g = random_graph(&mut rng, n, p, false);
        let lo: Vec<i64> = (0..n).map(|v| rng.random_range(0..=g.degree(v) as i64)).collect();
        let hi: Vec<i64> = lo.iter().map(|&l| l + rng.random_range(1..=2)).collect();
        let (lo, hi) = (VertexFn::from_ints(&lo), VertexFn::from_ints(&hi));
        let crit = check_gf_criterion(&g, &lo, &hi, &b).unwrap().is_ok();
        let cert = find_gf_factor(&g, &lo, &hi).unwrap();
        if cert.as_ref().is_some_and(|c| !c.audit_range(&g, &lo, &hi)) || crit != cert.is_some() {
            bad += 1;
        }
        found += cert.is_some() as usize;
    }
    if bad == 0 {
        pass(format!("300 instances agree ({found} with a factor)"))
    } else {
        fail(format!("{bad} of 300 disagree"))
    }
}

fn greedy_certificate() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in 0..1000 {
        let n = rng.random_range(1..=14);
        let p = rng.random_range(0..100);
        let g = random_graph(&mut rng, n, p, case % 3 == 0);
        let phi: Vec<Q> = (0..n).map(|_| Q::new(rng.random_range(0..20), rng.random_range(1..5))).collect();
        let r = greedy_weighted_independent(&g, &VertexFn::new(phi.clone())).unwrap();
        let lhs: Q = phi.iter().sum();
        let rhs: Q = r.set.iter().map(|v| phi[v] * q(g.degree(v) as i64 + 1)).sum();
        if !g.is_independent(&r.set) || lhs > rhs {
            return fail(format!("case {case}: sum phi {lhs} > {rhs}"));
        }
        let unit = greedy_weighted_independent(&g, &VertexFn::constant_int(n, 1)).unwrap();
        if (unit.set.len() as i64) < ceil_q(&caro_wei(&g)) {
            return fail(format!("case {case}: |I| = {} below Caro-Wei {}", unit.set.len(), caro_wei(&g)));
        }
    }
    pass("1000 weighted cases, |I| >= ceil(Caro-Wei) on all")
}

fn tree_machinery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut packed = 0;
    for case in 0..500 {
        let n = rng.random_range(1..=9);
        let p = rng.random_range(30..100);
        let g = random_graph(&mut rng, n, p, true);
        let m = rng.random_range(1..=3);
        let r = tree_packing(&g, m);
        if !r.verify(&g) {
            return fail(format!("case {case}: packing/partition does not verify"));
        }
        packed += r.is_packing() as usize;
        let components = count_components(&g);
        if omega(&g, 1) != q(components as i64) {
            return fail(format!("case {case}: Omega_1 {} vs {components} components", omega(&g, 1)));
        }
    }
    let k4 = mtc_components(&MultiGraph::complete(4), 2);
    if k4.parts.len() != 1 {
        return fail(format!("K_4, m=2 split into {:?}", k4.parts));
    }
    for g in all_connected(7).unwrap() {
        if omega(&g, 1) != q(1) {
            return fail("Omega_1 != 1 on a connected graph");
        }
    }
    pass(format!("500 self-audited ({packed} packings), K_4 merges, Omega_1 = omega"))
}

fn worst_set_audit() -> Outcome {
    let b = Budget::default();
    let graphs = all_connected(8).unwrap();
    let mut runs = 0;
    for g in &graphs {
        for m in 1..=2 {
            let w = worst_omega_set(g, m, &b).unwrap();
            runs += 1;
            if !w.audit_ok() {
                return fail(format!("n={} edges={:?} m={m}", g.n(), g.edges()));
            }
        }
    }
    pass(format!("{runs} maximising sets audited"))
}

fn campaigns() -> Outcome {
    let b = Budget::default();
    let small = corpus(&CorpusSpec::AllConnected(7), 0).unwrap();
    let gnp = corpus(&"gnp:10:1/2:200".parse().unwrap(), 7).unwrap();
    let runs = [
        ("T-A:r=2", &small),
        ("T-MT:r=2,n=1", &gnp),
        ("T-24", &small),
        ("T-TC:m=1", &small),
    ];
    let mut notes = Vec::new();
    for (spec, graphs) in runs {
        let spec: TheoremSpec = spec.parse().unwrap();
        let r = campaign(graphs, std::slice::from_ref(&spec), &b, None, false).unwrap();
        let t = &r.summary[0].tally;
        if t.counterexample > 0 {
            return fail(format!("{} has {} counterexamples", spec.id, t.counterexample));
        }
        if t.inconclusive * 50 > t.total() {
            return fail(format!("{} inconclusive on {} of {}", spec.id, t.inconclusive, t.total()));
        }
        notes.push(format!("{} {}/{}/{}", spec.id, t.pass, t.vacuous, t.inconclusive));
    }
    pass(format!("pass/vacuous/inconclusive: {}", notes.join(", ")))
}

fn lowerbound() -> Outcome {
    let b = Budget::default();
    let (g, spec) = lowerbound_family(1, 2, 1).unwrap();
    if g.n() != 91 || !spec.matches(&g) {
        return fail(format!("{} vertices, counts match {}", g.n(), spec.matches(&g)));
    }
    let (p, _) = clique_blowup(&petersen(), 2).unwrap();
    let scan = even_subgraphs(&p, |d| d % 2 == 0 && d >= 2, &b).unwrap();
    if scan.candidates != 1 << 16 || scan.certificate.is_some() {
        return fail(format!("P scan: {} candidates, found {}", scan.candidates, scan.certificate.is_some()));
    }
    let t = toughness(&p, Mode::Falsify { samples: 1_000_000, seed: 8 }, &b).unwrap();
    match t.value.finite() {
        Some(v) if v < Q::new(3, 2) => fail(format!("sampled ratio {v} below 3/2")),
        _ => pass(format!("91 vertices, 2^16 even subgraphs none spanning, no violation found (min sampled {})", t.value)),
    }
}

fn t0_table() -> Outcome {
    let examples = [((2, 3, 0), 4), ((3, 3, 0), 3), ((2, 2, 1), 1)];
    for ((a, f, h), want) in examples {
        let got = eval_t0(q(a), f, q(h)).unwrap();
        if got != q(want) {
            return fail(format!("t0({a},{f},{h}) = {got}, want {want}"));
        }
    }
    let mut cases = 0;
    for twice_a in 3..13 {
        for f in 0..10 {
            let a = Q::new(twice_a, 2);
            let want = i64::from(twice_a % 2 == 0 && (twice_a / 2 + f) % 2 == 0);
            if epsilon0(a, f) != want {
                return fail(format!("epsilon0({a}, {f}) != {want}"));
            }
            let h = Q::new(f, 3);
            let t = eval_t0(a, f, h).unwrap();
            let base = q(f) + a - q(1);
            if t * q(4) * (a - q(1)) + q(4) * h + q(want) != base * base {
                return fail(format!("t0({a},{f},{h}) = {t} inconsistent"));
            }
            cases += 1;
        }
    }
    pass(format!("3 examples, {cases}-case parity table"))
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_factorlab")).args(args).output().expect("spawn factorlab");
    (out.status.code(), out.stdout)
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("factorlab-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("p.g6");
    let graph = graph.to_str().unwrap();
    let (code, _) = run_cli(&["gen", "--family", "blowup", "--h", "2", "--format", "graph6", "--out", graph]);
    if code != Some(0) {
        return fail("gen blowup failed");
    }
    let commands: [&[&str]; 4] = [
        &["gen", "--family", "gnp", "--n", "9", "--count", "5", "--seed", "11"],
        &["gen", "--family", "regular", "--n", "10", "--d", "3", "--count", "3", "--seed", "2"],
        &["toughness", "-i", graph, "--mode", "falsify", "--samples", "20000", "--seed", "5"],
        &["campaign", "--corpus", "gnp:8:1/2:40", "--seed", "9", "--theorems", "T-A:r=2;T-TC:m=1;T-1F", "--reports"],
    ];
    for args in commands {
        let first = run_cli(args);
        let second = run_cli(args);
        if first.0.is_none() || first.0 == Some(1) || first != second {
            let _ = std::fs::remove_dir_all(&dir);
            return fail(format!("{} not reproducible (exit {:?})", args[0], first.0));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    pass("4 seeded commands byte-identical across runs")
}

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn main() {
    let criteria: [Criterion; 10] = [
        ("Petersen constants", petersen_constants, 5),
        ("near criterion vs finder", near_equivalence, 600),
        ("Lovasz criterion vs finder", lovasz_equivalence, 300),
        ("greedy certificate", greedy_certificate, 60),
        ("tree machinery", tree_machinery, 300),
        ("worst Omega set audit", worst_set_audit, 900),
        ("theorem campaigns", campaigns, 3600),
        ("lower-bound family", lowerbound, 600),
        ("t0 evaluator", t0_table, 60),
        ("determinism", determinism, 600),
    ];
    let mut unexpected = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = within(check(), start.elapsed(), Duration::from_secs(limit));
        let took = start.elapsed();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        let known = KNOWN_FAILING.contains(&(i + 1));
        let note = if known { " (known)" } else { "" };
        println!("{tag} {:>2} {name}: {}{note} [{:.2}s]", i + 1, outcome.detail, took.as_secs_f64());
        unexpected += (outcome.ok == known) as usize;
    }
    if unexpected > 0 {
        println!("{unexpected} criteria differ from the expected outcome");
        std::process::exit(1);
    }
}
