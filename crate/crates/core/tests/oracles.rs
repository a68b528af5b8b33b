//! Brute-force oracles against the fast implementations on small graphs.

use factorlab::constructions::{all_connected, named};
use factorlab::factors::{
    check_gf_criterion, check_one_factor, find_f_factor, find_gf_factor, find_near_f_factor, max_matching,
};
use factorlab::graph::{emit_graph, parse_graph, Format};
use factorlab::independent::{greedy_weighted_independent, independence_number};
use factorlab::resilience::{iso_toughness, strong_toughness, toughness, Mode};
use factorlab::treeconn::{
    even_subgraphs, is_tree_connected, mtc_components, omega, spanning_eulerian, tree_packing, EulerMode,
};
use factorlab::{Budget, ExtQ, MultiGraph, VertexFn, VertexSet, Q};
use proptest::prelude::*;

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pair = (0..n, 0..n).prop_filter("no loops", |(u, v)| u != v);
        let m = if n < 2 { 0 } else { max_m };
        proptest::collection::vec(pair, 0..=m).prop_map(move |e| MultiGraph::new(n, e).unwrap())
    })
}

fn simple(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    multigraph(max_n, max_m).prop_map(|g| g.simplify())
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|v| m >> v & 1 == 1).collect())
}

/// Components of `g` restricted to `keep`, by depth-first search.
fn parts(g: &MultiGraph, keep: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if !keep[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &(y, _) in g.incident(comp[i]) {
                if keep[y] && !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

fn keep_without(n: usize, s: &[usize]) -> Vec<bool> {
    let mut keep = vec![true; n];
    for &v in s {
        keep[v] = false;
    }
    keep
}

fn min_ratio(values: impl Iterator<Item = Q>) -> ExtQ {
    values.min().map_or(ExtQ::Infinite, ExtQ::Finite)
}

fn brute_toughness(g: &MultiGraph) -> ExtQ {
    min_ratio(subsets(g.n()).filter_map(|s| {
        let w = parts(g, &keep_without(g.n(), &s)).len();
        (w >= 2).then(|| Q::new(s.len() as i64, w as i64))
    }))
}

fn brute_iso_toughness(g: &MultiGraph) -> ExtQ {
    min_ratio(subsets(g.n()).filter_map(|s| {
        let iso = parts(g, &keep_without(g.n(), &s)).iter().filter(|c| c.len() == 1).count();
        (iso >= 1).then(|| Q::new(s.len() as i64, iso as i64))
    }))
}

/// Degree vectors of every edge subset.
fn edge_subset_degrees(g: &MultiGraph) -> impl Iterator<Item = (u32, Vec<i64>)> + '_ {
    (0u32..1 << g.m()).map(move |mask| {
        let mut d = vec![0i64; g.n()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                d[u] += 1;
                d[v] += 1;
            }
        }
        (mask, d)
    })
}

fn brute_gf(g: &MultiGraph, lo: &[i64], hi: &[i64]) -> bool {
    edge_subset_degrees(g).any(|(_, d)| d.iter().enumerate().all(|(v, &x)| lo[v] <= x && x <= hi[v]))
}

fn brute_near(g: &MultiGraph, f: &[i64]) -> bool {
    edge_subset_degrees(g).any(|(_, d)| {
        let off: Vec<usize> = (0..g.n()).filter(|&v| d[v] != f[v]).collect();
        off.is_empty() || (off.len() == 1 && d[off[0]] == f[off[0]] + 1)
    })
}

fn brute_eulerian(g: &MultiGraph) -> bool {
    edge_subset_degrees(g).any(|(mask, d)| {
        if d.iter().any(|&x| x % 2 == 1 || (g.n() > 1 && x == 0)) {
            return false;
        }
        let idx: Vec<usize> = (0..g.m()).filter(|i| mask >> i & 1 == 1).collect();
        let sub = g.edge_subgraph(&idx);
        parts(&sub, &vec![true; g.n()]).len() <= 1
    })
}

/// Set partitions of `0..n` as part labels.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut label = vec![0usize; n];
    fn rec(i: usize, used: usize, label: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == label.len() {
            out.push(label.clone());
            return;
        }
        for l in 0..=used {
            label[i] = l;
            rec(i + 1, used.max(l + 1), label, out);
        }
    }
    if n > 0 {
        rec(0, 0, &mut label, &mut out);
    }
    out
}

/// Nash-Williams and Tutte: `m` disjoint spanning trees iff every partition
/// into `p` parts is crossed by at least `m(p - 1)` edges.
fn brute_tree_connected(g: &MultiGraph, m: usize) -> bool {
    partitions(g.n()).iter().all(|label| {
        let p = label.iter().max().map_or(0, |x| x + 1);
        let crossing = g.edges().iter().filter(|&&(u, v)| label[u] != label[v]).count();
        crossing >= m * p.saturating_sub(1)
    })
}

fn induced(g: &MultiGraph, s: &[usize]) -> MultiGraph {
    g.induced(&VertexSet::new(s.iter().copied())).0
}

/// Maximal vertex sets inducing `m`-tree-connected subgraphs.
fn brute_mtc_parts(g: &MultiGraph, m: usize) -> Vec<Vec<usize>> {
    let good: Vec<Vec<usize>> = subsets(g.n())
        .filter(|s| !s.is_empty() && brute_tree_connected(&induced(g, s), m))
        .collect();
    let mut maximal: Vec<Vec<usize>> = good
        .iter()
        .filter(|s| !good.iter().any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v))))
        .cloned()
        .collect();
    maximal.sort();
    maximal
}

fn constant(n: usize, c: i64) -> Vec<i64> {
    vec![c; n]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn toughness_matches_brute_force(g in simple(7, 14)) {
        let b = Budget::default();
        prop_assert_eq!(toughness(&g, Mode::Exact, &b).unwrap().value, brute_toughness(&g));
        prop_assert_eq!(iso_toughness(&g, Mode::Exact, &b).unwrap().value, brute_iso_toughness(&g));
    }

    #[test]
    fn falsify_never_beats_exact(g in simple(7, 14), seed in any::<u64>()) {
        let b = Budget::default();
        let exact = toughness(&g, Mode::Exact, &b).unwrap().value;
        let sampled = toughness(&g, Mode::Falsify { samples: 200, seed }, &b).unwrap().value;
        prop_assert!(sampled >= exact);
    }

    #[test]
    fn strong_toughness_one_is_toughness_on_connected(g in simple(7, 14)) {
        prop_assume!(g.is_connected());
        let b = Budget::default();
        prop_assert_eq!(strong_toughness(&g, 1, &b).unwrap().value, toughness(&g, Mode::Exact, &b).unwrap().value);
    }

    #[test]
    fn factor_finders_match_brute_force(g in multigraph(6, 10), f in 0i64..4, spread in 0i64..3) {
        let n = g.n();
        let fv = constant(n, f);
        let exact = find_f_factor(&g, &VertexFn::from_ints(&fv)).unwrap();
        prop_assert_eq!(exact.is_some(), brute_gf(&g, &fv, &fv));
        if let Some(c) = &exact {
            prop_assert!(c.audit_exact(&g, &VertexFn::from_ints(&fv)));
        }
        let near = find_near_f_factor(&g, &VertexFn::from_ints(&fv), None).unwrap();
        prop_assert_eq!(near.is_some(), brute_near(&g, &fv));
        if let Some(c) = &near {
            prop_assert!(c.audit_near(&g, &VertexFn::from_ints(&fv)));
        }
        let hi = constant(n, f + spread);
        let range = find_gf_factor(&g, &VertexFn::from_ints(&fv), &VertexFn::from_ints(&hi)).unwrap();
        prop_assert_eq!(range.is_some(), brute_gf(&g, &fv, &hi));
    }

    #[test]
    fn lovasz_criterion_matches_brute_force(g in multigraph(6, 9), lo in proptest::collection::vec(0i64..3, 6), width in proptest::collection::vec(0i64..3, 6)) {
        let n = g.n();
        let lo = &lo[..n];
        let hi: Vec<i64> = lo.iter().zip(&width).map(|(l, w)| l + w).collect();
        let check = check_gf_criterion(&g, &VertexFn::from_ints(lo), &VertexFn::from_ints(&hi), &Budget::default()).unwrap();
        prop_assert_eq!(check.is_ok(), brute_gf(&g, lo, &hi));
    }

    #[test]
    fn one_factor_criterion_matches_matching(g in multigraph(8, 14)) {
        let perfect = 2 * max_matching(&g).len() == g.n();
        prop_assert_eq!(check_one_factor(&g, &Budget::default()).unwrap().is_ok(), perfect);
    }

    #[test]
    fn independence_number_matches_brute_force(g in simple(8, 16)) {
        let brute = subsets(g.n()).filter(|s| g.is_independent(&VertexSet::new(s.iter().copied()))).map(|s| s.len()).max().unwrap_or(0);
        let (alpha, set) = independence_number(&g).unwrap();
        prop_assert_eq!(alpha, brute);
        prop_assert!(g.is_independent(&set) && set.len() == alpha);
    }

    #[test]
    fn greedy_inequality(g in multigraph(9, 16), w in proptest::collection::vec(0i64..9, 9)) {
        let phi = VertexFn::from_ints(&w[..g.n()]);
        let r = greedy_weighted_independent(&g, &phi).unwrap();
        prop_assert!(g.is_independent(&r.set));
        prop_assert!(r.holds());
    }

    #[test]
    fn tree_packing_agrees_with_partitions(g in multigraph(6, 14), m in 1usize..4) {
        let r = tree_packing(&g, m);
        prop_assert!(r.verify(&g));
        prop_assert_eq!(r.is_packing(), brute_tree_connected(&g, m));
        prop_assert_eq!(is_tree_connected(&g, m), r.is_packing());
    }

    #[test]
    fn mtc_components_are_maximal_tree_connected_sets(g in multigraph(6, 12), m in 1usize..3) {
        let mut got = mtc_components(&g, m).parts;
        got.iter_mut().for_each(|p| p.sort());
        got.sort();
        prop_assert_eq!(got, brute_mtc_parts(&g, m));
    }

    #[test]
    fn omega_one_counts_components(g in multigraph(8, 12)) {
        let w = parts(&g, &vec![true; g.n()]).len();
        prop_assert_eq!(omega(&g, 1), Q::from_integer(w as i64));
    }

    #[test]
    fn eulerian_matches_brute_force(g in multigraph(6, 11)) {
        prop_assume!(g.is_connected());
        let b = Budget::default();
        let found = spanning_eulerian(&g, EulerMode::Auto, &b).unwrap();
        prop_assert_eq!(found.is_some(), brute_eulerian(&g));
        if let Some(c) = found {
            prop_assert!(c.is_subgraph_of(&g) && c.all_even() && (g.n() <= 1 || c.is_connected()));
        }
        if tree_packing(&g, 2).is_packing() {
            prop_assert!(spanning_eulerian(&g, EulerMode::Construct, &b).unwrap().is_some());
        }
    }

    #[test]
    fn even_subgraph_count_is_cycle_space_size(g in multigraph(6, 11)) {
        let comps = parts(&g, &vec![true; g.n()]).len();
        let scan = even_subgraphs(&g, |_| true, &Budget::default()).unwrap();
        prop_assert_eq!(scan.dimension, g.m() + comps - g.n());
        prop_assert_eq!(scan.candidates, 1u64 << scan.dimension);
    }

    #[test]
    fn edgelist_roundtrip(g in multigraph(9, 20)) {
        let text = emit_graph(&g, Format::Edgelist).unwrap();
        prop_assert_eq!(parse_graph(&text, Format::Edgelist).unwrap(), g);
    }

    #[test]
    fn graph6_roundtrip(g in simple(12, 40)) {
        let text = emit_graph(&g, Format::Graph6).unwrap();
        let back = parse_graph(&text, Format::Graph6).unwrap();
        prop_assert_eq!(back.edge_counts(), g.edge_counts());
    }
}

#[test]
fn connected_graph_counts() {
    let graphs = all_connected(7).unwrap();
    let counts: Vec<usize> = (1..=7).map(|n| graphs.iter().filter(|g| g.n() == n).count()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn named_graphs() {
    let p = named("petersen").unwrap();
    assert_eq!((p.n(), p.m(), p.girth()), (10, 15, Some(5)));
    assert_eq!(named("K1,3").unwrap().degrees(), [3, 1, 1, 1]);
    assert!(named("Q9").is_err());
}

#[test]
fn graph6_known_strings() {
    // C_5 and K_4 in the standard encoding
    let c5 = parse_graph("Dhc", Format::Graph6).unwrap();
    assert_eq!(c5.degrees(), [2; 5]);
    assert!(c5.is_connected());
    assert_eq!(emit_graph(&MultiGraph::complete(4), Format::Graph6).unwrap().trim(), "C~");
}
