use factorlab::constructions::{corpus, named, CorpusSpec};
use factorlab::theorems::{
    audit, campaign, check_hypothesis, registry, replay_witness, verify_conclusion, ConclusionStatus, TheoremKind,
    TheoremSpec, ThresholdParams, Verdict,
};
use factorlab::{Budget, MultiGraph};
use proptest::prelude::*;

fn spec(s: &str) -> TheoremSpec {
    s.parse().unwrap()
}

fn run(g: &MultiGraph, s: &str) -> factorlab::theorems::CaseReport {
    let t = spec(s);
    audit(g, "g", &t.id, &t.params, &Budget::default()).unwrap()
}

#[test]
fn worked_hypotheses() {
    let b = Budget::default();
    let k7 = MultiGraph::complete(7);
    let tc = spec("T-TC:m=2");
    assert!(check_hypothesis(&k7, "T-TC", &tc.params, &b).unwrap().holds);

    let star = named("K1,3").unwrap();
    let mt = spec("T-MT:r=1,n=1");
    let h = check_hypothesis(&star, "T-MT", &mt.params, &b).unwrap();
    assert!(!h.holds);
    assert!(h.witness.unwrap().is_violation());

    // S = {} instance of the iso condition with eps = 1, f = 1 reads omega < 2
    let two = MultiGraph::empty(2);
    let h = check_hypothesis(&two, "T-IF", &spec("T-IF:f=1,eps=1").params, &b).unwrap();
    assert!(!h.holds);
}

#[test]
fn worked_audits() {
    assert_eq!(run(&MultiGraph::complete(7), "T-A:r=2").verdict, Verdict::Pass);
    let star = run(&named("K1,3").unwrap(), "T-A:r=2");
    assert_eq!(star.verdict, Verdict::Vacuous);
    assert_eq!(star.conclusion.status, ConclusionStatus::Skipped);
}

#[test]
fn worked_conclusions() {
    let b = Budget::default();
    let p = ThresholdParams::default();
    let k7 = verify_conclusion(&MultiGraph::complete(7), "T-A", &p, &b).unwrap();
    assert!(k7.found && k7.certificate.is_some());
    let petersen = verify_conclusion(&named("petersen").unwrap(), "T-24", &p, &b).unwrap();
    assert!(!petersen.found);
    let k5 = verify_conclusion(&MultiGraph::complete(5), "T-II1", &spec("T-II1:r=2,m=1").params, &b).unwrap();
    assert!(k5.found);
}

#[test]
fn registry_is_complete() {
    let ids: Vec<&str> = registry().iter().map(|t| t.id).collect();
    assert_eq!(ids.len(), 40);
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    let k4 = MultiGraph::complete(4);
    for info in registry() {
        // every entry audits end to end on a small graph
        let r = audit(&k4, "K4", info.id, &ThresholdParams::default(), &Budget::default()).unwrap();
        assert_ne!(r.verdict, Verdict::Counterexample, "{}", info.id);
        if info.kind == TheoremKind::Implication && !r.hypothesis.holds {
            assert_eq!(r.verdict, Verdict::Vacuous);
        }
    }
}

#[test]
fn near_criterion_iff_fails_on_single_vertex() {
    // the pair condition accepts K_1 with f = 1, yet no near 1-factor exists
    let r = run(&MultiGraph::empty(1), "T-NF:f=1");
    assert!(r.hypothesis.holds);
    assert_eq!(r.verdict, Verdict::Counterexample);
}

#[test]
fn empty_corpus() {
    let r = campaign(&[], &[spec("T-A:r=2")], &Budget::default(), None, false).unwrap();
    assert!(r.reports.is_empty());
    assert!(r.summary.iter().all(|s| s.tally.total() == 0));
}

#[test]
fn small_campaigns_have_no_counterexamples() {
    let b = Budget::default();
    let graphs = corpus(&CorpusSpec::AllConnected(6), 0).unwrap();
    let r = campaign(&graphs, &[spec("T-A:r=2")], &b, None, false).unwrap();
    assert_eq!(r.counterexamples().count(), 0);
    let gnp = corpus(&"gnp:10:1/2:100".parse().unwrap(), 7).unwrap();
    let r = campaign(&gnp, &[spec("T-MT:r=2,n=2")], &b, None, false).unwrap();
    assert_eq!(r.counterexamples().count(), 0);
}

#[test]
fn campaign_is_deterministic_across_job_counts() {
    let b = Budget::default();
    let graphs = corpus(&"gnp:8:1/2:30".parse().unwrap(), 3).unwrap();
    let specs = [spec("T-A:r=2"), spec("T-TC:m=1"), spec("T-1F"), spec("T-RT:r=2")];
    let one = campaign(&graphs, &specs, &b, Some(1), false).unwrap();
    let four = campaign(&graphs, &specs, &b, Some(4), false).unwrap();
    assert_eq!(serde_json::to_string(&one.reports).unwrap(), serde_json::to_string(&four.reports).unwrap());
    assert_eq!(one.reports.len(), graphs.len() * specs.len());
}

#[test]
fn reports_roundtrip_through_json() {
    let r = run(&named("K1,3").unwrap(), "T-TC:m=1");
    let text = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<factorlab::theorems::CaseReport>(&text).unwrap(), r);
}

fn corpus_graph() -> impl Strategy<Value = MultiGraph> {
    (2usize..=7).prop_flat_map(|n| {
        let pair = (0..n, 0..n).prop_filter("no loops", |(u, v)| u != v);
        proptest::collection::vec(pair, 0..=15).prop_map(move |e| MultiGraph::new(n, e).unwrap().simplify())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_replay(g in corpus_graph(), pick in 0usize..6) {
        let specs = ["T-A:r=2", "T-TC:m=1", "T-RT:r=2", "T-IF:f=1", "T-24", "T-SM:a=2,f=2"];
        let r = run(&g, specs[pick]);
        if !r.hypothesis.holds && !r.hypothesis.side {
            prop_assert!(replay_witness(&g, &r).unwrap());
        }
        if r.hypothesis.holds {
            prop_assert_ne!(r.verdict, Verdict::Vacuous);
        }
    }
}
