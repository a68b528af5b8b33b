//! Hypothesis evaluation, conclusion search, verdicts and campaigns.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::params::{ThresholdParams, TheoremSpec};
use super::registry::{plan, Goal, Plan, TheoremKind};
use crate::budget::Budget;
use crate::constructions::{clique_blowup, corpus, lowerbound_family, petersen, CorpusGraph, CorpusSpec};
use crate::error::{Error, Result};
use crate::factors::{find_f_factor, find_gf_factor, find_near_f_factor, FactorCertificate};
use crate::graph::{MultiGraph, VertexFn};
use crate::independent::{caro_wei, greedy_weighted_independent, independence_number, surplus_independent};
use crate::rational::q;
use crate::treeconn::{
    augment_factor, bounded_mtc_factor, connected_24_factor, is_tree_connected, mtc_range_factor, spanning_eulerian,
    worst_omega_set, EulerMode, SearchOutcome,
};
use crate::witness::CriterionWitness;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisResult {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<CriterionWitness>,
    /// The failed condition, as listed in the registry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition_id: Option<String>,
    /// True when the failure is a parameter or graph-level side condition
    /// rather than a quantified inequality.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub side: bool,
}

impl HypothesisResult {
    fn holds() -> Self {
        HypothesisResult {
            holds: true,
            witness: None,
            condition_id: None,
            side: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConclusionStatus {
    Found,
    NotFound,
    BudgetExceeded,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub found: bool,
    pub status: ConclusionStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FactorCertificate>,
    /// For conclusions quantified over a vertex `u`, the first `u` that
    /// failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed_vertex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl Conclusion {
    fn with_status(status: ConclusionStatus) -> Self {
        Conclusion {
            found: status == ConclusionStatus::Found,
            status,
            certificate: None,
            failed_vertex: None,
            detail: None,
        }
    }

    fn found(certificate: Option<FactorCertificate>) -> Self {
        Conclusion {
            certificate,
            ..Self::with_status(ConclusionStatus::Found)
        }
    }

    fn verdict_of(ok: bool, detail: serde_json::Value) -> Self {
        let status = if ok {
            ConclusionStatus::Found
        } else {
            ConclusionStatus::NotFound
        };
        Conclusion {
            detail: Some(detail),
            ..Self::with_status(status)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Vacuous,
    Counterexample,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub theorem_id: String,
    pub graph_id: String,
    pub params: ThresholdParams,
    pub hypothesis: HypothesisResult,
    pub conclusion: Conclusion,
    pub verdict: Verdict,
    /// Why the case is inconclusive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

fn evaluate(plan: &Plan, g: &MultiGraph, budget: &Budget) -> Result<HypothesisResult> {
    // cheap side conditions first, then the enumerations in listed order
    let sides = plan.conds.iter().filter(|c| c.is_side());
    let rest = plan.conds.iter().filter(|c| !c.is_side());
    for cond in sides.chain(rest) {
        if let Some(w) = cond.check(g, budget)? {
            return Ok(HypothesisResult {
                holds: false,
                witness: Some(w),
                condition_id: Some(cond.id.to_string()),
                side: cond.is_side(),
            });
        }
    }
    Ok(HypothesisResult::holds())
}

/// Evaluates every condition of the hypothesis and returns the first
/// violation.
pub fn check_hypothesis(g: &MultiGraph, id: &str, params: &ThresholdParams, budget: &Budget) -> Result<HypothesisResult> {
    evaluate(&plan(id, g, params)?, g, budget)
}

fn audit_failed(what: &str) -> Error {
    Error::Precondition(format!("finder returned a certificate that fails the {what} audit"))
}

fn search_conclusion<F>(outcome: SearchOutcome, audit: F) -> Result<Conclusion>
where
    F: Fn(&FactorCertificate) -> bool,
{
    match outcome {
        SearchOutcome::Found(c) => {
            if !audit(&c) {
                return Err(audit_failed("search"));
            }
            Ok(Conclusion::found(Some(c)))
        }
        SearchOutcome::Exhausted => Ok(Conclusion::with_status(ConclusionStatus::NotFound)),
        SearchOutcome::BudgetExceeded => Ok(Conclusion::with_status(ConclusionStatus::BudgetExceeded)),
    }
}

/// Runs `one` for every vertex and keeps the first certificate; stops at
/// the first vertex that fails.
fn every_vertex<F>(n: usize, mut one: F) -> Result<Conclusion>
where
    F: FnMut(usize) -> Result<Conclusion>,
{
    let mut first: Option<Conclusion> = None;
    for u in 0..n {
        let c = one(u)?;
        if !c.found {
            return Ok(Conclusion {
                failed_vertex: Some(u),
                ..c
            });
        }
        first.get_or_insert(c);
    }
    let mut out = first.unwrap_or_else(|| Conclusion::found(None));
    out.detail = Some(json!({ "vertices_checked": n }));
    Ok(out)
}

fn option_conclusion<F>(cert: Option<FactorCertificate>, audit: F, what: &str) -> Result<Conclusion>
where
    F: Fn(&FactorCertificate) -> bool,
{
    match cert {
        Some(c) if audit(&c) => Ok(Conclusion::found(Some(c))),
        Some(_) => Err(audit_failed(what)),
        None => Ok(Conclusion::with_status(ConclusionStatus::NotFound)),
    }
}

fn bounded_ok(g: &MultiGraph, c: &FactorCertificate, m: usize, u: Option<usize>) -> bool {
    c.is_subgraph_of(g)
        && c.max_degree() <= 2 * m + 1
        && u.is_none_or(|u| c.degrees[u] <= m + 1)
        && is_tree_connected(&c.graph(), m)
}

fn conclude(plan: &Plan, g: &MultiGraph, budget: &Budget) -> Result<Conclusion> {
    let n = g.n();
    match &plan.goal {
        Goal::Exact(f) => option_conclusion(find_f_factor(g, f)?, |c| c.audit_exact(g, f), "exact"),
        Goal::Range(lo, hi) => option_conclusion(find_gf_factor(g, lo, hi)?, |c| c.audit_range(g, lo, hi), "range"),
        Goal::Near(f) => option_conclusion(find_near_f_factor(g, f, None)?, |c| c.audit_near(g, f), "near"),
        Goal::NearEvery(f) => every_vertex(n, |u| {
            option_conclusion(find_near_f_factor(g, f, Some(u))?, |c| c.audit_near(g, f) && c.exception == Some(u), "near")
        }),
        Goal::MtcRange { m, lo, hi } => {
            let lo_f = VertexFn::from_ints(&lo.iter().map(|&x| x as i64).collect::<Vec<_>>());
            let hi_f = VertexFn::from_ints(&hi.iter().map(|&x| x as i64).collect::<Vec<_>>());
            search_conclusion(mtc_range_factor(g, *m, lo, hi, budget)?, |c| {
                c.audit_range(g, &lo_f, &hi_f) && is_tree_connected(&c.graph(), *m)
            })
        }
        Goal::Bounded { m, every_u } => {
            if *every_u {
                every_vertex(n, |u| {
                    search_conclusion(bounded_mtc_factor(g, *m, Some(u), budget)?, |c| bounded_ok(g, c, *m, Some(u)))
                })
            } else {
                search_conclusion(bounded_mtc_factor(g, *m, None, budget)?, |c| bounded_ok(g, c, *m, None))
            }
        }
        Goal::Connected24 => option_conclusion(
            connected_24_factor(g, EulerMode::Auto, budget)?,
            |c| c.is_subgraph_of(g) && c.is_connected() && c.degrees.iter().all(|&d| d == 2 || d == 4),
            "{2,4}",
        ),
        Goal::Eulerian => option_conclusion(
            spanning_eulerian(g, EulerMode::Auto, budget)?,
            |c| c.is_subgraph_of(g) && c.all_even() && c.is_connected(),
            "Eulerian",
        ),
        Goal::Extend { m, factor } => {
            let f = factor
                .as_ref()
                .ok_or_else(|| Error::Precondition("extension needs a factor".into()))?;
            let mut conclusion = every_vertex(n, |u| {
                search_conclusion(augment_factor(g, f, *m, Some(u), budget)?, |h| {
                    h.is_subgraph_of(g)
                        && h.degrees[u] == f.degrees[u]
                        && (0..n).all(|v| h.degrees[v] <= f.degrees[v] + 1)
                        && is_tree_connected(&h.graph(), *m)
                })
            })?;
            if let Some(d) = conclusion.detail.as_mut() {
                d["base_factor"] = serde_json::to_value(f).expect("certificate serialises");
            }
            Ok(conclusion)
        }
        Goal::Greedy(phi) => {
            let rep = greedy_weighted_independent(g, phi)?;
            Ok(Conclusion::verdict_of(rep.holds() && g.is_independent(&rep.set), json!(rep)))
        }
        Goal::CaroWei => {
            let (alpha, set) = independence_number(g)?;
            let bound = caro_wei(g);
            Ok(Conclusion::verdict_of(
                q(alpha as i64) >= bound,
                json!({ "alpha": alpha, "set": set, "caro_wei": bound.to_string() }),
            ))
        }
        Goal::Surplus { phi, d } => {
            let rep = surplus_independent(g, phi, d)?;
            Ok(Conclusion::verdict_of(rep.holds() && g.is_independent(&rep.set), json!(rep)))
        }
        Goal::Optimized(m) => {
            let worst = worst_omega_set(g, *m, budget)?;
            Ok(Conclusion::verdict_of(worst.audit_ok() && worst.maximal, json!(worst)))
        }
        Goal::LowerBound { r, h, n } => {
            let (family, spec) = lowerbound_family(*r, *h, *n)?;
            let (piece, _) = clique_blowup(&petersen(), *h)?;
            let eulerian = spanning_eulerian(&piece, EulerMode::Exhaustive, budget)?;
            Ok(Conclusion::verdict_of(
                spec.matches(&family) && eulerian.is_none(),
                json!({
                    "vertices": family.n(),
                    "edges": family.m(),
                    "counts_match": spec.matches(&family),
                    "piece_has_spanning_eulerian": eulerian.is_some(),
                }),
            ))
        }
    }
}

/// Searches for the object the conclusion promises, in complete mode, and
/// audits any certificate before returning it.
pub fn verify_conclusion(g: &MultiGraph, id: &str, params: &ThresholdParams, budget: &Budget) -> Result<Conclusion> {
    conclude(&plan(id, g, params)?, g, budget)
}

fn inconclusive(id: &str, graph_id: &str, params: &ThresholdParams, hypothesis: HypothesisResult, conclusion: Conclusion, note: String) -> CaseReport {
    CaseReport {
        theorem_id: id.to_string(),
        graph_id: graph_id.to_string(),
        params: params.clone(),
        hypothesis,
        conclusion,
        verdict: Verdict::Inconclusive,
        note: Some(note),
        elapsed_ms: None,
    }
}

/// Checks the hypothesis and, where it matters, the conclusion.
///
/// Scale and budget exhaustion yield `INCONCLUSIVE`; other errors (bad
/// parameters) are returned.
pub fn audit(g: &MultiGraph, graph_id: &str, id: &str, params: &ThresholdParams, budget: &Budget) -> Result<CaseReport> {
    let plan = plan(id, g, params)?;
    let skipped = || Conclusion::with_status(ConclusionStatus::Skipped);
    let hypothesis = match evaluate(&plan, g, budget) {
        Ok(h) => h,
        Err(e) if e.is_scale() => {
            let h = HypothesisResult {
                holds: false,
                witness: None,
                condition_id: None,
                side: false,
            };
            return Ok(inconclusive(id, graph_id, params, h, skipped(), e.to_string()));
        }
        Err(e) => return Err(e),
    };
    let kind = plan.info.kind;
    let need_conclusion = match kind {
        TheoremKind::Implication => hypothesis.holds,
        TheoremKind::Iff | TheoremKind::Property => hypothesis.holds || !hypothesis.side,
    };
    let conclusion = if need_conclusion {
        match conclude(&plan, g, budget) {
            Ok(c) => c,
            Err(e) if e.is_scale() => {
                let c = Conclusion::with_status(ConclusionStatus::BudgetExceeded);
                return Ok(inconclusive(id, graph_id, params, hypothesis, c, e.to_string()));
            }
            Err(e) => return Err(e),
        }
    } else {
        skipped()
    };
    let (verdict, note) = match (hypothesis.holds, conclusion.status) {
        (_, ConclusionStatus::BudgetExceeded) => (Verdict::Inconclusive, Some("search node budget exhausted".to_string())),
        (true, ConclusionStatus::Found) => (Verdict::Pass, None),
        (true, _) => (Verdict::Counterexample, None),
        // an iff criterion that rejects a graph which has the object
        (false, ConclusionStatus::Found) if kind == TheoremKind::Iff => (Verdict::Counterexample, None),
        (false, _) => (Verdict::Vacuous, None),
    };
    Ok(CaseReport {
        theorem_id: id.to_string(),
        graph_id: graph_id.to_string(),
        params: params.clone(),
        hypothesis,
        conclusion,
        verdict,
        note,
        elapsed_ms: None,
    })
}

/// Recomputes the failed condition at the report's witness and confirms
/// that the recorded numbers, and the violation, come out identical.
pub fn replay_witness(g: &MultiGraph, report: &CaseReport) -> Result<bool> {
    let (Some(w), Some(cid)) = (&report.hypothesis.witness, &report.hypothesis.condition_id) else {
        return Err(Error::Precondition("report carries no witness".into()));
    };
    let plan = plan(&report.theorem_id, g, &report.params)?;
    let cond = plan
        .conds
        .iter()
        .find(|c| c.id == cid)
        .ok_or_else(|| Error::Precondition(format!("no condition {cid:?} in {}", report.theorem_id)))?;
    let (lhs, rhs) = cond.eval_at(g, w)?;
    Ok(lhs == w.lhs && rhs == w.rhs && w.is_violation())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub vacuous: usize,
    pub counterexample: usize,
    pub inconclusive: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::Counterexample => self.counterexample += 1,
            Verdict::Inconclusive => self.inconclusive += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.vacuous + self.counterexample + self.inconclusive
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub theorem_id: String,
    pub params: ThresholdParams,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignResult {
    pub summary: Vec<TheoremSummary>,
    /// One report per (theorem, graph), theorem-major, in corpus order.
    pub reports: Vec<CaseReport>,
}

impl CampaignResult {
    pub fn counterexamples(&self) -> impl Iterator<Item = &CaseReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Counterexample)
    }
}

/// Audits every theorem on every graph. Cases run in parallel on `jobs`
/// threads (all cores when `None`); the report order is fixed.
pub fn campaign(graphs: &[CorpusGraph], specs: &[TheoremSpec], budget: &Budget, jobs: Option<usize>, timing: bool) -> Result<CampaignResult> {
    let cases: Vec<(&TheoremSpec, &CorpusGraph)> = specs.iter().flat_map(|s| graphs.iter().map(move |g| (s, g))).collect();
    let run = || -> Result<Vec<CaseReport>> {
        cases
            .par_iter()
            .map(|(spec, cg)| {
                let start = Instant::now();
                let mut rep = audit(&cg.graph, &cg.id, &spec.id, &spec.params, budget)?;
                if timing {
                    rep.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
                }
                Ok(rep)
            })
            .collect()
    };
    let reports = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::InvalidParam(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let mut summary: Vec<TheoremSummary> = specs
        .iter()
        .map(|s| TheoremSummary {
            theorem_id: s.id.clone(),
            params: s.params.clone(),
            tally: Tally::default(),
        })
        .collect();
    for (i, rep) in reports.iter().enumerate() {
        summary[i / graphs.len().max(1)].tally.add(rep.verdict);
    }
    Ok(CampaignResult { summary, reports })
}

/// `campaign` over a corpus spec expanded with `seed`.
pub fn campaign_spec(spec: &CorpusSpec, specs: &[TheoremSpec], seed: u64, budget: &Budget, jobs: Option<usize>, timing: bool) -> Result<(Vec<CorpusGraph>, CampaignResult)> {
    let graphs = corpus(spec, seed)?;
    let result = campaign(&graphs, specs, budget, jobs, timing)?;
    Ok((graphs, result))
}
