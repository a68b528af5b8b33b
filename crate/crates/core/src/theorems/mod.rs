//! Executable theorem registry: hypothesis checkers, conclusion finders,
//! verdicts, witness replay and corpus campaigns.

mod audit;
mod conditions;
mod params;
mod registry;

pub use audit::{
    audit, campaign, campaign_spec, check_hypothesis, replay_witness, verify_conclusion, CampaignResult, CaseReport,
    Conclusion, ConclusionStatus, HypothesisResult, Tally, TheoremSummary, Verdict,
};
pub use params::{epsilon0, eval_t0, FnParam, TheoremSpec, ThresholdParams};
pub use registry::{lookup, registry, TheoremInfo, TheoremKind};
