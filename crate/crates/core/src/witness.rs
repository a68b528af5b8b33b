use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;
use crate::rational::{serde_q, Q};

/// A refutation of a quantified inequality: the set `a` (and, for pair
/// criteria, the disjoint set `b`) at which `lhs <= rhs` (or `lhs < rhs`
/// when `strict`) fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionWitness {
    #[serde(rename = "A")]
    pub a: VertexSet,
    #[serde(rename = "B")]
    pub b: VertexSet,
    #[serde(with = "serde_q")]
    pub lhs: Q,
    #[serde(with = "serde_q")]
    pub rhs: Q,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub strict: bool,
}

impl CriterionWitness {
    pub fn set(s: VertexSet, lhs: Q, rhs: Q) -> Self {
        CriterionWitness {
            a: s,
            b: VertexSet::empty(),
            lhs,
            rhs,
            strict: false,
        }
    }

    pub fn pair(a: VertexSet, b: VertexSet, lhs: Q, rhs: Q) -> Self {
        CriterionWitness {
            a,
            b,
            lhs,
            rhs,
            strict: false,
        }
    }

    pub fn strict(mut self) -> Self {
        self.strict = true;
        self
    }

    pub fn slack(&self) -> Q {
        self.lhs - self.rhs
    }

    /// True when the recorded numbers actually violate the inequality.
    pub fn is_violation(&self) -> bool {
        if self.strict {
            self.slack() >= Q::zero()
        } else {
            self.slack() > Q::zero()
        }
    }
}

/// Outcome of an exhaustive criterion check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "witness", rename_all = "lowercase")]
pub enum Check {
    Ok,
    Violated(CriterionWitness),
}

impl Check {
    pub fn is_ok(&self) -> bool {
        matches!(self, Check::Ok)
    }

    pub fn witness(&self) -> Option<&CriterionWitness> {
        match self {
            Check::Ok => None,
            Check::Violated(w) => Some(w),
        }
    }

    pub(crate) fn from_option(w: Option<CriterionWitness>) -> Self {
        w.map_or(Check::Ok, Check::Violated)
    }
}
