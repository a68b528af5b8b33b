//! Quantified inequalities that make up theorem hypotheses, each
//! evaluable over all sets and at a single witness.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::factors::{PairKind, PairScan};
use crate::graph::mask::{bits, MaskGraph};
use crate::graph::{MultiGraph, VertexFn, VertexSet};
use crate::rational::{q, Q};
use crate::resilience::{check_iso_weighted, check_tough, exact_cap};
use crate::treeconn::omega_masked;
use crate::witness::{Check, CriterionWitness};

/// `c_iso iso + c_star w_* + sum_{I*} star_weight + c_omega omega`
/// against `c_s |S| + sum_S s_weight + constant`, for every `S`.
///
/// `star_weight` charges the worst admissible centre of each star
/// component. With `omega_m` set, `Omega_m` replaces `omega`.
#[derive(Clone, Debug)]
pub(crate) struct Linear {
    pub iso: Q,
    pub stars: Q,
    pub star_weight: Option<VertexFn>,
    pub omega: Q,
    pub omega_m: Option<usize>,
    pub s_coef: Q,
    pub s_weight: Option<VertexFn>,
    pub constant: Q,
    pub strict: bool,
}

impl Linear {
    /// `omega(G - S) <= c_s |S| + constant`.
    pub fn omega_bound(s_coef: Q, constant: Q) -> Self {
        Linear {
            iso: Q::zero(),
            stars: Q::zero(),
            star_weight: None,
            omega: q(1),
            omega_m: None,
            s_coef,
            s_weight: None,
            constant,
            strict: false,
        }
    }

    pub fn strict(mut self) -> Self {
        self.strict = true;
        self
    }

    fn values(&self, g: &MultiGraph, mg: &MaskGraph, s: u64) -> (Q, Q) {
        let alive = mg.all() & !s;
        let mut lhs = Q::zero();
        let need_comps = !self.omega.is_zero() || !self.stars.is_zero() || self.star_weight.is_some();
        if !self.iso.is_zero() {
            lhs += self.iso * q(mg.isolated(alive).count_ones() as i64);
        }
        if need_comps {
            let mut count = 0i64;
            let mut stars = 0i64;
            let mut charged = Q::zero();
            for comp in mg.components(alive) {
                count += 1;
                let centers = mg.star_centers(comp);
                if centers != 0 {
                    stars += 1;
                    if let Some(w) = &self.star_weight {
                        charged += bits(centers).map(|v| w.get(v)).max().unwrap_or_default();
                    }
                }
            }
            lhs += self.stars * q(stars) + charged;
            if !self.omega.is_zero() {
                let om = match self.omega_m {
                    Some(m) => omega_masked(g, m, alive),
                    None => q(count),
                };
                lhs += self.omega * om;
            }
        }
        let mut rhs = self.s_coef * q(s.count_ones() as i64) + self.constant;
        if let Some(w) = &self.s_weight {
            rhs += w.sum_over(bits(s));
        }
        (lhs, rhs)
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Body {
    /// A parameter- or graph-level requirement `lhs <= rhs` (or `<`),
    /// witnessed with `A = B = {}`.
    Side { lhs: Q, rhs: Q, strict: bool },
    /// `omega(G - S) <= max{1, |S|/t}`.
    Tough(Q),
    /// `sum_{iso(G - S)} t <= sum_S w`.
    IsoWeighted { t: VertexFn, w: VertexFn },
    /// `odd(G - S) <= |S|`.
    Odd,
    Linear(Linear),
    Pair { kind: PairKind, lo: Vec<i64>, hi: Vec<i64> },
    /// `G` is `m`-tree-connected, refuted by the whole vertex set.
    TreeConnected(usize),
}

#[derive(Clone, Debug)]
pub(crate) struct Cond {
    pub id: &'static str,
    pub body: Body,
}

fn violated(lhs: Q, rhs: Q, strict: bool) -> bool {
    if strict {
        lhs >= rhs
    } else {
        lhs > rhs
    }
}

fn witness(s: u64, lhs: Q, rhs: Q, strict: bool) -> CriterionWitness {
    let w = CriterionWitness::set(VertexSet::from_mask(s), lhs, rhs);
    if strict {
        w.strict()
    } else {
        w
    }
}

impl Cond {
    pub fn new(id: &'static str, body: Body) -> Self {
        Cond { id, body }
    }

    pub fn side(id: &'static str, lhs: Q, rhs: Q) -> Self {
        Cond::new(id, Body::Side { lhs, rhs, strict: false })
    }

    pub fn side_strict(id: &'static str, lhs: Q, rhs: Q) -> Self {
        Cond::new(id, Body::Side { lhs, rhs, strict: true })
    }

    pub fn iso_tough(id: &'static str, t: VertexFn) -> Self {
        let n = t.len();
        Cond::new(id, Body::IsoWeighted { t, w: VertexFn::constant_int(n, 1) })
    }

    /// Side conditions are cheap and never enumerate.
    pub fn is_side(&self) -> bool {
        matches!(self.body, Body::Side { .. })
    }

    /// Scans every quantified instance and returns the first violation.
    pub fn check(&self, g: &MultiGraph, budget: &Budget) -> Result<Option<CriterionWitness>> {
        let check = match &self.body {
            Body::Side { lhs, rhs, strict } => {
                return Ok(violated(*lhs, *rhs, *strict).then(|| witness(0, *lhs, *rhs, *strict)))
            }
            Body::Tough(t) => check_tough(g, *t, budget)?,
            Body::IsoWeighted { t, w } => check_iso_weighted(g, t, w, budget)?,
            Body::Odd => crate::factors::check_one_factor(g, budget)?,
            Body::Linear(lin) => {
                exact_cap(g, budget)?;
                let mg = MaskGraph::new(g)?;
                let found = (0..=mg.all()).into_par_iter().find_map_first(|s| {
                    let (lhs, rhs) = lin.values(g, &mg, s);
                    violated(lhs, rhs, lin.strict).then(|| witness(s, lhs, rhs, lin.strict))
                });
                Check::from_option(found)
            }
            Body::Pair { kind, lo, hi } => kind.check(g, lo, hi, budget)?,
            Body::TreeConnected(m) => {
                let rank = crate::treeconn::union_rank(g, *m);
                let need = m * g.n().saturating_sub(1);
                if rank < need {
                    Check::Violated(witness(0, q(need as i64), q(rank as i64), false))
                } else {
                    Check::Ok
                }
            }
        };
        Ok(check.witness().cloned())
    }

    /// Recomputes `(lhs, rhs)` at a witness without any search.
    pub fn eval_at(&self, g: &MultiGraph, w: &CriterionWitness) -> Result<(Q, Q)> {
        w.a.check_range(g.n())?;
        w.b.check_range(g.n())?;
        let mg = MaskGraph::new(g)?;
        let s = w.a.to_mask();
        let all = mg.all();
        Ok(match &self.body {
            Body::Side { lhs, rhs, .. } => (*lhs, *rhs),
            Body::Tough(t) => (
                q(mg.components(all & !s).count() as i64),
                (q(s.count_ones() as i64) / *t).max(q(1)),
            ),
            Body::IsoWeighted { t, w } => (t.sum_over(bits(mg.isolated(all & !s))), w.sum_over(bits(s))),
            Body::Odd => (
                q(mg.components(all & !s).filter(|c| c.count_ones() % 2 == 1).count() as i64),
                q(s.count_ones() as i64),
            ),
            Body::Linear(lin) => lin.values(g, &mg, s),
            Body::Pair { kind, lo, hi } => {
                if !w.a.is_disjoint(&w.b) {
                    return Err(Error::Precondition("A and B must be disjoint".into()));
                }
                let scan = PairScan::new(g, lo, hi)?;
                let (lhs, rhs) = kind
                    .values(&scan, s, w.b.to_mask())
                    .ok_or_else(|| Error::Precondition("pair outside the quantifier range".into()))?;
                (q(lhs), q(rhs))
            }
            Body::TreeConnected(m) => (
                q((m * g.n().saturating_sub(1)) as i64),
                q(crate::treeconn::union_rank(g, *m) as i64),
            ),
        })
    }
}

/// Iso-toughness thresholds may be negative or zero in parts of the
/// parameter range; the scan handles both, but a constant zero is
/// vacuous and skipped.
pub(crate) fn trivially_iso_tough(t: &VertexFn) -> bool {
    t.values().iter().all(|x| !x.is_positive())
}
