//! Theorem table: hypotheses as lists of quantified conditions and the
//! object each conclusion promises.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::conditions::{trivially_iso_tough, Body, Cond, Linear};
use super::params::{eval_t0, ThresholdParams};
use crate::error::{Error, Result};
use crate::factors::{find_near_f_factor, FactorCertificate, PairKind};
use crate::graph::{MultiGraph, VertexFn};
use crate::rational::{q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremKind {
    /// Hypothesis implies conclusion.
    Implication,
    /// Hypothesis holds exactly when the conclusion does.
    Iff,
    /// Unconditional statement about every graph.
    Property,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TheoremInfo {
    pub id: &'static str,
    pub kind: TheoremKind,
    pub hypothesis: &'static str,
    pub conclusion: &'static str,
}

const fn t(id: &'static str, kind: TheoremKind, hypothesis: &'static str, conclusion: &'static str) -> TheoremInfo {
    TheoremInfo {
        id,
        kind,
        hypothesis,
        conclusion,
    }
}

use TheoremKind::{Iff, Implication, Property};

static REGISTRY: &[TheoremInfo] = &[
    t("T-1F", Iff, "odd(G-S) <= |S| for all S", "1-factor"),
    t("T-VG", Iff, "f >= 2; iso(G-S) <= sum_S f for all S", "(1,f)-factor"),
    t("T-EJKS", Implication, "r-tough, n >= r+1, rn even", "r-factor"),
    t("T-MY", Implication, "(r - i/(r+i))-iso-tough", "{r,...,r+i}-factor"),
    t("T-II1", Implication, "r >= 4m-1, r-tough, n >= r+1", "m-tree-connected {r,r+1}-factor"),
    t("T-II2", Implication, "7/2-tough, n >= 3", "connected {2,4}-factor"),
    t("T-NF", Iff, "omega_f(G,A,B) <= sum_A f + sum_B (d_{G-A} - f) + 1 + [sum f odd] for all A,B", "near f-factor"),
    t("T-CM", Implication, "component bound over restricted pairs (d_{G[B]} <= f-2, d_{G-A} <= 2f-1 on B)", "near f-factor"),
    t("T-FC", Implication, "G connected, sum f odd, omega_f(G,A,B) <= sum_A f + sum_B (d_{G-A} - f) for A u B nonempty", "near f-factor with exception at u, for every u"),
    t("T-LV", Iff, "g <= f; omega_{g,f}(G,A,B) <= sum_A f + sum_B (d_{G-A} - g) for all A,B", "(g,f)-factor"),
    t("T-IS", Property, "phi >= 0", "greedy independent I with sum_V phi <= sum_I phi (d_H + 1)"),
    t("T-CW", Property, "none", "alpha(H) >= sum_V 1/(1 + d_H)"),
    t("T-CB", Property, "phi = d_H + h, d = d_H, h >= 0", "independent I with sum_V (phi - d) <= sum_I (d + 1)(phi - d)"),
    t("T-IF", Implication, "0 < eps <= 1, f >= 1, f(f+1)/eps-iso-tough, omega(G-S) < sum_S (f - eps) + 2", "near f-factor"),
    t("T-IF1", Implication, "f >= 1, f(f+1)-iso-tough, omega(G-S) <= sum_S (f - 1) + 1", "near f-factor"),
    t("T-TL", Implication, "f >= a >= 1, (f + a/2)^2/a-iso-tough, omega(G-S) < sum_S (f - a) + 2", "near f-factor"),
    t("T-SM", Implication, "f >= a > 1, h >= 0, t0(a,f,h)-iso-tough, sum_{I*} (f + h - 1) + omega(G-S) <= |S| + 1", "near f-factor"),
    t("T-RT", Implication, "iso(G-S) <= |S|/r, (r-1) w*(G-S) + omega(G-S) <= |S| + 1", "near r-factor"),
    t("T-A", Implication, "r-tough, n >= r+1", "near r-factor"),
    t("T-SO", Implication, "n > 1, f >= a > 1, max{n f/(n-1), ((f+a-1)^2 + f)/(4(a - 1/n))}-iso-tough, omega(G-S) <= |S|/n + 1", "near f-factor"),
    t("T-S1", Implication, "f >= 1, sum_{I*} (f-1)(f+5)/4 + omega(G-S) <= |S| + 1", "near f-factor"),
    t("T-S1C", Implication, "n > 1, f >= 1, n f(f+4)/(4n-4)-iso-tough, omega(G-S) <= |S|/n + 1", "near f-factor"),
    t("T-EXT", Implication, "G simple, F = a near f-factor of G with min degree >= (2m-1)(2m/eps+1), omega(G-S) <= |S|/(2m+eps) + 1", "m-tree-connected H containing F, d_H <= d_F + 1, d_H(u) = d_F(u), for every u"),
    t("T-FF1", Implication, "f >= (2m-1)(2m/eps+1), f(f+1)-iso-tough, omega(G-S) <= |S|/(2m+eps) + 1", "m-tree-connected (f,f+1)-factor"),
    t("T-FF1C", Implication, "f >= 6m-3, 3m-tough, f(f+1)-iso-tough", "m-tree-connected (f,f+1)-factor"),
    t("T-GF", Implication, "0 <= g < f, t-iso-tough with the piecewise t(g, min f)", "(g,f)-factor"),
    t("T-GFC", Implication, "0 <= g, max g < min f, (g - 1 + g/min f)-iso-tough", "(g,f)-factor"),
    t("T-FF", Implication, "f >= 0, f(f+1)-iso-tough", "(f,f+1)-factor"),
    t("T-MT", Implication, "n >= 1, (r + 1/n)-iso-tough, omega(G-S) < |S|/n + 2", "near r-factor"),
    t("T-RR", Implication, "r >= (2m-1)(2m/eps+1), (r+1)-iso-tough, omega(G-S) <= |S|/(2m+eps) + 1", "m-tree-connected {r,r+1}-factor"),
    t("T-RRC", Implication, "r >= 6m-3, 3m-tough, (r+1)-iso-tough", "m-tree-connected {r,r+1}-factor"),
    t("T-TC", Implication, "(m+1)/2 iso(G-S) + omega(G-S) <= |S|/m + 1", "m-tree-connected H, d_H <= 2m+1, d_H(u) <= m+1, for every u"),
    t("T-LTC", Implication, "Omega_m(G-S) <= |S|/m + 1", "m-tree-connected H, d_H <= 2m+1, d_H(u) <= m+1, for every u"),
    t("T-OPT", Property, "none", "for S maximising Omega_m(G-S) - |S|/m with |S| maximal, every component of G-S is m-tree-connected or has max degree <= m"),
    t("T-TCE", Implication, "eps > 0, (m+eps)-tough, (m^2+m)(m/eps+1)/2-iso-tough", "m-tree-connected factor with max degree <= 2m+1"),
    t("T-TC2", Implication, "2m-tough, (m^2+m)-iso-tough", "m-tree-connected factor with max degree <= 2m+1"),
    t("T-24", Implication, "3/2 iso(G-S) + omega(G-S) <= |S|/2 + 1", "connected {2,4}-factor"),
    t("T-24E", Implication, "eps > 0, (2+eps)-tough, (3+6/eps)-iso-tough", "connected {2,4}-factor"),
    t("T-JG", Implication, "G 2-tree-connected", "spanning Eulerian subgraph"),
    t("T-LB", Property, "h >= 2 (the input graph is ignored)", "lowerbound_family(r,h,n) matches its closed-form counts and the blown-up Petersen piece has no spanning Eulerian subgraph"),
];

pub fn registry() -> &'static [TheoremInfo] {
    REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static TheoremInfo> {
    REGISTRY.iter().find(|t| t.id == id)
}

/// What a conclusion asks the finders to produce.
#[derive(Clone, Debug)]
pub(crate) enum Goal {
    Exact(VertexFn),
    Range(VertexFn, VertexFn),
    Near(VertexFn),
    NearEvery(VertexFn),
    MtcRange { m: usize, lo: Vec<usize>, hi: Vec<usize> },
    Bounded { m: usize, every_u: bool },
    Connected24,
    Eulerian,
    Extend { m: usize, factor: Option<FactorCertificate> },
    Greedy(VertexFn),
    CaroWei,
    Surplus { phi: VertexFn, d: VertexFn },
    Optimized(usize),
    LowerBound { r: usize, h: usize, n: usize },
}

pub(crate) struct Plan {
    pub info: &'static TheoremInfo,
    pub conds: Vec<Cond>,
    pub goal: Goal,
}

fn min_int(f: &VertexFn) -> Result<i64> {
    Ok(f.ints()?.into_iter().min().unwrap_or(0))
}

/// Side condition `lo <= min f` with an empty graph passing.
fn at_least(id: &'static str, lo: Q, f: &VertexFn) -> Cond {
    match f.min() {
        Some(x) => Cond::side(id, lo, x),
        None => Cond::side(id, Q::zero(), Q::zero()),
    }
}

/// `(2m - 1)(2m/eps + 1)`.
fn extend_bound(m: usize, eps: Q) -> Result<Q> {
    if !eps.is_positive() {
        return Err(Error::InvalidParam("eps must be positive".into()));
    }
    let m = q(m as i64);
    Ok((q(2) * m - q(1)) * (q(2) * m / eps + q(1)))
}

fn usize_fn(f: &VertexFn, shift: i64) -> Result<Vec<usize>> {
    f.ints()?
        .into_iter()
        .map(|x| usize::try_from(x + shift).map_err(|_| Error::InvalidParam("degree bound must be nonnegative".into())))
        .collect()
}

fn iso(id: &'static str, t: VertexFn, conds: &mut Vec<Cond>) {
    if !trivially_iso_tough(&t) {
        conds.push(Cond::iso_tough(id, t));
    }
}

fn positive_int(x: i64, what: &str) -> Result<usize> {
    usize::try_from(x)
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| Error::InvalidParam(format!("{what} must be a positive integer")))
}

/// Builds the hypothesis conditions and the conclusion goal of `id` on
/// `g`. Parameter errors (wrong types, out-of-domain values that make a
/// threshold undefined) are errors; parameter values that merely violate
/// a theorem's side conditions become failing side conditions.
pub(crate) fn plan(id: &str, g: &MultiGraph, p: &ThresholdParams) -> Result<Plan> {
    let info = lookup(id).ok_or_else(|| Error::UnknownTheorem(id.to_string()))?;
    let n = g.n();
    let nq = q(n as i64);
    let r = p.r;
    let rq = q(r);
    let m = p.m;
    let mq = q(m as i64);
    let eps = p.epsilon;
    let int_f = || -> Result<VertexFn> {
        let f = p.f(n)?;
        f.ints()?;
        Ok(f)
    };
    let mut c: Vec<Cond> = Vec::new();
    let goal = match id {
        "T-1F" => {
            c.push(Cond::new("odd(G-S) <= |S|", Body::Odd));
            Goal::Exact(VertexFn::constant_int(n, 1))
        }
        "T-VG" => {
            let f = int_f()?;
            c.push(at_least("f >= 2", q(2), &f));
            c.push(Cond::new(
                "iso(G-S) <= sum_S f",
                Body::IsoWeighted {
                    t: VertexFn::constant_int(n, 1),
                    w: f.clone(),
                },
            ));
            Goal::Range(VertexFn::constant_int(n, 1), f)
        }
        "T-EJKS" => {
            c.push(Cond::side("r >= 1", q(1), rq));
            c.push(Cond::side("n >= r+1", rq + q(1), nq));
            c.push(Cond::side("rn even", q((r * n as i64).rem_euclid(2)), Q::zero()));
            if r >= 1 {
                c.push(Cond::new("r-tough", Body::Tough(rq)));
            }
            Goal::Exact(VertexFn::constant_int(n, r))
        }
        "T-MY" => {
            let i = p.i_shift;
            c.push(Cond::side("r >= 1", q(1), rq));
            if r >= 1 {
                iso("(r - i/(r+i))-iso-tough", VertexFn::constant(n, rq - Q::new(i, r + i)), &mut c);
            }
            Goal::Range(VertexFn::constant_int(n, r), VertexFn::constant_int(n, r + i))
        }
        "T-II1" => {
            c.push(Cond::side("r >= 4m-1", q(4) * mq - q(1), rq));
            c.push(Cond::side("n >= r+1", rq + q(1), nq));
            if r >= 1 {
                c.push(Cond::new("r-tough", Body::Tough(rq)));
            }
            let lo = positive_int(r.max(1), "r")?;
            Goal::MtcRange {
                m,
                lo: vec![lo; n],
                hi: vec![lo + 1; n],
            }
        }
        "T-II2" => {
            c.push(Cond::side("n >= 3", q(3), nq));
            c.push(Cond::new("7/2-tough", Body::Tough(Q::new(7, 2))));
            Goal::Connected24
        }
        "T-NF" | "T-CM" => {
            let f = int_f()?;
            let fv = f.ints()?;
            let kind = if id == "T-NF" { PairKind::Near } else { PairKind::Restricted };
            let cid = if id == "T-NF" {
                "omega_f(G,A,B) <= sum_A f + sum_B (d_{G-A} - f) + 1 + [sum f odd]"
            } else {
                "restricted pairs: omega(G-A-B) <= sum_A f + sum_B (d_{G-A} - f) + 1 + [sum f odd]"
            };
            c.push(Cond::new(cid, Body::Pair { kind, lo: fv.clone(), hi: fv }));
            Goal::Near(f)
        }
        "T-FC" => {
            let f = int_f()?;
            let fv = f.ints()?;
            let odd = fv.iter().sum::<i64>().rem_euclid(2);
            c.push(Cond::new("G connected", Body::TreeConnected(1)));
            c.push(Cond::side("sum f odd", q(1 - odd), Q::zero()));
            c.push(Cond::new(
                "omega_f(G,A,B) <= sum_A f + sum_B (d_{G-A} - f), A u B nonempty",
                Body::Pair {
                    kind: PairKind::Forced,
                    lo: fv.clone(),
                    hi: fv,
                },
            ));
            Goal::NearEvery(f)
        }
        "T-LV" => {
            let f = int_f()?;
            let gf = p.g(n)?;
            let lo = gf.ints()?;
            let hi = f.ints()?;
            let gap = (0..n).map(|v| lo[v] - hi[v]).max().unwrap_or(0);
            c.push(Cond::side("g <= f", q(gap), Q::zero()));
            if gap <= 0 {
                c.push(Cond::new(
                    "omega_{g,f}(G,A,B) <= sum_A f + sum_B (d_{G-A} - g)",
                    Body::Pair {
                        kind: PairKind::Lovasz,
                        lo,
                        hi,
                    },
                ));
            }
            Goal::Range(gf, f)
        }
        "T-IS" => {
            let phi = p.phi(n)?;
            c.push(at_least("phi >= 0", Q::zero(), &phi));
            Goal::Greedy(phi)
        }
        "T-CW" => Goal::CaroWei,
        "T-CB" => {
            let h = p.h(n)?;
            c.push(at_least("h >= 0", Q::zero(), &h));
            let d = VertexFn::degrees(g);
            let phi = d.map(|v, x| x + h.get(v));
            Goal::Surplus { phi, d }
        }
        "T-IF" => {
            let f = int_f()?;
            c.push(Cond::side_strict("eps > 0", Q::zero(), eps));
            c.push(Cond::side("eps <= 1", eps, q(1)));
            c.push(at_least("f >= 1", q(1), &f));
            if eps.is_positive() {
                iso("f(f+1)/eps-iso-tough", f.map(|_, x| x * (x + q(1)) / eps), &mut c);
            }
            let lin = Linear {
                s_weight: Some(f.map(|_, x| x - eps)),
                ..Linear::omega_bound(Q::zero(), q(2))
            };
            c.push(Cond::new("omega(G-S) < sum_S (f - eps) + 2", Body::Linear(lin.strict())));
            Goal::Near(f)
        }
        "T-IF1" => {
            let f = int_f()?;
            c.push(at_least("f >= 1", q(1), &f));
            iso("f(f+1)-iso-tough", f.map(|_, x| x * (x + q(1))), &mut c);
            let lin = Linear {
                s_weight: Some(f.map(|_, x| x - q(1))),
                ..Linear::omega_bound(Q::zero(), q(1))
            };
            c.push(Cond::new("omega(G-S) <= sum_S (f - 1) + 1", Body::Linear(lin)));
            Goal::Near(f)
        }
        "T-TL" => {
            let f = int_f()?;
            let a = p.a;
            c.push(Cond::side("a >= 1", q(1), a));
            c.push(at_least("f >= a", a, &f));
            if a.is_positive() {
                iso("(f + a/2)^2/a-iso-tough", f.map(|_, x| (x + a / q(2)) * (x + a / q(2)) / a), &mut c);
            }
            let lin = Linear {
                s_weight: Some(f.map(|_, x| x - a)),
                ..Linear::omega_bound(Q::zero(), q(2))
            };
            c.push(Cond::new("omega(G-S) < sum_S (f - a) + 2", Body::Linear(lin.strict())));
            Goal::Near(f)
        }
        "T-SM" => {
            let f = int_f()?;
            let h = p.h(n)?;
            let a = p.a;
            c.push(Cond::side_strict("a > 1", q(1), a));
            c.push(at_least("f >= a", a, &f));
            c.push(at_least("h >= 0", Q::zero(), &h));
            if a > q(1) {
                let fv = f.ints()?;
                let t0 = (0..n).map(|v| eval_t0(a, fv[v], h.get(v))).collect::<Result<Vec<_>>>()?;
                iso("t0(a,f,h)-iso-tough", VertexFn::new(t0), &mut c);
            }
            let lin = Linear {
                star_weight: Some(f.map(|v, x| x + h.get(v) - q(1))),
                ..Linear::omega_bound(q(1), q(1))
            };
            c.push(Cond::new("sum_{I*} (f + h - 1) + omega(G-S) <= |S| + 1", Body::Linear(lin)));
            Goal::Near(f)
        }
        "T-RT" => {
            c.push(Cond::side("r >= 1", q(1), rq));
            iso("iso(G-S) <= |S|/r", VertexFn::constant(n, rq), &mut c);
            let lin = Linear {
                stars: rq - q(1),
                ..Linear::omega_bound(q(1), q(1))
            };
            c.push(Cond::new("(r-1) w*(G-S) + omega(G-S) <= |S| + 1", Body::Linear(lin)));
            Goal::Near(VertexFn::constant_int(n, r))
        }
        "T-A" => {
            c.push(Cond::side("r >= 1", q(1), rq));
            c.push(Cond::side("n >= r+1", rq + q(1), nq));
            if r >= 1 {
                c.push(Cond::new("r-tough", Body::Tough(rq)));
            }
            Goal::Near(VertexFn::constant_int(n, r))
        }
        "T-SO" => {
            let f = int_f()?;
            let a = p.a;
            let nd = p.n_div;
            c.push(Cond::side_strict("n > 1", q(1), nd));
            c.push(Cond::side_strict("a > 1", q(1), a));
            c.push(at_least("f >= a", a, &f));
            if nd > q(1) && a > q(1) {
                let t = f.map(|_, x| {
                    let first = nd / (nd - q(1)) * x;
                    let b = x + a - q(1);
                    let second = (b * b + x) / (q(4) * (a - q(1) / nd));
                    first.max(second)
                });
                iso("max{n f/(n-1), ((f+a-1)^2 + f)/(4(a - 1/n))}-iso-tough", t, &mut c);
                c.push(Cond::new(
                    "omega(G-S) <= |S|/n + 1",
                    Body::Linear(Linear::omega_bound(q(1) / nd, q(1))),
                ));
            }
            Goal::Near(f)
        }
        "T-S1" => {
            let f = int_f()?;
            c.push(at_least("f >= 1", q(1), &f));
            let lin = Linear {
                star_weight: Some(f.map(|_, x| (x - q(1)) * (x + q(5)) / q(4))),
                ..Linear::omega_bound(q(1), q(1))
            };
            c.push(Cond::new("sum_{I*} (f-1)(f+5)/4 + omega(G-S) <= |S| + 1", Body::Linear(lin)));
            Goal::Near(f)
        }
        "T-S1C" => {
            let f = int_f()?;
            let nd = p.n_div;
            c.push(Cond::side_strict("n > 1", q(1), nd));
            c.push(at_least("f >= 1", q(1), &f));
            if nd > q(1) {
                iso(
                    "n f(f+4)/(4n-4)-iso-tough",
                    f.map(|_, x| nd / (q(4) * nd - q(4)) * x * (x + q(4))),
                    &mut c,
                );
                c.push(Cond::new(
                    "omega(G-S) <= |S|/n + 1",
                    Body::Linear(Linear::omega_bound(q(1) / nd, q(1))),
                ));
            }
            Goal::Near(f)
        }
        "T-EXT" => {
            let f = int_f()?;
            let bound = extend_bound(m, eps)?;
            c.push(Cond::side("G simple", q(i64::from(!g.is_simple())), Q::zero()));
            let factor = find_near_f_factor(g, &f, None)?;
            c.push(Cond::side("near f-factor F exists", q(i64::from(factor.is_none())), Q::zero()));
            let min_f = factor
                .as_ref()
                .map_or(Q::zero(), |h| q(h.degrees.iter().copied().min().unwrap_or(0) as i64));
            c.push(Cond::side("min d_F >= (2m-1)(2m/eps+1)", bound, min_f));
            c.push(Cond::new(
                "omega(G-S) <= |S|/(2m+eps) + 1",
                Body::Linear(Linear::omega_bound(q(1) / (q(2) * mq + eps), q(1))),
            ));
            Goal::Extend { m, factor }
        }
        "T-FF1" => {
            let f = int_f()?;
            c.push(at_least("f >= (2m-1)(2m/eps+1)", extend_bound(m, eps)?, &f));
            iso("f(f+1)-iso-tough", f.map(|_, x| x * (x + q(1))), &mut c);
            c.push(Cond::new(
                "omega(G-S) <= |S|/(2m+eps) + 1",
                Body::Linear(Linear::omega_bound(q(1) / (q(2) * mq + eps), q(1))),
            ));
            Goal::MtcRange {
                m,
                lo: usize_fn(&f, 0)?,
                hi: usize_fn(&f, 1)?,
            }
        }
        "T-FF1C" => {
            let f = int_f()?;
            c.push(at_least("f >= 6m-3", q(6) * mq - q(3), &f));
            c.push(Cond::new("3m-tough", Body::Tough(q(3) * mq)));
            iso("f(f+1)-iso-tough", f.map(|_, x| x * (x + q(1))), &mut c);
            Goal::MtcRange {
                m,
                lo: usize_fn(&f, 0)?,
                hi: usize_fn(&f, 1)?,
            }
        }
        "T-GF" | "T-GFC" => {
            let f = int_f()?;
            let gf = p.g(n)?;
            let gv = gf.ints()?;
            let fv = f.ints()?;
            let min_f = min_int(&f)?;
            c.push(at_least("g >= 0", Q::zero(), &gf));
            if id == "T-GF" {
                let gap = (0..n).map(|v| gv[v] - fv[v]).max().unwrap_or(-1);
                c.push(Cond::side_strict("g < f", q(gap), Q::zero()));
            } else {
                c.push(Cond::side_strict("max g < min f", q(gv.iter().copied().max().unwrap_or(0)), q(min_f)));
            }
            if min_f >= 1 {
                let mf = q(min_f);
                let t = VertexFn::new(
                    gv.iter()
                        .map(|&x| {
                            let x = q(x);
                            if id == "T-GFC" || x <= mf + q(2) {
                                x - q(1) + x / mf
                            } else {
                                let e0 = q(i64::from((x - mf).to_integer().rem_euclid(2) == 0));
                                let b = x + mf + q(1);
                                (b * b - e0) / (q(4) * mf) - q(1)
                            }
                        })
                        .collect(),
                );
                let cid = if id == "T-GF" {
                    "t-iso-tough, t piecewise in g and min f"
                } else {
                    "(g - 1 + g/min f)-iso-tough"
                };
                iso(cid, t, &mut c);
            } else {
                c.push(Cond::side("min f >= 1", q(1), q(min_f)));
            }
            Goal::Range(gf, f)
        }
        "T-FF" => {
            let f = int_f()?;
            c.push(at_least("f >= 0", Q::zero(), &f));
            iso("f(f+1)-iso-tough", f.map(|_, x| x * (x + q(1))), &mut c);
            Goal::Range(f.clone(), f.map(|_, x| x + q(1)))
        }
        "T-MT" => {
            let nd = p.n_div;
            c.push(Cond::side("n >= 1", q(1), nd));
            c.push(Cond::side("r >= 1", q(1), rq));
            if nd >= q(1) {
                iso("(r + 1/n)-iso-tough", VertexFn::constant(n, rq + q(1) / nd), &mut c);
                c.push(Cond::new(
                    "omega(G-S) < |S|/n + 2",
                    Body::Linear(Linear::omega_bound(q(1) / nd, q(2)).strict()),
                ));
            }
            Goal::Near(VertexFn::constant_int(n, r))
        }
        "T-RR" | "T-RRC" => {
            if id == "T-RR" {
                c.push(Cond::side("r >= (2m-1)(2m/eps+1)", extend_bound(m, eps)?, rq));
                iso("(r+1)-iso-tough", VertexFn::constant(n, rq + q(1)), &mut c);
                c.push(Cond::new(
                    "omega(G-S) <= |S|/(2m+eps) + 1",
                    Body::Linear(Linear::omega_bound(q(1) / (q(2) * mq + eps), q(1))),
                ));
            } else {
                c.push(Cond::side("r >= 6m-3", q(6) * mq - q(3), rq));
                c.push(Cond::new("3m-tough", Body::Tough(q(3) * mq)));
                iso("(r+1)-iso-tough", VertexFn::constant(n, rq + q(1)), &mut c);
            }
            let lo = usize::try_from(r).map_err(|_| Error::InvalidParam("r must be nonnegative".into()))?;
            Goal::MtcRange {
                m,
                lo: vec![lo; n],
                hi: vec![lo + 1; n],
            }
        }
        "T-TC" => {
            let lin = Linear {
                iso: (mq + q(1)) / q(2),
                ..Linear::omega_bound(q(1) / mq, q(1))
            };
            c.push(Cond::new("(m+1)/2 iso(G-S) + omega(G-S) <= |S|/m + 1", Body::Linear(lin)));
            Goal::Bounded { m, every_u: true }
        }
        "T-LTC" => {
            let lin = Linear {
                omega_m: Some(m),
                ..Linear::omega_bound(q(1) / mq, q(1))
            };
            c.push(Cond::new("Omega_m(G-S) <= |S|/m + 1", Body::Linear(lin)));
            Goal::Bounded { m, every_u: true }
        }
        "T-OPT" => Goal::Optimized(m),
        "T-TCE" => {
            c.push(Cond::side_strict("eps > 0", Q::zero(), eps));
            if eps.is_positive() {
                c.push(Cond::new("(m+eps)-tough", Body::Tough(mq + eps)));
                let t = (mq * mq + mq) * (mq / eps + q(1)) / q(2);
                iso("(m^2+m)(m/eps+1)/2-iso-tough", VertexFn::constant(n, t), &mut c);
            }
            Goal::Bounded { m, every_u: false }
        }
        "T-TC2" => {
            c.push(Cond::new("2m-tough", Body::Tough(q(2) * mq)));
            iso("(m^2+m)-iso-tough", VertexFn::constant(n, mq * mq + mq), &mut c);
            Goal::Bounded { m, every_u: false }
        }
        "T-24" => {
            let lin = Linear {
                iso: Q::new(3, 2),
                ..Linear::omega_bound(Q::new(1, 2), q(1))
            };
            c.push(Cond::new("3/2 iso(G-S) + omega(G-S) <= |S|/2 + 1", Body::Linear(lin)));
            Goal::Connected24
        }
        "T-24E" => {
            c.push(Cond::side_strict("eps > 0", Q::zero(), eps));
            if eps.is_positive() {
                c.push(Cond::new("(2+eps)-tough", Body::Tough(q(2) + eps)));
                iso("(3+6/eps)-iso-tough", VertexFn::constant(n, q(3) + q(6) / eps), &mut c);
            }
            Goal::Connected24
        }
        "T-JG" => {
            c.push(Cond::new("G 2-tree-connected", Body::TreeConnected(2)));
            Goal::Eulerian
        }
        "T-LB" => {
            let h = p.h_fn.as_ref().and_then(|h| h.constant()).unwrap_or_else(|| q(2));
            c.push(Cond::side("h >= 2", q(2), h));
            let nd = p.n_div;
            if !h.is_integer() || !nd.is_integer() {
                return Err(Error::InvalidParam("T-LB needs integer h and n".into()));
            }
            Goal::LowerBound {
                r: positive_int(r, "r")?,
                h: h.to_integer().max(0) as usize,
                n: positive_int(nd.to_integer(), "n")?,
            }
        }
        _ => unreachable!("registry ids are exhaustive"),
    };
    Ok(Plan { info, conds: c, goal })
}
