//! Toughness, isolated toughness and strong toughness.
//!
//! The isolated-vertex conditions are checked over `S = N(I)` for nonempty
//! independent sets `I` only. The isolated vertices of `G - S` form an
//! independent set `I'`, and `S' = N(I') ⊆ S` leaves every vertex of `I'`
//! isolated, so with nonnegative weights the worst case always has this
//! form.

use num_traits::{Signed, Zero};
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::mask::{bits, full, MaskGraph};
use crate::graph::{ComponentStats, MultiGraph, VertexFn, VertexSet};
use crate::rational::{q, ExtQ, Q};
use crate::treeconn::omega_masked;
use crate::witness::{Check, CriterionWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Tough,
    Iso,
    Strong,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    /// Random vertex sets, stratified by size; only ever reports ratios
    /// that are actually attained.
    Falsify { samples: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeKind {
    Exact,
    Falsify,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessReport {
    pub kind: Kind,
    /// Exact minimum in exact mode; smallest sampled ratio otherwise.
    pub value: ExtQ,
    pub witness: Option<VertexSet>,
    pub mode: ModeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples_used: Option<u64>,
}

pub(crate) fn exact_cap(g: &MultiGraph, budget: &Budget) -> Result<()> {
    let cap = budget.exact_n.min(63);
    if g.n() > cap {
        return Err(Error::scale("subset enumeration vertices", cap as u64, g.n() as u64));
    }
    Ok(())
}

fn min_ratio<I>(candidates: I) -> Option<(Q, u64)>
where
    I: ParallelIterator<Item = (Q, u64)>,
{
    candidates.min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)))
}

/// Stratified random subsets: the `i`-th sample has size drawn cyclically
/// from `sizes`.
fn sample_sets(n: usize, sizes: std::ops::RangeInclusive<usize>, samples: u64, seed: u64) -> impl Iterator<Item = Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = sizes.collect();
    (0..samples).map_while(move |i| {
        if sizes.is_empty() {
            return None;
        }
        let k = sizes[(i % sizes.len() as u64) as usize];
        let mut s = index::sample(&mut rng, n, k).into_vec();
        s.sort_unstable();
        Some(s)
    })
}

fn falsify_report<F>(g: &MultiGraph, kind: Kind, sizes: std::ops::RangeInclusive<usize>, samples: u64, seed: u64, ratio: F) -> ToughnessReport
where
    F: Fn(&VertexSet) -> Option<Q>,
{
    let mut best: Option<(Q, VertexSet)> = None;
    let mut used = 0;
    for s in sample_sets(g.n(), sizes, samples, seed) {
        used += 1;
        let s = VertexSet::new(s);
        if let Some(r) = ratio(&s) {
            if best.as_ref().is_none_or(|(b, _)| r < *b) {
                best = Some((r, s));
            }
        }
    }
    ToughnessReport {
        kind,
        value: best.as_ref().map_or(ExtQ::Infinite, |(r, _)| ExtQ::Finite(*r)),
        witness: best.map(|(_, s)| s),
        mode: ModeKind::Falsify,
        samples_used: Some(used),
    }
}

/// `min |S| / omega(G - S)` over `S` with `omega(G - S) >= 2`.
pub fn toughness(g: &MultiGraph, mode: Mode, budget: &Budget) -> Result<ToughnessReport> {
    match mode {
        Mode::Exact => {
            exact_cap(g, budget)?;
            let mg = MaskGraph::new(g)?;
            let all = mg.all();
            let best = min_ratio((0..=all).into_par_iter().filter_map(|s| {
                let w = mg.components(all & !s).take(2).count();
                (w >= 2).then(|| {
                    let omega = mg.components(all & !s).count() as i64;
                    (Q::new(s.count_ones() as i64, omega), s)
                })
            }));
            Ok(ToughnessReport {
                kind: Kind::Tough,
                value: best.map_or(ExtQ::Infinite, |(r, _)| ExtQ::Finite(r)),
                witness: best.map(|(_, s)| VertexSet::from_mask(s)),
                mode: ModeKind::Exact,
                samples_used: None,
            })
        }
        Mode::Falsify { samples, seed } => {
            let n = g.n();
            Ok(falsify_report(g, Kind::Tough, 0..=n.saturating_sub(2), samples, seed, |s| {
                let omega = ComponentStats::analyze(g, s, None).omega;
                (omega >= 2).then(|| Q::new(s.len() as i64, omega as i64))
            }))
        }
    }
}

/// `omega(G - S) <= max{1, |S|/t}` for every `S`.
pub fn check_tough(g: &MultiGraph, t: Q, budget: &Budget) -> Result<Check> {
    if !t.is_positive() {
        return Err(Error::InvalidParam("toughness threshold must be positive".into()));
    }
    exact_cap(g, budget)?;
    let mg = MaskGraph::new(g)?;
    let all = mg.all();
    let found = (0..=all).into_par_iter().find_map_first(|s| {
        let omega = q(mg.components(all & !s).count() as i64);
        let rhs = (q(s.count_ones() as i64) / t).max(q(1));
        (omega > rhs).then(|| CriterionWitness::set(VertexSet::from_mask(s), omega, rhs))
    });
    Ok(Check::from_option(found))
}

/// Visits every nonempty independent set in lexicographic order until
/// `visit` returns `Some`.
fn scan_independent<T>(mg: &MaskGraph, cap: u64, mut visit: impl FnMut(u64) -> Option<T>) -> Result<Option<T>> {
    let mut count = 0u64;
    // (set, remaining candidates)
    let mut stack: Vec<(u64, u64)> = vec![(0, mg.all())];
    while let Some((set, cand)) = stack.pop() {
        // push in reverse so the smallest extension is explored first
        let ext: Vec<usize> = bits(cand).collect();
        for &v in ext.iter().rev() {
            let higher = !full(v + 1);
            stack.push((set | 1 << v, cand & higher & !mg.adj[v]));
        }
        if set != 0 {
            count += 1;
            if count > cap {
                return Err(Error::scale("independent sets", cap, count));
            }
            if let Some(t) = visit(set) {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// `sum_{v in iso(G - S)} t(v) <= sum_{v in S} w(v)` for every `S`.
///
/// With `t, w >= 0` the scan runs over `S = N(I)`; otherwise every subset
/// is tried.
pub fn check_iso_weighted(g: &MultiGraph, t: &VertexFn, w: &VertexFn, budget: &Budget) -> Result<Check> {
    t.check_len(g.n())?;
    w.check_len(g.n())?;
    let mg = MaskGraph::new(g)?;
    let all = mg.all();
    let eval = |s: u64| -> Option<CriterionWitness> {
        let iso = mg.isolated(all & !s);
        let lhs = t.sum_over(bits(iso));
        let rhs = w.sum_over(bits(s));
        (lhs > rhs).then(|| CriterionWitness::set(VertexSet::from_mask(s), lhs, rhs))
    };
    if t.is_nonnegative() && w.is_nonnegative() {
        let found = scan_independent(&mg, budget.indep_sets, |i| eval(mg.neighborhood(i)))?;
        // S = N(I) misses the empty set when G has no isolated vertex;
        // there iso is empty and the inequality reads 0 <= 0.
        return Ok(Check::from_option(found));
    }
    exact_cap(g, budget)?;
    Ok(Check::from_option((0..=all).into_par_iter().find_map_first(eval)))
}

/// `t`-iso-toughness in function form: `sum_{iso(G - S)} t <= |S|`.
pub fn check_iso_tough(g: &MultiGraph, t: &VertexFn, budget: &Budget) -> Result<Check> {
    check_iso_weighted(g, t, &VertexFn::constant_int(g.n(), 1), budget)
}

/// `min |S| / iso(G - S)` over `S` with `iso(G - S) >= 1`.
pub fn iso_toughness(g: &MultiGraph, mode: Mode, budget: &Budget) -> Result<ToughnessReport> {
    match mode {
        Mode::Exact => {
            let mg = MaskGraph::new(g)?;
            let all = mg.all();
            let mut best: Option<(Q, u64)> = None;
            scan_independent(&mg, budget.indep_sets, |i| {
                let s = mg.neighborhood(i);
                let iso = mg.isolated(all & !s).count_ones() as i64;
                let r = Q::new(s.count_ones() as i64, iso);
                if best.is_none_or(|(b, bs)| r < b || (r == b && s < bs)) {
                    best = Some((r, s));
                }
                None::<()>
            })?;
            Ok(ToughnessReport {
                kind: Kind::Iso,
                value: best.map_or(ExtQ::Infinite, |(r, _)| ExtQ::Finite(r)),
                witness: best.map(|(_, s)| VertexSet::from_mask(s)),
                mode: ModeKind::Exact,
                samples_used: None,
            })
        }
        Mode::Falsify { samples, seed } => {
            let n = g.n();
            Ok(falsify_report(g, Kind::Iso, 0..=n.saturating_sub(1), samples, seed, |s| {
                let iso = ComponentStats::analyze(g, s, None).iso;
                (iso >= 1).then(|| Q::new(s.len() as i64, iso as i64))
            }))
        }
    }
}

/// `m`-strong `t`-toughness: `Omega_m(G - S) <= max{1, |S|/t}` for all `S`.
pub fn check_strong_tough(g: &MultiGraph, m: usize, t: Q, budget: &Budget) -> Result<Check> {
    if m == 0 {
        return Err(Error::InvalidParam("m must be positive".into()));
    }
    if !t.is_positive() {
        return Err(Error::InvalidParam("toughness threshold must be positive".into()));
    }
    exact_cap(g, budget)?;
    let all = full(g.n());
    let found = (0..=all).into_par_iter().find_map_first(|s| {
        let lhs = omega_masked(g, m, all & !s);
        let rhs = (q(s.count_ones() as i64) / t).max(q(1));
        (lhs > rhs).then(|| CriterionWitness::set(VertexSet::from_mask(s), lhs, rhs))
    });
    Ok(Check::from_option(found))
}

/// Largest `t` with `m`-strong `t`-toughness: the minimum of
/// `|S| / Omega_m(G - S)` over `S` with `Omega_m(G - S) > 1`.
pub fn strong_toughness(g: &MultiGraph, m: usize, budget: &Budget) -> Result<ToughnessReport> {
    if m == 0 {
        return Err(Error::InvalidParam("m must be positive".into()));
    }
    exact_cap(g, budget)?;
    let all = full(g.n());
    let best = min_ratio((0..=all).into_par_iter().filter_map(|s| {
        let om = omega_masked(g, m, all & !s);
        (om > q(1)).then(|| (q(s.count_ones() as i64) / om, s))
    }));
    debug_assert!(best.is_none_or(|(r, _)| !r.is_negative()));
    Ok(ToughnessReport {
        kind: Kind::Strong,
        value: best.map_or(ExtQ::Infinite, |(r, _)| ExtQ::Finite(r)),
        witness: best.map(|(_, s)| VertexSet::from_mask(s)),
        mode: ModeKind::Exact,
        samples_used: None,
    })
}

/// Whether `iso(G - S) <= |S| / t` for all `S`, for a constant `t >= 0`.
pub fn is_iso_tough(g: &MultiGraph, t: Q, budget: &Budget) -> Result<bool> {
    if t.is_zero() {
        return Ok(true);
    }
    Ok(check_iso_tough(g, &VertexFn::constant(g.n(), t), budget)?.is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn toughness_examples() {
        let c5 = toughness(&MultiGraph::cycle(5), Mode::Exact, &b()).unwrap();
        assert_eq!(c5.value, ExtQ::Finite(q(1)));
        let w = c5.witness.unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(toughness(&MultiGraph::complete(5), Mode::Exact, &b()).unwrap().value, ExtQ::Infinite);
    }

    #[test]
    fn iso_examples() {
        let k13 = MultiGraph::star(3);
        let r = iso_toughness(&k13, Mode::Exact, &b()).unwrap();
        assert_eq!(r.value, ExtQ::Finite(qr(1, 3)));
        assert_eq!(r.witness, Some(VertexSet::new([0])));
        assert_eq!(iso_toughness(&MultiGraph::complete(4), Mode::Exact, &b()).unwrap().value, ExtQ::Finite(q(3)));
        assert!(check_iso_tough(&k13, &VertexFn::constant(4, qr(1, 3)), &b()).unwrap().is_ok());
        let w = check_iso_tough(&k13, &VertexFn::constant(4, qr(1, 2)), &b()).unwrap();
        let w = w.witness().unwrap();
        assert_eq!(w.a, VertexSet::new([0]));
        assert_eq!(w.lhs, qr(3, 2));
    }

    #[test]
    fn strong_examples() {
        assert!(check_strong_tough(&MultiGraph::complete(5), 1, q(3), &b()).unwrap().is_ok());
        let w = check_strong_tough(&MultiGraph::cycle(4), 2, q(1), &b()).unwrap();
        assert_eq!(w.witness().unwrap().a, VertexSet::empty());
        assert_eq!(w.witness().unwrap().lhs, q(2));
        // removing one vertex of K_4 leaves a triangle with Omega_2 = 3/2
        let w = check_strong_tough(&MultiGraph::complete(4), 2, q(1), &b()).unwrap();
        assert_eq!(w.witness().unwrap().lhs, qr(3, 2));
        assert!(check_strong_tough(&MultiGraph::complete(4), 2, qr(2, 3), &b()).unwrap().is_ok());
    }

    #[test]
    fn falsify_is_reproducible() {
        let g = MultiGraph::cycle(8);
        let mode = Mode::Falsify { samples: 500, seed: 3 };
        let a = toughness(&g, mode, &b()).unwrap();
        assert_eq!(a, toughness(&g, mode, &b()).unwrap());
        assert!(a.value >= ExtQ::Finite(q(1)));
    }
}
