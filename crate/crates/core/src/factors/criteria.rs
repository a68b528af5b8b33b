//! Exhaustive factor criteria over vertex sets and disjoint pairs.

use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::mask::{bits, full, MaskGraph};
use crate::graph::{MultiGraph, VertexFn, VertexSet};
use crate::rational::q;
use crate::resilience::check_iso_weighted;
use crate::witness::{Check, CriterionWitness};

/// Precomputed data for `(A, B)` scans.
pub(crate) struct PairScan {
    mg: MaskGraph,
    lo: Vec<i64>,
    hi: Vec<i64>,
    /// vertices with `g = f`
    tight: u64,
    /// vertices with odd `f`
    odd_f: u64,
}

impl PairScan {
    pub(crate) fn new(g: &MultiGraph, lo: &[i64], hi: &[i64]) -> Result<Self> {
        let mg = MaskGraph::new(g)?;
        let tight = (0..g.n()).filter(|&v| lo[v] == hi[v]).fold(0u64, |m, v| m | 1 << v);
        let odd_f = (0..g.n()).filter(|&v| hi[v].rem_euclid(2) == 1).fold(0u64, |m, v| m | 1 << v);
        Ok(PairScan {
            mg,
            lo: lo.to_vec(),
            hi: hi.to_vec(),
            tight,
            odd_f,
        })
    }

    fn n(&self) -> usize {
        self.mg.n
    }

    /// `omega_{g,f}(G, A, B)`.
    pub(crate) fn omega_gf(&self, a: u64, b: u64) -> i64 {
        let alive = self.mg.all() & !(a | b);
        self.mg
            .components(alive)
            .filter(|&c| c & !self.tight == 0)
            .filter(|&c| {
                let fsum = (c & self.odd_f).count_ones() % 2;
                let boundary: u32 = bits(c).map(|v| self.mg.deg_into(v, b)).sum();
                fsum != boundary % 2
            })
            .count() as i64
    }

    /// `sum_A f + sum_B (d_{G-A} - g)`.
    pub(crate) fn bound(&self, a: u64, b: u64) -> i64 {
        let rest = self.mg.all() & !a;
        let fa: i64 = bits(a).map(|v| self.hi[v]).sum();
        let gb: i64 = bits(b)
            .map(|v| self.mg.deg_into(v, rest) as i64 - self.lo[v])
            .sum();
        fa + gb
    }

    /// `d_{G-A}(v)`
    pub(crate) fn deg_outside(&self, v: usize, a: u64) -> i64 {
        self.mg.deg_into(v, self.mg.all() & !a) as i64
    }

    pub(crate) fn mask_graph(&self) -> &MaskGraph {
        &self.mg
    }

    pub(crate) fn f(&self, v: usize) -> i64 {
        self.hi[v]
    }

    /// First pair, in order of `A` then `B` as bitmasks, where `test`
    /// reports a violation.
    pub(crate) fn first_violation<T>(&self, test: T) -> Option<CriterionWitness>
    where
        T: Fn(u64, u64) -> Option<(i64, i64)> + Sync,
    {
        let all = full(self.n());
        (0..=all).into_par_iter().find_map_first(|a| {
            let free = all & !a;
            let mut b = 0u64;
            loop {
                if let Some((lhs, rhs)) = test(a, b) {
                    return Some(CriterionWitness::pair(
                        VertexSet::from_mask(a),
                        VertexSet::from_mask(b),
                        q(lhs),
                        q(rhs),
                    ));
                }
                if b == free {
                    return None;
                }
                b = b.wrapping_sub(free) & free;
            }
        })
    }
}

fn ints(f: &VertexFn, n: usize) -> Result<Vec<i64>> {
    f.check_len(n)?;
    f.ints()
}

fn check_pair_budget(g: &MultiGraph, budget: &Budget) -> Result<()> {
    if g.n() > budget.criterion_n {
        return Err(Error::scale("pair enumeration vertices", budget.criterion_n as u64, g.n() as u64));
    }
    Ok(())
}

fn check_set_budget(g: &MultiGraph, budget: &Budget) -> Result<()> {
    if g.n() > budget.exact_n.min(63) {
        return Err(Error::scale("subset enumeration vertices", budget.exact_n.min(63) as u64, g.n() as u64));
    }
    Ok(())
}

/// Number of components `C` of `G - (A u B)` with `g = f` on `C` and
/// `sum_C f` of different parity from the number of edges between `C`
/// and `B`.
pub fn omega_gf(g: &MultiGraph, a: &VertexSet, b: &VertexSet, lo: &VertexFn, hi: &VertexFn) -> Result<usize> {
    a.check_range(g.n())?;
    b.check_range(g.n())?;
    if !a.is_disjoint(b) {
        return Err(Error::Precondition("A and B must be disjoint".into()));
    }
    let scan = PairScan::new(g, &ints(lo, g.n())?, &ints(hi, g.n())?)?;
    Ok(scan.omega_gf(a.to_mask(), b.to_mask()) as usize)
}

/// The four pair-quantified criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PairKind {
    Near,
    Lovasz,
    Restricted,
    Forced,
}

impl PairKind {
    /// `(lhs, rhs)` of the criterion at one pair, or `None` when the pair
    /// lies outside its quantifier range.
    pub(crate) fn values(self, scan: &PairScan, a: u64, b: u64) -> Option<(i64, i64)> {
        let near_extra = || 1 + scan.hi.iter().sum::<i64>().rem_euclid(2);
        match self {
            PairKind::Near => Some((scan.omega_gf(a, b), scan.bound(a, b) + near_extra())),
            PairKind::Lovasz => Some((scan.omega_gf(a, b), scan.bound(a, b))),
            PairKind::Restricted => {
                let mg = scan.mask_graph();
                let admissible = bits(b).all(|v| {
                    mg.deg_into(v, b) as i64 <= scan.f(v) - 2 && scan.deg_outside(v, a) <= 2 * scan.f(v) - 1
                });
                if !admissible {
                    return None;
                }
                let lhs = mg.components(mg.all() & !(a | b)).count() as i64;
                Some((lhs, scan.bound(a, b) + near_extra()))
            }
            PairKind::Forced => (a | b != 0).then(|| (scan.omega_gf(a, b), scan.bound(a, b))),
        }
    }

    pub(crate) fn check(self, g: &MultiGraph, lo: &[i64], hi: &[i64], budget: &Budget) -> Result<Check> {
        check_pair_budget(g, budget)?;
        if let Some(v) = (0..g.n()).find(|&v| lo[v] > hi[v]) {
            return Err(Error::Precondition(format!("g({v}) > f({v})")));
        }
        let scan = PairScan::new(g, lo, hi)?;
        Ok(Check::from_option(scan.first_violation(|a, b| {
            self.values(&scan, a, b).filter(|(lhs, rhs)| lhs > rhs)
        })))
    }
}

/// Near `f`-factor criterion: for all disjoint `A`, `B`,
/// `omega_f(G,A,B) <= sum_A f + sum_B (d_{G-A} - f) + 1`, plus one more
/// when `sum f` is odd.
pub fn check_near_f_criterion(g: &MultiGraph, f: &VertexFn, budget: &Budget) -> Result<Check> {
    let fv = ints(f, g.n())?;
    PairKind::Near.check(g, &fv, &fv, budget)
}

/// `(g,f)`-factor criterion: for all disjoint `A`, `B`,
/// `omega_{g,f}(G,A,B) <= sum_A f + sum_B (d_{G-A} - g)`.
pub fn check_gf_criterion(g: &MultiGraph, lo: &VertexFn, hi: &VertexFn, budget: &Budget) -> Result<Check> {
    PairKind::Lovasz.check(g, &ints(lo, g.n())?, &ints(hi, g.n())?, budget)
}

/// Restricted-pair sufficient condition for a near `f`-factor: the bound
/// with plain component counts, required only for pairs where every
/// `v` in `B` has `d_{G[B]}(v) <= f(v) - 2` and `d_{G-A}(v) <= 2f(v) - 1`.
pub fn check_restricted_criterion(g: &MultiGraph, f: &VertexFn, budget: &Budget) -> Result<Check> {
    let fv = ints(f, g.n())?;
    PairKind::Restricted.check(g, &fv, &fv, budget)
}

/// Condition for a near `f`-factor with the exception at a prescribed
/// vertex (connected `G`, odd `sum f`): for all disjoint `A`, `B` with
/// `A u B` nonempty, `omega_f(G,A,B) <= sum_A f + sum_B (d_{G-A} - f)`.
pub fn check_forced_criterion(g: &MultiGraph, f: &VertexFn, budget: &Budget) -> Result<Check> {
    let fv = ints(f, g.n())?;
    PairKind::Forced.check(g, &fv, &fv, budget)
}

/// Perfect matching criterion: `odd(G - S) <= |S|` for all `S`.
pub fn check_one_factor(g: &MultiGraph, budget: &Budget) -> Result<Check> {
    check_set_budget(g, budget)?;
    let mg = MaskGraph::new(g)?;
    let all = mg.all();
    let found = (0..=all).into_par_iter().find_map_first(|s| {
        let odd = mg
            .components(all & !s)
            .filter(|c| c.count_ones() % 2 == 1)
            .count() as i64;
        let size = s.count_ones() as i64;
        (odd > size).then(|| CriterionWitness::set(VertexSet::from_mask(s), q(odd), q(size)))
    });
    Ok(Check::from_option(found))
}

/// `(1,f)`-factor criterion for `f >= 2`: `iso(G - S) <= sum_S f`.
pub fn check_one_f_factor(g: &MultiGraph, f: &VertexFn, budget: &Budget) -> Result<Check> {
    f.check_len(g.n())?;
    f.ints()?;
    if let Some(v) = (0..g.n()).find(|&v| f.get(v) < q(2)) {
        return Err(Error::Precondition(format!("f({v}) < 2")));
    }
    check_iso_weighted(g, &VertexFn::constant_int(g.n(), 1), f, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize, x: i64) -> VertexFn {
        VertexFn::constant_int(n, x)
    }

    #[test]
    fn omega_gf_examples() {
        let none = VertexSet::empty();
        assert_eq!(omega_gf(&MultiGraph::empty(1), &none, &none, &c(1, 1), &c(1, 1)).unwrap(), 1);
        assert_eq!(omega_gf(&MultiGraph::complete(2), &none, &none, &c(2, 1), &c(2, 1)).unwrap(), 0);
        let b = VertexSet::new([1]);
        assert_eq!(omega_gf(&MultiGraph::path(3), &none, &b, &c(3, 1), &c(3, 1)).unwrap(), 0);
    }

    #[test]
    fn near_criterion_examples() {
        let b = Budget::default();
        assert!(check_near_f_criterion(&MultiGraph::complete(4), &c(4, 1), &b).unwrap().is_ok());
        let w = check_near_f_criterion(&MultiGraph::star(3), &c(4, 1), &b).unwrap();
        let w = w.witness().unwrap();
        assert!(w.is_violation());
        assert!(check_near_f_criterion(&MultiGraph::empty(1), &c(1, 1), &b).unwrap().is_ok());
    }

    #[test]
    fn gf_criterion_examples() {
        let b = Budget::default();
        let c5 = MultiGraph::cycle(5);
        assert!(check_gf_criterion(&c5, &c(5, 0), &c(5, 2), &b).unwrap().is_ok());
        assert!(check_gf_criterion(&MultiGraph::cycle(4), &c(4, 2), &c(4, 2), &b).unwrap().is_ok());
        let k13 = MultiGraph::star(3);
        assert!(!check_gf_criterion(&k13, &c(4, 1), &c(4, 1), &b).unwrap().is_ok());
    }

    #[test]
    fn one_factor_examples() {
        let b = Budget::default();
        assert!(check_one_factor(&MultiGraph::complete(4), &b).unwrap().is_ok());
        let w = check_one_factor(&MultiGraph::complete(3), &b).unwrap();
        assert_eq!(w.witness().unwrap().a, VertexSet::empty());
    }

    #[test]
    fn one_f_factor_examples() {
        let b = Budget::default();
        assert!(check_one_f_factor(&MultiGraph::cycle(5), &c(5, 2), &b).unwrap().is_ok());
        let w = check_one_f_factor(&MultiGraph::empty(2), &c(2, 2), &b).unwrap();
        assert_eq!(w.witness().unwrap().a, VertexSet::empty());
        let w = check_one_f_factor(&MultiGraph::star(5), &c(6, 2), &b).unwrap();
        assert_eq!(w.witness().unwrap().a, VertexSet::new([0]));
    }
}
