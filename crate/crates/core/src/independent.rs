//! Weighted greedy independent sets, the Caro–Wei bound and greedy
//! colouring.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::mask::{bits, MaskGraph};
use crate::graph::{MultiGraph, VertexFn, VertexSet};
use crate::rational::{q, serde_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub set: VertexSet,
    #[serde(with = "serde_q")]
    pub lhs: Q,
    #[serde(with = "serde_q")]
    pub rhs: Q,
    #[serde(with = "serde_q")]
    pub alpha_lower: Q,
}

impl IndependenceReport {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

/// Repeatedly takes a vertex of largest weight from the residual graph and
/// deletes its closed neighbourhood. Ties go to the smallest residual
/// degree, then the lowest index, so unit weights give the min-degree
/// greedy and hence at least the Caro-Wei bound.
fn greedy(h: &MultiGraph, w: &VertexFn) -> VertexSet {
    let n = h.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut chosen = Vec::new();
    loop {
        let mut best: Option<usize> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            let better = best.is_none_or(|b| {
                let (wv, wb) = (w.get(v), w.get(b));
                wv > wb || (wv == wb && deg[v] < deg[b])
            });
            if better {
                best = Some(v);
            }
        }
        let Some(u) = best else { break };
        chosen.push(u);
        let mut removed = vec![u];
        alive[u] = false;
        for &(x, _) in h.incident(u) {
            if alive[x] {
                alive[x] = false;
                removed.push(x);
            }
        }
        for x in removed {
            for &(y, _) in h.incident(x) {
                if alive[y] {
                    deg[y] -= 1;
                }
            }
        }
    }
    VertexSet::new(chosen)
}

/// Greedy independent set `I` with `sum_V phi <= sum_I phi(v) (d_H(v) + 1)`.
///
/// The right-hand side uses degrees in `H` itself, not in the residual
/// graphs the selection runs on: every vertex deleted alongside `u` is a
/// neighbour of `u` in `H` and weighs at most `phi(u)`.
pub fn greedy_weighted_independent(h: &MultiGraph, phi: &VertexFn) -> Result<IndependenceReport> {
    phi.check_len(h.n())?;
    phi.check_nonnegative()?;
    let set = greedy(h, phi);
    let rhs = set
        .iter()
        .fold(Q::zero(), |acc, v| acc + phi.get(v) * q(h.degree(v) as i64 + 1));
    Ok(IndependenceReport {
        set,
        lhs: phi.total(),
        rhs,
        alpha_lower: caro_wei(h),
    })
}

/// Greedy on the surplus `phi - d`, reporting
/// `sum_V (phi - d) <= sum_I (d(v) + 1)(phi(v) - d(v))`.
pub fn surplus_independent(h: &MultiGraph, phi: &VertexFn, d: &VertexFn) -> Result<IndependenceReport> {
    phi.check_len(h.n())?;
    d.check_len(h.n())?;
    for v in 0..h.n() {
        if phi.get(v) < d.get(v) || d.get(v) < q(h.degree(v) as i64) {
            return Err(Error::Precondition(format!(
                "need phi({v}) >= d({v}) >= d_H({v})"
            )));
        }
    }
    let surplus = phi.map(|v, x| x - d.get(v));
    let set = greedy(h, &surplus);
    let rhs = set.iter().fold(Q::zero(), |acc, v| {
        acc + (d.get(v) + q(1)) * surplus.get(v)
    });
    Ok(IndependenceReport {
        set,
        lhs: surplus.total(),
        rhs,
        alpha_lower: caro_wei(h),
    })
}

/// `sum_v 1 / (1 + d_H(v))`.
pub fn caro_wei(h: &MultiGraph) -> Q {
    (0..h.n()).fold(Q::zero(), |acc, v| acc + Q::new(1, h.degree(v) as i64 + 1))
}

/// Sequential greedy colouring into exactly `k` independent classes.
///
/// `Delta(H) <= k - 1` guarantees success; other inputs are attempted and
/// rejected only if some vertex finds every colour taken.
pub fn greedy_color_classes(h: &MultiGraph, k: usize) -> Result<Vec<VertexSet>> {
    if k == 0 {
        return Err(Error::InvalidParam("k must be positive".into()));
    }
    let n = h.n();
    let mut color = vec![usize::MAX; n];
    for v in 0..n {
        let mut used = vec![false; k];
        for w in h.neighbors(v) {
            if color[w] != usize::MAX {
                used[color[w]] = true;
            }
        }
        color[v] = used.iter().position(|&u| !u).ok_or_else(|| {
            Error::Precondition(format!("greedy colouring needs more than {k} colours at vertex {v}"))
        })?;
    }
    Ok((0..k)
        .map(|c| VertexSet::new((0..n).filter(|&v| color[v] == c)))
        .collect())
}

/// Exact independence number with a maximum independent set.
pub fn independence_number(h: &MultiGraph) -> Result<(usize, VertexSet)> {
    let mg = MaskGraph::new(h)?;
    fn best(mg: &MaskGraph, cand: u64, cur: u64, top: &mut u64) {
        if cand == 0 {
            if cur.count_ones() > top.count_ones() {
                *top = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= top.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        best(mg, cand & !(1 << v) & !mg.adj[v], cur | 1 << v, top);
        best(mg, cand & !(1 << v), cur, top);
    }
    let mut top = 0u64;
    best(&mg, mg.all(), 0, &mut top);
    debug_assert!(bits(top).all(|v| mg.adj[v] & top == 0));
    Ok((top.count_ones() as usize, VertexSet::from_mask(top)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    #[test]
    fn greedy_examples() {
        let c5 = MultiGraph::cycle(5);
        let r = greedy_weighted_independent(&c5, &VertexFn::constant_int(5, 1)).unwrap();
        assert_eq!(r.set.len(), 2);
        assert_eq!((r.lhs, r.rhs), (q(5), q(6)));

        let e = MultiGraph::empty(4);
        let r = greedy_weighted_independent(&e, &VertexFn::from_ints(&[1, 2, 3, 4])).unwrap();
        assert_eq!(r.set.len(), 4);
        assert_eq!(r.lhs, r.rhs);

        let k14 = MultiGraph::star(4);
        let r = greedy_weighted_independent(&k14, &VertexFn::from_ints(&[10, 1, 1, 1, 1])).unwrap();
        assert_eq!(r.set, VertexSet::new([0]));
        assert_eq!((r.lhs, r.rhs), (q(14), q(50)));
    }

    #[test]
    fn surplus_examples() {
        let c4 = MultiGraph::cycle(4);
        let r = surplus_independent(&c4, &VertexFn::constant_int(4, 3), &VertexFn::constant_int(4, 2)).unwrap();
        assert_eq!(r.lhs, q(4));
        assert!(r.set.len() >= 2);
        let k3 = MultiGraph::complete(3);
        let r = surplus_independent(&k3, &VertexFn::constant(3, qr(5, 2)), &VertexFn::constant_int(3, 2)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.set.len()), (qr(3, 2), qr(3, 2), 1));
    }

    #[test]
    fn caro_wei_examples() {
        assert_eq!(caro_wei(&MultiGraph::cycle(5)), qr(5, 3));
        assert_eq!(caro_wei(&MultiGraph::complete(6)), q(1));
        assert_eq!(independence_number(&MultiGraph::cycle(5)).unwrap().0, 2);
    }

    #[test]
    fn coloring_examples() {
        let c5 = greedy_color_classes(&MultiGraph::cycle(5), 3).unwrap();
        assert_eq!(c5.len(), 3);
        assert_eq!(c5.iter().map(VertexSet::len).sum::<usize>(), 5);
        let e = greedy_color_classes(&MultiGraph::empty(3), 1).unwrap();
        assert_eq!(e, vec![VertexSet::new([0, 1, 2])]);
        let p4 = greedy_color_classes(&MultiGraph::path(4), 2).unwrap();
        assert_eq!(p4, vec![VertexSet::new([0, 2]), VertexSet::new([1, 3])]);
        assert!(greedy_color_classes(&MultiGraph::complete(3), 2).is_err());
    }
}
