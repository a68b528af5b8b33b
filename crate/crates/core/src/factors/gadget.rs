//! Constructive `(g,f)`-factor finder.
//!
//! Each edge contributes two adjacent slot vertices, one per endpoint. A
//! vertex `v` of degree `d` gets `d - f(v)` mandatory absorbers and
//! `f(v) - g(v)` optional absorbers, each adjacent to all of `v`'s slots.
//! Optional absorbers also form one clique across all vertices, plus a
//! parity vertex when `sum g` is odd. A perfect matching then selects the
//! edges whose two slots are matched to each other, and every vertex ends
//! with between `g(v)` and `f(v)` of them.

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexFn};

use super::certificate::FactorCertificate;
use super::matching::maximum_mates;

/// Edge indices of a spanning subgraph with `lo <= d <= hi`, if any.
pub(crate) fn gf_factor_edges(g: &MultiGraph, lo: &[i64], hi: &[i64]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut lo_c = vec![0usize; n];
    let mut hi_c = vec![0usize; n];
    for v in 0..n {
        let d = g.degree(v) as i64;
        let l = lo[v].max(0);
        let h = hi[v].min(d);
        if l > h {
            return None;
        }
        lo_c[v] = l as usize;
        hi_c[v] = h as usize;
    }

    let slots = 2 * g.m();
    let mut total = slots;
    let mut mandatory_start = vec![0; n];
    let mut optional_start = vec![0; n];
    for v in 0..n {
        mandatory_start[v] = total;
        total += g.degree(v) - hi_c[v];
        optional_start[v] = total;
        total += hi_c[v] - lo_c[v];
    }
    let optional: Vec<usize> = (0..n)
        .flat_map(|v| optional_start[v]..optional_start[v] + hi_c[v] - lo_c[v])
        .collect();
    let lo_sum: usize = lo_c.iter().sum();
    let parity = if lo_sum % 2 == 1 {
        if optional.is_empty() {
            return None;
        }
        total += 1;
        Some(total - 1)
    } else {
        None
    };

    let mut adj = vec![Vec::new(); total];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for e in 0..g.m() {
        link(2 * e, 2 * e + 1, &mut adj);
    }
    for v in 0..n {
        let own_slots: Vec<usize> = g
            .incident(v)
            .iter()
            .map(|&(_, e)| if g.edge(e).0 == v { 2 * e } else { 2 * e + 1 })
            .collect();
        for a in mandatory_start[v]..optional_start[v] + hi_c[v] - lo_c[v] {
            for &s in &own_slots {
                link(a, s, &mut adj);
            }
        }
    }
    for (i, &a) in optional.iter().enumerate() {
        for &b in &optional[i + 1..] {
            link(a, b, &mut adj);
        }
        if let Some(z) = parity {
            link(a, z, &mut adj);
        }
    }

    let mate = maximum_mates(&adj);
    if mate.contains(&usize::MAX) {
        return None;
    }
    Some((0..g.m()).filter(|&e| mate[2 * e] == 2 * e + 1).collect())
}

fn int_values(f: &VertexFn, n: usize) -> Result<Vec<i64>> {
    f.check_len(n)?;
    f.ints()
}

fn certificate(g: &MultiGraph, idx: Vec<usize>) -> FactorCertificate {
    FactorCertificate::from_edges(g.n(), idx.into_iter().map(|e| g.edge(e)).collect())
}

/// A spanning subgraph with `g(v) <= d(v) <= f(v)` for all `v`.
pub fn find_gf_factor(g: &MultiGraph, lo: &VertexFn, hi: &VertexFn) -> Result<Option<FactorCertificate>> {
    let l = int_values(lo, g.n())?;
    let h = int_values(hi, g.n())?;
    if let Some(v) = (0..g.n()).find(|&v| l[v] > h[v]) {
        return Err(Error::Precondition(format!("g({v}) > f({v})")));
    }
    Ok(gf_factor_edges(g, &l, &h).map(|idx| certificate(g, idx)))
}

/// An `f`-factor of `g`.
pub fn find_f_factor(g: &MultiGraph, f: &VertexFn) -> Result<Option<FactorCertificate>> {
    let fv = int_values(f, g.n())?;
    Ok(f_factor_ints(g, &fv))
}

fn f_factor_ints(g: &MultiGraph, f: &[i64]) -> Option<FactorCertificate> {
    if (0..g.n()).any(|v| f[v] < 0 || f[v] > g.degree(v) as i64) {
        return None;
    }
    if f.iter().sum::<i64>() % 2 != 0 {
        return None;
    }
    gf_factor_edges(g, f, f).map(|idx| certificate(g, idx))
}

/// A near `f`-factor: an `f`-factor when `sum f` is even, otherwise a
/// subgraph with `d = f` except one vertex at `f + 1`. Candidates for the
/// exceptional vertex are tried in increasing order, or only `forced`.
pub fn find_near_f_factor(
    g: &MultiGraph,
    f: &VertexFn,
    forced: Option<usize>,
) -> Result<Option<FactorCertificate>> {
    let mut fv = int_values(f, g.n())?;
    let odd = fv.iter().sum::<i64>().rem_euclid(2) == 1;
    if let Some(u) = forced {
        if u >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
        }
        if !odd {
            return Err(Error::Precondition(
                "a forced exceptional vertex needs an odd total of f".into(),
            ));
        }
    }
    if !odd {
        return Ok(f_factor_ints(g, &fv));
    }
    let candidates: Vec<usize> = match forced {
        Some(u) => vec![u],
        None => (0..g.n()).collect(),
    };
    for u in candidates {
        fv[u] += 1;
        let found = f_factor_ints(g, &fv);
        fv[u] -= 1;
        if let Some(c) = found {
            return Ok(Some(c.with_exception(Some(u))));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: usize, c: i64) -> VertexFn {
        VertexFn::constant_int(n, c)
    }

    #[test]
    fn exact_factors() {
        let c4 = MultiGraph::cycle(4);
        let cert = find_f_factor(&c4, &f(4, 2)).unwrap().unwrap();
        assert_eq!(cert.edges, c4.edges());
        let k4 = MultiGraph::complete(4);
        assert_eq!(find_f_factor(&k4, &f(4, 3)).unwrap().unwrap().edges.len(), 6);
        assert!(find_f_factor(&MultiGraph::star(3), &f(4, 1)).unwrap().is_none());
    }

    #[test]
    fn near_factors() {
        let p3 = MultiGraph::path(3);
        let cert = find_near_f_factor(&p3, &f(3, 1), None).unwrap().unwrap();
        assert_eq!(cert.edges, vec![(0, 1), (1, 2)]);
        assert_eq!(cert.exception, Some(1));
        let k3 = MultiGraph::complete(3);
        let cert = find_near_f_factor(&k3, &f(3, 1), Some(0)).unwrap().unwrap();
        assert_eq!(cert.edges, vec![(0, 1), (0, 2)]);
        assert!(find_near_f_factor(&MultiGraph::complete(4), &f(4, 1), Some(0)).is_err());
    }

    #[test]
    fn range_factors() {
        let c5 = MultiGraph::cycle(5);
        let cert = find_gf_factor(&c5, &f(5, 1), &f(5, 2)).unwrap().unwrap();
        assert!(cert.audit_range(&c5, &f(5, 1), &f(5, 2)));
        assert!(find_gf_factor(&MultiGraph::star(3), &f(4, 1), &f(4, 1)).unwrap().is_none());
        let empty = find_gf_factor(&c5, &f(5, 0), &f(5, 2)).unwrap().unwrap();
        assert!(empty.audit_range(&c5, &f(5, 0), &f(5, 2)));
    }

    #[test]
    fn odd_lower_sum_with_slack() {
        // K_3 with g = (1,0,0), f = (1,1,1): a single edge through vertex 0
        let k3 = MultiGraph::complete(3);
        let lo = VertexFn::from_ints(&[1, 0, 0]);
        let hi = f(3, 1);
        let cert = find_gf_factor(&k3, &lo, &hi).unwrap().unwrap();
        assert!(cert.audit_range(&k3, &lo, &hi));
        assert_eq!(cert.edges.len(), 1);
    }

    #[test]
    fn multigraph_slots() {
        let g = MultiGraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let cert = find_f_factor(&g, &f(2, 2)).unwrap().unwrap();
        assert_eq!(cert.edges, vec![(0, 1), (0, 1)]);
    }
}
