//! Spanning Eulerian subgraphs and connected `{2,4}`-factors.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::packing::Dsu;
use super::search::{bounded_mtc_factor, SearchOutcome};
use super::{tree_packing, PackingResult};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::factors::FactorCertificate;
use crate::graph::MultiGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EulerMode {
    /// From two edge-disjoint spanning trees `T1`, `T2`: `T1` plus the
    /// `T2`-join of the odd-degree vertices of `T1`.
    Construct,
    /// Exhaustion of the cycle space.
    Exhaustive,
    /// `Construct`, falling back to `Exhaustive`.
    Auto,
}

/// Result of scanning every even subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenSearch {
    pub dimension: usize,
    /// Even subgraphs examined, the empty one included.
    pub candidates: u64,
    pub certificate: Option<FactorCertificate>,
}

/// Edges of `tree` whose odd-degree vertex set is exactly `odd`.
fn tree_join(n: usize, tree: &[(usize, usize)], odd: &[bool]) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in tree {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut need = odd.to_vec();
    let mut join = Vec::new();
    for &v in order.iter().rev() {
        if v != 0 && need[v] {
            let p = parent[v];
            join.push((v.min(p), v.max(p)));
            need[p] = !need[p];
        }
    }
    debug_assert!(!need[0], "odd vertex count is even in any graph");
    join
}

fn construct(g: &MultiGraph) -> Result<FactorCertificate> {
    let packing = match tree_packing(g, 2) {
        PackingResult::Packing(p) => p,
        PackingResult::Refuted(_) => return Err(Error::NotTreeConnected(2)),
    };
    let n = g.n();
    let (t1, t2) = (&packing.trees[0], &packing.trees[1]);
    let mut deg = vec![0usize; n];
    for &(u, v) in t1 {
        deg[u] += 1;
        deg[v] += 1;
    }
    let odd: Vec<bool> = deg.iter().map(|d| d % 2 == 1).collect();
    let mut edges = t1.clone();
    edges.extend(tree_join(n, t2, &odd));
    let cert = FactorCertificate::from_edges(n, edges);
    debug_assert!(cert.all_even() && cert.is_connected() && cert.is_subgraph_of(g));
    Ok(cert)
}

/// Scans the cycle space of `g` for a connected even subgraph covering
/// every vertex whose degrees all satisfy `allowed`.
pub fn even_subgraphs<F>(g: &MultiGraph, allowed: F, budget: &Budget) -> Result<EvenSearch>
where
    F: Fn(usize) -> bool + Sync,
{
    let n = g.n();
    if g.m() > 128 {
        return Err(Error::scale("edges for cycle-space bitsets", 128, g.m() as u64));
    }
    let mut dsu = Dsu::new(n);
    let mut tree_adj = vec![Vec::new(); n];
    let mut chords = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if dsu.union(u, v) {
            tree_adj[u].push((v, e));
            tree_adj[v].push((u, e));
        } else {
            chords.push(e);
        }
    }
    let dim = chords.len();
    if dim > budget.cycle_dim || dim > 63 {
        return Err(Error::scale("cycle-space dimension", budget.cycle_dim.min(63) as u64, dim as u64));
    }
    let basis: Vec<u128> = chords
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            let mut cycle = 1u128 << e;
            for t in forest_path(&tree_adj, u, v) {
                cycle |= 1u128 << t;
            }
            cycle
        })
        .collect();
    let incidence: Vec<u128> = (0..n)
        .map(|v| g.incident(v).iter().fold(0u128, |acc, &(_, e)| acc | 1u128 << e))
        .collect();
    let accept = |set: u128| -> bool {
        if !incidence.iter().all(|&inc| allowed((set & inc).count_ones() as usize)) {
            return false;
        }
        let mut d = Dsu::new(n);
        let mut parts = n;
        let mut rest = set;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = g.edge(e);
            if d.union(u, v) {
                parts -= 1;
            }
        }
        parts <= 1
    };

    let low = dim.min(16);
    let high = dim - low;
    let found = (0..1u64 << high).into_par_iter().find_map_first(|chunk| {
        let mut cur = (0..high)
            .filter(|j| chunk >> j & 1 == 1)
            .fold(0u128, |acc, j| acc ^ basis[low + j]);
        if accept(cur) {
            return Some(cur);
        }
        for i in 1u64..1 << low {
            cur ^= basis[i.trailing_zeros() as usize];
            if accept(cur) {
                return Some(cur);
            }
        }
        None
    });
    let certificate = found.map(|set| {
        let edges = (0..g.m()).filter(|&e| set >> e & 1 == 1).map(|e| g.edge(e)).collect();
        FactorCertificate::from_edges(n, edges)
    });
    Ok(EvenSearch {
        dimension: dim,
        candidates: 1u64 << dim,
        certificate,
    })
}

fn forest_path(adj: &[Vec<(usize, usize)>], u: usize, v: usize) -> Vec<usize> {
    let n = adj.len();
    let mut via = vec![(usize::MAX, usize::MAX); n];
    via[u] = (u, usize::MAX);
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        if x == v {
            break;
        }
        for &(y, e) in &adj[x] {
            if via[y].0 == usize::MAX {
                via[y] = (x, e);
                stack.push(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut x = v;
    while x != u {
        let (p, e) = via[x];
        path.push(e);
        x = p;
    }
    path
}

fn eulerian_degree(n: usize) -> impl Fn(usize) -> bool + Sync {
    move |d| d % 2 == 0 && (n <= 1 || d >= 2)
}

/// A connected spanning subgraph with all degrees even.
///
/// `Construct` fails with `NotTreeConnected` when `g` lacks two
/// edge-disjoint spanning trees; `Exhaustive` returns `None` only after
/// every even subgraph has been examined.
pub fn spanning_eulerian(g: &MultiGraph, mode: EulerMode, budget: &Budget) -> Result<Option<FactorCertificate>> {
    if g.n() <= 1 {
        return Ok(Some(FactorCertificate::from_edges(g.n(), Vec::new())));
    }
    match mode {
        EulerMode::Construct => construct(g).map(Some),
        EulerMode::Exhaustive => Ok(even_subgraphs(g, eulerian_degree(g.n()), budget)?.certificate),
        EulerMode::Auto => match construct(g) {
            Ok(c) => Ok(Some(c)),
            Err(Error::NotTreeConnected(_)) => spanning_eulerian(g, EulerMode::Exhaustive, budget),
            Err(e) => Err(e),
        },
    }
}

/// A connected spanning subgraph with every degree in `{2, 4}`.
///
/// `Construct` takes a 2-tree-connected spanning subgraph of maximum
/// degree at most 5 and makes it Eulerian, so `None` there only means that
/// intermediate subgraph does not exist. `Exhaustive` scans even subgraphs
/// and its `None` is a proof of nonexistence. `Auto` tries both.
pub fn connected_24_factor(g: &MultiGraph, mode: EulerMode, budget: &Budget) -> Result<Option<FactorCertificate>> {
    if g.n() <= 1 {
        return Ok(None);
    }
    let via_trees = || -> Result<Option<FactorCertificate>> {
        match bounded_mtc_factor(g, 2, None, budget)? {
            SearchOutcome::Found(h) => {
                let sub = construct(&h.graph())?;
                debug_assert!(sub.degrees.iter().all(|&d| d == 2 || d == 4));
                Ok(Some(sub))
            }
            SearchOutcome::Exhausted => Ok(None),
            SearchOutcome::BudgetExceeded => Err(Error::scale("search nodes", budget.search_nodes, budget.search_nodes + 1)),
        }
    };
    let scan = || -> Result<Option<FactorCertificate>> {
        Ok(even_subgraphs(g, |d| d == 2 || d == 4, budget)?.certificate)
    };
    match mode {
        EulerMode::Construct => via_trees(),
        EulerMode::Exhaustive => scan(),
        EulerMode::Auto => match via_trees() {
            Ok(Some(c)) => Ok(Some(c)),
            Ok(None) | Err(Error::ScaleExceeded { .. }) => scan(),
            Err(e) => Err(e),
        },
    }
}
