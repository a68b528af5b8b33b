//! Branch-and-bound searches for tree-connected factors with degree
//! bounds. Each search is complete: `Exhausted` means no such factor
//! exists, while `BudgetExceeded` means the node limit was hit first.

use serde::{Deserialize, Serialize};

use super::packing::{forest_union_rank, Dsu};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::factors::FactorCertificate;
use crate::graph::MultiGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "certificate", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found(FactorCertificate),
    Exhausted,
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&FactorCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<FactorCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct BudgetHit;

struct Search<'a> {
    n: usize,
    m: usize,
    edges: &'a [(usize, usize)],
    incident: Vec<Vec<usize>>,
    lo: Vec<usize>,
    hi: Vec<usize>,
    /// Keep the chosen edges independent in the union of `m` graphic
    /// matroids and stop at `m(n-1)` of them.
    minimal: bool,
    state: Vec<u8>,
    chosen_deg: Vec<usize>,
    open_deg: Vec<usize>,
    chosen: usize,
    nodes: u64,
    limit: u64,
}

impl<'a> Search<'a> {
    fn new(n: usize, m: usize, edges: &'a [(usize, usize)], lo: Vec<usize>, hi: Vec<usize>, minimal: bool, limit: u64) -> Self {
        let mut incident = vec![Vec::new(); n];
        let mut open_deg = vec![0; n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(e);
            incident[v].push(e);
            open_deg[u] += 1;
            open_deg[v] += 1;
        }
        Search {
            n,
            m,
            edges,
            incident,
            lo,
            hi,
            minimal,
            state: vec![UNDECIDED; edges.len()],
            chosen_deg: vec![0; n],
            open_deg,
            chosen: 0,
            nodes: 0,
            limit,
        }
    }

    fn target(&self) -> usize {
        self.m * self.n.saturating_sub(1)
    }

    fn rank_of(&self, keep: impl Fn(u8) -> bool) -> usize {
        let sub: Vec<(usize, usize)> = self
            .edges
            .iter()
            .zip(&self.state)
            .filter(|&(_, &s)| keep(s))
            .map(|(&e, _)| e)
            .collect();
        forest_union_rank(self.n, &sub, self.m)
    }

    fn allowed_is_tree_connected(&self) -> bool {
        self.rank_of(|s| s != OUT) == self.target()
    }

    fn chosen_is_tree_connected(&self) -> bool {
        self.rank_of(|s| s == IN) == self.target()
    }

    fn stays_independent(&self, e: usize) -> bool {
        if self.m == 1 {
            let mut dsu = Dsu::new(self.n);
            for (i, &(u, v)) in self.edges.iter().enumerate() {
                if self.state[i] == IN {
                    dsu.union(u, v);
                }
            }
            let (u, v) = self.edges[e];
            return dsu.find(u) != dsu.find(v);
        }
        let mut sub: Vec<(usize, usize)> = self
            .edges
            .iter()
            .zip(&self.state)
            .filter(|&(_, &s)| s == IN)
            .map(|(&e, _)| e)
            .collect();
        sub.push(self.edges[e]);
        forest_union_rank(self.n, &sub, self.m) == sub.len()
    }

    fn set(&mut self, e: usize, val: u8, trail: &mut Vec<usize>) {
        let (u, v) = self.edges[e];
        self.state[e] = val;
        trail.push(e);
        if val == IN {
            self.chosen_deg[u] += 1;
            self.chosen_deg[v] += 1;
            self.chosen += 1;
        } else {
            self.open_deg[u] -= 1;
            self.open_deg[v] -= 1;
        }
    }

    fn undo(&mut self, trail: &[usize]) {
        for &e in trail.iter().rev() {
            let (u, v) = self.edges[e];
            if self.state[e] == IN {
                self.chosen_deg[u] -= 1;
                self.chosen_deg[v] -= 1;
                self.chosen -= 1;
            } else {
                self.open_deg[u] += 1;
                self.open_deg[v] += 1;
            }
            self.state[e] = UNDECIDED;
        }
    }

    /// Decides `e` and propagates degree bounds; false on conflict.
    fn decide(&mut self, e: usize, val: u8, trail: &mut Vec<usize>) -> bool {
        self.set(e, val, trail);
        let mut excluded = val == OUT;
        let mut work = vec![self.edges[e].0, self.edges[e].1];
        while let Some(x) = work.pop() {
            if self.chosen_deg[x] > self.hi[x] || self.open_deg[x] < self.lo[x] {
                return false;
            }
            let forced = if self.chosen_deg[x] == self.hi[x] && self.open_deg[x] > self.hi[x] {
                OUT
            } else if self.open_deg[x] == self.lo[x] && self.chosen_deg[x] < self.lo[x] {
                IN
            } else {
                continue;
            };
            for i in 0..self.incident[x].len() {
                let f = self.incident[x][i];
                if self.state[f] != UNDECIDED {
                    continue;
                }
                if forced == IN && self.minimal && !self.stays_independent(f) {
                    return false;
                }
                self.set(f, forced, trail);
                excluded |= forced == OUT;
                let (a, b) = self.edges[f];
                work.push(a);
                work.push(b);
            }
        }
        if self.minimal && self.chosen > self.target() {
            return false;
        }
        !excluded || self.allowed_is_tree_connected()
    }

    fn complete(&self) -> bool {
        (0..self.n).all(|v| self.lo[v] <= self.chosen_deg[v] && self.chosen_deg[v] <= self.hi[v])
            && self.chosen_is_tree_connected()
    }

    fn dfs(&mut self, from: usize) -> std::result::Result<bool, BudgetHit> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(BudgetHit);
        }
        if self.minimal && self.chosen == self.target() {
            return Ok(self.complete());
        }
        let Some(e) = (from..self.edges.len()).find(|&e| self.state[e] == UNDECIDED) else {
            return Ok(self.complete());
        };
        let (u, v) = self.edges[e];
        let mut trail = Vec::new();
        let can_include = self.chosen_deg[u] < self.hi[u]
            && self.chosen_deg[v] < self.hi[v]
            && (!self.minimal || self.stays_independent(e));
        if can_include {
            if self.decide(e, IN, &mut trail) && self.dfs(e + 1)? {
                return Ok(true);
            }
            self.undo(&trail);
            trail.clear();
        }
        if self.decide(e, OUT, &mut trail) && self.dfs(e + 1)? {
            return Ok(true);
        }
        self.undo(&trail);
        Ok(false)
    }

    fn run(mut self, forced: &[usize]) -> Result<Option<Vec<usize>>, BudgetHit> {
        let mut trail = Vec::new();
        for &e in forced {
            if self.state[e] == UNDECIDED && !self.decide(e, IN, &mut trail) {
                return Ok(None);
            }
        }
        let initial_ok = (0..self.n).all(|v| self.chosen_deg[v] <= self.hi[v] && self.open_deg[v] >= self.lo[v])
            && self.allowed_is_tree_connected();
        if !initial_ok {
            return Ok(None);
        }
        if self.dfs(0)? {
            Ok(Some((0..self.edges.len()).filter(|&e| self.state[e] == IN).collect()))
        } else {
            Ok(None)
        }
    }
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParam("m must be positive".into()));
    }
    Ok(())
}

fn outcome(g_n: usize, edges: &[(usize, usize)], found: Result<Option<Vec<usize>>, BudgetHit>, m: usize, u: Option<usize>) -> SearchOutcome {
    match found {
        Err(BudgetHit) => SearchOutcome::BudgetExceeded,
        Ok(None) => SearchOutcome::Exhausted,
        Ok(Some(idx)) => {
            let cert = FactorCertificate::from_edges(g_n, idx.into_iter().map(|e| edges[e]).collect())
                .with_exception(u)
                .with_packing(m);
            debug_assert!(cert.packing.is_some());
            SearchOutcome::Found(cert)
        }
    }
}

/// An `m`-tree-connected spanning subgraph with maximum degree at most
/// `2m + 1`, and degree at most `m + 1` at `u` when given.
pub fn bounded_mtc_factor(g: &MultiGraph, m: usize, u: Option<usize>, budget: &Budget) -> Result<SearchOutcome> {
    check_m(m)?;
    let n = g.n();
    if let Some(u) = u {
        if u >= n {
            return Err(Error::VertexOutOfRange { vertex: u, n });
        }
    }
    let mut hi = vec![2 * m + 1; n];
    if let Some(u) = u {
        hi[u] = m + 1;
    }
    let search = Search::new(n, m, g.edges(), vec![0; n], hi, true, budget.search_nodes);
    Ok(outcome(n, g.edges(), search.run(&[]), m, u))
}

/// An `m`-tree-connected spanning subgraph with `lo(v) <= d(v) <= hi(v)`.
pub fn mtc_range_factor(g: &MultiGraph, m: usize, lo: &[usize], hi: &[usize], budget: &Budget) -> Result<SearchOutcome> {
    check_m(m)?;
    let n = g.n();
    if lo.len() != n || hi.len() != n {
        return Err(Error::Precondition("degree bounds need one value per vertex".into()));
    }
    let search = Search::new(n, m, g.edges(), lo.to_vec(), hi.to_vec(), false, budget.search_nodes);
    Ok(outcome(n, g.edges(), search.run(&[]), m, None))
}

/// An `m`-tree-connected spanning `H` with `F ⊆ H ⊆ G`, `d_H(v) <= d_F(v) + 1`
/// for every `v`, and `d_H(u) = d_F(u)` when `u` is given. Parallel edges
/// of `G` and `F` are merged first.
pub fn augment_factor(
    g: &MultiGraph,
    f: &FactorCertificate,
    m: usize,
    u: Option<usize>,
    budget: &Budget,
) -> Result<SearchOutcome> {
    check_m(m)?;
    let n = g.n();
    if f.n() != n || !f.is_subgraph_of(g) {
        return Err(Error::Precondition("F must be a subgraph of G".into()));
    }
    if let Some(u) = u {
        if u >= n {
            return Err(Error::VertexOutOfRange { vertex: u, n });
        }
    }
    let simple = g.simplify();
    let mut base: Vec<(usize, usize)> = f.edges.clone();
    base.dedup();
    let mut edges = base.clone();
    edges.extend(simple.edges().iter().copied().filter(|e| base.binary_search(e).is_err()));
    let mut deg_f = vec![0; n];
    for &(a, b) in &base {
        deg_f[a] += 1;
        deg_f[b] += 1;
    }
    let mut hi: Vec<usize> = deg_f.iter().map(|d| d + 1).collect();
    if let Some(u) = u {
        hi[u] = deg_f[u];
    }
    let forced: Vec<usize> = (0..base.len()).collect();
    let search = Search::new(n, m, &edges, deg_f, hi, false, budget.search_nodes);
    let found = search.run(&forced);
    Ok(outcome(n, &edges, found, m, u))
}
