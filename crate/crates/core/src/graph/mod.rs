//! Loopless multigraphs over dense vertex indices, vertex sets and vertex
//! functions.

mod components;
mod format;
pub mod mask;

use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{parse_q, serde_q_vec, Q};

pub use components::{components, ComponentStats, StarInfo};
pub use format::{emit_graph, parse_graph, parse_graph6_lines, Format};

/// Loopless multigraph on vertices `0..n`.
///
/// The edge multiset is kept sorted with `u < v` in every pair, so two graphs
/// with the same edges compare equal regardless of insertion order. Labels
/// are annotations only and do not take part in equality.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    // (neighbour, edge index), one entry per edge slot
    incident: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<RawGraph> for MultiGraph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        let g = MultiGraph::new(raw.n, raw.edges)?;
        match raw.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

impl From<MultiGraph> for RawGraph {
    fn from(g: MultiGraph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges,
            labels: g.labels,
        }
    }
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

impl Hash for MultiGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl MultiGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push((v, i));
            incident[v].push((u, i));
        }
        MultiGraph {
            n,
            edges,
            labels: None,
            incident,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Self::from_sorted(n, e)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Star `K_{1,k}` with hub 0.
    pub fn star(k: usize) -> Self {
        Self::new(k + 1, (1..=k).map(|i| (0, i))).expect("valid star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..a {
            for v in 0..b {
                e.push((u, a + v));
            }
        }
        Self::new(a + b, e).expect("valid bipartite")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Edge slots at `v` as `(neighbour, edge index)`, one per multiplicity.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incident.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incident[v].iter().map(|&(w, _)| w).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        let lo = self.edges.partition_point(|e| *e < key);
        let hi = self.edges.partition_point(|e| *e <= key);
        hi - lo
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Drops repeated edges, keeping one copy of each adjacent pair.
    pub fn simplify(&self) -> MultiGraph {
        let mut e = self.edges.clone();
        e.dedup();
        let mut g = Self::from_sorted(self.n, e);
        g.labels = self.labels.clone();
        g
    }

    /// Map `edge -> multiplicity`, used by containment checks.
    pub fn edge_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for &e in &self.edges {
            *m.entry(e).or_insert(0) += 1;
        }
        m
    }

    /// Spanning subgraph formed by the given edge indices.
    pub fn edge_subgraph(&self, idx: &[usize]) -> MultiGraph {
        let mut e: Vec<(usize, usize)> = idx.iter().map(|&i| self.edges[i]).collect();
        e.sort_unstable();
        Self::from_sorted(self.n, e)
    }

    pub fn add_edges<I>(&self, extra: I) -> Result<MultiGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// `G - S`: the subgraph induced by the complement of `s`. Returns the
    /// graph together with the map from new indices to old ones.
    pub fn delete_set(&self, s: &VertexSet) -> (MultiGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|v| !s.contains(*v)).collect();
        self.induced_on(&keep)
    }

    /// `G[S]`, with the map from new indices to old ones.
    pub fn induced(&self, s: &VertexSet) -> (MultiGraph, Vec<usize>) {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        self.induced_on(&keep)
    }

    fn induced_on(&self, keep: &[usize]) -> (MultiGraph, Vec<usize>) {
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        let mut g = MultiGraph::new(keep.len(), edges).expect("induced subgraph is valid");
        if let Some(l) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| l[v].clone()).collect());
        }
        (g, keep.to_vec())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || components(self, None).omega == 1
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighbors(v);
        s.push(v);
        VertexSet::new(s)
    }

    /// `N_G(I)`: all neighbours of members of `i`.
    pub fn neighborhood_of_set(&self, i: &VertexSet) -> VertexSet {
        VertexSet::new(i.iter().flat_map(|v| self.incident[v].iter().map(|&(w, _)| w)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| !(s.contains(u) && s.contains(v)))
    }

    /// Checks `k`-vertex-connectivity by removing every set of fewer than
    /// `k` vertices. Intended for small `k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n <= k {
            return false;
        }
        fn rec(g: &MultiGraph, start: usize, left: usize, chosen: &mut Vec<usize>) -> bool {
            let (rest, _) = g.delete_set(&VertexSet::new(chosen.iter().copied()));
            if !rest.is_connected() {
                return false;
            }
            if left == 0 {
                return true;
            }
            for v in start..g.n {
                chosen.push(v);
                let ok = rec(g, v + 1, left - 1, chosen);
                chosen.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
        rec(self, 0, k - 1, &mut Vec::new())
    }

    /// Length of a shortest cycle; `None` for forests. Parallel edges count
    /// as cycles of length 2.
    pub fn girth(&self) -> Option<usize> {
        if !self.is_simple() {
            return Some(2);
        }
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.incident[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// A set of vertices, stored sorted and without repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut members: Vec<usize> = it.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet {
            members: mask::bits(mask).collect(),
        }
    }

    /// Bitmask form; callers guarantee every member is below 64.
    pub fn to_mask(&self) -> u64 {
        self.members.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet::new((0..n).filter(|v| !self.contains(*v)))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.members.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

/// One exact rational per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexFn {
    #[serde(with = "serde_q_vec")]
    values: Vec<Q>,
}

impl VertexFn {
    pub fn new(values: Vec<Q>) -> Self {
        VertexFn { values }
    }

    pub fn constant(n: usize, c: Q) -> Self {
        VertexFn { values: vec![c; n] }
    }

    pub fn constant_int(n: usize, c: i64) -> Self {
        Self::constant(n, Q::from_integer(c))
    }

    pub fn from_ints(values: &[i64]) -> Self {
        VertexFn {
            values: values.iter().map(|&x| Q::from_integer(x)).collect(),
        }
    }

    /// Degree function `d_G`.
    pub fn degrees(g: &MultiGraph) -> Self {
        VertexFn {
            values: g
                .degrees()
                .into_iter()
                .map(|d| Q::from_integer(d as i64))
                .collect(),
        }
    }

    /// Reads `n` whitespace-separated values, each an integer or `p/q`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            for tok in line.split_whitespace() {
                values.push(parse_q(tok).map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad value {tok:?}"),
                })?);
            }
        }
        if values.len() != n {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {n} values, found {}", values.len()),
            });
        }
        Ok(VertexFn { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> Q {
        self.values[v]
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn int(&self, v: usize) -> Result<i64> {
        let x = self.values[v];
        if x.is_integer() {
            Ok(x.to_integer())
        } else {
            Err(Error::NotInteger {
                vertex: v,
                value: x.to_string(),
            })
        }
    }

    pub fn ints(&self) -> Result<Vec<i64>> {
        (0..self.values.len()).map(|v| self.int(v)).collect()
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.values.len() == n {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "vertex function has {} values for {} vertices",
                self.values.len(),
                n
            )))
        }
    }

    pub fn check_nonnegative(&self) -> Result<()> {
        match self.values.iter().position(|x| x.is_negative()) {
            Some(v) => Err(Error::NegativeWeight {
                vertex: v,
                value: self.values[v].to_string(),
            }),
            None => Ok(()),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|x| !x.is_negative())
    }

    pub fn sum_over<I: IntoIterator<Item = usize>>(&self, vs: I) -> Q {
        vs.into_iter()
            .fold(Q::zero(), |acc, v| acc + self.values[v])
    }

    pub fn total(&self) -> Q {
        self.values.iter().fold(Q::zero(), |a, b| a + b)
    }

    pub fn min(&self) -> Option<Q> {
        self.values.iter().copied().min()
    }

    pub fn max(&self) -> Option<Q> {
        self.values.iter().copied().max()
    }

    pub fn map<F: FnMut(usize, Q) -> Q>(&self, mut f: F) -> VertexFn {
        VertexFn {
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(v, &x)| f(v, x))
                .collect(),
        }
    }

    /// Restriction to the kept vertices of a deletion map.
    pub fn restrict(&self, keep: &[usize]) -> VertexFn {
        VertexFn {
            values: keep.iter().map(|&v| self.values[v]).collect(),
        }
    }
}
