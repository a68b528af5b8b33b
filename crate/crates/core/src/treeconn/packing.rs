//! Union of `m` graphic matroids by matroid partitioning.
//!
//! Edges are inserted one at a time; each insertion runs a breadth-first
//! search in the exchange graph (edge `x` may displace edge `y` from forest
//! `i` when `y` lies on the cycle `x` closes in forest `i`). Shortest
//! exchange paths keep every forest acyclic after the swap.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

pub(crate) struct ForestUnion<'a> {
    n: usize,
    m: usize,
    edges: &'a [(usize, usize)],
    /// forest index per edge, `NONE` when uncovered
    owner: Vec<usize>,
}

impl<'a> ForestUnion<'a> {
    /// Greedy maximum union of `m` forests over `edges` (vertices `0..n`).
    pub(crate) fn build(n: usize, edges: &'a [(usize, usize)], m: usize) -> Self {
        let mut fu = ForestUnion {
            n,
            m,
            edges,
            owner: vec![NONE; edges.len()],
        };
        if m == 0 {
            return fu;
        }
        let cap = m * n.saturating_sub(1);
        let mut covered = 0;
        for e in 0..edges.len() {
            if covered == cap {
                break;
            }
            if fu.insert(e) {
                covered += 1;
            }
        }
        fu
    }

    pub(crate) fn rank(&self) -> usize {
        self.owner.iter().filter(|&&o| o != NONE).count()
    }

    pub(crate) fn forests(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.m];
        for (e, &o) in self.owner.iter().enumerate() {
            if o != NONE {
                out[o].push(e);
            }
        }
        out
    }

    fn forest_adjacency(&self) -> Vec<Vec<Vec<(usize, usize)>>> {
        let mut adj = vec![vec![Vec::new(); self.n]; self.m];
        for (e, &o) in self.owner.iter().enumerate() {
            if o != NONE {
                let (u, v) = self.edges[e];
                adj[o][u].push((v, e));
                adj[o][v].push((u, e));
            }
        }
        adj
    }

    /// Edges on the `u`-`v` path of one forest, or `None` if disconnected.
    fn forest_path(adj: &[Vec<(usize, usize)>], u: usize, v: usize, via: &mut [(usize, usize)]) -> Option<Vec<usize>> {
        via.iter_mut().for_each(|x| *x = (NONE, NONE));
        via[u] = (u, NONE);
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            if x == v {
                break;
            }
            for &(y, e) in &adj[x] {
                if via[y].0 == NONE {
                    via[y] = (x, e);
                    stack.push(y);
                }
            }
        }
        if via[v].0 == NONE {
            return None;
        }
        let mut path = Vec::new();
        let mut x = v;
        while x != u {
            let (p, e) = via[x];
            path.push(e);
            x = p;
        }
        Some(path)
    }

    fn insert(&mut self, e: usize) -> bool {
        let adj = self.forest_adjacency();
        let mut via = vec![(NONE, NONE); self.n];
        let mut pred = vec![NONE; self.edges.len()];
        let mut seen = vec![false; self.edges.len()];
        seen[e] = true;
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            let (a, b) = self.edges[x];
            for i in 0..self.m {
                if self.owner[x] == i {
                    continue;
                }
                match Self::forest_path(&adj[i], a, b, &mut via) {
                    None => {
                        self.augment(x, i, &pred);
                        return true;
                    }
                    Some(path) => {
                        for y in path {
                            if !seen[y] {
                                seen[y] = true;
                                pred[y] = x;
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn augment(&mut self, mut cur: usize, mut target: usize, pred: &[usize]) {
        loop {
            let old = self.owner[cur];
            self.owner[cur] = target;
            match pred[cur] {
                NONE => break,
                p => {
                    target = old;
                    cur = p;
                }
            }
        }
    }

    /// Edges reachable in the exchange graph from all uncovered edges. With
    /// a maximum union, every reachable edge is spanned in each forest by
    /// reachable forest edges.
    pub(crate) fn reachable_from_uncovered(&self) -> Vec<bool> {
        let adj = self.forest_adjacency();
        let mut via = vec![(NONE, NONE); self.n];
        let mut seen = vec![false; self.edges.len()];
        let mut queue = VecDeque::new();
        for (e, &o) in self.owner.iter().enumerate() {
            if o == NONE {
                seen[e] = true;
                queue.push_back(e);
            }
        }
        while let Some(x) = queue.pop_front() {
            let (a, b) = self.edges[x];
            for i in 0..self.m {
                if self.owner[x] == i {
                    continue;
                }
                let path = Self::forest_path(&adj[i], a, b, &mut via)
                    .expect("maximum forest union admits no augmenting path");
                for y in path {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        seen
    }
}

/// Size of a largest union of `m` edge-disjoint forests.
pub(crate) fn forest_union_rank(n: usize, edges: &[(usize, usize)], m: usize) -> usize {
    if m == 1 {
        let mut dsu = Dsu::new(n);
        return edges.iter().filter(|&&(u, v)| dsu.union(u, v)).count();
    }
    ForestUnion::build(n, edges, m).rank()
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
