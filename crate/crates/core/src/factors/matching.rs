//! Maximum matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use crate::graph::MultiGraph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if one is found.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Mate array of a maximum matching; `usize::MAX` marks exposed vertices.
pub(crate) fn maximum_mates(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut b = Blossom {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| b.mate[w] == NONE && w != v) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut u) = b.find_path(root) {
            while u != NONE {
                let pv = b.parent[u];
                let ppv = b.mate[pv];
                b.mate[u] = pv;
                b.mate[pv] = u;
                u = ppv;
            }
        }
    }
    b.mate
}

/// A maximum matching of `g` as sorted vertex pairs.
pub fn max_matching(g: &MultiGraph) -> Vec<(usize, usize)> {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    let mate = maximum_mates(&adj);
    (0..g.n())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect()
}
