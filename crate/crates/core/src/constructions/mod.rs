//! Named graphs, clique blow-ups, the lower-bound family and seeded
//! corpora.

mod canon;
mod corpus;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

pub use corpus::{all_connected, corpus, gnp, named, random_regular, CorpusGraph, CorpusSpec};

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner
/// pentagram on `5..10`.
pub fn petersen() -> MultiGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::new(10, e).expect("valid Petersen graph")
}

/// Replaces each vertex `v` by a clique `K_{h+1}` on vertices
/// `v(h+1) .. (v+1)(h+1)`. The `k`-th edge at `v` (in sorted edge order)
/// attaches to clique vertex `k`, so distinct edges use distinct
/// attachment vertices. Returns the graph and the original vertex of each
/// new vertex.
pub fn clique_blowup(g: &MultiGraph, h: usize) -> Result<(MultiGraph, Vec<usize>)> {
    if h < 2 {
        return Err(Error::InvalidParam("clique blow-up needs h >= 2".into()));
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if g.max_degree() > h + 1 {
        return Err(Error::Precondition(format!(
            "maximum degree {} exceeds clique size {}",
            g.max_degree(),
            h + 1
        )));
    }
    let k = h + 1;
    let mut edges = Vec::new();
    for v in 0..g.n() {
        for a in 0..k {
            for b in a + 1..k {
                edges.push((v * k + a, v * k + b));
            }
        }
    }
    let mut next_slot = vec![0usize; g.n()];
    for &(u, v) in g.edges() {
        edges.push((u * k + next_slot[u], v * k + next_slot[v]));
        next_slot[u] += 1;
        next_slot[v] += 1;
    }
    let origin: Vec<usize> = (0..g.n() * k).map(|x| x / k).collect();
    let labels = (0..g.n() * k).map(|x| format!("{}.{}", x / k, x % k)).collect();
    let out = MultiGraph::new(g.n() * k, edges)?.with_labels(labels)?;
    Ok((out, origin))
}

/// Metadata of the lower-bound family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupSpec {
    pub r: usize,
    pub h: usize,
    pub n: usize,
    pub p: usize,
    /// Apex clique vertices.
    pub apex: Vec<usize>,
    /// Vertex ranges of the copies of the blown-up Petersen graph.
    pub copies: Vec<Vec<usize>>,
    /// The designated clique `U_i` of each copy.
    pub u_markers: Vec<Vec<usize>>,
    /// For each non-apex vertex, the Petersen vertex whose clique holds it.
    pub clique_map: Vec<Option<usize>>,
    pub predicted: FamilyCounts,
}

/// Closed-form counts for `lowerbound_family(r, h, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCounts {
    pub vertices: usize,
    pub edges: usize,
    pub apex_degree: usize,
    /// Degree of a clique vertex carrying a Petersen edge, outside `U_i`.
    pub attach_degree: usize,
    /// Degree of a clique vertex without a Petersen edge, outside `U_i`.
    pub inner_degree: usize,
    pub marker_attach_degree: usize,
    pub marker_inner_degree: usize,
}

impl FamilyCounts {
    pub fn predict(r: usize, h: usize, n: usize) -> Self {
        let p = 2 * n * r + 1;
        let k = h + 1;
        let copy_vertices = 10 * k;
        let copy_edges = 10 * k * (k - 1) / 2 + 15;
        let vertices = n + copy_vertices * p;
        FamilyCounts {
            vertices,
            edges: p * copy_edges + p * (p - 1) / 2 * k * k + n * (n - 1) / 2 + n * copy_vertices * p,
            apex_degree: vertices - 1,
            attach_degree: h + 1 + n,
            inner_degree: h + n,
            marker_attach_degree: h + 1 + n + (p - 1) * k,
            marker_inner_degree: h + n + (p - 1) * k,
        }
    }
}

/// `p = 2nr + 1` copies of the Petersen graph blown up with `K_{h+1}`
/// cliques, the clique `U_i` of Petersen vertex 0 in copy `i` completely
/// joined to every other `U_j`, and an apex clique `K_n` joined to
/// everything. Apex vertices come first.
pub fn lowerbound_family(r: usize, h: usize, n: usize) -> Result<(MultiGraph, BlowupSpec)> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParam("r and n must be positive".into()));
    }
    let (piece, origin) = clique_blowup(&petersen(), h)?;
    let p = 2 * n * r + 1;
    let k = h + 1;
    let size = piece.n();
    let total = n + size * p;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
        for x in n..total {
            edges.push((a, x));
        }
    }
    let copies: Vec<Vec<usize>> = (0..p).map(|i| (n + i * size..n + (i + 1) * size).collect()).collect();
    for c in &copies {
        edges.extend(piece.edges().iter().map(|&(u, v)| (c[u], c[v])));
    }
    let u_markers: Vec<Vec<usize>> = copies.iter().map(|c| c[..k].to_vec()).collect();
    for i in 0..p {
        for j in i + 1..p {
            for &a in &u_markers[i] {
                for &b in &u_markers[j] {
                    edges.push((a, b));
                }
            }
        }
    }
    let mut clique_map = vec![None; total];
    let mut labels: Vec<String> = (0..n).map(|a| format!("apex{a}")).collect();
    for (i, c) in copies.iter().enumerate() {
        for (x, &v) in c.iter().enumerate() {
            clique_map[v] = Some(origin[x]);
            labels.push(format!("P{i}:{}", piece.labels().expect("blow-up is labelled")[x]));
        }
    }
    let g = MultiGraph::new(total, edges)?.with_labels(labels)?;
    let spec = BlowupSpec {
        r,
        h,
        n,
        p,
        apex: (0..n).collect(),
        copies,
        u_markers,
        clique_map,
        predicted: FamilyCounts::predict(r, h, n),
    };
    Ok((g, spec))
}

impl BlowupSpec {
    /// Compares the built graph against the closed-form counts.
    pub fn matches(&self, g: &MultiGraph) -> bool {
        let c = &self.predicted;
        let k = self.h + 1;
        if g.n() != c.vertices || g.m() != c.edges {
            return false;
        }
        if self.apex.iter().any(|&a| g.degree(a) != c.apex_degree) {
            return false;
        }
        self.copies.iter().all(|copy| {
            copy.iter().enumerate().all(|(x, &v)| {
                let marker = x < k;
                let attach = x % k < 3;
                let want = match (marker, attach) {
                    (true, true) => c.marker_attach_degree,
                    (true, false) => c.marker_inner_degree,
                    (false, true) => c.attach_degree,
                    (false, false) => c.inner_degree,
                };
                g.degree(v) == want
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_basics() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn blowup_counts() {
        let (g, origin) = clique_blowup(&petersen(), 2).unwrap();
        assert_eq!((g.n(), g.m()), (30, 45));
        assert_eq!(g.min_degree(), 3);
        assert_eq!(origin[29], 9);
        assert!(clique_blowup(&petersen(), 1).is_err());
    }

    #[test]
    fn family_counts() {
        let (g, spec) = lowerbound_family(1, 2, 1).unwrap();
        assert_eq!(g.n(), 91);
        assert!(spec.matches(&g));
        let (g, spec) = lowerbound_family(1, 2, 2).unwrap();
        assert_eq!((g.n(), spec.p), (152, 5));
        assert!(spec.matches(&g));
    }
}
