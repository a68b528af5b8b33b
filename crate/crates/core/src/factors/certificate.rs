use serde::{Deserialize, Serialize};

use crate::graph::{MultiGraph, VertexFn};
use crate::treeconn::{tree_packing, PackingResult, TreePacking};

/// A spanning subgraph given by its edge multiset, with the degree audit
/// that makes it checkable without the finder that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub edges: Vec<(usize, usize)>,
    pub degrees: Vec<usize>,
    /// Vertex allowed one extra degree (near factors) or excluded from
    /// augmentation (tree-connected searches).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exception: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub packing: Option<TreePacking>,
}

impl FactorCertificate {
    pub fn from_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        let mut degrees = vec![0; n];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        FactorCertificate {
            edges,
            degrees,
            exception: None,
            packing: None,
        }
    }

    pub fn with_exception(mut self, u: Option<usize>) -> Self {
        self.exception = u;
        self
    }

    /// Attaches `m` edge-disjoint spanning trees of the factor, if any.
    pub fn with_packing(mut self, m: usize) -> Self {
        self.packing = match tree_packing(&self.graph(), m) {
            PackingResult::Packing(p) => Some(p),
            PackingResult::Refuted(_) => None,
        };
        self
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn graph(&self) -> MultiGraph {
        MultiGraph::new(self.n(), self.edges.iter().copied()).expect("certificate edges are valid")
    }

    /// Degrees recomputed from the edges match, and every edge appears in
    /// `g` at least as often as in the factor.
    pub fn is_subgraph_of(&self, g: &MultiGraph) -> bool {
        if self.n() != g.n() || Self::from_edges(self.n(), self.edges.clone()).degrees != self.degrees {
            return false;
        }
        let mut counts = g.edge_counts();
        self.edges.iter().all(|e| match counts.get_mut(e) {
            Some(c) if *c > 0 => {
                *c -= 1;
                true
            }
            _ => false,
        })
    }

    pub fn audit_exact(&self, g: &MultiGraph, f: &VertexFn) -> bool {
        self.is_subgraph_of(g)
            && f.len() == self.n()
            && (0..self.n()).all(|v| f.get(v) == crate::rational::q(self.degrees[v] as i64))
    }

    /// `d_F = f` except at the recorded exception, which has `f + 1`.
    pub fn audit_near(&self, g: &MultiGraph, f: &VertexFn) -> bool {
        self.is_subgraph_of(g)
            && f.len() == self.n()
            && (0..self.n()).all(|v| {
                let want = f.get(v) + crate::rational::q((self.exception == Some(v)) as i64);
                want == crate::rational::q(self.degrees[v] as i64)
            })
    }

    pub fn audit_range(&self, g: &MultiGraph, lo: &VertexFn, hi: &VertexFn) -> bool {
        self.is_subgraph_of(g)
            && (0..self.n()).all(|v| {
                let d = crate::rational::q(self.degrees[v] as i64);
                lo.get(v) <= d && d <= hi.get(v)
            })
    }

    pub fn is_connected(&self) -> bool {
        self.graph().is_connected()
    }

    pub fn all_even(&self) -> bool {
        self.degrees.iter().all(|d| d % 2 == 0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}
