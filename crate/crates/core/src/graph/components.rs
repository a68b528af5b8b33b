use serde::{Deserialize, Serialize};

use super::{MultiGraph, VertexSet};

/// A star component and its admissible centres.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarInfo {
    pub part: usize,
    pub centers: Vec<usize>,
}

/// Component analytics of `G - removed`, in the vertex indices of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentStats {
    /// Components, each sorted; ordered by smallest member.
    pub parts: Vec<Vec<usize>>,
    pub omega: usize,
    pub iso: usize,
    pub odd: usize,
    pub stars: Vec<StarInfo>,
    /// `d_G(C, B)` per part when a boundary set was supplied.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<usize>>,
}

impl ComponentStats {
    /// Components of `G - removed`, optionally counting edges from each
    /// component to `boundary`.
    pub fn analyze(g: &MultiGraph, removed: &VertexSet, boundary: Option<&VertexSet>) -> Self {
        let n = g.n();
        let mut alive = vec![true; n];
        for v in removed.iter().filter(|&v| v < n) {
            alive[v] = false;
        }
        let mut comp_of = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if !alive[s] || comp_of[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![s];
            comp_of[s] = id;
            let mut i = 0;
            while i < part.len() {
                let v = part[i];
                i += 1;
                for &(w, _) in g.incident(v) {
                    if alive[w] && comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        part.push(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }

        let mut stars = Vec::new();
        for (id, part) in parts.iter().enumerate() {
            let inner_deg = |v: usize| g.incident(v).iter().filter(|&&(w, _)| alive[w]).count();
            let hubs: Vec<usize> = part.iter().copied().filter(|&v| inner_deg(v) > 1).collect();
            match hubs.len() {
                0 => stars.push(StarInfo {
                    part: id,
                    centers: part.clone(),
                }),
                1 => stars.push(StarInfo {
                    part: id,
                    centers: hubs,
                }),
                _ => {}
            }
        }

        let boundary = boundary.map(|b| {
            let mut counts = vec![0usize; parts.len()];
            for &(u, v) in g.edges() {
                if alive[u] && b.contains(v) && !alive[v] {
                    counts[comp_of[u]] += 1;
                }
                if alive[v] && b.contains(u) && !alive[u] {
                    counts[comp_of[v]] += 1;
                }
            }
            counts
        });

        ComponentStats {
            omega: parts.len(),
            iso: parts.iter().filter(|p| p.len() == 1).count(),
            odd: parts.iter().filter(|p| p.len() % 2 == 1).count(),
            parts,
            stars,
            boundary,
        }
    }
}

/// Components of `G - B` (or of `G` when `b` is `None`), with the boundary
/// counts `d_G(C, B)` when `b` is given.
pub fn components(g: &MultiGraph, b: Option<&VertexSet>) -> ComponentStats {
    match b {
        Some(b) => ComponentStats::analyze(g, b, Some(b)),
        None => ComponentStats::analyze(g, &VertexSet::empty(), None),
    }
}
