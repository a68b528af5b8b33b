//! Spanning-tree packing, tree-connected components and the `Omega_m`
//! measure, degree-bounded tree-connected factors, and spanning Eulerian
//! subgraphs.

mod eulerian;
mod packing;
mod search;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::mask::{self, MaskGraph};
use crate::graph::{MultiGraph, VertexSet};
use crate::rational::{serde_q, Q};

pub use eulerian::{connected_24_factor, even_subgraphs, spanning_eulerian, EulerMode, EvenSearch};
pub use search::{augment_factor, bounded_mtc_factor, mtc_range_factor, SearchOutcome};

pub(crate) use packing::forest_union_rank;
use packing::{Dsu, ForestUnion};

/// `m` pairwise edge-disjoint spanning trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreePacking {
    pub m: usize,
    pub trees: Vec<Vec<(usize, usize)>>,
}

/// A vertex partition with fewer than `m(|P| - 1)` crossing edges, which
/// rules out `m` edge-disjoint spanning trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCertificate {
    pub m: usize,
    pub parts: Vec<Vec<usize>>,
    pub crossing: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum PackingResult {
    Packing(TreePacking),
    Refuted(PartitionCertificate),
}

impl PackingResult {
    pub fn is_packing(&self) -> bool {
        matches!(self, PackingResult::Packing(_))
    }

    pub fn verify(&self, g: &MultiGraph) -> bool {
        match self {
            PackingResult::Packing(p) => p.verify(g),
            PackingResult::Refuted(c) => c.verify(g),
        }
    }
}

impl TreePacking {
    /// Every tree spans `g`, is acyclic, and the trees together use each
    /// edge no more often than `g` has copies of it.
    pub fn verify(&self, g: &MultiGraph) -> bool {
        if self.trees.len() != self.m {
            return false;
        }
        let mut budget = g.edge_counts();
        for tree in &self.trees {
            if tree.len() != g.n().saturating_sub(1) {
                return false;
            }
            let mut dsu = Dsu::new(g.n());
            for &(u, v) in tree {
                let key = (u.min(v), u.max(v));
                match budget.get_mut(&key) {
                    Some(c) if *c > 0 => *c -= 1,
                    _ => return false,
                }
                if !dsu.union(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

impl PartitionCertificate {
    /// Recomputes the crossing count and checks the deficiency.
    pub fn verify(&self, g: &MultiGraph) -> bool {
        let mut part_of = vec![usize::MAX; g.n()];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                if v >= g.n() || part_of[v] != usize::MAX {
                    return false;
                }
                part_of[v] = i;
            }
        }
        if part_of.contains(&usize::MAX) {
            return false;
        }
        let crossing = crossing_edges(g, &part_of);
        crossing == self.crossing && crossing < self.m * (self.parts.len().saturating_sub(1))
    }
}

fn crossing_edges(g: &MultiGraph, part_of: &[usize]) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| part_of[u] != part_of[v])
        .count()
}

fn parts_from_labels(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut index = std::collections::BTreeMap::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for (v, &l) in labels.iter().enumerate() {
        let id = *index.entry(l).or_insert_with(|| {
            parts.push(Vec::new());
            parts.len() - 1
        });
        parts[id].push(v);
    }
    parts
}

/// Packs `m` edge-disjoint spanning trees or returns a partition proving
/// that none exist.
pub fn tree_packing(g: &MultiGraph, m: usize) -> PackingResult {
    let n = g.n();
    let fu = ForestUnion::build(n, g.edges(), m);
    if fu.rank() == m * n.saturating_sub(1) {
        let trees = fu
            .forests()
            .into_iter()
            .map(|f| f.into_iter().map(|e| g.edge(e)).collect())
            .collect();
        return PackingResult::Packing(TreePacking { m, trees });
    }
    let reach = fu.reachable_from_uncovered();
    let mut dsu = Dsu::new(n);
    for (e, &r) in reach.iter().enumerate() {
        if r {
            let (u, v) = g.edge(e);
            dsu.union(u, v);
        }
    }
    let labels: Vec<usize> = (0..n).map(|v| dsu.find(v)).collect();
    let parts = parts_from_labels(&labels);
    let crossing = crossing_edges(g, &labels);
    let cert = PartitionCertificate { m, parts, crossing };
    debug_assert!(cert.verify(g), "refuting partition failed its own audit");
    PackingResult::Refuted(cert)
}

/// Largest number of edges covered by `m` edge-disjoint forests.
pub fn union_rank(g: &MultiGraph, m: usize) -> usize {
    forest_union_rank(g.n(), g.edges(), m)
}

pub fn is_tree_connected(g: &MultiGraph, m: usize) -> bool {
    union_rank(g, m) == m * g.n().saturating_sub(1)
}

/// `Omega_m(G)`, computed as `n - r/m` where `r` is the size of a largest
/// union of `m` forests. This equals `|P| - e_G(P)/m` for the partition
/// into `m`-tree-connected components, which maximises that quantity
/// over all partitions.
pub fn omega(g: &MultiGraph, m: usize) -> Q {
    assert!(m > 0, "m must be positive");
    Q::from_integer(g.n() as i64) - Q::new(union_rank(g, m) as i64, m as i64)
}

/// `Omega_m(G - S)`.
pub fn omega_after_removal(g: &MultiGraph, m: usize, s: &VertexSet) -> Q {
    omega(&g.delete_set(s).0, m)
}

/// `Omega_m` of the subgraph induced by the bitmask `alive`.
pub(crate) fn omega_masked(g: &MultiGraph, m: usize, alive: u64) -> Q {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| alive >> u & 1 == 1 && alive >> v & 1 == 1)
        .collect();
    let alive_n = alive.count_ones() as i64;
    Q::from_integer(alive_n) - Q::new(forest_union_rank(g.n(), &edges, m) as i64, m as i64)
}

/// The partition into `m`-tree-connected components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtcPartition {
    pub m: usize,
    pub parts: Vec<Vec<usize>>,
    pub crossing: usize,
    #[serde(with = "serde_q")]
    pub omega_m: Q,
}

/// Computes the `m`-tree-connected components.
///
/// Two vertices share a component exactly when identifying them keeps the
/// maximum of `m|Q| - e_G(Q)` over partitions `Q` unchanged; that maximum
/// is `mn` minus the forest-union rank, so each test is one packing.
pub fn mtc_components(g: &MultiGraph, m: usize) -> MtcPartition {
    assert!(m > 0, "m must be positive");
    let n = g.n();
    let base = union_rank(g, m);
    let mut reps: Vec<usize> = Vec::new();
    let mut label = vec![0usize; n];
    for v in 0..n {
        let mut joined = false;
        for (c, &r) in reps.iter().enumerate() {
            if same_component(g, m, base, r, v) {
                label[v] = c;
                joined = true;
                break;
            }
        }
        if !joined {
            label[v] = reps.len();
            reps.push(v);
        }
    }
    let parts = parts_from_labels(&label);
    let crossing = crossing_edges(g, &label);
    let omega_m = Q::from_integer(parts.len() as i64) - Q::new(crossing as i64, m as i64);
    MtcPartition {
        m,
        parts,
        crossing,
        omega_m,
    }
}

fn same_component(g: &MultiGraph, m: usize, base: usize, a: usize, b: usize) -> bool {
    let n = g.n();
    // identify b with a; relabel the last vertex into b's slot
    let relabel = |x: usize| -> usize {
        let x = if x == b { a } else { x };
        if x == n - 1 {
            b
        } else {
            x
        }
    };
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (relabel(u), relabel(v)))
        .filter(|&(u, v)| u != v)
        .collect();
    forest_union_rank(n - 1, &edges, m) + m == base
}

/// Per-component audit of `G - S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentAudit {
    pub vertices: Vec<usize>,
    pub tree_connected: bool,
    pub max_degree: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorstOmega {
    pub m: usize,
    pub set: VertexSet,
    /// `Omega_m(G - S) - |S|/m`
    #[serde(with = "serde_q")]
    pub value: Q,
    #[serde(with = "serde_q")]
    pub omega: Q,
    pub maximal: bool,
    pub audit: Vec<ComponentAudit>,
}

impl WorstOmega {
    pub fn audit_ok(&self) -> bool {
        self.audit.iter().all(|c| c.ok)
    }
}

/// The set `S` maximising `Omega_m(G - S) - |S|/m`, ties broken towards
/// larger `|S|` and then the smallest bitmask, with the component audit:
/// each component of `G - S` should be `m`-tree-connected or have maximum
/// degree at most `m`.
pub fn worst_omega_set(g: &MultiGraph, m: usize, budget: &Budget) -> Result<WorstOmega> {
    if m == 0 {
        return Err(Error::InvalidParam("m must be positive".into()));
    }
    let n = g.n();
    if n > budget.exact_n || n > 63 {
        return Err(Error::scale("subset enumeration vertices", budget.exact_n.min(63) as u64, n as u64));
    }
    let all = mask::full(n);
    let mq = Q::from_integer(m as i64);
    let values: Vec<Q> = (0..=all)
        .map(|s| omega_masked(g, m, all & !s) - Q::from_integer(s.count_ones() as i64) / mq)
        .collect();
    let best_value = *values.iter().max().expect("at least the empty set");
    let best = (0..=all)
        .filter(|&s| values[s as usize] == best_value)
        .max_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(b.cmp(&a)))
        .expect("maximiser exists");
    let maximal = (0..=all)
        .filter(|&s| s != best && s & best == best)
        .all(|s| values[s as usize] < best_value);

    let mg = MaskGraph::new(g)?;
    let alive = all & !best;
    let audit = mg
        .components(alive)
        .map(|comp| {
            let vs: Vec<usize> = mask::bits(comp).collect();
            let (sub, _) = g.induced(&VertexSet::new(vs.iter().copied()));
            let tree_connected = is_tree_connected(&sub, m);
            let max_degree = sub.max_degree();
            ComponentAudit {
                vertices: vs,
                tree_connected,
                max_degree,
                ok: tree_connected || max_degree <= m,
            }
        })
        .collect();
    let omega = best_value + Q::from_integer(best.count_ones() as i64) / mq;
    debug_assert!(!omega.is_zero() || alive == 0);
    Ok(WorstOmega {
        m,
        set: VertexSet::from_mask(best),
        value: best_value,
        omega,
        maximal,
        audit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    #[test]
    fn k4_packs_two_trees() {
        let g = MultiGraph::complete(4);
        match tree_packing(&g, 2) {
            PackingResult::Packing(p) => assert!(p.verify(&g)),
            other => panic!("expected packing, got {other:?}"),
        }
    }

    #[test]
    fn c4_refuted_by_singletons() {
        let g = MultiGraph::cycle(4);
        match tree_packing(&g, 2) {
            PackingResult::Refuted(c) => {
                assert!(c.verify(&g));
                assert_eq!(c.parts.len(), 4);
                assert_eq!(c.crossing, 4);
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn doubled_edge_packs() {
        let g = MultiGraph::new(2, [(0, 1), (0, 1)]).unwrap();
        let PackingResult::Packing(p) = tree_packing(&g, 2) else {
            panic!("expected packing")
        };
        assert_eq!(p.trees, vec![vec![(0, 1)], vec![(0, 1)]]);
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(&MultiGraph::cycle(4), 2), q(2));
        assert_eq!(omega_after_removal(&MultiGraph::cycle(4), 2, &VertexSet::new([0])), q(2));
        assert_eq!(omega(&MultiGraph::complete(5), 2), q(1));
        assert_eq!(omega(&MultiGraph::complete(3), 2), qr(3, 2));
    }

    #[test]
    fn k4_two_tree_connected_is_one_part() {
        let p = mtc_components(&MultiGraph::complete(4), 2);
        assert_eq!(p.parts, vec![vec![0, 1, 2, 3]]);
        assert_eq!(p.omega_m, q(1));
    }

    #[test]
    fn c4_two_tree_components_are_singletons() {
        let p = mtc_components(&MultiGraph::cycle(4), 2);
        assert_eq!(p.parts.len(), 4);
        assert_eq!(p.omega_m, q(2));
    }

    #[test]
    fn m1_components_are_connected_components() {
        let g = MultiGraph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let p = mtc_components(&g, 1);
        assert_eq!(p.parts, vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(p.omega_m, q(2));
    }

    #[test]
    fn worst_set_examples() {
        let b = Budget::default();
        let c4 = worst_omega_set(&MultiGraph::cycle(4), 2, &b).unwrap();
        assert!(c4.set.is_empty());
        assert_eq!(c4.value, q(2));
        assert!(c4.audit_ok());
        // S = {} and S = {v} tie at 1; the larger set wins and leaves K_3,
        // which is not 2-tree-connected but has maximum degree 2
        let k4 = worst_omega_set(&MultiGraph::complete(4), 2, &b).unwrap();
        assert_eq!(k4.set, VertexSet::new([0]));
        assert_eq!(k4.value, q(1));
        assert!(!k4.audit[0].tree_connected && k4.audit_ok());
        let e3 = worst_omega_set(&MultiGraph::empty(3), 1, &b).unwrap();
        assert!(e3.set.is_empty());
        assert_eq!(e3.value, q(3));
        assert!(e3.audit_ok());
    }
}
