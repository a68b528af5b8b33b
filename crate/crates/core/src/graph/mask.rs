//! Bitmask view of graphs with at most 64 vertices, used by the subset
//! enumerators.

use super::MultiGraph;
use crate::error::{Error, Result};

/// Iterates the set bits of `mask`, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, Debug)]
pub struct MaskGraph {
    pub n: usize,
    pub adj: Vec<u64>,
    // multiplicities, only filled for multigraphs
    mult: Option<Vec<u32>>,
}

impl MaskGraph {
    pub fn new(g: &MultiGraph) -> Result<Self> {
        if g.n() > 64 {
            return Err(Error::scale("bitmask graph vertices", 64, g.n() as u64));
        }
        let n = g.n();
        let mut adj = vec![0u64; n];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mult = if g.is_simple() {
            None
        } else {
            let mut m = vec![0u32; n * n];
            for &(u, v) in g.edges() {
                m[u * n + v] += 1;
                m[v * n + u] += 1;
            }
            Some(m)
        };
        Ok(MaskGraph { n, adj, mult })
    }

    pub fn all(&self) -> u64 {
        full(self.n)
    }

    /// Number of edge slots from `v` into `set`.
    pub fn deg_into(&self, v: usize, set: u64) -> u32 {
        match &self.mult {
            None => (self.adj[v] & set).count_ones(),
            Some(m) => bits(self.adj[v] & set).map(|w| m[v * self.n + w]).sum(),
        }
    }

    /// Union of neighbourhoods of the members of `set`.
    pub fn neighborhood(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.adj[v])
    }

    /// Connected components of the subgraph induced by `alive`.
    pub fn components(&self, alive: u64) -> Components<'_> {
        Components {
            g: self,
            alive,
            left: alive,
        }
    }

    /// Vertices of `alive` with no neighbour inside `alive`.
    pub fn isolated(&self, alive: u64) -> u64 {
        bits(alive)
            .filter(|&v| self.adj[v] & alive == 0)
            .fold(0, |acc, v| acc | (1 << v))
    }

    /// Admissible star centres of component `comp`, or 0 if it is not a
    /// star. Singletons and single edges are stars.
    pub fn star_centers(&self, comp: u64) -> u64 {
        let size = comp.count_ones();
        if size == 1 {
            return comp;
        }
        let mut hubs = 0u64;
        for v in bits(comp) {
            if self.deg_into(v, comp) > 1 {
                if hubs != 0 {
                    return 0;
                }
                hubs = 1 << v;
            }
        }
        if hubs == 0 {
            // connected with every within-degree <= 1: a single edge
            comp
        } else {
            hubs
        }
    }
}

pub struct Components<'a> {
    g: &'a MaskGraph,
    alive: u64,
    left: u64,
}

impl Iterator for Components<'_> {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        if self.left == 0 {
            return None;
        }
        let seed = self.left & self.left.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.g.adj[v];
            }
            next &= self.alive & !comp;
            comp |= next;
            frontier = next;
        }
        self.left &= !comp;
        Some(comp)
    }
}
