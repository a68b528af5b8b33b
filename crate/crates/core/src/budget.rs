use serde::{Deserialize, Serialize};

/// Enumeration caps shared by every exhaustive routine.
///
/// Each cap can be overridden through a `FACTORLAB_BUDGET_<FIELD>`
/// environment variable (for example `FACTORLAB_BUDGET_EXACT_N=20`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest vertex count for 2^n subset enumeration.
    pub exact_n: usize,
    /// Largest vertex count for 3^n disjoint-pair enumeration.
    pub criterion_n: usize,
    /// Maximum number of independent sets visited.
    pub indep_sets: u64,
    /// Largest cycle-space dimension for even-subgraph exhaustion.
    pub cycle_dim: usize,
    /// Node limit for branch-and-bound factor searches.
    pub search_nodes: u64,
    /// Default sample count for falsification mode.
    pub samples: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            exact_n: 24,
            criterion_n: 15,
            indep_sets: 10_000_000,
            cycle_dim: 26,
            search_nodes: 2_000_000,
            samples: 100_000,
        }
    }
}

impl Budget {
    pub fn from_env() -> Self {
        Self::default().with_env()
    }

    pub fn with_env(mut self) -> Self {
        fn read<T: std::str::FromStr>(key: &str, slot: &mut T) {
            if let Ok(v) = std::env::var(format!("FACTORLAB_BUDGET_{key}")) {
                if let Ok(parsed) = v.trim().parse() {
                    *slot = parsed;
                }
            }
        }
        read("EXACT_N", &mut self.exact_n);
        read("CRITERION_N", &mut self.criterion_n);
        read("INDEP_SETS", &mut self.indep_sets);
        read("CYCLE_DIM", &mut self.cycle_dim);
        read("SEARCH_NODES", &mut self.search_nodes);
        read("SAMPLES", &mut self.samples);
        self
    }
}
