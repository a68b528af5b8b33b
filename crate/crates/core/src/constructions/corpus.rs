//! Graph corpora: exhaustive small connected graphs, seeded random graphs
//! and named graphs.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_code, decode};
use super::petersen;
use crate::error::{Error, Result};
use crate::graph::{parse_graph, parse_graph6_lines, Format, MultiGraph};
use crate::rational::{parse_q, Q};

/// A corpus member with a stable identifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusGraph {
    pub id: String,
    pub graph: MultiGraph,
}

/// Corpus description, written as `all_connected:N`, `gnp:N:P:COUNT`,
/// `regular:N:D:COUNT`, `named:NAME,NAME,...` or `file:PATH`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSpec {
    AllConnected(usize),
    Gnp { n: usize, p: Q, count: usize },
    Regular { n: usize, d: usize, count: usize },
    Named(Vec<String>),
    File(String),
}

impl FromStr for CorpusSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParam(format!("bad corpus spec {s:?}"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let fields: Vec<&str> = rest.split(':').collect();
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        match (kind.trim(), fields.as_slice()) {
            ("all_connected" | "all-connected", [n]) => Ok(CorpusSpec::AllConnected(num(n)?)),
            ("gnp", [n, p, count]) => Ok(CorpusSpec::Gnp {
                n: num(n)?,
                p: parse_q(p)?,
                count: num(count)?,
            }),
            ("regular", [n, d, count]) => Ok(CorpusSpec::Regular {
                n: num(n)?,
                d: num(d)?,
                count: num(count)?,
            }),
            ("named", [names]) => Ok(CorpusSpec::Named(
                names.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect(),
            )),
            ("file", _) => Ok(CorpusSpec::File(rest.to_string())),
            _ => Err(bad()),
        }
    }
}

/// Expands a corpus spec; random members depend only on `seed`.
pub fn corpus(spec: &CorpusSpec, seed: u64) -> Result<Vec<CorpusGraph>> {
    let tag = |prefix: &str, graphs: Vec<MultiGraph>| {
        graphs
            .into_iter()
            .enumerate()
            .map(|(i, graph)| CorpusGraph {
                id: format!("{prefix}#{i}"),
                graph,
            })
            .collect()
    };
    Ok(match spec {
        CorpusSpec::AllConnected(n) => tag("all_connected", all_connected(*n)?),
        CorpusSpec::Gnp { n, p, count } => tag("gnp", gnp(*n, *p, *count, seed)?),
        CorpusSpec::Regular { n, d, count } => tag("regular", random_regular(*n, *d, *count, seed)?),
        CorpusSpec::Named(names) => names
            .iter()
            .map(|name| {
                Ok(CorpusGraph {
                    id: name.clone(),
                    graph: named(name)?,
                })
            })
            .collect::<Result<_>>()?,
        CorpusSpec::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParam(format!("cannot read {path}: {e}")))?;
            let graphs = if path.ends_with(".el") || path.ends_with(".txt") {
                vec![parse_graph(&text, Format::Edgelist)?]
            } else {
                parse_graph6_lines(&text).or_else(|_| parse_graph(&text, Format::Edgelist).map(|g| vec![g]))?
            };
            tag(path, graphs)
        }
    })
}

/// All connected simple graphs on `1..=n_max` vertices up to isomorphism,
/// ordered by vertex count and then canonical code.
pub fn all_connected(n_max: usize) -> Result<Vec<MultiGraph>> {
    if n_max > 8 {
        return Err(Error::scale("all_connected order", 8, n_max as u64));
    }
    let mut out = Vec::new();
    if n_max == 0 {
        return Ok(out);
    }
    // every connected graph has a vertex whose removal keeps it connected
    let mut level: Vec<u64> = vec![0];
    out.push(MultiGraph::empty(1));
    for n in 2..=n_max {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(n - 1, code);
            for nbrs in 1u32..1 << (n - 1) {
                let mut adj = base.clone();
                adj.push(nbrs);
                for (v, a) in adj.iter_mut().enumerate().take(n - 1) {
                    if nbrs >> v & 1 == 1 {
                        *a |= 1 << (n - 1);
                    }
                }
                next.insert(canonical_code(&adj));
            }
        }
        level = next.into_iter().collect();
        out.extend(level.iter().map(|&c| from_adj(&decode(n, c))));
    }
    Ok(out)
}

fn from_adj(adj: &[u32]) -> MultiGraph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    MultiGraph::new(n, edges).expect("valid adjacency")
}

/// `count` samples of `G(n, p)`, each pair independently with probability
/// `p` (an exact rational in `[0, 1]`).
pub fn gnp(n: usize, p: Q, count: usize, seed: u64) -> Result<Vec<MultiGraph>> {
    if p < Q::from_integer(0) || p > Q::from_integer(1) {
        return Err(Error::InvalidParam(format!("edge probability {p} outside [0, 1]")));
    }
    let (num, den) = (*p.numer() as u64, *p.denom() as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_range(0..den) < num {
                        e.push((u, v));
                    }
                }
            }
            MultiGraph::new(n, e).expect("valid pairs")
        })
        .collect())
}

/// `count` simple `d`-regular graphs from the pairing model, rejecting
/// pairings with loops or repeated edges.
pub fn random_regular(n: usize, d: usize, count: usize, seed: u64) -> Result<Vec<MultiGraph>> {
    if n * d % 2 == 1 || (n > 0 && d >= n) {
        return Err(Error::InvalidParam(format!("no simple {d}-regular graph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    const ATTEMPTS: usize = 100_000;
    for _ in 0..count {
        let mut done = false;
        for _ in 0..ATTEMPTS {
            let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
            points.shuffle(&mut rng);
            let mut edges: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
            if edges.iter().any(|&(u, v)| u == v) {
                continue;
            }
            edges.sort_unstable();
            if edges.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            out.push(MultiGraph::new(n, edges)?);
            done = true;
            break;
        }
        if !done {
            return Err(Error::scale("regular pairing attempts", ATTEMPTS as u64, ATTEMPTS as u64 + 1));
        }
    }
    Ok(out)
}

/// `petersen`, `K<n>`, `C<n>`, `P<n>`, `S<k>` (the star `K_{1,k}`),
/// `K<a>,<b>` and `E<n>` (edgeless).
pub fn named(name: &str) -> Result<MultiGraph> {
    let bad = || Error::InvalidParam(format!("unknown graph name {name:?}"));
    let lower = name.trim().to_ascii_lowercase();
    if lower == "petersen" {
        return Ok(petersen());
    }
    let (head, tail) = lower.split_at(1.min(lower.len()));
    if head == "k" {
        if let Some((a, b)) = tail.split_once(',') {
            let a = a.parse().map_err(|_| bad())?;
            let b = b.parse().map_err(|_| bad())?;
            return Ok(MultiGraph::complete_bipartite(a, b));
        }
    }
    let k: usize = tail.parse().map_err(|_| bad())?;
    match head {
        "k" => Ok(MultiGraph::complete(k)),
        "c" if k >= 3 => Ok(MultiGraph::cycle(k)),
        "p" => Ok(MultiGraph::path(k)),
        "s" => Ok(MultiGraph::star(k)),
        "e" => Ok(MultiGraph::empty(k)),
        _ => Err(bad()),
    }
}
