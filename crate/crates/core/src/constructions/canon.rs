//! Canonical labelling of small simple graphs by individualisation and
//! colour refinement, used to enumerate graphs up to isomorphism.

/// Ordered partition refinement until every cell is equitable. Cells are
/// split by neighbour counts into every current cell, sorted by that
/// signature so the result does not depend on vertex names.
fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = cells
                        .iter()
                        .map(|c| c.iter().filter(|&&w| adj[v] >> w & 1 == 1).count() as u32)
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code(adj: &[u32], order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]] >> order[j] & 1 == 1 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(adj, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let c = code(adj, &order);
            if best.as_ref().is_none_or(|(b, _)| c < *b) {
                *best = Some((c, order));
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let rest: Vec<usize> = cells[i].iter().copied().filter(|&w| w != v).collect();
                let mut next = cells.clone();
                next.splice(i..=i, [vec![v], rest]);
                search(adj, next, best);
            }
        }
    }
}

/// Canonical code of a simple graph on at most 11 vertices given by
/// adjacency bitmasks: the upper-triangle bits under the canonical order.
pub(crate) fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    assert!(n <= 11, "canonical codes use 64-bit adjacency triangles");
    if n == 0 {
        return 0;
    }
    let mut best = None;
    search(adj, vec![(0..n).collect()], &mut best);
    best.expect("at least one leaf").0
}

/// Adjacency bitmasks of the graph encoded by `code` on `n` vertices.
pub(crate) fn decode(n: usize, code: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    adj
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
        let mut a = vec![0u32; n];
        for &(u, v) in edges {
            a[u] |= 1 << v;
            a[v] |= 1 << u;
        }
        a
    }

    #[test]
    fn relabelled_paths_agree() {
        let p = canonical_code(&adj(4, &[(0, 1), (1, 2), (2, 3)]));
        let q = canonical_code(&adj(4, &[(2, 0), (0, 3), (3, 1)]));
        assert_eq!(p, q);
        let star = canonical_code(&adj(4, &[(0, 1), (0, 2), (0, 3)]));
        assert_ne!(p, star);
    }

    #[test]
    fn decode_round_trip() {
        let a = adj(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]);
        let c = canonical_code(&a);
        assert_eq!(canonical_code(&decode(5, c)), c);
    }
}
