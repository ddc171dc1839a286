//! Exhaustive enumeration of small graphs, one representative per
//! isomorphism class, via canonical-minimum adjacency bitmasks. No external
//! canonical-labeling dependency; n <= 8 stays comfortably tractable.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

/// Canonical key: the lexicographically smallest upper-triangle bit string
/// over all vertex orderings, packed most-significant-first into a u128.
/// Supports n <= 16 (C(16,2) = 120 bits).
pub(crate) fn canonical_key(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= 16, "canonical keys support n <= 16");
    if n <= 1 {
        return 0;
    }
    let total_bits = n * (n - 1) / 2;
    let mut best: Option<u128> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    place(g, n, total_bits, &mut perm, &mut used, 0, 0, &mut best);
    best.expect("complete permutation explored")
}

/// Depth-first placement: position j contributes the j bits of adjacency to
/// the already-placed vertices. Prefix-prunes against the best complete key.
#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    n: usize,
    total_bits: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    prefix: u128,
    filled: usize,
    best: &mut Option<u128>,
) {
    let j = perm.len();
    if j == n {
        if best.map_or(true, |b| prefix < b) {
            *best = Some(prefix);
        }
        return;
    }
    // Candidate column bits for each unused vertex, ascending so cheap
    // prefixes are explored first.
    let mut cands: Vec<(u128, usize)> = (0..n)
        .filter(|&v| !used[v])
        .map(|v| {
            let mut col: u128 = 0;
            for (i, &p) in perm.iter().enumerate() {
                if g.has_edge(p, v) {
                    col |= 1 << (j - 1 - i);
                }
            }
            (col, v)
        })
        .collect();
    cands.sort_unstable();
    for (col, v) in cands {
        let new_filled = filled + j;
        let new_prefix = prefix | (col << (total_bits - new_filled));
        if let Some(b) = *best {
            // Compare on the filled prefix only.
            let shift = total_bits - new_filled;
            if (new_prefix >> shift) > (b >> shift) {
                continue;
            }
        }
        perm.push(v);
        used[v] = true;
        place(g, n, total_bits, perm, used, new_prefix, new_filled, best);
        perm.pop();
        used[v] = false;
    }
}

/// All graphs on `n` vertices up to isomorphism (`n <= 8`), by extending each
/// canonical representative on `n - 1` vertices with every neighborhood of a
/// new vertex and deduplicating on canonical keys. Deterministic order.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > 8 {
        return Err(Error::TooLarge { n, limit: 8 });
    }
    if n == 0 {
        return Ok(vec![Graph::new(0)]);
    }
    let mut level: Vec<Graph> = vec![Graph::new(1)];
    for m in 2..=n {
        let mut seen: HashMap<u128, Graph> = HashMap::new();
        for g in &level {
            for mask in 0u32..(1 << (m - 1)) {
                let mut h = Graph::new(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for v in 0..m - 1 {
                    if mask >> v & 1 == 1 {
                        h.add_edge(v, m - 1);
                    }
                }
                seen.entry(canonical_key(&h)).or_insert(h);
            }
        }
        let mut next: Vec<(u128, Graph)> = seen.into_iter().collect();
        next.sort_by_key(|&(k, _)| k);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path, isomorphic};

    #[test]
    fn class_counts() {
        // Known counts of graphs up to isomorphism.
        assert_eq!(enumerate_graphs(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(2, false).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(3, false).unwrap().len(), 4);
        assert_eq!(enumerate_graphs(4, false).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(5, false).unwrap().len(), 34);
        assert_eq!(enumerate_graphs(6, false).unwrap().len(), 156);
        assert_eq!(enumerate_graphs(4, true).unwrap().len(), 6);
        assert_eq!(enumerate_graphs(3, true).unwrap().len(), 2);
        assert!(enumerate_graphs(9, false).is_err());
    }

    #[test]
    fn larger_counts() {
        assert_eq!(enumerate_graphs(7, false).unwrap().len(), 1044);
        assert_eq!(enumerate_graphs(7, true).unwrap().len(), 853);
    }

    #[test]
    fn connected_three() {
        let graphs = enumerate_graphs(3, true).unwrap();
        assert!(graphs.iter().any(|g| isomorphic(g, &build_path(3))));
        assert!(graphs.iter().any(|g| isomorphic(g, &build_cycle(3))));
    }

    #[test]
    fn pairwise_non_isomorphic_spot_check() {
        let graphs = enumerate_graphs(5, false).unwrap();
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert!(!isomorphic(a, b));
            }
        }
    }

    #[test]
    fn canonical_key_is_isomorphism_invariant() {
        let c5 = build_cycle(5);
        let mut relabeled = Graph::new(5);
        for (u, v) in c5.edges() {
            relabeled.add_edge((u * 2 + 1) % 5, (v * 2 + 1) % 5);
        }
        assert_eq!(canonical_key(&c5), canonical_key(&relabeled));
        assert_ne!(canonical_key(&c5), canonical_key(&build_path(5)));
    }
}
