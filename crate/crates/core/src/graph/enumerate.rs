//! Exhaustive enumeration of labeled graphs.
//!
//! Vertex pairs are numbered `(0,1), (0,2), .., (0,n-1), (1,2), ..` and a
//! graph on `n` vertices is identified with the bitmask over those pairs.
//! Enumeration walks masks `0, 1, .., 2^m - 1` in increasing order, so the
//! stream is fixed for a given `n`.

use std::collections::HashSet;

use super::Graph;
use crate::error::{Error, Result};

/// Default largest `n` for [`enumerate_graphs`] (2^21 labeled graphs).
pub const ENUMERATION_CAP: usize = 7;

/// Largest `n` for [`canonical_mask`] (8! relabelings per graph).
pub const CANONICAL_CAP: usize = 8;

/// Number of vertex pairs on `n` vertices.
pub fn edge_pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labeled simple graph on `n <= ENUMERATION_CAP` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Enumerator> {
    enumerate_graphs_with_cap(n, ENUMERATION_CAP)
}

/// As [`enumerate_graphs`] with an explicit cap. The hard limit is `n <= 11`
/// (masks must fit in 64 bits).
pub fn enumerate_graphs_with_cap(n: usize, cap: usize) -> Result<Enumerator> {
    let cap = cap.min(11);
    if n > cap {
        return Err(Error::TooLarge { what: "graph enumeration", n, cap });
    }
    let m = edge_pair_count(n);
    Ok(Enumerator {
        n,
        pairs: pair_table(n),
        next: 0,
        end: if m == 64 { u64::MAX } else { (1u64 << m) - 1 },
        done: false,
        seen: None,
    })
}

fn pair_table(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Lazy stream over edge masks in increasing order.
pub struct Enumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    done: bool,
    seen: Option<HashSet<u64>>,
}

impl Enumerator {
    /// Yield only the first labeled graph (lowest mask) of each isomorphism
    /// class. Requires `n <= CANONICAL_CAP`.
    pub fn unique_up_to_isomorphism(mut self) -> Result<Self> {
        if self.n > CANONICAL_CAP {
            return Err(Error::TooLarge { what: "canonical form", n: self.n, cap: CANONICAL_CAP });
        }
        self.seen = Some(HashSet::new());
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of labeled graphs in the full stream.
    pub fn total(&self) -> u64 {
        self.end.wrapping_add(1)
    }

    /// The graph with the given mask.
    pub fn graph(&self, mask: u64) -> Graph {
        graph_from_mask_with(self.n, &self.pairs, mask)
    }

    /// Iterate `(mask, graph)` pairs.
    pub fn with_masks(self) -> impl Iterator<Item = (u64, Graph)> {
        MaskIter(self)
    }

    fn advance(&mut self) -> Option<(u64, Graph)> {
        loop {
            if self.done {
                return None;
            }
            let mask = self.next;
            if mask == self.end {
                self.done = true;
            } else {
                self.next += 1;
            }
            let g = self.graph(mask);
            if let Some(seen) = &mut self.seen {
                let canon = canonical_mask(&g).expect("n checked against CANONICAL_CAP");
                if !seen.insert(canon) {
                    continue;
                }
            }
            return Some((mask, g));
        }
    }
}

impl Iterator for Enumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.advance().map(|(_, g)| g)
    }
}

struct MaskIter(Enumerator);

impl Iterator for MaskIter {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<(u64, Graph)> {
        self.0.advance()
    }
}

/// Graph for an edge mask; `n <= 11`.
pub(crate) fn graph_from_mask(n: usize, mask: u64) -> Graph {
    graph_from_mask_with(n, &pair_table(n), mask)
}

fn graph_from_mask_with(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut adj = [0u64; 11];
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = pairs[i];
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Graph::from_adjacency_masks(&adj[..n])
}

/// Lexicographically least edge mask over all `n!` relabelings. Two graphs
/// are isomorphic iff their canonical masks agree. `n <= CANONICAL_CAP`.
pub fn canonical_mask(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > CANONICAL_CAP {
        return Err(Error::TooLarge { what: "canonical form", n, cap: CANONICAL_CAP });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut bit_of = [[0u32; CANONICAL_CAP]; CANONICAL_CAP];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            bit_of[u][v] = bit;
            bit_of[v][u] = bit;
            bit += 1;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    // Heap's algorithm over all permutations.
    let mut c = vec![0usize; n];
    let mut eval = |perm: &[usize]| {
        let m = edges.iter().fold(0u64, |m, &(u, v)| m | 1 << bit_of[perm[u]][perm[v]]);
        best = best.min(m);
    };
    eval(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            eval(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(0).unwrap().count(), 1);
    }

    #[test]
    fn connected_twin_free_on_three() {
        let found: Vec<Graph> =
            enumerate_graphs(3).unwrap().filter(|g| g.is_connected() && g.is_twin_free()).collect();
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(|g| g.edge_count() == 2));
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(enumerate_graphs(8), Err(Error::TooLarge { n: 8, cap: 7, .. })));
        assert!(enumerate_graphs_with_cap(8, 8).is_ok());
    }

    #[test]
    fn mask_round_trip() {
        for (mask, g) in enumerate_graphs(5).unwrap().with_masks() {
            assert_eq!(g.edge_mask(), Some(mask));
        }
    }

    #[test]
    fn unlabeled_counts() {
        // Known numbers of unlabeled graphs on n vertices.
        for (n, count) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let got = enumerate_graphs(n).unwrap().unique_up_to_isomorphism().unwrap().count();
            assert_eq!(got, count, "n={n}");
        }
    }
}
