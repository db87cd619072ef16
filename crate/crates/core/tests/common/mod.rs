#![allow(dead_code)]

use idcode_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Connected twin-free graph on `n` vertices with maximum degree exactly
/// `max_degree`: a random tree of bounded degree plus random chords, retried
/// until the degree and twin conditions hold.
pub fn random_connected_twin_free<R: Rng>(rng: &mut R, n: usize, max_degree: usize) -> Graph {
    loop {
        let mut deg = vec![0usize; n];
        let mut edges = Vec::new();
        for v in 1..n {
            let open: Vec<usize> = (0..v).filter(|&u| deg[u] < max_degree).collect();
            let &u = open.choose(rng).expect("a tree of degree >= 2 always has room");
            edges.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
        let chords = rng.gen_range(0..=n);
        for _ in 0..chords {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let (u, v) = (u.min(v), u.max(v));
            if u == v || deg[u] >= max_degree || deg[v] >= max_degree || edges.contains(&(u, v)) {
                continue;
            }
            edges.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
        let g = Graph::from_edges(n, edges).expect("valid edges");
        if g.max_degree() == max_degree && g.is_twin_free() {
            return g;
        }
    }
}
