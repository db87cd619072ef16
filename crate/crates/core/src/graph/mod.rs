//! Finite simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is one [`VertexSet`] per vertex, so balls, symmetric
//! differences and powers reduce to word-parallel set operations.

mod enumerate;
mod io;
mod iso;
mod vertex_set;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use enumerate::{canonical_mask, edge_pair_count, enumerate_graphs, enumerate_graphs_with_cap, Enumerator, CANONICAL_CAP, ENUMERATION_CAP};
pub(crate) use enumerate::graph_from_mask;
pub use io::{parse_edge_list, write_edge_list};
pub use iso::{automorphisms, is_isomorphic, isomorphism, ISOMORPHISM_CAP};
pub use vertex_set::{Iter as VertexSetIter, VertexSet};

/// Radius of a ball for code checks; always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Radius(usize);

impl Radius {
    pub const ONE: Radius = Radius(1);

    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            Err(Error::ZeroRadius)
        } else {
            Ok(Radius(r))
        }
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![VertexSet::empty(n); n], edges: 0 }
    }

    /// Builds a graph from unordered pairs. Loops and out-of-range
    /// endpoints are errors; repeated pairs are stored once.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidPair(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex adjacency bitmasks. Requires `n <= 64`
    /// and a symmetric, loop-free input.
    pub(crate) fn from_adjacency_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let adj: Vec<VertexSet> = masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect();
        let edges = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Self { adj, edges }
    }

    /// Returns `true` if the edge was new.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if fresh {
            self.edges += 1;
        }
        fresh
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.n() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch { expected: self.n(), found: s.universe() })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Open neighbourhood.
    pub fn neighbors(&self, x: usize) -> &VertexSet {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|x| self.degree(x)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|x| self.degree(x)).min().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.max_degree();
        (self.min_degree() == d).then_some(d)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `B_r(x)`: all vertices at distance at most `r` from `x`. `r = 0`
    /// yields `{x}`. Vertices in other components are never included.
    pub fn closed_ball(&self, x: usize, r: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(self.ball_unchecked(x, r))
    }

    pub(crate) fn ball_unchecked(&self, x: usize, r: usize) -> VertexSet {
        let n = self.n();
        let mut ball = VertexSet::empty(n);
        ball.insert(x);
        if r == 1 {
            ball.union_with(&self.adj[x]);
            return ball;
        }
        let mut frontier = ball.clone();
        for _ in 0..r {
            let mut next = VertexSet::empty(n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&ball);
            if next.is_empty() {
                break;
            }
            ball.union_with(&next);
            frontier = next;
        }
        ball
    }

    /// All closed balls of radius `r`, indexed by centre.
    pub fn balls(&self, r: usize) -> Vec<VertexSet> {
        (0..self.n()).map(|x| self.ball_unchecked(x, r)).collect()
    }

    /// `B_r(x) ⊖ B_r(y)` for distinct `x`, `y`.
    pub fn ball_symmetric_difference(&self, x: usize, y: usize, r: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::InvalidPair(x));
        }
        Ok(self.ball_unchecked(x, r).symmetric_difference(&self.ball_unchecked(y, r)))
    }

    /// Breadth-first distances from `x`; `None` for unreachable vertices.
    pub fn distances_from(&self, x: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(x)?;
        let mut dist = vec![None; self.n()];
        dist[x] = Some(0);
        let mut queue = std::collections::VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// `G^r`: same vertices, `x ~ y` iff `0 < d(x, y) <= r`.
    pub fn power(&self, r: Radius) -> Graph {
        if r.get() == 1 {
            return self.clone();
        }
        let adj: Vec<VertexSet> = (0..self.n())
            .map(|x| {
                let mut ball = self.ball_unchecked(x, r.get());
                ball.remove(x);
                ball
            })
            .collect();
        let edges = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { adj, edges }
    }

    /// Pairs `(x, y)`, `x < y`, with `B_1(x) = B_1(y)`, in lexicographic order.
    pub fn twin_pairs(&self) -> Vec<(usize, usize)> {
        twin_pairs_of(&self.balls(1))
    }

    pub fn is_twin_free(&self) -> bool {
        first_twin_pair(&self.balls(1)).is_none()
    }

    /// Disjoint union of `g1` and `g2` (the latter shifted by `g1.n()`) with
    /// every cross pair joined.
    pub fn join(g1: &Graph, g2: &Graph) -> Graph {
        let (n1, n2) = (g1.n(), g2.n());
        let mut g = Graph::empty(n1 + n2);
        for (u, v) in g1.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in g2.edges() {
            g.add_edge(u + n1, v + n1);
        }
        for u in 0..n1 {
            for v in 0..n2 {
                g.add_edge(u, n1 + v);
            }
        }
        g
    }

    /// Disjoint union with `g2` shifted by `g1.n()`.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
        let n1 = g1.n();
        let mut g = Graph::empty(n1 + g2.n());
        for (u, v) in g1.edges().chain(g2.edges().map(|(u, v)| (u + n1, v + n1))) {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj: Vec<VertexSet> = (0..n)
            .map(|x| {
                let mut c = self.adj[x].complement();
                c.remove(x);
                c
            })
            .collect();
        let edges = n * n.saturating_sub(1) / 2 - self.edges;
        Graph { adj, edges }
    }

    /// The subgraph induced by `keep`, reindexed densely in increasing order.
    /// The second component maps new indices back to old ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(keep)?;
        let old_of_new = keep.to_vec();
        let mut new_of_old = vec![usize::MAX; self.n()];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut g = Graph::empty(old_of_new.len());
        for (new_u, &old_u) in old_of_new.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(keep).iter().filter(|&v| v > old_u) {
                g.add_edge(new_u, new_of_old[old_v]);
            }
        }
        Ok((g, old_of_new))
    }

    /// `G - x` with the map from old indices to new ones (`None` for `x`).
    pub fn delete_vertex(&self, x: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_vertex(x)?;
        let mut keep = VertexSet::full(self.n());
        keep.remove(x);
        let (g, _) = self.induced_subgraph(&keep)?;
        let map = (0..self.n()).map(|v| (v != x).then(|| if v < x { v } else { v - 1 })).collect();
        Ok((g, map))
    }

    /// Vertex sets of the connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let comp = self.ball_unchecked(start, n);
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.ball_unchecked(0, self.n()).len() == self.n()
    }

    /// Maximum eccentricity; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for x in 0..self.n() {
            for d in self.distances_from(x).ok()? {
                diam = diam.max(d?);
            }
        }
        Some(diam)
    }

    /// Edge bitmask in the enumeration order (see [`enumerate_graphs`]).
    /// Requires `n <= 11`.
    pub fn edge_mask(&self) -> Option<u64> {
        if edge_pair_count(self.n()) > 64 {
            return None;
        }
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.has_edge(u, v) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        Some(mask)
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::Precondition(format!(
                "relabeling has {} entries for {} vertices",
                perm.len(),
                self.n()
            )));
        }
        let image = VertexSet::from_vertices(self.n(), perm.iter().copied())?;
        if image.len() != self.n() {
            return Err(Error::Precondition("relabeling is not a bijection".into()));
        }
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// All pairs of equal sets in `balls`, lexicographic.
pub(crate) fn twin_pairs_of(balls: &[VertexSet]) -> Vec<(usize, usize)> {
    let mut groups: HashMap<&VertexSet, Vec<usize>> = HashMap::new();
    for (x, b) in balls.iter().enumerate() {
        groups.entry(b).or_default().push(x);
    }
    let mut pairs: Vec<(usize, usize)> = groups
        .values()
        .filter(|g| g.len() > 1)
        .flat_map(|g| {
            g.iter().enumerate().flat_map(move |(i, &x)| g[i + 1..].iter().map(move |&y| (x, y)))
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// Lexicographically first pair of equal sets, if any.
pub(crate) fn first_twin_pair(balls: &[VertexSet]) -> Option<(usize, usize)> {
    first_collision(balls.iter().enumerate())
}

/// Lexicographically first pair `(x, y)` among the keyed items with equal
/// keys. Items must arrive in increasing index order.
pub(crate) fn first_collision<'a>(
    items: impl Iterator<Item = (usize, &'a VertexSet)>,
) -> Option<(usize, usize)> {
    let mut first_seen: HashMap<&VertexSet, usize> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (y, key) in items {
        match first_seen.get(key) {
            // The first repeat of each key pairs with that key's least index;
            // the winner is the repeat whose least index is smallest.
            Some(&x) => {
                if best.is_none_or(|(bx, _)| x < bx) {
                    best = Some((x, y));
                }
            }
            None => {
                first_seen.insert(key, y);
            }
        }
    }
    best
}
