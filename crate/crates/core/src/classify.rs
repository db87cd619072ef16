//! Structural recognition of the connected graphs whose minimum identifying
//! code has `n - 1` vertices: stars `K_{1,t}` (`t >= 2`), joins of `A_k`
//! blocks, and such joins with one extra universal vertex.
//!
//! A join in `G` is a disjoint union in the complement, and the complement
//! of `A_k` is connected for `k >= 2` (for `k = 1` it is `K_2`). So the join
//! factors of `G` are the connected components of its complement, and each
//! must be the complement of some `A_k`, or a single vertex (a universal
//! vertex of `G`).

use serde::Serialize;

use crate::construct::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "parts", rename_all = "kebab-case")]
pub enum Outcome {
    /// `K_{1,t}`, `t >= 2`.
    Star(usize),
    /// Join of `A_{k_1}, .., A_{k_j}`, sorted ascending.
    JoinFamily(Vec<usize>),
    /// As `JoinFamily`, joined with one universal vertex.
    JoinFamilyPlusUniversal(Vec<usize>),
    NotExtremal,
}

impl Outcome {
    /// The family spec that rebuilds a graph isomorphic to the classified one.
    pub fn family_spec(&self) -> Option<FamilySpec> {
        match self {
            Outcome::Star(t) => Some(FamilySpec::Star(*t)),
            Outcome::JoinFamily(ks) => Some(FamilySpec::JoinFamily(ks.clone())),
            Outcome::JoinFamilyPlusUniversal(ks) => Some(FamilySpec::JoinFamilyPlusUniversal(ks.clone())),
            Outcome::NotExtremal => None,
        }
    }

    pub fn is_extremal(&self) -> bool {
        !matches!(self, Outcome::NotExtremal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub outcome: Outcome,
    /// `n - 1` when extremal.
    pub implied_gamma_id: Option<usize>,
}

/// `Some(k)` iff `g ≅ A_k`.
///
/// For `k >= 2`, `deg(x_i) = i + k - 2` for `i <= k` and the degrees are
/// mirrored on the other half. Fixing `x_1` as a vertex of minimum degree,
/// its closed neighbourhood is `{x_1..x_k}`, ordered by increasing degree,
/// and the rest is `{x_{k+1}..x_2k}`, ordered by decreasing degree. Both
/// choices for `x_1` are tried and the edge rule is then checked exactly.
pub fn recognize_a_k(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n == 0 || n % 2 == 1 {
        return None;
    }
    let k = n / 2;
    if k == 1 {
        return (g.edge_count() == 0).then_some(1);
    }
    // |E(A_k)| counts n - d pairs for every gap 0 < d < k.
    let expected_edges: usize = (1..k).map(|d| n - d).sum();
    if g.edge_count() != expected_edges {
        return None;
    }
    if g.min_degree() != k - 1 || g.max_degree() != 2 * k - 2 {
        return None;
    }
    let found = (0..n).filter(|&v| g.degree(v) == k - 1).any(|start| {
        let near = g.ball_unchecked(start, 1);
        if near.len() != k {
            return false;
        }
        let mut first: Vec<usize> = near.iter().collect();
        let mut second: Vec<usize> = near.complement().iter().collect();
        first.sort_by_key(|&v| g.degree(v));
        second.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        let order: Vec<usize> = first.into_iter().chain(second).collect();
        (0..n).all(|i| (i + 1..n).all(|j| g.has_edge(order[i], order[j]) == (j - i < k)))
    });
    found.then_some(k)
}

/// Decides whether a connected twin-free graph on at least two vertices has
/// `γ^ID = n - 1`, and names its family.
pub fn classify_extremal(g: &Graph) -> Result<ClassificationResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition(format!("classification needs n >= 2, got n = {n}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(&(x, y)) = g.twin_pairs().first() {
        return Err(Error::Twins { x, y, radius: 1 });
    }
    let outcome = classify_outcome(g)?;
    let implied_gamma_id = outcome.is_extremal().then_some(n - 1);
    Ok(ClassificationResult { outcome, implied_gamma_id })
}

fn classify_outcome(g: &Graph) -> Result<Outcome> {
    let n = g.n();
    if is_star(g) {
        return Ok(Outcome::Star(n - 1));
    }
    let co = g.complement();
    let mut blocks = Vec::new();
    let mut universal = 0;
    for comp in co.components() {
        if comp.len() == 1 {
            universal += 1;
            continue;
        }
        let (factor, _) = co.induced_subgraph(&comp)?;
        match recognize_a_k(&factor.complement()) {
            Some(k) => blocks.push(k),
            None => return Ok(Outcome::NotExtremal),
        }
    }
    if universal > 1 {
        return Err(Error::Internal("two universal vertices in a twin-free graph".into()));
    }
    blocks.sort_unstable();
    Ok(match (universal, blocks.is_empty()) {
        (_, true) => Outcome::NotExtremal,
        (0, false) => Outcome::JoinFamily(blocks),
        _ => Outcome::JoinFamilyPlusUniversal(blocks),
    })
}

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 3
        && g.edge_count() == n - 1
        && g.max_degree() == n - 1
        && (0..n).filter(|&v| g.degree(v) == 1).count() == n - 1
}
