//! Checks for dominating sets, separating sets, identifying codes,
//! locating-dominating sets and discriminating codes.
//!
//! Every check returns a [`CodeCertificate`]. On failure the witness is the
//! first failure in a fixed order: domination is checked before separation,
//! undominated vertices by increasing index, unseparated pairs
//! lexicographically.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{first_collision, Graph, Radius, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeKind {
    Dominating,
    Separating,
    Identifying,
    LocatingDominating,
    Discriminating,
}

impl CodeKind {
    pub const ALL: [CodeKind; 5] = [
        CodeKind::Dominating,
        CodeKind::Separating,
        CodeKind::Identifying,
        CodeKind::LocatingDominating,
        CodeKind::Discriminating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CodeKind::Dominating => "dominating",
            CodeKind::Separating => "separating",
            CodeKind::Identifying => "identifying",
            CodeKind::LocatingDominating => "locating-dominating",
            CodeKind::Discriminating => "discriminating",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CodeKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CodeKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown code kind `{s}`"))
    }
}

/// Evidence that a set is not a code of the checked kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// `B_r(vertex) ∩ C = ∅`.
    Undominated { vertex: usize },
    /// `B_r(x) ∩ C = B_r(y) ∩ C = restricted_ball`.
    Unseparated { x: usize, y: usize, restricted_ball: VertexSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeCertificate {
    pub kind: CodeKind,
    pub radius: Radius,
    pub valid: bool,
    pub witness: Option<Witness>,
}

impl CodeCertificate {
    fn new(kind: CodeKind, radius: Radius, witness: Option<Witness>) -> Self {
        Self { kind, radius, valid: witness.is_none(), witness }
    }

    /// Recomputes the witness against `g` and `code`: an undominated vertex
    /// really misses the code and an unseparated pair really has equal
    /// restricted balls. Valid certificates re-check trivially. Not
    /// applicable to discriminating certificates.
    pub fn witness_holds(&self, g: &Graph, code: &VertexSet) -> bool {
        let r = self.radius.get();
        match &self.witness {
            None => true,
            Some(Witness::Undominated { vertex }) => {
                g.closed_ball(*vertex, r).is_ok_and(|b| !b.intersects(code))
            }
            Some(Witness::Unseparated { x, y, restricted_ball }) => {
                let bx = g.closed_ball(*x, r).map(|b| b.intersection(code));
                let by = g.closed_ball(*y, r).map(|b| b.intersection(code));
                x != y && bx.as_ref() == Ok(restricted_ball) && by.as_ref() == Ok(restricted_ball)
            }
        }
    }
}

fn first_undominated(balls: &[VertexSet], c: &VertexSet) -> Option<Witness> {
    balls.iter().position(|b| !b.intersects(c)).map(|vertex| Witness::Undominated { vertex })
}

/// First pair among `candidates` (increasing indices) whose signatures agree.
fn first_unseparated(
    signatures: &[VertexSet],
    candidates: impl Iterator<Item = usize>,
) -> Option<Witness> {
    let (x, y) = first_collision(candidates.map(|v| (v, &signatures[v])))?;
    Some(Witness::Unseparated { x, y, restricted_ball: signatures[x].clone() })
}

fn restricted(balls: &[VertexSet], c: &VertexSet) -> Vec<VertexSet> {
    balls.iter().map(|b| b.intersection(c)).collect()
}

fn prepared(g: &Graph, c: &VertexSet, r: Radius) -> Result<Vec<VertexSet>> {
    if c.universe() != g.n() {
        return Err(Error::UniverseMismatch { expected: g.n(), found: c.universe() });
    }
    Ok(g.balls(r.get()))
}

pub fn is_dominating(g: &Graph, c: &VertexSet, r: Radius) -> Result<CodeCertificate> {
    let balls = prepared(g, c, r)?;
    Ok(CodeCertificate::new(CodeKind::Dominating, r, first_undominated(&balls, c)))
}

/// Whether `c` r-separates `x` and `y`.
pub fn separates(g: &Graph, c: &VertexSet, x: usize, y: usize, r: Radius) -> Result<bool> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::InvalidPair(x));
    }
    if c.universe() != g.n() {
        return Err(Error::UniverseMismatch { expected: g.n(), found: c.universe() });
    }
    let bx = g.closed_ball(x, r.get())?.intersection(c);
    let by = g.closed_ball(y, r.get())?.intersection(c);
    Ok(bx != by)
}

pub fn is_separating(g: &Graph, c: &VertexSet, r: Radius) -> Result<CodeCertificate> {
    let balls = prepared(g, c, r)?;
    let sig = restricted(&balls, c);
    Ok(CodeCertificate::new(CodeKind::Separating, r, first_unseparated(&sig, 0..g.n())))
}

pub fn is_identifying(g: &Graph, c: &VertexSet, r: Radius) -> Result<CodeCertificate> {
    let balls = prepared(g, c, r)?;
    let witness = first_undominated(&balls, c).or_else(|| {
        let sig = restricted(&balls, c);
        first_unseparated(&sig, 0..g.n())
    });
    Ok(CodeCertificate::new(CodeKind::Identifying, r, witness))
}

/// Dominating, and separating every pair of vertices outside `c`.
pub fn is_locating_dominating(g: &Graph, c: &VertexSet, r: Radius) -> Result<CodeCertificate> {
    let balls = prepared(g, c, r)?;
    let witness = first_undominated(&balls, c).or_else(|| {
        let sig = restricted(&balls, c);
        first_unseparated(&sig, (0..g.n()).filter(|&v| !c.contains(v)))
    });
    Ok(CodeCertificate::new(CodeKind::LocatingDominating, r, witness))
}

/// Dispatch for the graph-based kinds. Discriminating codes live on the
/// membership graph; see [`is_discriminating`].
pub fn check(g: &Graph, c: &VertexSet, kind: CodeKind, r: Radius) -> Result<CodeCertificate> {
    match kind {
        CodeKind::Dominating => is_dominating(g, c, r),
        CodeKind::Separating => is_separating(g, c, r),
        CodeKind::Identifying => is_identifying(g, c, r),
        CodeKind::LocatingDominating => is_locating_dominating(g, c, r),
        CodeKind::Discriminating => {
            if r != Radius::ONE {
                return Err(Error::Precondition("discriminating codes are checked at radius 1".into()));
            }
            if c.universe() != g.n() {
                return Err(Error::UniverseMismatch { expected: g.n(), found: c.universe() });
            }
            Ok(is_discriminating(&membership_graph(g), c))
        }
    }
}

/// The 1-ball membership graph: a bipartite graph with one `I` node per
/// vertex `u` and one `A` node per closed ball `B_1(v)`, with `u ~ B_1(v)`
/// iff `u ∈ B_1(v)`. `A` node `v` carries the label of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMembershipGraph {
    /// For each `A` node, its `I` neighbours.
    ball_members: Vec<VertexSet>,
    /// For each `I` node, its `A` neighbours.
    containing_balls: Vec<VertexSet>,
}

impl BipartiteMembershipGraph {
    pub fn i_side_len(&self) -> usize {
        self.containing_balls.len()
    }

    pub fn a_side_len(&self) -> usize {
        self.ball_members.len()
    }

    /// `I` neighbours of `A` node `ball`.
    pub fn ball_members(&self, ball: usize) -> &VertexSet {
        &self.ball_members[ball]
    }

    /// `A` neighbours of `I` node `u`.
    pub fn containing_balls(&self, u: usize) -> &VertexSet {
        &self.containing_balls[u]
    }

    /// Membership pairs `(u, ball)`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.containing_balls.iter().enumerate().flat_map(|(u, balls)| balls.iter().map(move |b| (u, b)))
    }
}

pub fn membership_graph(g: &Graph) -> BipartiteMembershipGraph {
    let ball_members = g.balls(1);
    let n = g.n();
    let mut containing_balls = vec![VertexSet::empty(n); n];
    for (v, ball) in ball_members.iter().enumerate() {
        for u in ball {
            containing_balls[u].insert(v);
        }
    }
    BipartiteMembershipGraph { ball_members, containing_balls }
}

/// `s ⊆ A` is discriminating iff distinct `I` nodes have distinct
/// neighbourhoods within `s`. The witness names two `I` nodes and the
/// shared set of `A` nodes.
pub fn is_discriminating(bg: &BipartiteMembershipGraph, s: &VertexSet) -> CodeCertificate {
    assert_eq!(s.universe(), bg.a_side_len(), "subset of the A side expected");
    let sig: Vec<VertexSet> = bg.containing_balls.iter().map(|b| b.intersection(s)).collect();
    let witness = first_unseparated(&sig, 0..bg.i_side_len());
    CodeCertificate::new(CodeKind::Discriminating, Radius::ONE, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete, make_a_k, path, star};
    use proptest::prelude::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    const R1: Radius = Radius::ONE;

    #[test]
    fn domination_examples() {
        assert!(is_dominating(&star(3), &set(4, &[0]), R1).unwrap().valid);
        let cert = is_dominating(&Graph::empty(2), &set(2, &[0]), R1).unwrap();
        assert_eq!(cert.witness, Some(Witness::Undominated { vertex: 1 }));
        let a3 = make_a_k(3).unwrap();
        assert!(is_dominating(&a3, &a3.closed_ball(2, 1).unwrap(), R1).unwrap().valid);
    }

    #[test]
    fn separates_examples() {
        for k in 2..=5 {
            let a = make_a_k(k).unwrap();
            for i in 1..k {
                let c = set(2 * k, &[i - 1 + k]);
                assert!(separates(&a, &c, i - 1, i, R1).unwrap());
            }
        }
        let p4 = path(4);
        let empty = VertexSet::empty(4);
        for x in 0..4 {
            for y in x + 1..4 {
                assert!(!separates(&p4, &empty, x, y, R1).unwrap());
            }
        }
        assert!(!separates(&p4, &set(4, &[1, 2]), 1, 2, R1).unwrap());
        assert_eq!(separates(&p4, &empty, 1, 1, R1), Err(Error::InvalidPair(1)));
    }

    #[test]
    fn identifying_examples() {
        let a2 = make_a_k(2).unwrap();
        assert!(is_identifying(&a2, &set(4, &[0, 1, 2]), R1).unwrap().valid);
        assert!(is_identifying(&star(2), &set(3, &[1, 2]), R1).unwrap().valid);
        let cert = is_identifying(&path(4), &set(4, &[1, 2]), R1).unwrap();
        assert_eq!(
            cert.witness,
            Some(Witness::Unseparated { x: 1, y: 2, restricted_ball: set(4, &[1, 2]) })
        );
        // Twins: even the full vertex set fails, naming the twin pair.
        let cert = is_identifying(&complete(3), &VertexSet::full(3), R1).unwrap();
        assert!(matches!(cert.witness, Some(Witness::Unseparated { x: 0, y: 1, .. })));
    }

    #[test]
    fn locating_dominating_examples() {
        for n in 2..=6 {
            for skip in 0..n {
                let c = set(n, &(0..n).filter(|&v| v != skip).collect::<Vec<_>>());
                assert!(is_locating_dominating(&complete(n), &c, R1).unwrap().valid);
            }
        }
        assert!(is_locating_dominating(&star(4), &set(5, &[1, 2, 3, 4]), R1).unwrap().valid);
        let cert = is_locating_dominating(&path(4), &set(4, &[1]), R1).unwrap();
        // x4 is undominated before any pair is looked at.
        assert_eq!(cert.witness, Some(Witness::Undominated { vertex: 3 }));
        let cert = is_locating_dominating(&path(3), &set(3, &[1]), R1).unwrap();
        assert!(matches!(cert.witness, Some(Witness::Unseparated { x: 0, y: 2, .. })));
    }

    #[test]
    fn membership_graph_examples() {
        let bg = membership_graph(&Graph::empty(1));
        assert_eq!(bg.edges().collect::<Vec<_>>(), vec![(0, 0)]);
        let bg = membership_graph(&path(4));
        assert_eq!(bg.a_side_len(), 4);
        assert_eq!(bg.ball_members(1), &set(4, &[0, 1, 2]));
    }

    #[test]
    fn discriminating_examples() {
        let bg = membership_graph(&path(4));
        assert!(is_discriminating(&bg, &set(4, &[0, 1, 2])).valid);
        assert!(!is_discriminating(&bg, &VertexSet::empty(4)).valid);
        let bg = membership_graph(&complete(2));
        assert!(!is_discriminating(&bg, &VertexSet::full(2)).valid);
    }

    #[test]
    fn zero_radius_unrepresentable() {
        assert_eq!(Radius::new(0), Err(Error::ZeroRadius));
    }

    #[test]
    fn universe_mismatch() {
        assert!(matches!(
            is_identifying(&path(4), &VertexSet::empty(3), R1),
            Err(Error::UniverseMismatch { expected: 4, found: 3 })
        ));
    }

    /// Brute-force identifying check straight from the definition.
    fn identifying_oracle(g: &Graph, c: &[usize], r: usize) -> bool {
        let n = g.n();
        let sig = |x: usize| -> Vec<usize> {
            let d = g.distances_from(x).unwrap();
            c.iter().copied().filter(|&v| d[v].is_some_and(|d| d <= r)).collect()
        };
        (0..n).all(|x| !sig(x).is_empty()) && (0..n).all(|x| (x + 1..n).all(|y| sig(x) != sig(y)))
    }

    fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
        (1..=max_n).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                proptest::collection::vec(any::<bool>(), n),
            )
                .prop_map(move |(edges, members)| {
                    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                    let g = Graph::from_edges(n, pairs.zip(edges).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap();
                    let c = VertexSet::from_vertices(n, (0..n).filter(|&v| members[v])).unwrap();
                    (g, c)
                })
        })
    }

    proptest! {
        #[test]
        fn identifying_matches_oracle((g, c) in arb_graph_and_set(8), r in 1usize..3) {
            let cert = is_identifying(&g, &c, Radius::new(r).unwrap()).unwrap();
            prop_assert_eq!(cert.valid, identifying_oracle(&g, &c.to_vec(), r));
        }

        #[test]
        fn radius_r_is_power((g, c) in arb_graph_and_set(8), r in 1usize..4) {
            let r = Radius::new(r).unwrap();
            let gr = g.power(r);
            for kind in [CodeKind::Dominating, CodeKind::Separating, CodeKind::Identifying, CodeKind::LocatingDominating] {
                prop_assert_eq!(check(&g, &c, kind, r).unwrap(), {
                    let mut cert = check(&gr, &c, kind, R1).unwrap();
                    cert.radius = r;
                    cert
                });
            }
        }

        #[test]
        fn supersets_of_codes_are_codes((g, c) in arb_graph_and_set(8), extra in proptest::collection::vec(0usize..8, 0..4)) {
            if is_identifying(&g, &c, R1).unwrap().valid {
                let mut bigger = c.clone();
                for v in extra.into_iter().filter(|&v| v < g.n()) {
                    bigger.insert(v);
                }
                prop_assert!(is_identifying(&g, &bigger, R1).unwrap().valid);
            }
        }

        #[test]
        fn full_set_identifies_iff_twin_free((g, _c) in arb_graph_and_set(8)) {
            let cert = is_identifying(&g, &VertexSet::full(g.n()), R1).unwrap();
            prop_assert_eq!(cert.valid, g.is_twin_free());
        }

        #[test]
        fn separating_iff_discriminating((g, c) in arb_graph_and_set(8)) {
            let sep = is_separating(&g, &c, R1).unwrap();
            let disc = is_discriminating(&membership_graph(&g), &c);
            prop_assert_eq!(sep.valid, disc.valid);
            prop_assert_eq!(sep.witness, disc.witness);
        }

        #[test]
        fn witnesses_reverify((g, c) in arb_graph_and_set(8), r in 1usize..3) {
            let r = Radius::new(r).unwrap();
            for kind in [CodeKind::Dominating, CodeKind::Separating, CodeKind::Identifying, CodeKind::LocatingDominating] {
                let cert = check(&g, &c, kind, r).unwrap();
                prop_assert_eq!(cert.valid, cert.witness.is_none());
                prop_assert!(cert.witness_holds(&g, &c));
            }
        }
    }
}
