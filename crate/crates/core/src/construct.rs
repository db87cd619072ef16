//! Generators for the extremal families and a few named graphs.
//!
//! Numbering conventions, fixed so that codes printed in reports stay stable:
//! * `A_k` vertex `x_i` is index `i - 1`;
//! * a join lists its blocks in order, each block shifted past the previous;
//! * the universal vertex of a `+u` family is the last index;
//! * the centre of a star is index 0.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `A_k`: vertices `x_1..x_2k`, `x_i ~ x_j` iff `0 < |i - j| <= k - 1`.
/// `A_1` is two isolated vertices; for `k >= 2` it is `P_{2k}^{k-1}`.
pub fn make_a_k(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidFamily { spec: "A:0".into(), reason: "k must be at least 1".into() });
    }
    let n = 2 * k;
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n.min(i + k)).map(move |j| (i, j))))
}

/// `P_n`: `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// `C_n` for `n >= 3`; smaller `n` give the path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((0, n - 1));
    }
    Graph::from_edges(n, edges).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// `K_{1,t}` with centre 0.
pub fn star(t: usize) -> Graph {
    Graph::from_edges(t + 1, (1..=t).map(|i| (0, i))).expect("valid star")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("valid petersen")
}

/// A 2-root of `A_5` that is not a subgraph of `P_10^2`. Vertex `i` of the
/// drawing (1-based) is index `i - 1`; the path `1..10` plus seven chords.
pub fn fig4_root_of_a5() -> Graph {
    const CHORDS: [(usize, usize); 7] = [(1, 3), (2, 5), (3, 5), (4, 7), (6, 8), (6, 9), (8, 10)];
    let path_edges = (1..10).map(|i| (i, i + 1));
    Graph::from_edges(10, path_edges.chain(CHORDS).map(|(u, v)| (u - 1, v - 1))).expect("valid fixture")
}

/// A member of one of the extremal families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "parameters", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `A_k`, `k >= 1`.
    A(usize),
    /// `K_{1,t}`, `t >= 2`.
    Star(usize),
    /// `A_{k_1} ⋈ .. ⋈ A_{k_j}`.
    JoinFamily(Vec<usize>),
    /// `A_{k_1} ⋈ .. ⋈ A_{k_j} ⋈ K_1`.
    JoinFamilyPlusUniversal(Vec<usize>),
    /// `K_n` minus a maximum matching, `n >= 2`.
    CompleteMinusMatching(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: &str| Err(Error::InvalidFamily { spec: self.to_string(), reason: reason.into() });
        match self {
            FamilySpec::A(0) => fail("k must be at least 1"),
            FamilySpec::Star(t) if *t < 2 => fail("a star needs t >= 2"),
            FamilySpec::JoinFamily(ks) | FamilySpec::JoinFamilyPlusUniversal(ks) if ks.is_empty() => {
                fail("the join list must be non-empty")
            }
            FamilySpec::JoinFamily(ks) | FamilySpec::JoinFamilyPlusUniversal(ks) if ks.contains(&0) => {
                fail("every k must be at least 1")
            }
            FamilySpec::CompleteMinusMatching(n) if *n < 2 => fail("n must be at least 2"),
            _ => Ok(()),
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::A(k) => 2 * k,
            FamilySpec::Star(t) => t + 1,
            FamilySpec::JoinFamily(ks) => 2 * ks.iter().sum::<usize>(),
            FamilySpec::JoinFamilyPlusUniversal(ks) => 2 * ks.iter().sum::<usize>() + 1,
            FamilySpec::CompleteMinusMatching(n) => *n,
        }
    }
}

/// Builds the graph described by `spec`.
///
/// `CompleteMinusMatching(n)` is the join of `n / 2` copies of `A_1`, plus a
/// universal vertex when `n` is odd. That is isomorphic to removing a
/// near-perfect matching from `K_n`.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::A(k) => make_a_k(*k),
        FamilySpec::Star(t) => Ok(star(*t)),
        FamilySpec::JoinFamily(ks) => join_blocks(ks),
        FamilySpec::JoinFamilyPlusUniversal(ks) => Ok(Graph::join(&join_blocks(ks)?, &Graph::empty(1))),
        FamilySpec::CompleteMinusMatching(n) => {
            let copies = vec![1; n / 2];
            if n % 2 == 0 {
                join_blocks(&copies)
            } else {
                make_family(&FamilySpec::JoinFamilyPlusUniversal(copies))
            }
        }
    }
}

fn join_blocks(ks: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(0);
    for &k in ks {
        g = Graph::join(&g, &make_a_k(k)?);
    }
    Ok(g)
}

fn join_list(ks: &[usize]) -> String {
    ks.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// The `--family` grammar: `A:<k>`, `star:<t>`, `join:<k1>,<k2>,..[+u]`,
/// `KminusM:<n>`.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::A(k) => write!(f, "A:{k}"),
            FamilySpec::Star(t) => write!(f, "star:{t}"),
            FamilySpec::JoinFamily(ks) => write!(f, "join:{}", join_list(ks)),
            FamilySpec::JoinFamilyPlusUniversal(ks) => write!(f, "join:{}+u", join_list(ks)),
            FamilySpec::CompleteMinusMatching(n) => write!(f, "KminusM:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidFamily { spec: s.to_string(), reason: reason.into() };
        let number = |t: &str| t.trim().parse::<usize>().map_err(|_| invalid("expected a non-negative integer"));
        let (head, body) = s.split_once(':').ok_or_else(|| invalid("expected `<family>:<parameters>`"))?;
        let spec = match head.trim() {
            "A" => FamilySpec::A(number(body)?),
            "star" => FamilySpec::Star(number(body)?),
            "KminusM" => FamilySpec::CompleteMinusMatching(number(body)?),
            "join" => {
                let (list, universal) = match body.strip_suffix("+u") {
                    Some(list) => (list, true),
                    None => (body, false),
                };
                let ks = list.split(',').map(number).collect::<Result<Vec<_>>>()?;
                if universal {
                    FamilySpec::JoinFamilyPlusUniversal(ks)
                } else {
                    FamilySpec::JoinFamily(ks)
                }
            }
            _ => return Err(invalid("unknown family; use A, star, join or KminusM")),
        };
        spec.validate()?;
        Ok(spec)
    }
}
