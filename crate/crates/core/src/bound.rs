//! Constructive upper bounds on the size of identifying codes.
//!
//! The general pipeline at radius `r`:
//! 1. greedily pick a maximal `(5r+1)`-independent set `I`;
//! 2. for each `x ∈ I`, pick `f(x) ∈ B_r(x)` whose removal leaves `G^r`
//!    twin-free;
//! 3. `f(I)` is then `(3r+1)`-independent, and `V ∖ f(I)` is an
//!    r-identifying code.
//!
//! The size of `I` is at least `n / |B_{5r}(x)|`, which gives
//! `|code| <= n (1 - (Δ-2) / (Δ(Δ-1)^{5r} - 2))` for `Δ >= 3`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::codes::is_identifying;
use crate::error::{Error, Result};
use crate::graph::{edge_pair_count, enumerate_graphs_with_cap, first_twin_pair, graph_from_mask, write_edge_list, Graph, Radius, VertexSet};
use crate::solve::min_identifying_code;

/// Which bound a [`BoundReport`] was produced under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundTheorem {
    /// General graphs, radius 1.
    General,
    /// Regular graphs, radius 1.
    Regular,
    /// General graphs, radius `r >= 2`.
    GeneralRadius(Radius),
}

impl fmt::Display for BoundTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundTheorem::General => f.write_str("thm14"),
            BoundTheorem::Regular => f.write_str("thm15"),
            BoundTheorem::GeneralRadius(r) => write!(f, "thm19(r={r})"),
        }
    }
}

impl Serialize for BoundTheorem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exact rational ceiling on the code size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue(BigRational);

impl BoundValue {
    pub fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// `count <= ⌈self⌉`.
    pub fn admits(&self, count: usize) -> bool {
        BigInt::from(count) <= self.ceil()
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BoundValue", 3)?;
        st.serialize_field("numerator", &self.0.numer().to_string())?;
        st.serialize_field("denominator", &self.0.denom().to_string())?;
        st.serialize_field("ceiling", &self.ceil().to_string())?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub theorem: BoundTheorem,
    pub radius: Radius,
    pub independent_set: VertexSet,
    /// `f(I)`; equal to `I` for the regular variant.
    pub mapped_set: VertexSet,
    pub code: VertexSet,
    /// Absent when `Δ <= 2`.
    pub bound_value: Option<BoundValue>,
}

/// Least `y ∈ B_r(x)` such that `G^r - y` is twin-free. Such a vertex exists
/// in every finite graph whose `r`-th power is twin-free.
pub fn removable_vertex_in_ball(g: &Graph, x: usize, r: Radius) -> Result<usize> {
    g.check_vertex(x)?;
    let balls = g.balls(r.get());
    if let Some((a, b)) = first_twin_pair(&balls) {
        return Err(Error::Twins { x: a, y: b, radius: r.get() });
    }
    removable_with_balls(&balls, x)
        .ok_or_else(|| Error::Internal(format!("no removable vertex near {x} in a finite twin-free power")))
}

/// Removing `y` shrinks every ball by `y`; `G^r - y` is twin-free iff the
/// shrunken balls of the other vertices stay distinct.
fn removable_with_balls(balls: &[VertexSet], x: usize) -> Option<usize> {
    balls[x].iter().find(|&y| {
        let shrunk: Vec<VertexSet> = balls
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != y)
            .map(|(_, b)| {
                let mut b = b.clone();
                b.remove(y);
                b
            })
            .collect();
        first_twin_pair(&shrunk).is_none()
    })
}

/// Maximal set of vertices at pairwise distance at least `d`, taken greedily
/// in increasing index order. Vertices in different components are at
/// infinite distance.
pub fn greedy_independent_set(g: &Graph, d: usize) -> Result<VertexSet> {
    if d == 0 {
        return Err(Error::Precondition("distance d must be at least 1".into()));
    }
    let mut chosen = VertexSet::empty(g.n());
    let mut blocked = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if !blocked.contains(v) {
            chosen.insert(v);
            blocked.union_with(&g.ball_unchecked(v, d - 1));
        }
    }
    Ok(chosen)
}

/// First pair of `set` at distance less than `d`, if any.
pub fn closest_violation(g: &Graph, set: &VertexSet, d: usize) -> Option<(usize, usize)> {
    let members = set.to_vec();
    for (i, &u) in members.iter().enumerate() {
        let near = g.ball_unchecked(u, d.saturating_sub(1));
        if let Some(&v) = members[i + 1..].iter().find(|&&v| near.contains(v)) {
            return Some((u, v));
        }
    }
    None
}

/// `V ∖ I` for a `(3r+1)`-independent `I` whose members can each be left out
/// of an r-identifying code on their own.
pub fn code_from_independent_set(g: &Graph, i: &VertexSet, r: Radius) -> Result<VertexSet> {
    g.check_set(i)?;
    let spacing = 3 * r.get() + 1;
    if let Some((u, v)) = closest_violation(g, i, spacing) {
        return Err(Error::Precondition(format!(
            "vertices {u} and {v} are closer than {spacing}; the set must be {spacing}-independent"
        )));
    }
    let full = VertexSet::full(g.n());
    for v in i {
        let mut without = full.clone();
        without.remove(v);
        let cert = is_identifying(g, &without, r)?;
        if !cert.valid {
            return Err(Error::Precondition(format!(
                "V minus {{{v}}} is not an identifying code (radius {r}): {:?}",
                cert.witness
            )));
        }
    }
    let code = full.difference(i);
    let cert = is_identifying(g, &code, r)?;
    if !cert.valid {
        return Err(Error::Internal(format!("V minus the independent set fails: {:?}", cert.witness)));
    }
    Ok(code)
}

/// `|B_{d-1}(x)| <= 1 + Δ Σ_{j=0}^{d-2} (Δ-1)^j` for any vertex of a graph
/// with maximum degree `Δ`.
pub fn ball_size_bound(max_degree: usize, d: usize) -> BigInt {
    let delta = BigInt::from(max_degree);
    let branch = BigInt::from(max_degree.saturating_sub(1));
    let mut sum = BigInt::zero();
    let mut term = BigInt::one();
    for _ in 0..d.saturating_sub(1) {
        sum += &term;
        term *= &branch;
    }
    BigInt::one() + delta * sum
}

/// `n (1 - (Δ-2) / (Δ(Δ-1)^{5r} - 2))`, defined for `Δ >= 3`.
pub fn general_bound(n: usize, max_degree: usize, r: Radius) -> Option<BoundValue> {
    if max_degree < 3 {
        return None;
    }
    let delta = BigInt::from(max_degree);
    let two = BigInt::from(2);
    let denom = &delta * num_traits::pow(&delta - 1, 5 * r.get()) - &two;
    let fraction = BigRational::new(&delta - &two, denom);
    Some(BoundValue(BigRational::from_integer(n.into()) * (BigRational::one() - fraction)))
}

/// `n (1 - 1 / (1 + Δ - Δ² + Δ³))`, defined for `Δ >= 3`.
pub fn regular_bound(n: usize, degree: usize) -> Option<BoundValue> {
    if degree < 3 {
        return None;
    }
    let d = BigInt::from(degree);
    let denom = BigInt::one() + &d - &d * &d + &d * &d * &d;
    let fraction = BigRational::new(BigInt::one(), denom);
    Some(BoundValue(BigRational::from_integer(n.into()) * (BigRational::one() - fraction)))
}

/// Runs the general pipeline on a connected graph with a twin-free `r`-th
/// power.
pub fn constructive_upper_bound(g: &Graph, r: Radius) -> Result<BoundReport> {
    check_pipeline_input(g, r)?;
    let balls = g.balls(r.get());
    let independent = greedy_independent_set(g, 5 * r.get() + 1)?;
    let mut mapped = VertexSet::empty(g.n());
    for x in &independent {
        let y = removable_with_balls(&balls, x)
            .ok_or_else(|| Error::Internal(format!("no removable vertex near {x} in a finite twin-free power")))?;
        mapped.insert(y);
    }
    if mapped.len() != independent.len() {
        return Err(Error::Internal("the removable-vertex map is not injective".into()));
    }
    if let Some((u, v)) = closest_violation(g, &mapped, 3 * r.get() + 1) {
        return Err(Error::Internal(format!("mapped vertices {u} and {v} are too close")));
    }
    let code = code_from_independent_set(g, &mapped, r)?;
    let theorem = if r == Radius::ONE { BoundTheorem::General } else { BoundTheorem::GeneralRadius(r) };
    let report = BoundReport {
        theorem,
        radius: r,
        independent_set: independent,
        mapped_set: mapped,
        bound_value: general_bound(g.n(), g.max_degree(), r),
        code,
    };
    check_ceiling(&report)?;
    Ok(report)
}

/// Variant for connected regular twin-free graphs, where every `V ∖ {x}` is
/// already an identifying code and `f` is the identity.
pub fn regular_constructive_bound(g: &Graph) -> Result<BoundReport> {
    check_pipeline_input(g, Radius::ONE)?;
    let degree = g
        .regular_degree()
        .ok_or_else(|| Error::Precondition("graph is not regular".into()))?;
    let independent = greedy_independent_set(g, 4)?;
    let code = code_from_independent_set(g, &independent, Radius::ONE)?;
    let report = BoundReport {
        theorem: BoundTheorem::Regular,
        radius: Radius::ONE,
        mapped_set: independent.clone(),
        independent_set: independent,
        bound_value: regular_bound(g.n(), degree),
        code,
    };
    check_ceiling(&report)?;
    Ok(report)
}

fn check_pipeline_input(g: &Graph, r: Radius) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Precondition("the pipeline needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((x, y)) = first_twin_pair(&g.balls(r.get())) {
        return Err(Error::Twins { x, y, radius: r.get() });
    }
    Ok(())
}

fn check_ceiling(report: &BoundReport) -> Result<()> {
    match &report.bound_value {
        Some(b) if !b.admits(report.code.len()) => Err(Error::Internal(format!(
            "code of size {} exceeds the ceiling {}",
            report.code.len(),
            b.ceil()
        ))),
        _ => Ok(()),
    }
}

/// `⌈n - n/Δ⌉`.
pub fn conjectured_bound(n: usize, max_degree: usize) -> usize {
    n - n / max_degree
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureCounterexample {
    pub n: usize,
    pub edge_list: String,
    pub gamma_id: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureScanReport {
    pub max_n: usize,
    /// Connected twin-free labeled graphs with `Δ >= 3` that were solved.
    pub graphs_checked: u64,
    pub counterexamples: Vec<ConjectureCounterexample>,
}

/// Checks `γ^ID <= ⌈n - n/Δ⌉` on every labeled connected twin-free graph
/// with `Δ >= 3` and at most `max_n` vertices.
pub fn conjecture_scan(max_n: usize) -> Result<ConjectureScanReport> {
    conjecture_scan_with_cap(max_n, crate::graph::ENUMERATION_CAP)
}

pub fn conjecture_scan_with_cap(max_n: usize, cap: usize) -> Result<ConjectureScanReport> {
    enumerate_graphs_with_cap(max_n, cap)?;
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for n in 4..=max_n {
        let total = 1u64 << edge_pair_count(n);
        let (count, mut found) = (0..total)
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask);
                let delta = g.max_degree();
                if delta < 3 || !g.is_connected() || !g.is_twin_free() {
                    return Ok((0u64, None));
                }
                let gamma = min_identifying_code(&g, Radius::ONE)?.minimum;
                let bound = conjectured_bound(n, delta);
                let cx = (gamma > bound).then(|| (mask, ConjectureCounterexample {
                    n,
                    edge_list: write_edge_list(&g),
                    gamma_id: gamma,
                    bound,
                }));
                Ok((1, cx))
            })
            .try_fold(
                || (0u64, Vec::new()),
                |(c, mut v), item: Result<(u64, Option<(u64, ConjectureCounterexample)>)>| {
                    let (k, cx) = item?;
                    v.extend(cx);
                    Ok::<_, Error>((c + k, v))
                },
            )
            .try_reduce(|| (0, Vec::new()), |(a, mut va), (b, vb)| {
                va.extend(vb);
                Ok((a + b, va))
            })?;
        found.sort_by_key(|(mask, _)| *mask);
        checked += count;
        counterexamples.extend(found.into_iter().map(|(_, cx)| cx));
    }
    Ok(ConjectureScanReport { max_n, graphs_checked: checked, counterexamples })
}

impl BoundValue {
    /// Lossy value for display.
    pub fn approx(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cycle, make_a_k, path, petersen, star};

    const R1: Radius = Radius::ONE;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn removable_examples() {
        assert_eq!(removable_vertex_in_ball(&path(4), 0, R1).unwrap(), 0);
        assert_eq!(removable_vertex_in_ball(&star(3), 0, R1).unwrap(), 0);
        assert!(matches!(
            removable_vertex_in_ball(&crate::construct::complete(3), 0, R1),
            Err(Error::Twins { .. })
        ));
    }

    #[test]
    fn removable_agrees_with_twin_check() {
        for g in [path(6), cycle(7), make_a_k(3).unwrap(), petersen()] {
            for x in 0..g.n() {
                let y = removable_vertex_in_ball(&g, x, R1).unwrap();
                assert!(g.closed_ball(x, 1).unwrap().contains(y));
                assert!(g.delete_vertex(y).unwrap().0.is_twin_free());
            }
        }
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_independent_set(&path(4), 4).unwrap(), set(4, &[0]));
        assert_eq!(greedy_independent_set(&cycle(7), 3).unwrap(), set(7, &[0, 3]));
        assert_eq!(greedy_independent_set(&petersen(), 1).unwrap(), VertexSet::full(10));
        assert!(greedy_independent_set(&path(3), 0).is_err());
    }

    #[test]
    fn greedy_is_maximal_and_spaced() {
        for g in [path(20), cycle(31), petersen(), make_a_k(6).unwrap()] {
            for d in 1..=7 {
                let set = greedy_independent_set(&g, d).unwrap();
                assert_eq!(closest_violation(&g, &set, d), None);
                for v in 0..g.n() {
                    let near = g.closed_ball(v, d - 1).unwrap();
                    assert!(near.intersects(&set), "vertex {v} could be added (d={d})");
                }
            }
        }
    }

    #[test]
    fn code_from_independent_set_examples() {
        let p4 = path(4);
        assert_eq!(code_from_independent_set(&p4, &set(4, &[0]), R1).unwrap(), set(4, &[1, 2, 3]));
        assert!(matches!(
            code_from_independent_set(&p4, &set(4, &[0, 3]), R1),
            Err(Error::Precondition(_))
        ));
        let code = code_from_independent_set(&cycle(9), &set(9, &[0, 4]), R1).unwrap();
        assert_eq!(code.len(), 7);
    }

    #[test]
    fn bound_formulas() {
        let b = general_bound(94, 3, R1).unwrap();
        assert_eq!(b.ratio(), &BigRational::from_integer(93.into()));
        let b = regular_bound(22, 3).unwrap();
        assert_eq!(b.ratio(), &BigRational::from_integer(21.into()));
        assert!(general_bound(10, 2, R1).is_none());
        assert!(regular_bound(10, 2).is_none());
        // Petersen: ⌈10 · 21/22⌉ = 10.
        assert_eq!(regular_bound(10, 3).unwrap().ceil(), BigInt::from(10));
    }

    #[test]
    fn closed_form_matches_explicit_ball_sum() {
        for delta in 3..=8usize {
            for r in 1..=3 {
                let r = Radius::new(r).unwrap();
                let n = 1000;
                let sum = ball_size_bound(delta, 5 * r.get() + 1);
                let via_sum = BigRational::from_integer(n.into())
                    - BigRational::new(BigInt::from(n), sum);
                assert_eq!(general_bound(n, delta, r).unwrap().ratio(), &via_sum);
            }
            let via_sum = BigRational::from_integer(50.into())
                - BigRational::new(BigInt::from(50), ball_size_bound(delta, 4));
            assert_eq!(regular_bound(50, delta).unwrap().ratio(), &via_sum);
        }
    }

    #[test]
    fn ball_size_bound_holds() {
        for g in [petersen(), make_a_k(4).unwrap(), cycle(12), star(5)] {
            for d in 1..=5 {
                let cap = ball_size_bound(g.max_degree(), d);
                for x in 0..g.n() {
                    assert!(BigInt::from(g.closed_ball(x, d - 1).unwrap().len()) <= cap);
                }
            }
        }
    }

    #[test]
    fn pipeline_on_cycles_and_petersen() {
        let report = constructive_upper_bound(&cycle(50), R1).unwrap();
        assert!(report.code.len() <= 49);
        assert!(report.bound_value.is_none());

        let report = regular_constructive_bound(&cycle(9)).unwrap();
        assert_eq!(report.independent_set, set(9, &[0, 4]));
        assert!(report.bound_value.is_none());

        let report = regular_constructive_bound(&petersen()).unwrap();
        assert!(is_identifying(&petersen(), &report.code, R1).unwrap().valid);
        assert!(report.bound_value.unwrap().admits(report.code.len()));
    }

    #[test]
    fn small_diameter_uses_one_vertex() {
        for g in [path(4), petersen(), make_a_k(3).unwrap(), star(4)] {
            let report = constructive_upper_bound(&g, R1).unwrap();
            assert_eq!(report.independent_set.len(), 1);
            assert_eq!(report.code.len(), g.n() - 1);
        }
    }

    #[test]
    fn pipeline_preconditions() {
        assert_eq!(constructive_upper_bound(&make_a_k(1).unwrap(), R1), Err(Error::Disconnected));
        assert!(matches!(constructive_upper_bound(&path(3), Radius::new(2).unwrap()), Err(Error::Twins { .. })));
        assert!(matches!(regular_constructive_bound(&path(5)), Err(Error::Precondition(_))));
    }

    #[test]
    fn radius_two_pipeline() {
        let g = cycle(40);
        let r = Radius::new(2).unwrap();
        let report = constructive_upper_bound(&g, r).unwrap();
        assert_eq!(report.theorem.to_string(), "thm19(r=2)");
        assert!(is_identifying(&g, &report.code, r).unwrap().valid);
    }

    #[test]
    fn radius_transfer() {
        // Valid at radius r on G iff valid at radius 1 on G^r, same set.
        let g = path(30);
        for r in 1..=3 {
            let r = Radius::new(r).unwrap();
            let gr = g.power(r);
            let spacing = 3 * r.get() + 1;
            for start in 0..3 {
                let i = VertexSet::from_vertices(30, (start..30).step_by(spacing)).unwrap();
                assert_eq!(
                    code_from_independent_set(&g, &i, r).is_ok(),
                    code_from_independent_set(&gr, &i, R1).is_ok(),
                    "r={r} start={start}"
                );
            }
        }
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conjectured_bound(4, 3), 3);
        assert_eq!(min_identifying_code(&star(3), R1).unwrap().minimum, 3);
        assert_eq!(conjectured_bound(6, 4), 5);
        assert_eq!(min_identifying_code(&make_a_k(3).unwrap(), R1).unwrap().minimum, 5);
    }

    #[test]
    fn conjecture_scan_small() {
        let report = conjecture_scan(5).unwrap();
        assert!(report.graphs_checked > 0);
        assert!(report.counterexamples.is_empty());
        assert!(conjecture_scan(8).is_err());
    }
}
