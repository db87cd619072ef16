//! Exhaustive cross-checks over every labeled graph up to a small order.
//!
//! Each check walks the edge masks of [`crate::graph::enumerate_graphs`] in
//! parallel and reports counterexamples sorted by `(n, mask)`, so reports
//! are identical across runs and thread counts.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bound::conjectured_bound;
use crate::classify::{classify_extremal, Outcome};
use crate::codes::{is_discriminating, is_separating, membership_graph};
use crate::error::{Error, Result};
use crate::graph::{edge_pair_count, enumerate_graphs_with_cap, graph_from_mask, Graph, Radius, VertexSet, ENUMERATION_CAP};
use crate::solve::{min_identifying_code, min_locating_dominating, min_separating_set};

/// Cap for checks that enumerate every vertex subset of every graph.
pub const SUBSET_SCAN_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanCheck {
    /// Structural recognition agrees with `γ^ID = n - 1`.
    ExtremalClassification,
    /// `Δ <= n - 3` forces `γ^ID <= n - 2`.
    DegreeGap,
    /// Regular extremal graphs are `K_n` minus a perfect matching, and odd
    /// extremal graphs have a universal vertex.
    RegularAndOdd,
    /// Every vertex has a removable neighbour, at radius 1 and 2.
    RemovableVertex,
    /// `γ^LD = n - 1` exactly for stars and complete graphs.
    LocatingDominating,
    /// `γ^S <= γ^ID <= γ^S + 1`, and separating iff discriminating.
    GammaChain,
    /// `γ^ID <= ⌈n - n/Δ⌉` when `Δ >= 3`.
    Conjecture,
}

impl ScanCheck {
    pub const THEOREMS: [ScanCheck; 6] = [
        ScanCheck::ExtremalClassification,
        ScanCheck::DegreeGap,
        ScanCheck::RegularAndOdd,
        ScanCheck::RemovableVertex,
        ScanCheck::LocatingDominating,
        ScanCheck::GammaChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanCheck::ExtremalClassification => "thm12",
            ScanCheck::DegreeGap => "cor13",
            ScanCheck::RegularAndOdd => "remark1",
            ScanCheck::RemovableVertex => "lemma7",
            ScanCheck::LocatingDominating => "ld",
            ScanCheck::GammaChain => "gamma-chain",
            ScanCheck::Conjecture => "conjecture",
        }
    }

    /// Largest order scanned without an explicit override.
    pub fn default_cap(self) -> usize {
        match self {
            ScanCheck::GammaChain => SUBSET_SCAN_CAP,
            _ => ENUMERATION_CAP,
        }
    }
}

impl fmt::Display for ScanCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ScanCheck {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for ScanCheck {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ScanCheck::THEOREMS
            .into_iter()
            .chain([ScanCheck::Conjecture])
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    /// Edge mask in enumeration order.
    pub mask: u64,
    pub edges: Vec<(usize, usize)>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub check: ScanCheck,
    pub max_n: usize,
    /// Graphs that met the check's hypotheses.
    pub graphs_checked: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Runs one check on all orders up to `max_n`, with the check's default cap.
pub fn run_scan(check: ScanCheck, max_n: usize) -> Result<ScanReport> {
    run_scan_with_cap(check, max_n, check.default_cap())
}

pub fn run_scan_with_cap(check: ScanCheck, max_n: usize, cap: usize) -> Result<ScanReport> {
    enumerate_graphs_with_cap(max_n, cap)?;
    let verdict: fn(&Graph) -> Result<Verdict> = match check {
        ScanCheck::ExtremalClassification | ScanCheck::DegreeGap | ScanCheck::RegularAndOdd | ScanCheck::Conjecture => {
            return Ok(extremal_scan(max_n)?.remove(&check));
        }
        ScanCheck::RemovableVertex => removable_verdict,
        ScanCheck::LocatingDominating => locating_dominating_verdict,
        ScanCheck::GammaChain => gamma_chain_verdict,
    };
    let (graphs_checked, counterexamples) = scan_masks(max_n, verdict)?;
    Ok(ScanReport { check, max_n, graphs_checked, counterexamples })
}

/// Reports of the four checks that share the per-graph solve of `γ^ID` on
/// connected twin-free graphs.
#[derive(Debug, Clone)]
pub struct ExtremalScan {
    reports: Vec<ScanReport>,
}

impl ExtremalScan {
    pub fn get(&self, check: ScanCheck) -> Option<&ScanReport> {
        self.reports.iter().find(|r| r.check == check)
    }

    fn remove(mut self, check: &ScanCheck) -> ScanReport {
        let at = self.reports.iter().position(|r| r.check == *check).expect("shared scan covers check");
        self.reports.swap_remove(at)
    }
}

const SHARED: [ScanCheck; 4] = [ScanCheck::ExtremalClassification, ScanCheck::DegreeGap, ScanCheck::RegularAndOdd, ScanCheck::Conjecture];

/// One pass computing `γ^ID`, the classification and the degree profile of
/// every connected twin-free graph, feeding the thm12, cor13, remark1 and
/// conjecture checks.
pub fn extremal_scan(max_n: usize) -> Result<ExtremalScan> {
    extremal_scan_with_cap(max_n, ENUMERATION_CAP)
}

pub fn extremal_scan_with_cap(max_n: usize, cap: usize) -> Result<ExtremalScan> {
    enumerate_graphs_with_cap(max_n, cap)?;
    let mut reports: Vec<ScanReport> = SHARED
        .iter()
        .map(|&check| ScanReport { check, max_n, graphs_checked: 0, counterexamples: Vec::new() })
        .collect();
    for n in 1..=max_n {
        let tally = tally_masks(n, |mask| Ok(extremal_facts(n, mask)?.unwrap_or([SKIP; 4])))?;
        for (i, report) in reports.iter_mut().enumerate() {
            report.graphs_checked += tally.checked[i];
        }
        for (i, mask, detail) in tally.failures {
            reports[i].counterexamples.push(counterexample(n, mask, detail));
        }
    }
    Ok(ExtremalScan { reports })
}

enum Verdict {
    Skip,
    Holds,
    Fails(String),
}

impl Verdict {
    fn require(holds: bool, detail: impl FnOnce() -> String) -> Verdict {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails(detail())
        }
    }
}

fn counterexample(n: usize, mask: u64, detail: String) -> Counterexample {
    Counterexample { n, mask, edges: graph_from_mask(n, mask).edges().collect(), detail }
}

/// Verdicts in the order of `SHARED`, or `None` when the graph is outside
/// every hypothesis.
fn extremal_facts(n: usize, mask: u64) -> Result<Option<[Verdict; 4]>> {
    let g = graph_from_mask(n, mask);
    if n < 2 || !g.is_connected() || !g.is_twin_free() {
        return Ok(None);
    }
    let gamma = min_identifying_code(&g, Radius::ONE)?.minimum;
    let outcome = classify_extremal(&g)?.outcome;
    let extremal = gamma == n - 1;
    let delta = g.max_degree();

    let thm12 = Verdict::require(outcome.is_extremal() == extremal, || {
        format!("classified as {outcome:?} but γ^ID = {gamma}")
    });
    let cor13 = if n >= 3 && delta + 3 <= n {
        Verdict::require(gamma <= n - 2, || format!("Δ = {delta} but γ^ID = {gamma}"))
    } else {
        Verdict::Skip
    };
    let remark1 = if extremal {
        let regular_ok = g.regular_degree().is_none()
            || matches!(&outcome, Outcome::JoinFamily(ks) if ks.iter().all(|&k| k == 1));
        let odd_ok = n.is_multiple_of(2) || delta == n - 1;
        Verdict::require(regular_ok && odd_ok, || format!("extremal {outcome:?} with Δ = {delta}"))
    } else {
        Verdict::Skip
    };
    let conjecture = if delta >= 3 {
        let bound = conjectured_bound(n, delta);
        Verdict::require(gamma <= bound, || format!("γ^ID = {gamma} exceeds {bound}"))
    } else {
        Verdict::Skip
    };
    Ok(Some([thm12, cor13, remark1, conjecture]))
}

fn scan_masks(max_n: usize, verdict: fn(&Graph) -> Result<Verdict>) -> Result<(u64, Vec<Counterexample>)> {
    let mut checked = 0;
    let mut found = Vec::new();
    for n in 1..=max_n {
        let tally = tally_masks(n, |mask| Ok([verdict(&graph_from_mask(n, mask))?]))?;
        checked += tally.checked[0];
        found.extend(tally.failures.into_iter().map(|(_, mask, detail)| counterexample(n, mask, detail)));
    }
    Ok((checked, found))
}

const SKIP: Verdict = Verdict::Skip;

struct Tally<const K: usize> {
    checked: [u64; K],
    /// `(check index, mask, detail)`, sorted by mask.
    failures: Vec<(usize, u64, String)>,
}

impl<const K: usize> Tally<K> {
    fn empty() -> Self {
        Tally { checked: [0; K], failures: Vec::new() }
    }

    fn record(mut self, mask: u64, verdicts: [Verdict; K]) -> Self {
        for (i, v) in verdicts.into_iter().enumerate() {
            match v {
                Verdict::Skip => {}
                Verdict::Holds => self.checked[i] += 1,
                Verdict::Fails(detail) => {
                    self.checked[i] += 1;
                    self.failures.push((i, mask, detail));
                }
            }
        }
        self
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.checked.iter_mut().zip(other.checked) {
            *a += b;
        }
        self.failures.extend(other.failures);
        self
    }
}

/// Folds the verdicts for every edge mask on `n` vertices in parallel.
fn tally_masks<const K: usize>(
    n: usize,
    verdicts: impl Fn(u64) -> Result<[Verdict; K]> + Sync,
) -> Result<Tally<K>> {
    let mut tally = (0..1u64 << edge_pair_count(n))
        .into_par_iter()
        .try_fold(Tally::empty, |t, mask| Ok::<_, Error>(t.record(mask, verdicts(mask)?)))
        .try_reduce(Tally::empty, |a, b| Ok(a.merge(b)))?;
    tally.failures.sort_by_key(|&(i, mask, _)| (mask, i));
    Ok(tally)
}

/// Every twin-free power at radius 1 or 2, every vertex.
fn removable_verdict(g: &Graph) -> Result<Verdict> {
    let mut applies = false;
    for r in [1, 2] {
        let balls: Vec<u64> = g.balls(r).iter().map(|b| b.to_mask().expect("small graph")).collect();
        if !masks_distinct(&balls, None) {
            continue;
        }
        applies = true;
        for (x, &ball) in balls.iter().enumerate() {
            let found = (0..g.n()).any(|y| ball >> y & 1 == 1 && masks_distinct(&balls, Some(y)));
            if !found {
                return Ok(Verdict::Fails(format!("no removable vertex near {x} at radius {r}")));
            }
        }
    }
    Ok(if applies { Verdict::Holds } else { Verdict::Skip })
}

/// Balls, with vertex `removed` deleted from the graph, are pairwise distinct.
fn masks_distinct(balls: &[u64], removed: Option<usize>) -> bool {
    let keep = removed.map_or(u64::MAX, |y| !(1u64 << y));
    let mut seen: Vec<u64> = balls
        .iter()
        .enumerate()
        .filter(|&(v, _)| Some(v) != removed)
        .map(|(_, &b)| b & keep)
        .collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// Connected graphs with at least two vertices.
fn locating_dominating_verdict(g: &Graph) -> Result<Verdict> {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return Ok(Verdict::Skip);
    }
    let gamma = min_locating_dominating(g, Radius::ONE)?.minimum;
    let star_like = g.edge_count() == n - 1 && g.max_degree() == n - 1;
    let complete = g.edge_count() == n * (n - 1) / 2;
    Ok(Verdict::require((gamma == n - 1) == (star_like || complete), || {
        format!("γ^LD = {gamma}, star: {star_like}, complete: {complete}")
    }))
}

/// Twin-free graphs, every vertex subset.
fn gamma_chain_verdict(g: &Graph) -> Result<Verdict> {
    if !g.is_twin_free() {
        return Ok(Verdict::Skip);
    }
    let gs = min_separating_set(g, Radius::ONE)?.minimum;
    let gid = min_identifying_code(g, Radius::ONE)?.minimum;
    if !(gs <= gid && gid <= gs + 1) {
        return Ok(Verdict::Fails(format!("γ^S = {gs}, γ^ID = {gid}")));
    }
    let bg = membership_graph(g);
    for subset in 0..1u64 << g.n() {
        let s = VertexSet::from_mask(g.n(), subset);
        let sep = is_separating(g, &s, Radius::ONE)?;
        let disc = is_discriminating(&bg, &s);
        if sep.valid != disc.valid || sep.witness != disc.witness {
            return Ok(Verdict::Fails(format!(
                "subset {:?}: separating {}, discriminating {}",
                s, sep.valid, disc.valid
            )));
        }
    }
    Ok(Verdict::Holds)
}

/// Checks a single graph against one theorem check; used for spot checks and
/// by callers that stream their own graphs.
pub fn check_graph(check: ScanCheck, g: &Graph) -> Result<Option<String>> {
    let verdict = match check {
        ScanCheck::RemovableVertex => removable_verdict(g)?,
        ScanCheck::LocatingDominating => locating_dominating_verdict(g)?,
        ScanCheck::GammaChain => gamma_chain_verdict(g)?,
        shared => {
            let mask = g.edge_mask().ok_or(Error::TooLarge { what: "edge mask", n: g.n(), cap: 11 })?;
            let at = SHARED.iter().position(|&c| c == shared).expect("shared check");
            match extremal_facts(g.n(), mask)? {
                Some(facts) => facts.into_iter().nth(at).expect("four verdicts"),
                None => Verdict::Skip,
            }
        }
    };
    Ok(match verdict {
        Verdict::Fails(detail) => Some(detail),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete, cycle, path, star};

    #[test]
    fn names_round_trip() {
        for c in ScanCheck::THEOREMS.into_iter().chain([ScanCheck::Conjecture]) {
            assert_eq!(c.name().parse::<ScanCheck>().unwrap(), c);
        }
        assert!("thm99".parse::<ScanCheck>().is_err());
    }

    #[test]
    fn small_scans_pass() {
        for check in ScanCheck::THEOREMS.into_iter().chain([ScanCheck::Conjecture]) {
            let report = run_scan(check, 5).unwrap();
            assert!(report.passed(), "{check}: {:?}", report.counterexamples);
            assert!(report.graphs_checked > 0, "{check}");
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(run_scan(ScanCheck::GammaChain, 7).is_err());
        assert!(run_scan(ScanCheck::ExtremalClassification, 8).is_err());
        assert!(run_scan_with_cap(ScanCheck::GammaChain, 2, 7).is_ok());
    }

    #[test]
    fn shared_counts_agree_with_filters() {
        // Connected twin-free labeled graphs: P3 (3 labelings) on 3 vertices;
        // P4 (12), K_{1,3} (4) and C4 (3) on 4 vertices.
        let scan = extremal_scan(4).unwrap();
        let thm12 = scan.get(ScanCheck::ExtremalClassification).unwrap();
        assert_eq!(thm12.graphs_checked, 3 + 12 + 4 + 3);
    }

    #[test]
    fn single_graph_checks() {
        assert_eq!(check_graph(ScanCheck::LocatingDominating, &star(4)).unwrap(), None);
        assert_eq!(check_graph(ScanCheck::LocatingDominating, &complete(4)).unwrap(), None);
        assert_eq!(check_graph(ScanCheck::ExtremalClassification, &cycle(4)).unwrap(), None);
        assert_eq!(check_graph(ScanCheck::RemovableVertex, &path(5)).unwrap(), None);
    }

    #[test]
    fn report_is_deterministic() {
        let a = serde_json::to_string(&run_scan(ScanCheck::LocatingDominating, 5).unwrap()).unwrap();
        let b = serde_json::to_string(&run_scan(ScanCheck::LocatingDominating, 5).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
