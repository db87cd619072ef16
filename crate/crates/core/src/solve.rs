//! Exact minimum codes by ordered subset search.
//!
//! Candidates are `forced ∪ T` where `T` runs over subsets of the remaining
//! vertices, by increasing size and lexicographically within a size. The
//! first accepted candidate is therefore a minimum code, and the least one
//! in lexicographic order.

use serde::Serialize;

use crate::codes::{is_identifying, CodeKind};
use crate::error::{Error, Result};
use crate::graph::{first_twin_pair, Graph, Radius, VertexSet};

/// Largest graph accepted by the exact solvers.
pub const SOLVER_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub kind: CodeKind,
    pub radius: Radius,
    pub minimum: usize,
    pub example_code: VertexSet,
    /// Vertices contained in every code of this kind.
    pub forced: VertexSet,
    /// Candidate sets tested.
    pub explored: u64,
}

/// Union of `B_r(x) ⊖ B_r(y)` over the pairs where that set is a single
/// vertex. That vertex is the only one separating `x` from `y`, so it lies
/// in every r-separating set.
pub fn forced_vertices(g: &Graph, r: Radius) -> VertexSet {
    let balls = g.balls(r.get());
    let mut forced = VertexSet::empty(g.n());
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let d = balls[x].symmetric_difference(&balls[y]);
            if d.len() == 1 {
                forced.union_with(&d);
            }
        }
    }
    forced
}

pub fn min_identifying_code(g: &Graph, r: Radius) -> Result<SolveReport> {
    minimum(g, CodeKind::Identifying, r)
}

pub fn min_separating_set(g: &Graph, r: Radius) -> Result<SolveReport> {
    minimum(g, CodeKind::Separating, r)
}

pub fn min_locating_dominating(g: &Graph, r: Radius) -> Result<SolveReport> {
    minimum(g, CodeKind::LocatingDominating, r)
}

pub fn min_dominating(g: &Graph, r: Radius) -> Result<SolveReport> {
    minimum(g, CodeKind::Dominating, r)
}

/// Exact minimum for any graph-based code kind.
pub fn minimum(g: &Graph, kind: CodeKind, r: Radius) -> Result<SolveReport> {
    let inst = Instance::new(g, kind, r)?;
    let forced = inst.forced();
    let mut explored = 0;
    let (size, code) = inst.search(forced, &mut explored).ok_or_else(|| {
        Error::Internal(format!("no {kind} set found although the full vertex set qualifies"))
    })?;
    Ok(SolveReport {
        kind,
        radius: r,
        minimum: size,
        example_code: VertexSet::from_mask(g.n(), code),
        forced: VertexSet::from_mask(g.n(), forced),
        explored,
    })
}

/// All r-separating sets of minimum size, in lexicographic order.
pub fn enumerate_minimum_separating_sets(g: &Graph, r: Radius) -> Result<Vec<VertexSet>> {
    let inst = Instance::new(g, CodeKind::Separating, r)?;
    let forced = inst.forced();
    let mut explored = 0;
    let Some((size, _)) = inst.search(forced, &mut explored) else {
        return Err(Error::Internal("no separating set found".into()));
    };
    let mut all = Vec::new();
    inst.for_each_candidate(forced, size, &mut explored, |c| {
        if inst.accepts(c) {
            all.push(VertexSet::from_mask(g.n(), c));
        }
        false
    });
    Ok(all)
}

/// Extends an identifying code of `G - S` to one of `G` with at most `|S|`
/// extra vertices.
///
/// `c0` is given in the coordinates of `G - S` (the remaining vertices,
/// renumbered in increasing order). The vertices of `S` are added back in
/// increasing order; after each step the current code identifies every
/// vertex added so far. When the new vertex `x` is undominated, `x` joins
/// the code. Otherwise its trace collides with exactly one earlier vertex
/// `y`, and the least vertex of `B_1(x) ⊖ B_1(y)` joins.
pub fn extend_code(g: &Graph, s: &VertexSet, c0: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    if let Some((x, y)) = g.twin_pairs().first().copied() {
        return Err(Error::Twins { x, y, radius: 1 });
    }
    let (rest, old_of_new) = g.induced_subgraph(&s.complement())?;
    if let Some(&(x, y)) = rest.twin_pairs().first() {
        return Err(Error::Precondition(format!(
            "G - S has twins {} and {}",
            old_of_new[x], old_of_new[y]
        )));
    }
    if c0.universe() != rest.n() {
        return Err(Error::UniverseMismatch { expected: rest.n(), found: c0.universe() });
    }
    let cert = is_identifying(&rest, c0, Radius::ONE)?;
    if !cert.valid {
        return Err(Error::Precondition(format!(
            "the initial set is not an identifying code of G - S: {:?}",
            cert.witness
        )));
    }

    let balls = g.balls(1);
    let mut code = VertexSet::from_vertices(g.n(), c0.iter().map(|v| old_of_new[v]))?;
    let mut identified = s.complement();
    for x in s {
        let trace = balls[x].intersection(&code);
        if trace.is_empty() {
            code.insert(x);
        } else if let Some(y) = identified.iter().find(|&y| balls[y].intersection(&code) == trace) {
            let separator = balls[x]
                .symmetric_difference(&balls[y])
                .first()
                .ok_or_else(|| Error::Internal(format!("twins {x} and {y} in a twin-free graph")))?;
            code.insert(separator);
        }
        identified.insert(x);
    }

    let cert = is_identifying(g, &code, Radius::ONE)?;
    if !cert.valid {
        return Err(Error::Internal(format!("extended code fails: {:?}", cert.witness)));
    }
    Ok(code)
}

/// Ball masks of one graph at one radius, plus the acceptance test for one
/// kind of code.
struct Instance {
    n: usize,
    kind: CodeKind,
    balls: Vec<u64>,
}

impl Instance {
    fn new(g: &Graph, kind: CodeKind, r: Radius) -> Result<Self> {
        if g.n() > SOLVER_CAP {
            return Err(Error::TooLarge { what: "exact solver (use the bound pipeline)", n: g.n(), cap: SOLVER_CAP });
        }
        if kind == CodeKind::Discriminating {
            return Err(Error::Precondition("the exact solver handles graph-based code kinds only".into()));
        }
        let balls = g.balls(r.get());
        if matches!(kind, CodeKind::Separating | CodeKind::Identifying) {
            if let Some((x, y)) = first_twin_pair(&balls) {
                return Err(Error::Twins { x, y, radius: r.get() });
            }
        }
        let balls = balls.iter().map(|b| b.to_mask().expect("n <= 64")).collect();
        Ok(Self { n: g.n(), kind, balls })
    }

    /// Vertices in every code of this kind.
    fn forced(&self) -> u64 {
        let mut isolated = 0u64;
        for (x, &b) in self.balls.iter().enumerate() {
            if b == 1 << x {
                isolated |= b;
            }
        }
        match self.kind {
            CodeKind::Separating => self.singleton_separators(),
            CodeKind::Identifying => self.singleton_separators() | isolated,
            _ => isolated,
        }
    }

    fn singleton_separators(&self) -> u64 {
        let mut forced = 0;
        for x in 0..self.n {
            for y in x + 1..self.n {
                let d = self.balls[x] ^ self.balls[y];
                if d.count_ones() == 1 {
                    forced |= d;
                }
            }
        }
        forced
    }

    /// Smallest size worth trying. `k` code vertices produce at most `2^k`
    /// distinct traces, `2^k - 1` of them non-empty.
    fn lower_bound(&self) -> usize {
        let n = self.n;
        let smallest = |fits: &dyn Fn(usize) -> bool| (0..=n).find(|&k| fits(k)).unwrap_or(n);
        match self.kind {
            CodeKind::Identifying => smallest(&|k| pow2_at_least(k, n + 1)),
            CodeKind::Separating => smallest(&|k| pow2_at_least(k, n)),
            CodeKind::LocatingDominating => smallest(&|k| pow2_at_least(k, n - k + 1)),
            CodeKind::Dominating => usize::from(n > 0),
            CodeKind::Discriminating => unreachable!("rejected in Instance::new"),
        }
    }

    fn accepts(&self, c: u64) -> bool {
        match self.kind {
            CodeKind::Dominating => self.dominates(c),
            CodeKind::Separating => self.traces_distinct(c, u64::MAX),
            CodeKind::Identifying => self.dominates(c) && self.traces_distinct(c, u64::MAX),
            CodeKind::LocatingDominating => self.dominates(c) && self.traces_distinct(c, !c),
            CodeKind::Discriminating => unreachable!("rejected in Instance::new"),
        }
    }

    fn dominates(&self, c: u64) -> bool {
        self.balls.iter().all(|&b| b & c != 0)
    }

    /// Whether the vertices in `among` have pairwise distinct traces on `c`.
    fn traces_distinct(&self, c: u64, among: u64) -> bool {
        let mut traces = [0u64; SOLVER_CAP];
        let mut len = 0;
        for (x, &b) in self.balls.iter().enumerate() {
            if among >> x & 1 == 1 {
                traces[len] = b & c;
                len += 1;
            }
        }
        let traces = &mut traces[..len];
        traces.sort_unstable();
        traces.windows(2).all(|w| w[0] != w[1])
    }

    /// Smallest accepted candidate `(size, mask)`.
    fn search(&self, forced: u64, explored: &mut u64) -> Option<(usize, u64)> {
        let start = self.lower_bound().max(forced.count_ones() as usize);
        for size in start..=self.n {
            let mut found = None;
            self.for_each_candidate(forced, size, explored, |c| {
                if self.accepts(c) {
                    found = Some(c);
                    return true;
                }
                false
            });
            if let Some(c) = found {
                return Some((size, c));
            }
        }
        None
    }

    /// Visits `forced ∪ T` for every `T` of the right size in lexicographic
    /// order until `visit` returns `true`.
    fn for_each_candidate(&self, forced: u64, size: usize, explored: &mut u64, mut visit: impl FnMut(u64) -> bool) {
        let free: Vec<usize> = (0..self.n).filter(|&v| forced >> v & 1 == 0).collect();
        let fixed = forced.count_ones() as usize;
        if size < fixed || size - fixed > free.len() {
            return;
        }
        let k = size - fixed;
        let m = free.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let c = idx.iter().fold(forced, |c, &i| c | 1 << free[i]);
            *explored += 1;
            if visit(c) {
                return;
            }
            // Next k-combination of 0..m in lexicographic order.
            let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
                return;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

fn pow2_at_least(k: usize, target: usize) -> bool {
    k >= usize::BITS as usize - 1 || 1usize << k >= target
}
