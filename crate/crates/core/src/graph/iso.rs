//! Backtracking isomorphism for small graphs.

use super::Graph;
use crate::error::{Error, Result};

/// Soft cap on the order of graphs passed to the isomorphism search.
pub const ISOMORPHISM_CAP: usize = 16;

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(isomorphism(g1, g2)?.is_some())
}

/// An edge-preserving bijection `map` with `g1: u -> g2: map[u]`, if one
/// exists. The search assigns vertices of `g1` in order of decreasing degree
/// and only tries images of equal degree consistent with earlier choices.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g1.n();
    if n.max(g2.n()) > ISOMORPHISM_CAP {
        return Err(Error::TooLarge { what: "isomorphism test", n: n.max(g2.n()), cap: ISOMORPHISM_CAP });
    }
    if n != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    let deg1 = d1.clone();
    let deg2 = d2.clone();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg1[v]));
    let mut search = Search { g1, g2, deg1, deg2, order, map: vec![usize::MAX; n], used: vec![false; n] };
    Ok(search.extend(0).then_some(search.map))
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    deg1: Vec<usize>,
    deg2: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&u) = self.order.get(depth) else {
            return true;
        };
        for cand in 0..self.g2.n() {
            if self.used[cand] || self.deg2[cand] != self.deg1[u] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.g1.has_edge(u, w) == self.g2.has_edge(cand, self.map[w]));
            if !consistent {
                continue;
            }
            self.map[u] = cand;
            self.used[cand] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[cand] = false;
        }
        self.map[u] = usize::MAX;
        false
    }
}

/// Every automorphism of `g` by brute force over all `n!` permutations.
/// Intended for `n <= 8`.
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n > 8 {
        return Err(Error::TooLarge { what: "automorphism enumeration", n, cap: 8 });
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        if g.edges().all(|(u, v)| g.has_edge(p[u], p[v])) {
            out.push(p.to_vec());
        }
    });
    out.sort();
    Ok(out)
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cycle, make_a_k, path};
    use crate::graph::canonical_mask;

    #[test]
    fn a2_is_p4() {
        let a2 = make_a_k(2).unwrap();
        let map = isomorphism(&a2, &path(4)).unwrap().unwrap();
        for (u, v) in a2.edges() {
            assert!(path(4).has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn c4_is_not_p4() {
        assert!(!is_isomorphic(&cycle(4), &path(4)).unwrap());
    }

    #[test]
    fn a_k_reversal() {
        for k in 1..=7 {
            let a = make_a_k(k).unwrap();
            let rev: Vec<usize> = (0..2 * k).map(|i| 2 * k - 1 - i).collect();
            let b = a.relabel(&rev).unwrap();
            assert_eq!(a, b);
            assert!(is_isomorphic(&a, &b).unwrap());
        }
    }

    #[test]
    fn a_k_has_two_automorphisms() {
        for k in 2..=4 {
            let autos = automorphisms(&make_a_k(k).unwrap()).unwrap();
            assert_eq!(autos.len(), 2, "k={k}");
            let rev: Vec<usize> = (0..2 * k).rev().collect();
            assert!(autos.contains(&rev));
        }
    }

    #[test]
    fn cap() {
        let big = path(ISOMORPHISM_CAP + 1);
        assert!(matches!(is_isomorphic(&big, &big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn agrees_with_canonical_form() {
        let graphs: Vec<Graph> = crate::graph::enumerate_graphs(5).unwrap().step_by(37).collect();
        for a in &graphs {
            for b in graphs.iter().step_by(5) {
                let same = canonical_mask(a).unwrap() == canonical_mask(b).unwrap();
                assert_eq!(is_isomorphic(a, b).unwrap(), same);
            }
        }
    }
}
