//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the `n m` header followed by exactly `m` lines `u v` (0-based).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, message: "missing `n m` header".into() })?;
    let [n, m] = parse_pair(hline, header)?;

    let mut g = Graph::empty(n);
    let mut read = 0;
    for (line, text) in lines {
        let [u, v] = parse_pair(line, text)?;
        let bad = |message: String| Error::Parse { line, message };
        if u >= n || v >= n {
            return Err(bad(format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(bad(format!("loop at vertex {u}")));
        }
        if !g.add_edge(u, v) {
            return Err(bad(format!("duplicate edge {{{u}, {v}}}")));
        }
        read += 1;
    }
    if read != m {
        return Err(Error::Parse { line: hline, message: format!("header declares {m} edges, found {read}") });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let err = || Error::Parse { line, message: format!("expected two non-negative integers, got `{text}`") };
    match fields.as_slice() {
        [a, b] => Ok([a.parse().map_err(|_| err())?, b.parse().map_err(|_| err())?]),
        _ => Err(err()),
    }
}

/// Header line then edges with `u < v`, sorted lexicographically.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
