use std::fmt::Write;

use idcode_core::{BoundReport, CodeCertificate, ScanReport, VertexSet, Witness};

use crate::{ClassifyOutput, SolveOutput};

fn list(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key}: {value}").expect("writing to a string");
}

pub fn certificate(c: &CodeCertificate) -> String {
    let mut out = String::new();
    line(&mut out, "kind", c.kind);
    line(&mut out, "radius", c.radius);
    line(&mut out, "valid", c.valid);
    match &c.witness {
        None => {}
        Some(Witness::Undominated { vertex }) => line(&mut out, "undominated", vertex),
        Some(Witness::Unseparated { x, y, restricted_ball }) => {
            line(&mut out, "unseparated", format!("{x} {y}"));
            line(&mut out, "restricted_ball", list(restricted_ball));
        }
    }
    out
}

pub fn solve(s: &SolveOutput) -> String {
    let r = &s.report;
    let mut out = String::new();
    line(&mut out, "kind", r.kind);
    line(&mut out, "radius", r.radius);
    line(&mut out, "minimum", r.minimum);
    line(&mut out, "example_code", list(&r.example_code));
    line(&mut out, "forced", list(&r.forced));
    line(&mut out, "explored", r.explored);
    for set in s.minimum_sets.iter().flatten() {
        line(&mut out, "minimum_set", list(set));
    }
    out
}

pub fn classify(c: &ClassifyOutput) -> String {
    let mut out = String::new();
    line(&mut out, "outcome", format!("{:?}", c.result.outcome));
    if let Some(g) = c.result.implied_gamma_id {
        line(&mut out, "implied_gamma_id", g);
    }
    if let Some(spec) = &c.reconstruction {
        line(&mut out, "reconstruction", spec);
    }
    out
}

pub fn bound(b: &BoundReport) -> String {
    let mut out = String::new();
    line(&mut out, "theorem", b.theorem);
    line(&mut out, "radius", b.radius);
    line(&mut out, "independent_set", list(&b.independent_set));
    line(&mut out, "mapped_set", list(&b.mapped_set));
    line(&mut out, "code", list(&b.code));
    line(&mut out, "code_size", b.code.len());
    if let Some(v) = &b.bound_value {
        line(&mut out, "bound_value", v.ratio());
        line(&mut out, "bound_ceiling", v.ceil());
    }
    out
}

pub fn scan(s: &ScanReport) -> String {
    let mut out = String::new();
    line(&mut out, "check", s.check);
    line(&mut out, "max_n", s.max_n);
    line(&mut out, "graphs_checked", s.graphs_checked);
    line(&mut out, "counterexamples", s.counterexamples.len());
    for c in &s.counterexamples {
        let edges: Vec<String> = c.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        line(&mut out, "counterexample", format!("n={} mask={} edges={} {}", c.n, c.mask, edges.join(","), c.detail));
    }
    out
}
