//! Identifying codes and their relatives in finite graphs.
//!
//! The crate verifies and minimizes identifying, separating, dominating,
//! locating-dominating and discriminating codes, recognizes the connected
//! graphs whose identifying codes need all but one vertex, and builds codes
//! that meet explicit upper bounds in terms of the maximum degree.

pub mod bound;
pub mod classify;
pub mod codes;
pub mod construct;
pub mod error;
pub mod graph;
pub mod scan;
pub mod solve;

pub use bound::{BoundReport, BoundTheorem, BoundValue, ConjectureScanReport};
pub use classify::{classify_extremal, recognize_a_k, ClassificationResult, Outcome};
pub use codes::{BipartiteMembershipGraph, CodeCertificate, CodeKind, Witness};
pub use construct::{make_a_k, make_family, FamilySpec};
pub use error::{Error, Result};
pub use graph::{Graph, Radius, VertexSet};
pub use scan::{Counterexample, ScanCheck, ScanReport};
pub use solve::SolveReport;
