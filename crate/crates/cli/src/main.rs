//! `idcode`: verify, minimize, classify and bound identifying codes from the
//! command line.

mod plain;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use idcode_core::bound::{constructive_upper_bound, regular_constructive_bound};
use idcode_core::classify::classify_extremal;
use idcode_core::codes::{check, is_discriminating, membership_graph};
use idcode_core::construct::{fig4_root_of_a5, make_family};
use idcode_core::graph::{parse_edge_list, write_edge_list};
use idcode_core::scan::{run_scan_with_cap, ScanCheck};
use idcode_core::solve::{enumerate_minimum_separating_sets, minimum};
use idcode_core::{ClassificationResult, CodeKind, Error, FamilySpec, Graph, Radius, SolveReport, VertexSet};

/// Largest order any scan accepts, even with `--unsafe-cap`.
const HARD_SCAN_CAP: usize = 11;

#[derive(Debug, Parser)]
#[command(name = "idcode", version, about = "Identifying codes in finite graphs")]
struct Cli {
    /// Print reports as `key: value` lines instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the edge list of a named graph family.
    Generate {
        /// `A:<k>`, `star:<t>`, `join:<k1>,<k2>,...[+u]`, `KminusM:<n>` or `fig4`.
        #[arg(long)]
        family: String,
    },
    /// Check a vertex set against one code kind.
    Verify {
        #[command(flatten)]
        input: GraphArgs,
        /// Comma-separated vertices; for `discriminating`, the vertices whose
        /// balls are chosen.
        #[arg(long, allow_hyphen_values = true)]
        code: String,
        #[arg(long)]
        kind: CodeKind,
        #[arg(long, default_value_t = 1)]
        radius: usize,
    },
    /// Compute a minimum code of one kind.
    Solve {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        kind: CodeKind,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        /// Also list every minimum separating set.
        #[arg(long)]
        all_minimum: bool,
    },
    /// Decide whether a connected twin-free graph needs all but one vertex.
    Classify {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Build a code meeting the degree-based upper bound.
    Bound {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        /// Use the variant for regular graphs (radius 1 only).
        #[arg(long)]
        regular: bool,
    },
    /// Print the edge list of the r-th power.
    Power {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        radius: usize,
    },
    /// Run an exhaustive cross-check over all labeled graphs up to an order.
    #[command(group(ArgGroup::new("check").required(true).args(["theorem", "conjecture"])))]
    Scan {
        #[arg(long)]
        max_n: usize,
        /// thm12, cor13, remark1, lemma7, ld or gamma-chain.
        #[arg(long)]
        theorem: Option<ScanCheck>,
        /// Check `γ^ID <= ⌈n - n/Δ⌉` for maximum degree at least 3.
        #[arg(long)]
        conjecture: bool,
        /// Allow orders above the default cap of the check.
        #[arg(long)]
        unsafe_cap: bool,
    },
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Edge-list file: an `n m` header, then `m` lines `u v` (0-based).
    #[arg(long)]
    graph: PathBuf,
}

/// Failure mapped to an exit status.
enum Failure {
    Usage(String),
    Core(Error),
    /// The report was printed but records a violation.
    Violations(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::VertexOutOfRange { .. }
            | Error::UniverseMismatch { .. }
            | Error::InvalidPair(_)
            | Error::ZeroRadius
            | Error::InvalidFamily { .. } => Failure::Usage(e.to_string()),
            other => Failure::Core(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_precondition() { 3 } else { 4 })
        }
        Err(Failure::Violations(count)) => {
            eprintln!("error: {count} counterexamples found");
            ExitCode::from(4)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let emit = |report: &dyn Emit| report.render(cli.plain);
    match &cli.command {
        Command::Generate { family } => {
            let g = if family.trim() == "fig4" {
                fig4_root_of_a5()
            } else {
                make_family(&family.parse::<FamilySpec>()?)?
            };
            Ok(write_edge_list(&g))
        }
        Command::Verify { input, code, kind, radius } => {
            let g = load(&input.graph)?;
            let r = Radius::new(*radius)?;
            let set = parse_code(code, g.n())?;
            let cert = if *kind == CodeKind::Discriminating {
                if r != Radius::ONE {
                    return Err(Failure::Usage("discriminating codes use radius 1".into()));
                }
                is_discriminating(&membership_graph(&g), &set)
            } else {
                check(&g, &set, *kind, r)?
            };
            Ok(emit(&cert))
        }
        Command::Solve { input, kind, radius, all_minimum } => {
            let g = load(&input.graph)?;
            let r = Radius::new(*radius)?;
            if *kind == CodeKind::Discriminating {
                return Err(Failure::Usage("solve handles graph-based code kinds only".into()));
            }
            if *all_minimum && *kind != CodeKind::Separating {
                return Err(Failure::Usage("--all-minimum applies to --kind separating only".into()));
            }
            let report = minimum(&g, *kind, r)?;
            let minimum_sets = if *all_minimum { Some(enumerate_minimum_separating_sets(&g, r)?) } else { None };
            Ok(emit(&SolveOutput { report, minimum_sets }))
        }
        Command::Classify { input } => {
            let g = load(&input.graph)?;
            let result = classify_extremal(&g)?;
            let reconstruction = result.outcome.family_spec().map(|s| s.to_string());
            Ok(emit(&ClassifyOutput { result, reconstruction }))
        }
        Command::Bound { input, radius, regular } => {
            let g = load(&input.graph)?;
            let r = Radius::new(*radius)?;
            let report = if *regular {
                if r != Radius::ONE {
                    return Err(Failure::Usage("--regular uses radius 1".into()));
                }
                regular_constructive_bound(&g)?
            } else {
                constructive_upper_bound(&g, r)?
            };
            Ok(emit(&report))
        }
        Command::Power { input, radius } => {
            let g = load(&input.graph)?;
            Ok(write_edge_list(&g.power(Radius::new(*radius)?)))
        }
        Command::Scan { max_n, theorem, conjecture, unsafe_cap } => {
            let check = match (theorem, conjecture) {
                (Some(t), false) => *t,
                (None, true) => ScanCheck::Conjecture,
                _ => return Err(Failure::Usage("pass exactly one of --theorem or --conjecture".into())),
            };
            let cap = if *unsafe_cap { HARD_SCAN_CAP } else { check.default_cap() };
            let report = run_scan_with_cap(check, *max_n, cap)?;
            let out = emit(&report);
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Violations(report.counterexamples.len()))
            }
        }
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_edge_list(&text)?)
}

fn parse_code(text: &str, n: usize) -> Result<VertexSet, Failure> {
    let vertices = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Failure::Usage(format!("invalid vertex `{t}` in --code"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VertexSet::from_vertices(n, vertices)?)
}

#[derive(Serialize)]
struct SolveOutput {
    #[serde(flatten)]
    report: SolveReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimum_sets: Option<Vec<VertexSet>>,
}

#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(flatten)]
    result: ClassificationResult,
    /// Family spec that rebuilds the graph up to isomorphism.
    reconstruction: Option<String>,
}

/// A report with both output modes.
trait Emit {
    fn json(&self) -> String;
    fn plain(&self) -> String;

    fn render(&self, plain: bool) -> String {
        if plain {
            self.plain()
        } else {
            self.json() + "\n"
        }
    }
}

macro_rules! emit_via {
    ($($ty:ty => $plain:path),* $(,)?) => {
        $(impl Emit for $ty {
            fn json(&self) -> String {
                serde_json::to_string_pretty(self).expect("reports serialize")
            }
            fn plain(&self) -> String {
                $plain(self)
            }
        })*
    };
}

emit_via! {
    idcode_core::CodeCertificate => plain::certificate,
    SolveOutput => plain::solve,
    ClassifyOutput => plain::classify,
    idcode_core::BoundReport => plain::bound,
    idcode_core::ScanReport => plain::scan,
}
