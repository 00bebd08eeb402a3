//! The `mhg` command line.
//!
//! Exit codes: 0 on success, 1 when a verification verdict is negative,
//! 2 on any operational error (bad arguments, unreadable or malformed
//! input, exhausted budget).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use mhg_core::constructions::{build, delta, delta_c, delta_d, Variant};
use mhg_core::solver::{exhaustive_min_search, minimality_check, pair_graph, EnumerationOptions, DEFAULT_NODE_LIMIT};
use mhg_core::{Coloring, EdgeKind, MixedHypergraph, SpecSet};
use thiserror::Error;

use crate::format::{parse_mhg, write_mhg, ParseError};
use crate::parallel;

#[derive(Debug, Parser)]
#[command(name = "mhg", version, about = "Construct and verify one-realizations of finite sets by mixed hypergraphs")]
pub struct Cli {
    /// Worker threads for strict-coloring enumeration.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a construction and write it as MHG.
    Gen {
        #[arg(long, value_parser = parse_set)]
        set: SpecSet,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Output file; MHG goes to stdout (and counts to stderr) without it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the minimum vertex, D-edge and C-edge counts.
    Bounds {
        #[arg(long, value_parser = parse_set)]
        set: SpecSet,
    },
    /// Print `k r_k` for every feasible k.
    Spectrum {
        path: PathBuf,
        #[arg(long)]
        max_colors: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        budget: u64,
    },
    /// Check that a hypergraph is a one-realization of a set.
    Verify {
        path: PathBuf,
        #[arg(long, value_parser = parse_set)]
        set: SpecSet,
        /// Also require that no single edge of this kind can be deleted.
        #[arg(long, value_enum)]
        minimality: Option<KindArg>,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        budget: u64,
    },
    /// Pair-graph components of every class of the strict ns-coloring.
    PairGraphs {
        path: PathBuf,
        #[arg(long, value_parser = parse_set)]
        set: SpecSet,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        budget: u64,
    },
    /// Exhaustive minimum edge count over all hypergraphs on at most 4 vertices.
    MinSearch {
        #[arg(long)]
        vertices: usize,
        #[arg(long, value_parser = parse_set)]
        set: SpecSet,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Full,
    FullG,
    DMin,
    CMin,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Full => Variant::Full,
            VariantArg::FullG => Variant::FullG,
            VariantArg::DMin => Variant::DMin,
            VariantArg::CMin => Variant::CMin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<KindArg> for EdgeKind {
    fn from(k: KindArg) -> EdgeKind {
        match k {
            KindArg::C => EdgeKind::C,
            KindArg::D => EdgeKind::D,
        }
    }
}

fn parse_set(text: &str) -> Result<SpecSet, String> {
    let values = text
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("invalid integer `{t}`")))
        .collect::<Result<Vec<_>, _>>()?;
    SpecSet::new(&values).map_err(|e| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Core(#[from] mhg_core::Error),
    #[error(transparent)]
    Output(#[from] std::io::Error),
}

/// Outcome of a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

pub const ERROR_EXIT_CODE: i32 = 2;

fn load(path: &PathBuf) -> Result<MixedHypergraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    parse_mhg(&text).map_err(|source| CliError::Parse { path: path.clone(), source })
}

fn describe_class(h: &MixedHypergraph, class: &[usize]) -> String {
    let names: Vec<String> = match h.labels() {
        Some(labels) => class.iter().map(|&v| labels[v].to_string()).collect(),
        None => class.iter().map(|v| v.to_string()).collect(),
    };
    names.join(" ")
}

fn describe_coloring(h: &MixedHypergraph, c: &Coloring) -> String {
    c.classes().iter().map(|class| describe_class(h, class)).collect::<Vec<_>>().join(" | ")
}

fn options(budget: u64, max_colors: Option<usize>) -> EnumerationOptions {
    EnumerationOptions { max_colors, node_limit: budget }
}

/// Runs one parsed command, writing its report to `out` and diagnostics
/// for `gen` without `--out` to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict, CliError> {
    let jobs = usize::from(cli.jobs);
    match &cli.command {
        Command::Gen { set, variant, out: path } => {
            let h = build(set, (*variant).into())?;
            let text = write_mhg(&h);
            let counts = format!(
                "vertices {}\nc_edges {}\nd_edges {}\n",
                h.order(),
                h.c_edges().len(),
                h.d_edges().len()
            );
            match path {
                Some(p) => {
                    std::fs::write(p, text).map_err(|source| CliError::Io { path: p.clone(), source })?;
                    out.write_all(counts.as_bytes())?;
                }
                None => {
                    out.write_all(text.as_bytes())?;
                    err.write_all(counts.as_bytes())?;
                }
            }
            Ok(Verdict::Pass)
        }
        Command::Bounds { set } => {
            writeln!(out, "delta {}", delta(set))?;
            writeln!(out, "delta_D {}", delta_d(set))?;
            writeln!(out, "delta_C {}", delta_c(set))?;
            Ok(Verdict::Pass)
        }
        Command::Spectrum { path, max_colors, budget } => {
            let h = load(path)?;
            let spectrum = parallel::chromatic_spectrum(&h, &options(*budget, *max_colors), jobs)?;
            for (k, r) in spectrum.iter() {
                writeln!(out, "{k} {r}")?;
            }
            Ok(Verdict::Pass)
        }
        Command::Verify { path, set, minimality, budget } => {
            let h = load(path)?;
            let opts = options(*budget, None);
            let report = parallel::is_one_realization(&h, set, &opts, jobs)?;
            writeln!(out, "target {set}")?;
            let spectrum: Vec<String> = report.spectrum.iter().map(|(k, r)| format!("{k}:{r}")).collect();
            writeln!(out, "spectrum {}", spectrum.join(" "))?;
            for (k, colorings) in &report.witnesses {
                for c in colorings {
                    writeln!(out, "coloring {k}: {}", describe_coloring(&h, c))?;
                }
            }
            for (k, expected, actual) in &report.discrepancies {
                writeln!(out, "discrepancy k={k} expected {expected} found {actual}")?;
            }
            if !report.verdict {
                writeln!(out, "verdict not a one-realization")?;
                return Ok(Verdict::Fail);
            }
            writeln!(out, "verdict one-realization")?;
            if let Some(kind) = minimality {
                let kind = EdgeKind::from(*kind);
                let safe = minimality_check(&h, set, kind, &opts)?;
                for e in &safe {
                    writeln!(out, "redundant {kind}-edge {}", describe_class(&h, e.indices()))?;
                }
                writeln!(out, "minimality {kind}: {} edges, {} redundant", h.edges(kind).len(), safe.len())?;
                if !safe.is_empty() {
                    return Ok(Verdict::Fail);
                }
            }
            Ok(Verdict::Pass)
        }
        Command::PairGraphs { path, set, budget } => {
            let h = load(path)?;
            let report = parallel::is_one_realization(&h, set, &options(*budget, None), jobs)?;
            let k = set.smallest() as usize;
            let Some(c) = report.witness(k) else {
                writeln!(out, "no unique strict {k}-coloring (r_{k} = {})", report.spectrum.r(k))?;
                return Ok(Verdict::Fail);
            };
            writeln!(out, "coloring {k}: {}", describe_coloring(&h, c))?;
            for i in 0..c.num_colors() {
                let g = pair_graph(&h, c, i)?;
                writeln!(
                    out,
                    "class {i} vertices {} edges {} components {}",
                    g.nodes.len(),
                    g.edges.len(),
                    g.component_count()
                )?;
            }
            Ok(Verdict::Pass)
        }
        Command::MinSearch { vertices, set, kind } => {
            let kind = EdgeKind::from(*kind);
            match exhaustive_min_search(*vertices, set, kind)? {
                Some(m) => writeln!(out, "minimum {kind}-edges {m}")?,
                None => writeln!(out, "minimum {kind}-edges none")?,
            }
            Ok(Verdict::Pass)
        }
    }
}
