//! Command-line front end: `facets`, `bound`, `solve` and `verify`.
//!
//! JSON goes to stdout (or `--json PATH`), diagnostics to stderr. Exit codes:
//! 0 success, 1 parse error, 2 geometry failure, 3 genericity failure,
//! 4 verification failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::facets::{
    facet_subnetworks, is_primitive_by_definition, levels_consistent, FacetSubnetwork, PropertyChecker, SubnetworkRecord,
};
use crate::homotopy::{solve_network, SolveOptions, TrackOptions};
use crate::network::{parse_network, Network};
use crate::polytope::{adjacency_polytope, direct_normalized_volume, enumerate_facets, facet_records, FacetRecord};

pub const EXIT_PARSE: i32 = 1;
pub const EXIT_GEOMETRY: i32 = 2;
pub const EXIT_GENERICITY: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "kuramoto-facets", version, about = "Facet decomposition and root counting for Kuramoto networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List facets, facet subnetworks, root counts and the size histogram.
    Facets {
        network: PathBuf,
        /// Write one DOT digraph per subnetwork into this directory.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the adjacency polytope root-count bound.
    Bound { network: PathBuf },
    /// Find all complex synchronization configurations.
    Solve {
        network: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replace couplings and frequencies by random unit-modulus values.
        #[arg(long)]
        generic: bool,
        /// Endpoint residual tolerance.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check the topological properties of every facet subnetwork.
    Verify { network: PathBuf },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::NodeOutOfRange { .. }
        | Error::Disconnected
        | Error::Dimension { .. }
        | Error::Io(_) => EXIT_PARSE,
        Error::Genericity(_) | Error::SingularMixing => EXIT_GENERICITY,
        Error::NotFullDimensional
        | Error::Overflow
        | Error::ZeroCoordinate(_)
        | Error::SingularExponents
        | Error::Precondition(_) => EXIT_GEOMETRY,
    }
}

fn load(path: &Path) -> Result<Network, Error> {
    parse_network(&std::fs::read_to_string(path)?)
}

#[derive(Serialize)]
struct FacetsReport {
    facets: Vec<FacetRecord>,
    subnetworks: Vec<SubnetworkRecord>,
    primitive: usize,
    histogram: BTreeMap<usize, usize>,
    bound: u64,
}

/// Outcome of `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub facets: usize,
    pub pyramid_volume: u64,
    pub direct_volume: u64,
    pub passed: bool,
    pub first_violation: Option<String>,
}

/// Runs every subnetwork check plus the subdivision identity on `subs`.
pub fn verify_subnetworks(net: &Network, subs: &[FacetSubnetwork]) -> Result<VerifyReport, Error> {
    let pc = adjacency_polytope(net);
    let pyramid_volume: u64 = subs.iter().map(|s| s.root_count).sum();
    let direct_volume = direct_normalized_volume(&pc)?;
    let checker = PropertyChecker::new(net, subs);
    let mut first_violation = (pyramid_volume != direct_volume)
        .then(|| format!("subdivision identity: pyramids {pyramid_volume}, direct {direct_volume}"));
    for (k, s) in subs.iter().enumerate() {
        if first_violation.is_some() {
            break;
        }
        let id = s.facet_id.unwrap_or(k);
        if let Some(p) = checker.check(s).first_violation() {
            first_violation = Some(format!("facet {id}: {p}"));
        } else if !levels_consistent(s) {
            first_violation = Some(format!("facet {id}: levels"));
        } else if s.primitive != is_primitive_by_definition(s.n_nodes, &s.edges) {
            first_violation = Some(format!("facet {id}: primitivity"));
        }
    }
    Ok(VerifyReport { facets: subs.len(), pyramid_volume, direct_volume, passed: first_violation.is_none(), first_violation })
}

fn emit(json: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, format!("{json}\n"))?,
        None => writeln!(out, "{json}")?,
    }
    Ok(())
}

fn run_command(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Facets { network, dot, json } => {
            let net = load(&network)?;
            let pc = adjacency_polytope(&net);
            let facets = enumerate_facets(&pc)?;
            let subs = facet_subnetworks(&facets, &pc)?;
            let mut histogram = BTreeMap::new();
            for s in &subs {
                *histogram.entry(s.n_edges()).or_insert(0) += 1;
            }
            if let Some(dir) = dot {
                std::fs::create_dir_all(&dir)?;
                for s in &subs {
                    std::fs::write(dir.join(format!("facet_{}.dot", s.facet_id.unwrap_or(0))), s.to_dot())?;
                }
            }
            let report = FacetsReport {
                facets: facet_records(&facets, &pc)?,
                primitive: subs.iter().filter(|s| s.primitive).count(),
                bound: subs.iter().map(|s| s.root_count).sum(),
                subnetworks: subs.iter().map(|s| s.record()).collect(),
                histogram,
            };
            writeln!(err, "{} facets, {} primitive, bound {}", report.facets.len(), report.primitive, report.bound)?;
            emit(&serde_json::to_string_pretty(&report).expect("report serializes"), json.as_deref(), out)?;
            Ok(0)
        }
        Command::Bound { network } => {
            let net = load(&network)?;
            let pc = adjacency_polytope(&net);
            let bound: u64 = facet_records(&enumerate_facets(&pc)?, &pc)?.iter().map(|f| f.volume).sum();
            writeln!(out, "{bound}")?;
            Ok(0)
        }
        Command::Solve { network, seed, generic, tol, workers, json } => {
            let net = load(&network)?;
            let opts = SolveOptions {
                seed,
                generic,
                workers,
                track: TrackOptions { endpoint_tol: tol, ..TrackOptions::default() },
                ..SolveOptions::default()
            };
            let set = solve_network(&net, &opts)?;
            writeln!(err, "{}", set.summary())?;
            emit(&set.to_json(), json.as_deref(), out)?;
            if generic && !set.accounting_complete() {
                writeln!(err, "path accounting does not match the bound {}", set.bound)?;
                return Ok(EXIT_GENERICITY);
            }
            Ok(0)
        }
        Command::Verify { network } => {
            let net = load(&network)?;
            let pc = adjacency_polytope(&net);
            let subs = facet_subnetworks(&enumerate_facets(&pc)?, &pc)?;
            let report = verify_subnetworks(&net, &subs)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
            match &report.first_violation {
                Some(v) => {
                    writeln!(err, "violated: {v}")?;
                    Ok(EXIT_VERIFY)
                }
                None => {
                    writeln!(err, "{} facet subnetworks verified", report.facets)?;
                    Ok(0)
                }
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { 0 };
        }
    };
    match run_command(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
