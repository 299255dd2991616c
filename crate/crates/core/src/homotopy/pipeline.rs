//! The full solve: facets, start solutions, tracking and classification.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::facets::{facet_subnetworks, facet_subsystem, FacetSubnetwork};
use crate::linalg::max_norm;
use crate::network::{build_algebraic_system, build_unmixed_system, random_mixing, LaurentSystem, Network, UnmixedSystem};
use crate::polytope::{adjacency_polytope, enumerate_facets, Facet};
use crate::postprocess::{classify_stability, deduplicate_indices, real_configuration, Stability, DEDUP_TOL, REAL_TOL};

use super::polyhedral::{start_solutions_for_facet, IntraFacetOptions};
use super::tracker::{PathResult, PathStatus, TrackOptions};
use super::build_facet_homotopy_with_angle;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    pub seed: u64,
    /// Replace couplings and frequencies by random unit-modulus values.
    pub generic: bool,
    pub track: TrackOptions,
    pub workers: usize,
    /// Fresh mixing matrices tried after a genericity failure.
    pub retries: usize,
    pub lifting_range: i64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { seed: 0, generic: false, track: TrackOptions::default(), workers: 1, retries: 3, lifting_range: 1 << 12 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Solution {
    pub x: Vec<[f64; 2]>,
    pub theta: Option<Vec<f64>>,
    pub real: bool,
    pub stable: Option<bool>,
    pub facet_id: usize,
    pub residual: f64,
    #[serde(skip)]
    pub stability: Option<Stability>,
}

impl Solution {
    pub fn point(&self) -> Vec<Complex64> {
        self.x.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PathCounts {
    pub total: usize,
    pub converged: usize,
    pub diverged: usize,
    /// Singular endpoints and step-limit failures.
    pub singular: usize,
}

/// One tracked path, tagged with its origin.
#[derive(Clone, Debug)]
pub struct TrackedPath {
    pub facet_id: usize,
    pub start_index: usize,
    pub result: PathResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolutionSet {
    pub solutions: Vec<Solution>,
    pub paths: PathCounts,
    pub bound: u64,
    pub seed: u64,
    /// Start points produced per facet, in facet order.
    #[serde(skip)]
    pub starts_per_facet: Vec<usize>,
    #[serde(skip)]
    pub tracked: Vec<TrackedPath>,
    /// The network actually solved (randomized in generic mode).
    #[serde(skip)]
    pub network: Option<Network>,
    #[serde(skip)]
    pub system: Option<UnmixedSystem>,
    #[serde(skip)]
    pub attempts: usize,
}

impl SolutionSet {
    pub fn real_count(&self) -> usize {
        self.solutions.iter().filter(|s| s.real).count()
    }

    pub fn stable_count(&self) -> usize {
        self.solutions.iter().filter(|s| s.stable == Some(true)).count()
    }

    /// Every bound path converged to a distinct solution.
    pub fn accounting_complete(&self) -> bool {
        self.paths.total as u64 == self.bound && self.paths.converged == self.paths.total && self.solutions.len() == self.paths.total
    }

    pub fn summary(&self) -> String {
        format!(
            "paths tracked {} converged {} (diverged {}, singular {}); solutions {}; real {}; stable {}; bound {}",
            self.paths.total,
            self.paths.converged,
            self.paths.diverged,
            self.paths.singular,
            self.solutions.len(),
            self.real_count(),
            self.stable_count(),
            self.bound
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("solution set serializes")
    }
}

fn facet_rng(seed: u64, attempt: usize, facet_id: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
    rng.set_stream(facet_id as u64 + 1);
    rng
}

fn solve_facet(
    sys: &UnmixedSystem,
    facet: &Facet,
    sub: &FacetSubnetwork,
    theta: f64,
    rng: &mut ChaCha8Rng,
    opts: &SolveOptions,
) -> Result<Vec<PathResult>> {
    let fsys = facet_subsystem(sys, sub)?;
    let intra = IntraFacetOptions { lifting_range: opts.lifting_range, retries: opts.retries, track: opts.track };
    let starts = start_solutions_for_facet(&fsys, sub, rng, &intra)?;
    let fh = build_facet_homotopy_with_angle(sys, facet, theta)?;
    Ok(starts.iter().map(|y0| fh.track(y0, &opts.track)).collect())
}

/// Solves the synchronization system of `net` by facet degeneration.
pub fn solve_network(net: &Network, opts: &SolveOptions) -> Result<SolutionSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let net = if opts.generic { net.generic(&mut rng) } else { net.clone() };
    let n = net.dim();
    let alg = build_algebraic_system(&net);
    let pc = adjacency_polytope(&net);
    let facets = enumerate_facets(&pc)?;
    let subs = facet_subnetworks(&facets, &pc)?;
    let bound: u64 = subs.iter().map(|s| s.root_count).sum();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;

    let mut last = Error::Genericity("no attempt made".into());
    for attempt in 0..=opts.retries {
        let mixing = random_mixing(n, &mut rng);
        let theta = rng.random_range(0.3..1.3) * if rng.random::<bool>() { 1.0 } else { -1.0 };
        let sys = match build_unmixed_system(&alg, mixing) {
            Ok(sys) => sys,
            Err(Error::SingularMixing) => {
                last = Error::Genericity("ill-conditioned mixing matrix".into());
                continue;
            }
            Err(e) => return Err(e),
        };
        let per_facet: Vec<Result<Vec<PathResult>>> = pool.install(|| {
            (0..facets.len())
                .into_par_iter()
                .map(|id| solve_facet(&sys, &facets[id], &subs[id], theta, &mut facet_rng(opts.seed, attempt, id), opts))
                .collect()
        });
        let mut tracked = Vec::new();
        let mut starts_per_facet = Vec::with_capacity(facets.len());
        let mut failure = None;
        for (id, res) in per_facet.into_iter().enumerate() {
            match res {
                Ok(paths) => {
                    if paths.len() as u64 != subs[id].root_count {
                        failure = Some(Error::Genericity(format!("facet {id}: {} starts, expected {}", paths.len(), subs[id].root_count)));
                        break;
                    }
                    starts_per_facet.push(paths.len());
                    tracked.extend(paths.into_iter().enumerate().map(|(k, result)| TrackedPath { facet_id: id, start_index: k, result }));
                }
                Err(e @ Error::Genericity(_)) => {
                    failure = Some(e);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if let Some(e) = failure {
            last = e;
            continue;
        }
        return Ok(assemble(net, sys, bound, opts.seed, starts_per_facet, tracked, attempt + 1));
    }
    Err(last)
}

fn assemble(
    net: Network,
    sys: UnmixedSystem,
    bound: u64,
    seed: u64,
    starts_per_facet: Vec<usize>,
    tracked: Vec<TrackedPath>,
    attempts: usize,
) -> SolutionSet {
    let mut paths = PathCounts { total: tracked.len(), ..PathCounts::default() };
    for t in &tracked {
        match t.result.status {
            PathStatus::Converged => paths.converged += 1,
            PathStatus::Diverged => paths.diverged += 1,
            PathStatus::Singular | PathStatus::StepLimit => paths.singular += 1,
        }
    }
    let converged: Vec<&TrackedPath> = tracked.iter().filter(|t| t.result.status == PathStatus::Converged).collect();
    let points: Vec<Vec<Complex64>> = converged.iter().map(|t| t.result.end.clone()).collect();
    let solutions = deduplicate_indices(&points, DEDUP_TOL)
        .into_iter()
        .map(|idx| {
            let x = &points[idx];
            let residual = sys.evaluate(x).map(|f| max_norm(&f)).unwrap_or(f64::INFINITY);
            let theta = real_configuration(&net, x, REAL_TOL);
            let stability = match (&theta, net.is_real()) {
                (Some(th), true) => classify_stability(&net, th).ok(),
                _ => None,
            };
            Solution {
                x: x.iter().map(|z| [z.re, z.im]).collect(),
                real: theta.is_some(),
                theta,
                stable: stability.map(|s| s == Stability::Stable),
                stability,
                facet_id: converged[idx].facet_id,
                residual,
            }
        })
        .collect();
    SolutionSet {
        solutions,
        paths,
        bound,
        seed,
        starts_per_facet,
        tracked,
        network: Some(net),
        system: Some(sys),
        attempts,
    }
}
