//! Acceptance criteria, one PASS/FAIL line each.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use kuramoto_facets::cli;
use kuramoto_facets::facets::{facet_subnetworks, transpose, FacetSubnetwork, FacetSystem, PropertyChecker};
use kuramoto_facets::homotopy::{solve_network, SolveOptions};
use kuramoto_facets::network::{
    build_algebraic_system, build_unmixed_system, random_mixing, residual_algebraic, Network,
};
use kuramoto_facets::polytope::{adjacency_polytope, direct_normalized_volume, enumerate_facets, normalized_volume_pyramid, PointConfiguration};
use kuramoto_facets::postprocess::Stability;
use kuramoto_facets::solver::{solve_binomial, solve_primitive, BinomialSystem};
use kuramoto_facets::Complex64;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{load, network_path, ALL};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn decompose(name: &str) -> (Network, PointConfiguration, Vec<FacetSubnetwork>) {
    let net = load(name);
    let pc = adjacency_polytope(&net);
    let subs = facet_subnetworks(&enumerate_facets(&pc).unwrap(), &pc).unwrap();
    (net, pc, subs)
}

fn facet_counts() -> Outcome {
    let expected = [("triangle", 6), ("tree5", 16), ("cycle5", 30), ("chordal4", 12), ("wheel10", 1598)];
    let mut detail = Vec::new();
    for (name, want) in expected {
        let clock = Instant::now();
        let got = enumerate_facets(&adjacency_polytope(&load(name))).unwrap().len();
        let took = clock.elapsed();
        ensure(got == want, || format!("{name}: {got} facets, expected {want}"))?;
        if name == "wheel10" {
            ensure(took < Duration::from_secs(300), || format!("wheel10 took {took:.1?}"))?;
            detail.push(format!("{name} {got} in {took:.2?}"));
        } else {
            detail.push(format!("{name} {got}"));
        }
    }
    Ok(detail.join(", "))
}

fn primitivity_counts() -> Outcome {
    for (name, want) in [("tree5", 16), ("cycle5", 30), ("chordal4", 8), ("wheel10", 116)] {
        let got = decompose(name).2.iter().filter(|s| s.primitive).count();
        ensure(got == want, || format!("{name}: {got} primitive, expected {want}"))?;
    }
    let (_, _, subs) = decompose("wheel10");
    let mut hist = BTreeMap::new();
    for s in &subs {
        *hist.entry(s.n_edges()).or_insert(0usize) += 1;
    }
    let want: BTreeMap<usize, usize> = [(9, 116), (10, 414), (11, 540), (12, 384), (13, 144)].into();
    ensure(hist == want, || format!("wheel10 histogram {hist:?}"))?;
    Ok(format!("16/16, 30/30, 8/12, 116/1598; wheel10 sizes {hist:?}"))
}

fn root_count_bound() -> Outcome {
    for (name, want) in [("triangle", 6), ("tree5", 16), ("chordal4", 16), ("wheel10", 8480)] {
        let got: u64 = decompose(name).2.iter().map(|s| s.root_count).sum();
        ensure(got == want, || format!("{name}: bound {got}, expected {want}"))?;
    }
    let (_, _, subs) = decompose("wheel10");
    let by_size: BTreeMap<usize, BTreeSet<u64>> = subs.iter().fold(BTreeMap::new(), |mut m, s| {
        m.entry(s.n_edges()).or_default().insert(s.root_count);
        m
    });
    let want: BTreeMap<usize, BTreeSet<u64>> = [(9, 1), (10, 2), (11, 4), (12, 8), (13, 16)].into_iter().map(|(k, v)| (k, [v].into())).collect();
    ensure(by_size == want, || format!("wheel10 root counts by size {by_size:?}"))?;
    Ok("6, 16, 16, 8480; wheel10 root counts 1, 2, 4, 8, 16 by size".into())
}

fn subdivision_identity() -> Outcome {
    let mut detail = Vec::new();
    for name in ALL {
        let net = load(name);
        let pc = adjacency_polytope(&net);
        let pyramids: u64 = enumerate_facets(&pc).unwrap().iter().map(|f| normalized_volume_pyramid(f, &pc).unwrap()).sum();
        let direct = direct_normalized_volume(&pc).unwrap();
        ensure(pyramids == direct, || format!("{name}: pyramids {pyramids} vs direct {direct}"))?;
        detail.push(format!("{name} {direct}"));
    }
    ensure(detail[0] == "edge 2", || "single edge volume".into())?;
    Ok(detail.join(", "))
}

fn subnetwork_topology() -> Outcome {
    let mut total = 0;
    for name in ALL {
        let (net, _, subs) = decompose(name);
        let checker = PropertyChecker::new(&net, &subs);
        for s in &subs {
            let report = checker.check(s);
            ensure(report.all_hold(), || format!("{name} facet {:?}: {:?}", s.facet_id, report.first_violation()))?;
        }
        let edge_sets: HashSet<Vec<(usize, usize)>> = subs.iter().map(|s| s.edges.clone()).collect();
        let transposed: HashSet<Vec<(usize, usize)>> = subs.iter().map(|s| transpose(s).edges).collect();
        ensure(edge_sets == transposed, || format!("{name}: transpose closure"))?;
        total += subs.len();
    }
    Ok(format!("six properties and transpose closure on {total} subnetworks"))
}

fn cross_mixing_residual(set: &kuramoto_facets::homotopy::SolutionSet, seed: u64) -> f64 {
    let net = set.network.as_ref().unwrap();
    let alg = build_algebraic_system(net);
    let other = build_unmixed_system(&alg, random_mixing(net.dim(), &mut ChaCha8Rng::seed_from_u64(seed ^ 0xABCD))).unwrap();
    set.solutions.iter().map(|s| residual_algebraic(&other, &s.point()).unwrap()).fold(0.0, f64::max)
}

fn generic_solve() -> Outcome {
    let mut detail = Vec::new();
    for (name, want) in [("triangle", 6), ("tree5", 16), ("cycle5", 30), ("chordal4", 16)] {
        let clock = Instant::now();
        let set = solve_network(&load(name), &SolveOptions { seed: 7, generic: true, ..SolveOptions::default() }).unwrap();
        let took = clock.elapsed();
        ensure(set.solutions.len() == want, || format!("{name}: {} solutions, expected {want}", set.solutions.len()))?;
        let worst = set.solutions.iter().map(|s| s.residual).fold(0.0, f64::max);
        ensure(worst <= 1e-8, || format!("{name}: residual {worst:e}"))?;
        let cross = cross_mixing_residual(&set, 7);
        ensure(cross <= 1e-6, || format!("{name}: cross-mixing residual {cross:e}"))?;
        ensure(took < Duration::from_secs(30), || format!("{name}: {took:.1?}"))?;
        detail.push(format!("{name} {want}"));
    }

    let clock = Instant::now();
    let set = solve_network(&load("wheel10"), &SolveOptions { seed: 7, generic: true, workers: 1, ..SolveOptions::default() }).unwrap();
    let took = clock.elapsed();
    let rate = set.paths.converged as f64 / set.paths.total as f64;
    ensure(set.paths.total == 8480, || format!("wheel10: {} paths", set.paths.total))?;
    ensure(rate >= 0.995, || format!("wheel10: convergence {:.2}%", 100.0 * rate))?;
    ensure(took < Duration::from_secs(600), || format!("wheel10: {took:.1?}"))?;
    if set.paths.converged == set.paths.total {
        ensure(set.solutions.len() == 8480, || format!("wheel10: {} distinct solutions", set.solutions.len()))?;
    }
    detail.push(format!("wheel10 {}/{} converged, {} solutions in {took:.1?}", set.paths.converged, set.paths.total, set.solutions.len()));
    Ok(detail.join(", "))
}

fn facet_jacobian(fs: &FacetSystem, x: &[Complex64]) -> DMatrix<Complex64> {
    let n = fs.dim();
    let val = |i: usize| if i == 0 { Complex64::new(1.0, 0.0) } else { x[i - 1] };
    let mut jac = DMatrix::zeros(n, n);
    for k in 0..n {
        for (e, &(i, j)) in fs.edges.iter().enumerate() {
            let a = fs.coefficients[k][e];
            if i > 0 {
                jac[(k, i - 1)] -= a / val(j);
            }
            if j > 0 {
                jac[(k, j - 1)] += a * val(i) / (val(j) * val(j));
            }
        }
    }
    jac
}

fn facet_value(fs: &FacetSystem, x: &[Complex64]) -> Vec<Complex64> {
    let val = |i: usize| if i == 0 { Complex64::new(1.0, 0.0) } else { x[i - 1] };
    (0..fs.dim())
        .map(|k| fs.constants[k] - fs.edges.iter().enumerate().map(|(e, &(i, j))| fs.coefficients[k][e] * val(i) / val(j)).sum::<Complex64>())
        .collect()
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| if z.is_finite() { z.norm() } else { f64::INFINITY }).fold(0.0, f64::max)
}

/// Damped Newton in logarithmic coordinates `x = exp(w)`; `Some` once the residual drops below 1e-12.
fn newton_oracle(fs: &FacetSystem, mut x: Vec<Complex64>) -> Option<Vec<Complex64>> {
    for _ in 0..300 {
        let f = facet_value(fs, &x);
        let r = norm(&f);
        if r < 1e-12 {
            return Some(x);
        }
        let mut jac = facet_jacobian(fs, &x);
        for c in 0..x.len() {
            for k in 0..x.len() {
                jac[(k, c)] *= x[c];
            }
        }
        let rhs = DMatrix::from_iterator(f.len(), 1, f.iter().copied());
        let dw = jac.lu().solve(&rhs)?;
        let mut lambda = 1.0;
        loop {
            let trial: Vec<Complex64> = x.iter().zip(dw.iter()).map(|(a, d)| a * (-d * lambda).exp()).collect();
            if norm(&facet_value(fs, &trial)) < r {
                x = trial;
                break;
            }
            lambda *= 0.5;
            if lambda < 1e-10 {
                return None;
            }
        }
    }
    None
}

fn primitive_oracle() -> Outcome {
    let mut pool = Vec::new();
    for name in ["triangle", "tree5", "cycle5", "chordal4", "wheel10"] {
        let (_, _, subs) = decompose(name);
        pool.extend(subs.into_iter().filter(|s| s.primitive).take(30));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut newton_hits = 0;
    for trial in 0..100 {
        let sub = &pool[rng.random_range(0..pool.len())];
        let n = sub.n_nodes - 1;
        let mut z = || Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let coefficients: Vec<Vec<Complex64>> = (0..n).map(|_| (0..n).map(|_| z()).collect()).collect();
        let constants: Vec<Complex64> = (0..n).map(|_| z()).collect();
        let fs = FacetSystem::new(sub.edges.clone(), coefficients, constants);
        let x = solve_primitive(&fs).map_err(|e| format!("trial {trial}: {e}"))?;
        let r = residual_algebraic(&fs, &x).unwrap();
        ensure(r <= 1e-10, || format!("trial {trial}: residual {r:e}"))?;
        let mut found = false;
        for _ in 0..20 {
            let start: Vec<Complex64> = (0..n).map(|_| Complex64::from_polar(rng.random_range(0.3..3.0), rng.random_range(0.0..2.0 * PI))).collect();
            if let Some(y) = newton_oracle(&fs, start) {
                let scale = 1.0 + norm(&x);
                let d = norm(&x.iter().zip(&y).map(|(a, b)| a - b).collect::<Vec<_>>());
                ensure(d <= 1e-8 * scale, || format!("trial {trial}: Newton found a second point at distance {d:e}"))?;
                found = true;
                newton_hits += 1;
            }
        }
        ensure(found, || format!("trial {trial}: no Newton start converged"))?;
    }
    Ok(format!("100 systems, {newton_hits} agreeing Newton runs, no second solution"))
}

fn det_oracle(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect()).collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det_oracle(&minor)
        })
        .sum()
}

fn binomial_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut count = 0;
    let mut total_solutions = 0;
    while count < 200 {
        let n = rng.random_range(1..=5);
        let cols: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.random_range(-3..=3)).collect()).collect();
        let det = det_oracle(&cols).unsigned_abs();
        if !(1..=12).contains(&det) {
            continue;
        }
        let rhs: Vec<Complex64> = (0..n).map(|_| Complex64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.0..2.0 * PI))).collect();
        let bs = BinomialSystem::new(cols.clone(), rhs.clone()).unwrap();
        let sols = solve_binomial(&bs).unwrap();
        ensure(sols.len() as u64 == det, || format!("{cols:?}: {} solutions, |det| {det}", sols.len()))?;
        for x in &sols {
            for (v, b) in cols.iter().zip(&rhs) {
                let m: Complex64 = v.iter().zip(x).map(|(&e, z)| z.powi(e as i32)).product();
                let r = (m - b).norm();
                ensure(r <= 1e-10, || format!("{cols:?}: residual {r:e}"))?;
            }
        }
        total_solutions += sols.len();
        count += 1;
    }
    Ok(format!("200 matrices, {total_solutions} solutions"))
}

/// Every supporting hyperplane through `n` affinely independent configuration points.
fn brute_force_facets(pc: &PointConfiguration) -> BTreeSet<(Vec<i64>, i64, Vec<usize>)> {
    let n = pc.dim();
    let pts = pc.points();
    let mut out = BTreeSet::new();
    let mut subset: Vec<usize> = (0..n).collect();
    loop {
        let base = &pts[subset[0]];
        let diffs: Vec<Vec<i64>> = subset[1..].iter().map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        // generalized cross product of the n-1 difference vectors
        let normal: Vec<i64> = (0..n)
            .map(|c| {
                if n == 1 {
                    return 1;
                }
                let minor: Vec<Vec<i64>> = diffs.iter().map(|d| d.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect()).collect();
                (if c % 2 == 0 { 1 } else { -1 }) * det_oracle(&minor)
            })
            .collect();
        if normal.iter().any(|&v| v != 0) {
            let g = normal.iter().fold(0i64, |acc, &v| num_gcd(acc, v.abs()));
            let normal: Vec<i64> = normal.iter().map(|v| v / g).collect();
            let dot = |p: &[i64]| p.iter().zip(&normal).map(|(a, b)| a * b).sum::<i64>();
            let h = dot(base);
            let values: Vec<i64> = pts.iter().map(|p| dot(p)).collect();
            let sign = if values.iter().all(|&v| v >= h) {
                Some(1)
            } else if values.iter().all(|&v| v <= h) {
                Some(-1)
            } else {
                None
            };
            if let Some(sign) = sign {
                let on: Vec<usize> = (0..pts.len()).filter(|&i| values[i] == h).collect();
                out.insert((normal.iter().map(|v| v * sign).collect(), h * sign, on));
            }
        }
        // next n-subset in lexicographic order
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if subset[k] < pts.len() - n + k {
                break;
            }
            if k == 0 && subset[0] >= pts.len() - n {
                return out;
            }
        }
        subset[k] += 1;
        for j in k + 1..n {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn brute_force_oracle() -> Outcome {
    let mut graphs = 0;
    for n_nodes in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n_nodes).flat_map(|i| (i + 1..n_nodes).map(move |j| (i, j))).collect();
        for mask in 1u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let Ok(net) = Network::unit(n_nodes, &edges) else { continue };
            let pc = adjacency_polytope(&net);
            let got: BTreeSet<(Vec<i64>, i64, Vec<usize>)> =
                enumerate_facets(&pc).unwrap().into_iter().map(|f| (f.normal, f.height, f.vertex_ids)).collect();
            let want = brute_force_facets(&pc);
            ensure(got == want, || format!("{n_nodes} nodes, edges {edges:?}: {} facets vs oracle {}", got.len(), want.len()))?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} connected graphs on 2 to 5 nodes"))
}

fn two_node_real_roots() -> Outcome {
    let set = solve_network(&load("two_node"), &SolveOptions::default()).unwrap();
    let mut real: Vec<(f64, Option<Stability>)> =
        set.solutions.iter().filter(|s| s.real).map(|s| (s.theta.as_ref().unwrap()[0], s.stability)).collect();
    real.sort_by(|a, b| a.0.total_cmp(&b.0));
    ensure(real.len() == 2, || format!("{} real solutions", real.len()))?;
    let want = [(0.5f64.asin(), Stability::Stable), (PI - 0.5f64.asin(), Stability::Unstable)];
    for ((theta, stab), (t, s)) in real.iter().zip(want) {
        ensure((theta - t).abs() <= 1e-8, || format!("theta {theta} vs {t}"))?;
        ensure(*stab == Some(s), || format!("theta {theta}: {stab:?}, expected {s:?}"))?;
    }
    Ok(format!("theta {:.10} stable, {:.10} unstable", real[0].0, real[1].0))
}

fn run_solve(workers: &str) -> (i32, Vec<u8>) {
    let path = network_path("cycle5");
    let args = ["kuramoto-facets", "solve", path.to_str().unwrap(), "--generic", "--seed", "11", "--workers", workers];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    (cli::run(args, &mut out, &mut err), out)
}

fn determinism() -> Outcome {
    let (c1, a) = run_solve("1");
    let (c8, b) = run_solve("8");
    ensure(c1 == 0 && c8 == 0, || format!("exit codes {c1}, {c8}"))?;
    ensure(a == b, || "outputs differ between 1 and 8 workers".into())?;
    Ok(format!("{} identical bytes for 1 and 8 workers", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("facet counts", facet_counts),
        ("primitive subnetworks", primitivity_counts),
        ("root-count bound", root_count_bound),
        ("subdivision identity", subdivision_identity),
        ("subnetwork topology", subnetwork_topology),
        ("generic solve", generic_solve),
        ("primitive solver oracle", primitive_oracle),
        ("binomial solver counts", binomial_property),
        ("facets vs brute force", brute_force_oracle),
        ("two-node real roots", two_node_real_roots),
        ("worker determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let clock = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = clock.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.1?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{took:.1?}]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
