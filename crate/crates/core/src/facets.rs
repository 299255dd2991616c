//! Facet subnetworks and facet subsystems.
//!
//! A facet `F` with inner normal `alpha` (scaled so `<p, alpha> = -1` on `F`)
//! selects the directed edges `(i, j)` with `alpha_j - alpha_i = 1`. These
//! edges form a directed acyclic spanning subnetwork; `alpha` itself is a
//! level function that increases by one along every edge.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use num_complex::Complex64;
use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{check_point, node_value, LaurentSystem, Network, UnmixedSystem};
use crate::polytope::lattice::{gcd, rank};
use crate::polytope::{normalized_volume_pyramid, Facet, PointConfiguration};

/// Directed acyclic spanning subnetwork induced by a facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSubnetwork {
    /// Index into the canonical facet list; `None` for derived subnetworks.
    pub facet_id: Option<usize>,
    pub n_nodes: usize,
    pub normal: Vec<i64>,
    pub height: i64,
    /// Sorted directed edges `(i, j)`, i.e. terms `x_i / x_j`.
    pub edges: Vec<(usize, usize)>,
    /// Level of every node `0..N`; `level_0 = 0`.
    pub levels: Vec<Rational64>,
    pub primitive: bool,
    pub root_count: u64,
}

impl FacetSubnetwork {
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Nodes incident to at least one edge.
    pub fn nodes(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|&(i, j)| [i, j]).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = self.facet_id.map_or("subnetwork".to_string(), |id| format!("facet_{id}"));
        let _ = writeln!(out, "digraph {name} {{");
        for v in 0..self.n_nodes {
            let _ = writeln!(out, "  {v};");
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  {i} -> {j};");
        }
        out.push_str("}\n");
        out
    }

    pub fn record(&self) -> SubnetworkRecord {
        SubnetworkRecord {
            facet_id: self.facet_id,
            edges: self.edges.clone(),
            levels: self
                .levels
                .iter()
                .map(|l| {
                    if l.is_integer() {
                        serde_json::Value::from(l.to_integer())
                    } else {
                        serde_json::Value::from(*l.numer() as f64 / *l.denom() as f64)
                    }
                })
                .collect(),
            primitive: self.primitive,
            root_count: self.root_count,
        }
    }
}

/// Subnetwork export record.
#[derive(Clone, Debug, Serialize)]
pub struct SubnetworkRecord {
    pub facet_id: Option<usize>,
    pub edges: Vec<(usize, usize)>,
    pub levels: Vec<serde_json::Value>,
    pub primitive: bool,
    pub root_count: u64,
}

fn levels_from_alpha(alpha: &[Rational64]) -> Vec<Rational64> {
    std::iter::once(Rational64::from(0)).chain(alpha.iter().copied()).collect()
}

/// Subnetwork of the edges whose points lie on `f`.
pub fn facet_subnetwork(facet_id: usize, f: &Facet, pc: &PointConfiguration) -> Result<FacetSubnetwork> {
    let mut edges: Vec<(usize, usize)> = f.vertex_ids.iter().map(|&p| pc.edge(p)).collect();
    edges.sort_unstable();
    let n_nodes = pc.dim() + 1;
    Ok(FacetSubnetwork {
        facet_id: Some(facet_id),
        n_nodes,
        normal: f.normal.clone(),
        height: f.height,
        primitive: is_primitive(n_nodes, &edges),
        edges,
        levels: levels_from_alpha(&f.alpha()),
        root_count: normalized_volume_pyramid(f, pc)?,
    })
}

/// All facet subnetworks in canonical facet order.
pub fn facet_subnetworks(facets: &[Facet], pc: &PointConfiguration) -> Result<Vec<FacetSubnetwork>> {
    facets.iter().enumerate().map(|(id, f)| facet_subnetwork(id, f, pc)).collect()
}

/// Exactly `N - 1` edges whose undirected support is a tree.
pub fn is_primitive(n_nodes: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() != n_nodes - 1 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n_nodes).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(i, j) in edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Primitivity read literally: weakly connected, acyclic, spanning, `N - 1` edges.
pub fn is_primitive_by_definition(n_nodes: usize, edges: &[(usize, usize)]) -> bool {
    edges.len() == n_nodes - 1
        && is_acyclic(n_nodes, edges)
        && spans_all_nodes(n_nodes, edges)
        && is_weakly_connected(n_nodes, edges)
}

pub fn transpose(sub: &FacetSubnetwork) -> FacetSubnetwork {
    let mut edges: Vec<(usize, usize)> = sub.edges.iter().map(|&(i, j)| (j, i)).collect();
    edges.sort_unstable();
    FacetSubnetwork {
        facet_id: None,
        n_nodes: sub.n_nodes,
        normal: sub.normal.iter().map(|v| -v).collect(),
        height: sub.height,
        edges,
        levels: sub.levels.iter().map(|l| -l).collect(),
        primitive: sub.primitive,
        root_count: sub.root_count,
    }
}

fn topological_order(n_nodes: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n_nodes];
    let mut out = vec![Vec::new(); n_nodes];
    for &(i, j) in edges {
        indeg[j] += 1;
        out[i].push(j);
    }
    let mut queue: VecDeque<usize> = (0..n_nodes).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n_nodes);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    (order.len() == n_nodes).then_some(order)
}

fn is_acyclic(n_nodes: usize, edges: &[(usize, usize)]) -> bool {
    topological_order(n_nodes, edges).is_some()
}

fn spans_all_nodes(n_nodes: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n_nodes];
    for &(i, j) in edges {
        seen[i] = true;
        seen[j] = true;
    }
    seen.into_iter().all(|s| s)
}

fn is_weakly_connected(n_nodes: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n_nodes];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n_nodes];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every pair of nodes joined by directed paths is joined only by paths of one length.
fn has_equal_path_lengths(n_nodes: usize, edges: &[(usize, usize)]) -> bool {
    let Some(order) = topological_order(n_nodes, edges) else { return false };
    let mut out = vec![Vec::new(); n_nodes];
    for &(i, j) in edges {
        out[i].push(j);
    }
    for &src in &order {
        let mut lengths: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n_nodes];
        lengths[src].insert(0);
        for &v in &order {
            if lengths[v].is_empty() {
                continue;
            }
            let next: Vec<usize> = lengths[v].iter().map(|l| l + 1).collect();
            for &w in &out[v] {
                lengths[w].extend(next.iter().copied());
            }
        }
        if lengths.iter().any(|s| s.len() > 1) {
            return false;
        }
    }
    true
}

/// `level_j - level_i = 1` on every edge and all levels integral.
pub fn levels_consistent(sub: &FacetSubnetwork) -> bool {
    sub.levels[0] == Rational64::from(0)
        && sub.levels.iter().all(|l| l.is_integer())
        && sub.edges.iter().all(|&(i, j)| sub.levels[j] - sub.levels[i] == Rational64::from(1))
}

/// Undirected cycles of `net` as closed node sequences (first node not repeated).
///
/// All simple cycles when the network has at most `cap` edges, otherwise the
/// fundamental cycles of a BFS spanning tree.
pub fn network_cycles(net: &Network, cap: usize) -> Vec<Vec<usize>> {
    let n = net.n_nodes();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut a: Vec<usize> = net.neighbors(v).map(|(w, _)| w).collect();
            a.sort_unstable();
            a
        })
        .collect();
    if net.edges().len() <= cap {
        let mut cycles = Vec::new();
        for start in 0..n {
            let mut path = vec![start];
            let mut on_path = vec![false; n];
            on_path[start] = true;
            extend_cycles(start, &adj, &mut path, &mut on_path, &mut cycles);
        }
        cycles
    } else {
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::from([0]);
        parent[0] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut cycles = Vec::new();
        for e in net.edges() {
            let (a, b) = (e.i, e.j);
            if parent[a] == b || parent[b] == a {
                continue;
            }
            let (mut u, mut v) = (a, b);
            let (mut left, mut right) = (vec![u], vec![v]);
            while u != v {
                if depth[u] >= depth[v] {
                    u = parent[u];
                    left.push(u);
                } else {
                    v = parent[v];
                    right.push(v);
                }
            }
            right.pop();
            left.extend(right.into_iter().rev());
            cycles.push(left);
        }
        cycles
    }
}

fn extend_cycles(start: usize, adj: &[Vec<usize>], path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if w == start && path.len() >= 3 && path[1] < path[path.len() - 1] {
            out.push(path.clone());
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend_cycles(start, adj, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Longest run of consecutive cycle edges oriented the same way in `edges`
/// is at most half the cycle length.
fn respects_half_cycle(edges: &HashSet<(usize, usize)>, cycle: &[usize]) -> bool {
    let len = cycle.len();
    let orient: Vec<i8> = (0..len)
        .map(|k| {
            let (a, b) = (cycle[k], cycle[(k + 1) % len]);
            if edges.contains(&(a, b)) {
                1
            } else if edges.contains(&(b, a)) {
                -1
            } else {
                0
            }
        })
        .collect();
    for dir in [1i8, -1] {
        if orient.iter().all(|&o| o == dir) {
            return false;
        }
        let mut best = 0;
        let mut run = 0;
        // two laps cover runs that wrap around
        for k in 0..2 * len {
            if orient[k % len] == dir {
                run += 1;
                best = usize::max(best, run);
            } else {
                run = 0;
            }
        }
        if 2 * best > len {
            return false;
        }
    }
    true
}

/// Outcome of the six topological checks on one subnetwork.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub acyclic: bool,
    pub contains_all_nodes: bool,
    pub weakly_connected: bool,
    pub equal_path_lengths: bool,
    pub half_cycle: bool,
    pub transpose_present: bool,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.acyclic
            && self.contains_all_nodes
            && self.weakly_connected
            && self.equal_path_lengths
            && self.half_cycle
            && self.transpose_present
    }

    /// Name of the first failing property.
    pub fn first_violation(&self) -> Option<&'static str> {
        [
            (self.acyclic, "acyclic"),
            (self.contains_all_nodes, "contains all nodes"),
            (self.weakly_connected, "weakly connected"),
            (self.equal_path_lengths, "equal path lengths"),
            (self.half_cycle, "half cycle"),
            (self.transpose_present, "transpose present"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

/// Default edge-count cap below which all simple cycles are enumerated.
pub const DEFAULT_CYCLE_CAP: usize = 20;

/// Precomputed context for checking many subnetworks of one network.
pub struct PropertyChecker {
    cycles: Vec<Vec<usize>>,
    edge_sets: HashSet<Vec<(usize, usize)>>,
}

impl PropertyChecker {
    pub fn new(net: &Network, all: &[FacetSubnetwork]) -> Self {
        Self::with_cycle_cap(net, all, DEFAULT_CYCLE_CAP)
    }

    pub fn with_cycle_cap(net: &Network, all: &[FacetSubnetwork], cap: usize) -> Self {
        Self { cycles: network_cycles(net, cap), edge_sets: all.iter().map(|s| s.edges.clone()).collect() }
    }

    pub fn check(&self, sub: &FacetSubnetwork) -> PropertyReport {
        let n = sub.n_nodes;
        let edge_set: HashSet<(usize, usize)> = sub.edges.iter().copied().collect();
        let acyclic = is_acyclic(n, &sub.edges);
        PropertyReport {
            acyclic,
            contains_all_nodes: spans_all_nodes(n, &sub.edges),
            weakly_connected: is_weakly_connected(n, &sub.edges),
            equal_path_lengths: acyclic && has_equal_path_lengths(n, &sub.edges),
            half_cycle: self.cycles.iter().all(|c| respects_half_cycle(&edge_set, c)),
            transpose_present: self.edge_sets.contains(&transpose(sub).edges),
        }
    }
}

/// Checks one subnetwork against the full list `all` of facet subnetworks of `net`.
pub fn verify_subnetwork_properties(sub: &FacetSubnetwork, net: &Network, all: &[FacetSubnetwork]) -> PropertyReport {
    PropertyChecker::new(net, all).check(sub)
}

/// Subnetwork of edges with `alpha_j - alpha_i = 1`, i.e. unit flow under the
/// pseudo-flow `f(i, j) = beta_i - beta_j` with `beta = -alpha`.
///
/// Returns `None` unless `alpha` is the inner normal of a facet at height -1:
/// no edge may carry flow above 1 and the saturated edges must span `R^n`.
pub fn facet_subnetwork_from_flow(net: &Network, pc: &PointConfiguration, alpha: &[Rational64]) -> Result<Option<FacetSubnetwork>> {
    let n = net.dim();
    if alpha.len() != n {
        return Err(Error::Dimension { expected: n, got: alpha.len() });
    }
    let level = |i: usize| if i == 0 { Rational64::from(0) } else { alpha[i - 1] };
    let one = Rational64::from(1);
    let mut vertex_ids = Vec::new();
    for idx in 0..pc.len() {
        let (i, j) = pc.edge(idx);
        let flow = level(j) - level(i);
        if flow > one {
            return Ok(None);
        }
        if flow == one {
            vertex_ids.push(idx);
        }
    }
    if vertex_ids.is_empty() {
        return Ok(None);
    }
    let rows: Vec<Vec<i64>> = vertex_ids.iter().map(|&v| pc.point(v).to_vec()).collect();
    if rank(&rows)? != n {
        return Ok(None);
    }
    let lcm = alpha.iter().fold(1i64, |acc, a| acc / gcd(acc as i128, *a.denom() as i128) as i64 * a.denom());
    let scaled: Vec<i64> = alpha.iter().map(|a| (a * lcm).to_integer()).collect();
    let content = scaled.iter().fold(lcm as i128, |acc, &v| gcd(acc, v as i128)) as i64;
    let facet = Facet {
        normal: scaled.iter().map(|v| v / content).collect(),
        height: -lcm / content,
        vertex_ids,
    };
    let mut sub = facet_subnetwork(0, &facet, pc)?;
    sub.facet_id = None;
    Ok(Some(sub))
}

/// `c_k - sum_{(i,j) in E_F} a_kij x_i / x_j = 0`, `k = 1..n`.
#[derive(Clone, Debug)]
pub struct FacetSystem {
    n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Exponent vector `e_i - e_j` of each edge.
    pub support: Vec<Vec<i64>>,
    /// `coefficients[k][e]`.
    pub coefficients: Vec<Vec<Complex64>>,
    pub constants: Vec<Complex64>,
}

impl FacetSystem {
    pub fn new(edges: Vec<(usize, usize)>, coefficients: Vec<Vec<Complex64>>, constants: Vec<Complex64>) -> Self {
        let n = constants.len();
        let support = edges.iter().map(|&(i, j)| crate::network::edge_exponent(n, i, j)).collect();
        Self { n, edges, support, coefficients, constants }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn n_terms(&self) -> usize {
        self.edges.len()
    }
}

impl LaurentSystem for FacetSystem {
    fn dim(&self) -> usize {
        self.n
    }

    fn evaluate(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        check_point(x, self.n)?;
        let mono: Vec<Complex64> = self.edges.iter().map(|&(i, j)| node_value(x, i) / node_value(x, j)).collect();
        Ok((0..self.n)
            .map(|k| self.constants[k] - self.coefficients[k].iter().zip(&mono).map(|(a, m)| a * m).sum::<Complex64>())
            .collect())
    }
}

/// Restriction of `sys` to the terms of `sub`.
pub fn facet_subsystem(sys: &UnmixedSystem, sub: &FacetSubnetwork) -> Result<FacetSystem> {
    let cols: Vec<usize> = sub
        .edges
        .iter()
        .map(|e| {
            sys.edges
                .iter()
                .position(|d| d == e)
                .ok_or_else(|| Error::Precondition(format!("edge {e:?} not in the system")))
        })
        .collect::<Result<_>>()?;
    let coefficients = (0..sys.dim()).map(|k| cols.iter().map(|&c| sys.coefficients[k][c]).collect()).collect();
    Ok(FacetSystem::new(sub.edges.clone(), coefficients, sys.constants.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{build_algebraic_system, build_unmixed_system, random_mixing};
    use crate::polytope::{adjacency_polytope, enumerate_facets};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn triangle() -> Network {
        Network::unit(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn q(v: i64) -> Rational64 {
        Rational64::from(v)
    }

    fn subnetworks(net: &Network) -> (PointConfiguration, Vec<FacetSubnetwork>) {
        let pc = adjacency_polytope(net);
        let facets = enumerate_facets(&pc).unwrap();
        let subs = facet_subnetworks(&facets, &pc).unwrap();
        (pc, subs)
    }

    #[test]
    fn triangle_subnetworks() {
        let (_, subs) = subnetworks(&triangle());
        let down = subs.iter().find(|s| s.levels[1..] == [q(-1), q(-1)]).unwrap();
        assert_eq!(down.edges, vec![(1, 0), (2, 0)]);
        let up = subs.iter().find(|s| s.levels[1..] == [q(1), q(1)]).unwrap();
        assert_eq!(up.edges, vec![(0, 1), (0, 2)]);
        assert_eq!(transpose(down).edges, up.edges);
        assert!(subs.iter().all(|s| s.primitive && s.root_count == 1 && levels_consistent(s)));
    }

    #[test]
    fn transpose_is_involution() {
        let (_, subs) = subnetworks(&triangle());
        for s in &subs {
            let tt = transpose(&transpose(s));
            assert_eq!((tt.edges.clone(), tt.normal.clone(), tt.levels.clone()), (s.edges.clone(), s.normal.clone(), s.levels.clone()));
        }
    }

    #[test]
    fn triangle_properties_hold() {
        let net = triangle();
        let (_, subs) = subnetworks(&net);
        let checker = PropertyChecker::new(&net, &subs);
        for s in &subs {
            assert!(checker.check(s).all_hold(), "{s:?}");
        }
    }

    #[test]
    fn two_cycle_is_not_acyclic() {
        let net = triangle();
        let (_, subs) = subnetworks(&net);
        let mut bad = subs[0].clone();
        bad.edges = vec![(0, 1), (1, 0), (2, 0)];
        let report = verify_subnetwork_properties(&bad, &net, &subs);
        assert!(!report.acyclic);
        assert!(!report.equal_path_lengths);
        assert_eq!(report.first_violation(), Some("acyclic"));
    }

    #[test]
    fn unequal_paths_detected() {
        // 0 -> 1 -> 2 and 0 -> 2
        assert!(!has_equal_path_lengths(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(has_equal_path_lengths(3, &[(0, 1), (0, 2)]));
    }

    #[test]
    fn half_cycle_violation_detected() {
        let net = triangle();
        let (_, subs) = subnetworks(&net);
        let mut bad = subs[0].clone();
        bad.edges = vec![(0, 1), (1, 2)];
        assert!(!verify_subnetwork_properties(&bad, &net, &subs).half_cycle);
    }

    #[test]
    fn cycle_enumeration() {
        // K4 has 7 simple cycles: 4 triangles and 3 squares
        let k4 = Network::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(network_cycles(&k4, 20).len(), 7);
        // fundamental cycles: |E| - |V| + 1
        assert_eq!(network_cycles(&k4, 0).len(), 3);
        assert!(network_cycles(&Network::unit(3, &[(0, 1), (1, 2)]).unwrap(), 20).is_empty());
    }

    #[test]
    fn primitivity_characterisations_agree() {
        let cases: [&[(usize, usize)]; 4] = [&[(1, 0), (2, 0)], &[(0, 1), (1, 2), (0, 2)], &[(1, 0), (1, 0)], &[(0, 1), (1, 0)]];
        for edges in cases {
            assert_eq!(is_primitive(3, edges), is_primitive_by_definition(3, edges), "{edges:?}");
        }
    }

    #[test]
    fn flow_reproduces_facet_subnetworks() {
        let net = triangle();
        let (pc, subs) = subnetworks(&net);
        for s in &subs {
            let from_flow = facet_subnetwork_from_flow(&net, &pc, &s.levels[1..]).unwrap().unwrap();
            assert_eq!(from_flow.edges, s.edges);
            assert_eq!(from_flow.normal, s.normal);
        }
        assert!(facet_subnetwork_from_flow(&net, &pc, &[q(0), q(0)]).unwrap().is_none());
        // flow 2 on an edge: not a supporting normal
        assert!(facet_subnetwork_from_flow(&net, &pc, &[q(2), q(0)]).unwrap().is_none());
    }

    #[test]
    fn triangle_facet_subsystem_matches_restriction() {
        let net = triangle();
        let (_, subs) = subnetworks(&net);
        let alg = build_algebraic_system(&net);
        let sys = build_unmixed_system(&alg, random_mixing(2, &mut ChaCha8Rng::seed_from_u64(4))).unwrap();
        let down = subs.iter().find(|s| s.edges == vec![(1, 0), (2, 0)]).unwrap();
        let fs = facet_subsystem(&sys, down).unwrap();
        assert_eq!((fs.dim(), fs.n_terms()), (2, 2));
        assert_eq!(fs.constants, sys.constants);
        let col10 = sys.edges.iter().position(|&e| e == (1, 0)).unwrap();
        assert_eq!(fs.coefficients[1][0], sys.coefficients[1][col10]);
        let x = [Complex64::new(0.5, 0.2), Complex64::new(-1.0, 0.3)];
        let f = fs.evaluate(&x).unwrap();
        let expect = sys.constants[0] - sys.coefficients[0][col10] * x[0] - fs.coefficients[0][1] * x[1];
        assert!((f[0] - expect).norm() < 1e-14);
    }

    #[test]
    fn dot_output() {
        let (_, subs) = subnetworks(&triangle());
        let dot = subs[0].to_dot();
        assert!(dot.starts_with("digraph facet_0 {"));
        assert_eq!(dot.matches("->").count(), 2);
    }
}
