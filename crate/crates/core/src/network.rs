//! Kuramoto networks and their algebraic synchronization systems.
//!
//! Node `0` is the reference node: `theta_0 = 0`, `x_0 = 1`, and its balance
//! equation is the one dropped from the algebraic system. Variables are
//! indexed `x_1..x_n`, stored at positions `0..n`.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{max_norm, CMatrix};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// An undirected coupling `{i, j}` with `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub k: Complex64,
}

/// An undirected weighted oscillator graph with natural frequencies.
#[derive(Clone, Debug, PartialEq)]
pub struct Network {
    n_nodes: usize,
    edges: Vec<Edge>,
    omega: Vec<Complex64>,
    pub name: Option<String>,
}

/// A real number or a `[re, im]` pair.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Scalar {
    Real(f64),
    Complex([f64; 2]),
}

impl From<Scalar> for Complex64 {
    fn from(s: Scalar) -> Self {
        match s {
            Scalar::Real(r) => Complex64::new(r, 0.0),
            Scalar::Complex([re, im]) => Complex64::new(re, im),
        }
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        if z.im == 0.0 {
            Scalar::Real(z.re)
        } else {
            Scalar::Complex([z.re, z.im])
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    i: usize,
    j: usize,
    k: Scalar,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    nodes: usize,
    edges: Vec<EdgeDoc>,
    omega: Vec<Scalar>,
}

impl Network {
    /// Validates and builds a network. Edges are stored sorted by `(min, max)`.
    pub fn new(n_nodes: usize, edges: &[(usize, usize, Complex64)], omega: Vec<Complex64>) -> Result<Self> {
        if n_nodes < 2 {
            return Err(Error::Parse(format!("need at least 2 nodes, got {n_nodes}")));
        }
        if omega.len() != n_nodes {
            return Err(Error::Dimension { expected: n_nodes, got: omega.len() });
        }
        let mut seen = BTreeSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for &(a, b, k) in edges {
            for node in [a, b] {
                if node >= n_nodes {
                    return Err(Error::NodeOutOfRange { node, nodes: n_nodes });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (i, j) = (a.min(b), a.max(b));
            if !seen.insert((i, j)) {
                return Err(Error::DuplicateEdge(i, j));
            }
            stored.push(Edge { i, j, k });
        }
        stored.sort_by_key(|e| (e.i, e.j));
        let net = Self { n_nodes, edges: stored, omega, name: None };
        if !net.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(net)
    }

    /// Convenience constructor for real data.
    pub fn from_real(n_nodes: usize, edges: &[(usize, usize, f64)], omega: &[f64]) -> Result<Self> {
        let edges: Vec<_> = edges.iter().map(|&(i, j, k)| (i, j, Complex64::new(k, 0.0))).collect();
        Self::new(n_nodes, &edges, omega.iter().map(|&w| Complex64::new(w, 0.0)).collect())
    }

    /// Unit couplings and zero frequencies on the given edge list.
    pub fn unit(n_nodes: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<_> = edges.iter().map(|&(i, j)| (i, j, 1.0)).collect();
        Self::from_real(n_nodes, &edges, &vec![0.0; n_nodes])
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    /// Number of non-reference nodes, i.e. the dimension of the systems.
    pub fn dim(&self) -> usize {
        self.n_nodes - 1
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn omega(&self) -> &[Complex64] {
        &self.omega
    }

    /// Coupling of `{i, j}`, if the edge exists.
    pub fn coupling(&self, i: usize, j: usize) -> Option<Complex64> {
        let (a, b) = (i.min(j), i.max(j));
        self.edges.iter().find(|e| e.i == a && e.j == b).map(|e| e.k)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.i == i {
                Some((e.j, e.k))
            } else if e.j == i {
                Some((e.i, e.k))
            } else {
                None
            }
        })
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }

    /// Directed edges in canonical order: `(i, j)` then `(j, i)` for each stored edge.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().flat_map(|e| [(e.i, e.j), (e.j, e.i)]).collect()
    }

    pub fn is_real(&self) -> bool {
        self.edges.iter().all(|e| e.k.im == 0.0) && self.omega.iter().all(|w| w.im == 0.0)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n_nodes];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (w, _) in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Replaces every `k_ij` by `2i * u_ij` and every `omega_i` (i >= 1) by
    /// `v_i`, with `u`, `v` uniform on the unit circle, so that the
    /// algebraic coefficients `a'_ij = k_ij / 2i` have unit modulus.
    /// `omega_0` is set to `-sum(omega_i)` which keeps the dropped balance
    /// equation consistent.
    pub fn generic<R: Rng>(&self, rng: &mut R) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { i: e.i, j: e.j, k: 2.0 * I * unit_circle(rng) })
            .collect();
        let mut omega = vec![Complex64::new(0.0, 0.0); self.n_nodes];
        for w in omega.iter_mut().skip(1) {
            *w = unit_circle(rng);
        }
        omega[0] = -omega.iter().skip(1).sum::<Complex64>();
        Self { n_nodes: self.n_nodes, edges, omega, name: self.name.clone() }
    }

    /// Renumbers nodes by `perm` (`perm[old] = new`); `perm[0]` must be 0.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n_nodes || perm[0] != 0 {
            return Err(Error::Precondition("relabeling must fix the reference node".into()));
        }
        let edges: Vec<_> = self.edges.iter().map(|e| (perm[e.i], perm[e.j], e.k)).collect();
        let mut omega = vec![Complex64::new(0.0, 0.0); self.n_nodes];
        for (old, &new) in perm.iter().enumerate() {
            omega[new] = self.omega[old];
        }
        let mut net = Self::new(self.n_nodes, &edges, omega)?;
        net.name = self.name.clone();
        Ok(net)
    }

    pub fn to_json(&self) -> String {
        let doc = NetworkDoc {
            name: self.name.clone(),
            nodes: self.n_nodes,
            edges: self.edges.iter().map(|e| EdgeDoc { i: e.i, j: e.j, k: e.k.into() }).collect(),
            omega: self.omega.iter().map(|&w| w.into()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("network serialises")
    }
}

fn unit_circle<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
}

/// Parses the JSON network document.
pub fn parse_network(text: &str) -> Result<Network> {
    let doc: NetworkDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let edges: Vec<_> = doc.edges.iter().map(|e| (e.i, e.j, Complex64::from(e.k))).collect();
    let mut net = Network::new(doc.nodes, &edges, doc.omega.into_iter().map(Complex64::from).collect())?;
    net.name = doc.name;
    Ok(net)
}

/// Anything that evaluates as a square Laurent system in `x_1..x_n`.
pub trait LaurentSystem {
    fn dim(&self) -> usize;

    /// Evaluates every equation at `x`, which must have no zero coordinate.
    fn evaluate(&self, x: &[Complex64]) -> Result<Vec<Complex64>>;
}

/// Max-norm of the system at `x`.
pub fn residual_algebraic<S: LaurentSystem + ?Sized>(sys: &S, x: &[Complex64]) -> Result<f64> {
    Ok(max_norm(&sys.evaluate(x)?))
}

pub(crate) fn check_point(x: &[Complex64], n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::Dimension { expected: n, got: x.len() });
    }
    match x.iter().position(|z| *z == Complex64::new(0.0, 0.0)) {
        Some(p) => Err(Error::ZeroCoordinate(p + 1)),
        None => Ok(()),
    }
}

/// Value of node `i`'s variable with `x_0 = 1`.
#[inline]
pub(crate) fn node_value(x: &[Complex64], i: usize) -> Complex64 {
    if i == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        x[i - 1]
    }
}

/// Exponent vector `e_i - e_j` in `Z^n` (with `e_0 = 0`).
pub fn edge_exponent(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    if i > 0 {
        v[i - 1] += 1;
    }
    if j > 0 {
        v[j - 1] -= 1;
    }
    v
}

/// The directed term `a'_ij x_i / x_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectedTerm {
    pub from: usize,
    pub to: usize,
    pub coefficient: Complex64,
}

/// `omega_i - sum_{j ~ i} a'_ij (x_i/x_j - x_j/x_i) = 0` for `i = 1..n`.
#[derive(Clone, Debug)]
pub struct AlgebraicSystem {
    n: usize,
    /// Index-aligned with [`Network::directed_edges`].
    pub directed_terms: Vec<DirectedTerm>,
    pub constants: Vec<Complex64>,
}

impl AlgebraicSystem {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Terms of equation `i` (1-based node id) as `(sign, term)`: the term
    /// `x_a/x_b` enters equation `a` with `+a'` and equation `b` with `-a'`.
    pub fn equation_terms(&self, i: usize) -> Vec<(f64, &DirectedTerm)> {
        self.directed_terms
            .iter()
            .filter_map(|t| {
                if t.from == i {
                    Some((1.0, t))
                } else if t.to == i {
                    Some((-1.0, t))
                } else {
                    None
                }
            })
            .collect()
    }
}

impl LaurentSystem for AlgebraicSystem {
    fn dim(&self) -> usize {
        self.n
    }

    fn evaluate(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        check_point(x, self.n)?;
        let mut f = self.constants.clone();
        for t in &self.directed_terms {
            let v = t.coefficient * node_value(x, t.from) / node_value(x, t.to);
            if t.from > 0 {
                f[t.from - 1] -= v;
            }
            if t.to > 0 {
                f[t.to - 1] += v;
            }
        }
        Ok(f)
    }
}

pub fn build_algebraic_system(net: &Network) -> AlgebraicSystem {
    let directed_terms = net
        .edges()
        .iter()
        .flat_map(|e| {
            let a = e.k / (2.0 * I);
            [
                DirectedTerm { from: e.i, to: e.j, coefficient: a },
                DirectedTerm { from: e.j, to: e.i, coefficient: a },
            ]
        })
        .collect();
    AlgebraicSystem { n: net.dim(), directed_terms, constants: net.omega()[1..].to_vec() }
}

/// `M f = 0`: every directed-edge monomial appears in every equation.
///
/// Equation `k` reads `c_k - sum_d a[k][d] x^{e_d} = 0`.
#[derive(Clone, Debug)]
pub struct UnmixedSystem {
    n: usize,
    pub mixing: CMatrix,
    pub constants: Vec<Complex64>,
    /// `coefficients[k][d]`, `d` indexing [`UnmixedSystem::edges`].
    pub coefficients: Vec<Vec<Complex64>>,
    pub edges: Vec<(usize, usize)>,
    pub support: Vec<Vec<i64>>,
}

/// Largest `||M||_inf * ||M^-1||_inf` accepted for a mixing matrix.
pub const MAX_MIXING_CONDITION: f64 = 1e10;

/// Draws an `n x n` matrix with i.i.d. unit-circle entries.
pub fn random_mixing<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    let rows: Vec<Vec<Complex64>> = (0..n).map(|_| (0..n).map(|_| unit_circle(rng)).collect()).collect();
    CMatrix::from_rows(&rows)
}

pub fn build_unmixed_system(alg: &AlgebraicSystem, mixing: CMatrix) -> Result<UnmixedSystem> {
    let n = alg.dim();
    if mixing.dim() != n {
        return Err(Error::Dimension { expected: n, got: mixing.dim() });
    }
    let lu = mixing.lu().ok_or(Error::SingularMixing)?;
    let cond = mixing.norm_inf() * lu.inverse().norm_inf();
    if !(cond.is_finite() && cond < MAX_MIXING_CONDITION) {
        return Err(Error::SingularMixing);
    }
    let m = |k: usize, i: usize| if i == 0 { Complex64::new(0.0, 0.0) } else { mixing[(k, i - 1)] };
    let constants = mixing.mul_vec(&alg.constants);
    let coefficients = (0..n)
        .map(|k| alg.directed_terms.iter().map(|t| t.coefficient * (m(k, t.from) - m(k, t.to))).collect())
        .collect();
    let edges: Vec<_> = alg.directed_terms.iter().map(|t| (t.from, t.to)).collect();
    let support = edges.iter().map(|&(i, j)| edge_exponent(n, i, j)).collect();
    Ok(UnmixedSystem { n, mixing, constants, coefficients, edges, support })
}

impl UnmixedSystem {
    pub fn dim(&self) -> usize {
        self.n
    }
}

impl LaurentSystem for UnmixedSystem {
    fn dim(&self) -> usize {
        self.n
    }

    fn evaluate(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        check_point(x, self.n)?;
        let monomials: Vec<Complex64> =
            self.edges.iter().map(|&(i, j)| node_value(x, i) / node_value(x, j)).collect();
        Ok((0..self.n)
            .map(|k| {
                self.constants[k]
                    - self.coefficients[k].iter().zip(&monomials).map(|(a, m)| a * m).sum::<Complex64>()
            })
            .collect())
    }
}

/// `max_{i=0..n} |omega_i - sum_j k_ij sin(theta_i - theta_j)|` with `theta_0 = 0`.
///
/// `theta` holds `theta_1..theta_n`. Complex data is handled via the modulus.
pub fn residual_sine(net: &Network, theta: &[f64]) -> f64 {
    let angle = |i: usize| if i == 0 { 0.0 } else { theta[i - 1] };
    (0..net.n_nodes())
        .map(|i| {
            let s: Complex64 = net.neighbors(i).map(|(j, k)| k * (angle(i) - angle(j)).sin()).sum();
            (net.omega()[i] - s).norm()
        })
        .fold(0.0, f64::max)
}
