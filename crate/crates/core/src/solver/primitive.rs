//! Primitive facet subsystems: one linear solve, then forward substitution
//! along the spanning tree.

use std::collections::VecDeque;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::facets::{is_primitive, FacetSystem};
use crate::linalg::CMatrix;

/// Values `m_e = x_i / x_j` of the `n` edge monomials, from `A m = c`.
pub fn reduce_to_edge_monomials(fs: &FacetSystem) -> Result<Vec<Complex64>> {
    let n = fs.dim();
    if fs.n_terms() != n || !is_primitive(n + 1, &fs.edges) {
        return Err(Error::Precondition("facet system is not primitive".into()));
    }
    let a = CMatrix::from_rows(&fs.coefficients);
    let lu = a.lu().ok_or_else(|| Error::Genericity("singular facet coefficient matrix".into()))?;
    if lu.pivot_ratio() > 1e13 {
        return Err(Error::Genericity("ill-conditioned facet coefficient matrix".into()));
    }
    let m = lu.solve(&fs.constants);
    let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if m.iter().any(|z| z.norm() <= 1e-14 * scale.max(1.0)) {
        return Err(Error::Genericity("vanishing edge monomial".into()));
    }
    Ok(m)
}

/// The unique torus solution `x_1..x_n` of a primitive facet subsystem.
pub fn solve_primitive(fs: &FacetSystem) -> Result<Vec<Complex64>> {
    let m = reduce_to_edge_monomials(fs)?;
    Ok(propagate(fs.dim() + 1, &fs.edges, &m, &bfs_order(fs.dim() + 1, &fs.edges, 0)))
}

fn bfs_order(n_nodes: usize, edges: &[(usize, usize)], root: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n_nodes];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n_nodes];
    let mut order = vec![root];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    order
}

/// Fixes `x_0 = 1` and walks the tree in `order` (which must start at 0).
fn propagate(n_nodes: usize, edges: &[(usize, usize)], m: &[Complex64], order: &[usize]) -> Vec<Complex64> {
    let mut x: Vec<Option<Complex64>> = vec![None; n_nodes];
    x[0] = Some(Complex64::new(1.0, 0.0));
    for &v in &order[1..] {
        for (e, &(i, j)) in edges.iter().enumerate() {
            match (i == v, j == v) {
                (true, _) if x[j].is_some() => x[v] = Some(m[e] * x[j].unwrap()),
                (_, true) if x[i].is_some() => x[v] = Some(x[i].unwrap() / m[e]),
                _ => continue,
            }
            break;
        }
    }
    x[1..].iter().map(|v| v.expect("spanning tree")).collect()
}
