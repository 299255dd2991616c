//! Deduplication, real-solution filtering and stability of equilibria.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{residual_sine, Network};

pub const DEDUP_TOL: f64 = 1e-6;
pub const REAL_TOL: f64 = 1e-6;
pub const SINE_TOL: f64 = 1e-6;
pub const STABILITY_EPS: f64 = 1e-8;

fn distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Indices of cluster representatives (the lowest index of each cluster), in order.
pub fn deduplicate_indices(points: &[Vec<Complex64>], tol: f64) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    for (idx, p) in points.iter().enumerate() {
        if !kept.iter().any(|&k| distance(&points[k], p) <= tol) {
            kept.push(idx);
        }
    }
    kept
}

pub fn deduplicate(points: &[Vec<Complex64>], tol: f64) -> Vec<Vec<Complex64>> {
    deduplicate_indices(points, tol).into_iter().map(|i| points[i].clone()).collect()
}

/// Phase angles `arg x_i` if every `|x_i|` is within `tol` of 1.
pub fn classify_real(x: &[Complex64], tol: f64) -> Option<Vec<f64>> {
    x.iter().all(|z| (z.norm() - 1.0).abs() <= tol).then(|| x.iter().map(|z| z.arg()).collect())
}

/// [`classify_real`] followed by the sine-system residual check.
pub fn real_configuration(net: &Network, x: &[Complex64], tol: f64) -> Option<Vec<f64>> {
    classify_real(x, tol).filter(|theta| residual_sine(net, theta) <= SINE_TOL)
}

/// The coordinatewise map `x -> 1 / conj(x)`, which fixes the unit torus.
pub fn torus_reflection(x: &[Complex64]) -> Vec<Complex64> {
    x.iter().map(|z| 1.0 / z.conj()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    Stable,
    Unstable,
    Marginal,
}

/// Jacobian of `theta_i' = omega_i - sum_j k_ij sin(theta_i - theta_j)` in `theta_1..theta_n`.
pub fn phase_jacobian(net: &Network, theta: &[f64]) -> Result<DMatrix<f64>> {
    if !net.is_real() {
        return Err(Error::Precondition("stability needs real network data".into()));
    }
    let n = net.dim();
    if theta.len() != n {
        return Err(Error::Dimension { expected: n, got: theta.len() });
    }
    let angle = |i: usize| if i == 0 { 0.0 } else { theta[i - 1] };
    let mut jac = DMatrix::zeros(n, n);
    for e in net.edges() {
        let w = e.k.re * (angle(e.i) - angle(e.j)).cos();
        for (a, b) in [(e.i, e.j), (e.j, e.i)] {
            if a > 0 {
                jac[(a - 1, a - 1)] -= w;
                if b > 0 {
                    jac[(a - 1, b - 1)] += w;
                }
            }
        }
    }
    Ok(jac)
}

pub fn classify_stability(net: &Network, theta: &[f64]) -> Result<Stability> {
    classify_stability_with(net, theta, STABILITY_EPS)
}

pub fn classify_stability_with(net: &Network, theta: &[f64], eps: f64) -> Result<Stability> {
    let jac = phase_jacobian(net, theta)?;
    let residual = residual_sine(net, theta);
    if residual > SINE_TOL {
        return Err(Error::Precondition(format!("not an equilibrium (sine residual {residual:.3e})")));
    }
    let eig = SymmetricEigen::new(jac).eigenvalues;
    Ok(if eig.iter().all(|&l| l < -eps) {
        Stability::Stable
    } else if eig.iter().any(|&l| l > eps) {
        Stability::Unstable
    } else {
        Stability::Marginal
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn two_node() -> Network {
        Network::from_real(2, &[(0, 1, 1.0)], &[-0.5, 0.5]).unwrap()
    }

    #[test]
    fn dedup_basic() {
        let p = vec![Complex64::new(1.0, 2.0)];
        assert_eq!(deduplicate(&[p.clone(), p.clone()], DEDUP_TOL).len(), 1);
        assert!(deduplicate(&[], DEDUP_TOL).is_empty());
        let q = vec![Complex64::new(1.0 + 1e-3, 2.0)];
        assert_eq!(deduplicate_indices(&[q.clone(), p.clone(), q], DEDUP_TOL), vec![0, 1]);
    }

    #[test]
    fn real_classification() {
        let theta = classify_real(&[Complex64::from_polar(1.0, PI / 3.0)], REAL_TOL).unwrap();
        assert!((theta[0] - PI / 3.0).abs() < 1e-15);
        assert!(classify_real(&[Complex64::new(1.1, 0.0)], REAL_TOL).is_none());
    }

    #[test]
    fn phase_round_trip() {
        for k in 0..50 {
            let t = -3.1 + 0.124 * k as f64;
            let back = classify_real(&[Complex64::from_polar(1.0, t)], REAL_TOL).unwrap()[0];
            assert!((back - t).abs() < 1e-12);
        }
    }

    #[test]
    fn two_node_stability() {
        let net = two_node();
        assert_eq!(classify_stability(&net, &[PI / 6.0]).unwrap(), Stability::Stable);
        assert_eq!(classify_stability(&net, &[5.0 * PI / 6.0]).unwrap(), Stability::Unstable);
        assert!(classify_stability(&net, &[0.0]).is_err());
    }

    #[test]
    fn synchronized_state_is_stable() {
        let net = Network::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(classify_stability(&net, &[0.0; 3]).unwrap(), Stability::Stable);
        // symmetric weighted Laplacian with the node-0 row removed
        let jac = phase_jacobian(&net, &[0.0; 3]).unwrap();
        assert_eq!(jac, jac.transpose());
        assert_eq!(jac[(1, 1)], -3.0);
        assert_eq!(jac[(0, 1)], 1.0);
    }

    #[test]
    fn reflection_fixes_torus() {
        let x = vec![Complex64::from_polar(1.0, 0.7), Complex64::from_polar(2.0, -0.2)];
        let r = torus_reflection(&x);
        assert!((r[0] - x[0]).norm() < 1e-15);
        assert!((r[1].norm() - 0.5).abs() < 1e-15);
        assert!(distance(&torus_reflection(&r), &x) < 1e-15);
    }
}
