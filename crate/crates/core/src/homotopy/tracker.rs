//! Predictor-corrector path tracking for sparse Laurent homotopies.

use num_complex::Complex64;
use serde::Serialize;

use crate::linalg::{max_norm, CMatrix};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// One monomial `phi(s) z^p` with `phi(s) = s^power exp(i phase (1 - s))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    /// Nonzero entries of the exponent vector as `(variable, exponent)`.
    pub exponent: Vec<(usize, i32)>,
    pub power: f64,
    pub phase: f64,
}

impl Term {
    pub fn new(dense_exponent: &[i64], power: f64, phase: f64) -> Self {
        let exponent = dense_exponent.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| (i, e as i32)).collect();
        Self { exponent, power, phase }
    }

    /// `(phi(s), phi'(s))`.
    fn weight(&self, s: f64) -> (Complex64, Complex64) {
        let rot = Complex64::from_polar(1.0, self.phase * (1.0 - s));
        if self.power == 0.0 {
            return (rot, rot * Complex64::new(0.0, -self.phase));
        }
        let sp = s.powf(self.power);
        let dsp = if s == 0.0 && self.power > 1.0 { 0.0 } else { self.power * s.powf(self.power - 1.0) };
        (sp * rot, rot * (dsp - Complex64::new(0.0, self.phase) * sp))
    }

    fn monomial(&self, z: &[Complex64]) -> Complex64 {
        self.exponent.iter().map(|&(i, e)| z[i].powi(e)).product()
    }
}

/// `H_k(z, s) = sum_j C[k][j] phi_j(s) z^{p_j}`, tracked from `s = 0` to `s = 1`.
#[derive(Clone, Debug)]
pub struct Homotopy {
    n: usize,
    pub terms: Vec<Term>,
    /// `coefficients[k][j]`.
    pub coefficients: Vec<Vec<Complex64>>,
}

/// Value, `dH/dz` and `dH/ds` at one point.
pub struct Evaluation {
    pub value: Vec<Complex64>,
    pub jacobian: CMatrix,
    pub ds: Vec<Complex64>,
}

impl Homotopy {
    pub fn new(n: usize, terms: Vec<Term>, coefficients: Vec<Vec<Complex64>>) -> Self {
        assert!(coefficients.len() == n && coefficients.iter().all(|row| row.len() == terms.len()));
        Self { n, terms, coefficients }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn value(&self, z: &[Complex64], s: f64) -> Vec<Complex64> {
        let mut h = vec![ZERO; self.n];
        for (j, t) in self.terms.iter().enumerate() {
            let v = t.weight(s).0 * t.monomial(z);
            for (k, hk) in h.iter_mut().enumerate() {
                *hk += self.coefficients[k][j] * v;
            }
        }
        h
    }

    pub fn evaluate(&self, z: &[Complex64], s: f64) -> Evaluation {
        let n = self.n;
        let mut value = vec![ZERO; n];
        let mut ds = vec![ZERO; n];
        let mut jacobian = CMatrix::zeros(n);
        for (j, t) in self.terms.iter().enumerate() {
            let (w, dw) = t.weight(s);
            let m = t.monomial(z);
            let v = w * m;
            let dv = dw * m;
            for k in 0..n {
                let c = self.coefficients[k][j];
                value[k] += c * v;
                ds[k] += c * dv;
                for &(i, e) in &t.exponent {
                    jacobian[(k, i)] += c * v * (e as f64) / z[i];
                }
            }
        }
        Evaluation { value, jacobian, ds }
    }

    /// `dz/ds = -H_z^{-1} H_s`, with `|det H_z|`.
    fn tangent(&self, z: &[Complex64], s: f64) -> Option<(Vec<Complex64>, f64)> {
        let ev = self.evaluate(z, s);
        let lu = ev.jacobian.lu()?;
        let dz = lu.solve(&ev.ds).into_iter().map(|v| -v).collect();
        Some((dz, lu.det().norm()))
    }
}

/// Tracker configuration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TrackOptions {
    /// Relative Newton correction accepted by the corrector.
    pub tol: f64,
    /// Residual required at `s = 1`.
    pub endpoint_tol: f64,
    pub initial_step: f64,
    pub min_step: f64,
    pub max_step: f64,
    pub growth: f64,
    pub shrink: f64,
    pub easy_steps: usize,
    pub blowup: f64,
    pub max_steps: usize,
    pub max_newton: usize,
}

impl Default for TrackOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            endpoint_tol: 1e-8,
            initial_step: 1e-2,
            min_step: 1e-7,
            max_step: 0.1,
            growth: 2.0,
            shrink: 0.5,
            easy_steps: 4,
            blowup: 1e8,
            max_steps: 100_000,
            max_newton: 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathStatus {
    Converged,
    Diverged,
    Singular,
    StepLimit,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PathResult {
    pub start: Vec<Complex64>,
    pub end: Vec<Complex64>,
    pub status: PathStatus,
    pub steps: usize,
    pub residual: f64,
    pub min_det: f64,
}

fn axpy(z: &[Complex64], a: f64, d: &[Complex64]) -> Vec<Complex64> {
    z.iter().zip(d).map(|(z, d)| z + d * a).collect()
}

fn rk4(h: &Homotopy, z: &[Complex64], s: f64, ds: f64, min_det: &mut f64) -> Option<Vec<Complex64>> {
    let mut stage = |z: &[Complex64], s: f64| {
        h.tangent(z, s).map(|(d, det)| {
            *min_det = min_det.min(det);
            d
        })
    };
    let k1 = stage(z, s)?;
    let k2 = stage(&axpy(z, ds / 2.0, &k1), s + ds / 2.0)?;
    let k3 = stage(&axpy(z, ds / 2.0, &k2), s + ds / 2.0)?;
    let k4 = stage(&axpy(z, ds, &k3), s + ds)?;
    Some(
        (0..z.len())
            .map(|i| z[i] + (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (ds / 6.0))
            .collect(),
    )
}

/// Newton iterations at fixed `s`; returns the corrected point and the last relative correction.
fn newton(h: &Homotopy, z: &[Complex64], s: f64, iterations: usize, tol: f64, min_det: &mut f64) -> Option<(Vec<Complex64>, f64)> {
    let mut z = z.to_vec();
    let mut last = f64::INFINITY;
    for it in 0..iterations {
        let ev = h.evaluate(&z, s);
        let lu = ev.jacobian.lu()?;
        *min_det = min_det.min(lu.det().norm());
        let dz = lu.solve(&ev.value);
        let rel = max_norm(&dz) / (1.0 + max_norm(&z));
        if !rel.is_finite() || (it > 0 && rel > 0.5 * last && rel > tol) {
            return None;
        }
        z.iter_mut().zip(&dz).for_each(|(z, d)| *z -= d);
        last = rel;
        if rel <= tol {
            break;
        }
    }
    Some((z, last))
}

fn out_of_torus(z: &[Complex64], blowup: f64) -> bool {
    z.iter().any(|v| !v.is_finite() || v.norm() > blowup || v.norm() < 1.0 / blowup)
}

/// Tracks `z0` (a solution at `s = 0`) to `s = 1`.
pub fn track_path(h: &Homotopy, z0: &[Complex64], opts: &TrackOptions) -> PathResult {
    let mut z = z0.to_vec();
    let mut s = 0.0;
    let mut step = opts.initial_step;
    let mut easy = 0;
    let mut steps = 0;
    let mut min_det = f64::INFINITY;
    let finish = |z: Vec<Complex64>, status, steps, min_det| PathResult {
        start: z0.to_vec(),
        residual: max_norm(&h.value(&z, 1.0)),
        end: z,
        status,
        steps,
        min_det,
    };
    while s < 1.0 {
        if steps >= opts.max_steps {
            return finish(z, PathStatus::StepLimit, steps, min_det);
        }
        steps += 1;
        let ds = step.min(1.0 - s);
        let s_next = if ds == 1.0 - s { 1.0 } else { s + ds };
        let corrected = rk4(h, &z, s, ds, &mut min_det).and_then(|zp| {
            let (zc, rel) = newton(h, &zp, s_next, opts.max_newton, opts.tol, &mut min_det)?;
            let first = max_norm(&zp.iter().zip(&zc).map(|(a, b)| a - b).collect::<Vec<_>>()) / (1.0 + max_norm(&zc));
            (rel <= opts.tol && first <= 0.1).then_some(zc)
        });
        match corrected {
            Some(zc) => {
                z = zc;
                s = s_next;
                if out_of_torus(&z, opts.blowup) {
                    return finish(z, PathStatus::Diverged, steps, min_det);
                }
                easy += 1;
                if easy >= opts.easy_steps {
                    step = (step * opts.growth).min(opts.max_step);
                    easy = 0;
                }
            }
            None => {
                easy = 0;
                step *= opts.shrink;
                if step < opts.min_step {
                    let status = if out_of_torus(&z, opts.blowup.sqrt()) { PathStatus::Diverged } else { PathStatus::Singular };
                    return finish(z, status, steps, min_det);
                }
            }
        }
    }
    if let Some((zc, _)) = newton(h, &z, 1.0, 2, 0.0, &mut min_det) {
        if max_norm(&h.value(&zc, 1.0)) <= max_norm(&h.value(&z, 1.0)) {
            z = zc;
        }
    }
    let result = finish(z, PathStatus::Converged, steps, min_det);
    if result.residual <= opts.endpoint_tol {
        result
    } else {
        PathResult { status: PathStatus::Singular, ..result }
    }
}
