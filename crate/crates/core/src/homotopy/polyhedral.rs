//! Start solutions of facet subsystems.
//!
//! Primitive facets are solved in closed form. Other facets go through a
//! polyhedral homotopy on the pyramid `conv(F ∪ {0})`: a random integer
//! lifting (0 on the origin) induces a regular triangulation whose cells all
//! contain the origin; each cell's binomial system is solved exactly and
//! tracked to the facet subsystem along a common real parameter.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::facets::{FacetSubnetwork, FacetSystem};
use crate::linalg::{max_norm, CMatrix};
use crate::network::residual_algebraic;
use crate::polytope::lattice::dot;
use crate::polytope::regular_subdivision;
use crate::postprocess::deduplicate_indices;
use crate::solver::{solve_binomial, solve_primitive, BinomialSystem};

use super::tracker::{track_path, Homotopy, PathStatus, Term, TrackOptions};

/// Accuracy required of every start solution.
pub const START_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntraFacetOptions {
    /// Liftings are drawn from `[0, lifting_range)`.
    pub lifting_range: i64,
    /// Fresh liftings tried after the first one fails.
    pub retries: usize,
    pub track: TrackOptions,
}

impl Default for IntraFacetOptions {
    fn default() -> Self {
        Self { lifting_range: 1 << 12, retries: 3, track: TrackOptions::default() }
    }
}

/// Exactly `sub.root_count` solutions of `fsys`.
pub fn start_solutions_for_facet<R: Rng>(
    fsys: &FacetSystem,
    sub: &FacetSubnetwork,
    rng: &mut R,
    opts: &IntraFacetOptions,
) -> Result<Vec<Vec<Complex64>>> {
    if sub.primitive {
        return Ok(vec![solve_primitive(fsys)?]);
    }
    let mut last = Error::Genericity("no lifting attempted".into());
    for _ in 0..=opts.retries {
        match lifted_start_solutions(fsys, sub.root_count, rng, opts) {
            Ok(sols) => return Ok(sols),
            Err(e @ Error::Genericity(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn newton_polish(fsys: &FacetSystem, h: &Homotopy, y: &mut Vec<Complex64>) {
    for _ in 0..3 {
        let ev = h.evaluate(y, 1.0);
        let Some(lu) = ev.jacobian.lu() else { return };
        let dy = lu.solve(&ev.value);
        let next: Vec<Complex64> = y.iter().zip(&dy).map(|(a, b)| a - b).collect();
        match (residual_algebraic(fsys, &next), residual_algebraic(fsys, y)) {
            (Ok(new), Ok(old)) if new < old => *y = next,
            _ => return,
        }
    }
}

fn lifted_start_solutions<R: Rng>(fsys: &FacetSystem, root_count: u64, rng: &mut R, opts: &IntraFacetOptions) -> Result<Vec<Vec<Complex64>>> {
    let n = fsys.dim();
    let m = fsys.n_terms();
    let mut points = vec![vec![0i64; n]];
    points.extend(fsys.support.iter().cloned());
    let mut lifting = vec![0i64];
    lifting.extend((0..m).map(|_| rng.random_range(0..opts.lifting_range)));
    let phases: Vec<f64> = (0..m).map(|_| rng.random_range(0.0..TAU)).collect();

    let cells = match regular_subdivision(&points, &lifting) {
        Err(Error::NotFullDimensional) => return Err(Error::Genericity("flat lifting".into())),
        other => other?,
    };
    if cells.iter().any(|c| c.points.len() != n + 1 || c.points[0] != 0 || c.height != 0) {
        return Err(Error::Genericity("lifting does not induce a triangulation".into()));
    }
    let total: u64 = cells.iter().map(|c| c.volume).sum();
    if total != root_count {
        return Err(Error::Precondition(format!("cell volumes sum to {total}, expected {root_count}")));
    }

    // lifted heights E_j of every facet term over every cell
    let mut heights = Vec::with_capacity(cells.len());
    let mut stretch = 1.0f64;
    for cell in &cells {
        let e: Vec<i64> = (0..m)
            .map(|j| Ok(dot(&points[j + 1], &cell.normal)? + cell.scale * lifting[j + 1] - cell.height))
            .collect::<Result<_>>()?;
        let min_pos = e.iter().copied().filter(|&v| v > 0).min().unwrap_or(cell.scale);
        stretch = stretch.max(cell.scale as f64 / min_pos as f64);
        heights.push(e);
    }

    let mut found = Vec::with_capacity(root_count as usize);
    for (cell, e) in cells.iter().zip(&heights) {
        let mut terms = vec![Term::new(&vec![0; n], 0.0, 0.0)];
        terms.extend((0..m).map(|j| Term::new(&fsys.support[j], e[j] as f64 * stretch / cell.scale as f64, phases[j])));
        let coefficients: Vec<Vec<Complex64>> = (0..n)
            .map(|k| std::iter::once(fsys.constants[k]).chain(fsys.coefficients[k].iter().map(|a| -a)).collect())
            .collect();
        let h = Homotopy::new(n, terms, coefficients);

        // cell system at s = 0: c + sum_j (-a_kj e^{i phase_j}) y^{p_j} = 0
        let cols: Vec<usize> = cell.points[1..].iter().map(|&p| p - 1).collect();
        let a = CMatrix::from_rows(
            &(0..n)
                .map(|k| cols.iter().map(|&j| -fsys.coefficients[k][j] * Complex64::from_polar(1.0, phases[j])).collect())
                .collect::<Vec<_>>(),
        );
        let lu = a.lu().ok_or_else(|| Error::Genericity("singular cell system".into()))?;
        let rhs: Vec<Complex64> = lu.solve(&fsys.constants).into_iter().map(|v| -v).collect();
        if rhs.iter().any(|v| v.norm() == 0.0 || !v.is_finite()) {
            return Err(Error::Genericity("degenerate cell system".into()));
        }
        let bs = BinomialSystem::new(cols.iter().map(|&j| fsys.support[j].clone()).collect(), rhs)?;
        for start in solve_binomial(&bs)? {
            let r = track_path(&h, &start, &opts.track);
            if r.status != PathStatus::Converged {
                return Err(Error::Genericity(format!("intra-facet path {:?}", r.status)));
            }
            let mut y = r.end;
            newton_polish(fsys, &h, &mut y);
            if residual_algebraic(fsys, &y)? > START_TOL * (1.0 + max_norm(&y)) {
                return Err(Error::Genericity("inaccurate intra-facet endpoint".into()));
            }
            found.push(y);
        }
    }
    let scale = found.iter().map(|y| max_norm(y)).fold(1.0, f64::max);
    if deduplicate_indices(&found, 1e-6 * scale).len() != found.len() {
        return Err(Error::Genericity("intra-facet paths collided".into()));
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facets::{facet_subnetworks, facet_subsystem};
    use crate::network::{build_algebraic_system, build_unmixed_system, random_mixing, Network};
    use crate::polytope::{adjacency_polytope, enumerate_facets};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn chordal_facets_have_full_start_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let net = Network::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap().generic(&mut rng);
        let sys = build_unmixed_system(&build_algebraic_system(&net), random_mixing(3, &mut rng)).unwrap();
        let pc = adjacency_polytope(&net);
        let subs = facet_subnetworks(&enumerate_facets(&pc).unwrap(), &pc).unwrap();
        let opts = IntraFacetOptions::default();
        let mut total = 0;
        for sub in &subs {
            let fs = facet_subsystem(&sys, sub).unwrap();
            let sols = start_solutions_for_facet(&fs, sub, &mut rng, &opts).unwrap();
            assert_eq!(sols.len() as u64, sub.root_count);
            for y in &sols {
                assert!(residual_algebraic(&fs, y).unwrap() < 1e-10);
            }
            total += sols.len();
        }
        assert_eq!(total, 16);
    }
}
