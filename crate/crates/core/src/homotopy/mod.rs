//! Degeneration homotopies from facet subsystems to the unmixed system.
//!
//! For a facet with inner normal `g` and height `h < 0`, substituting
//! `x_i = y_i u^{g_i}` and `t = u^{-h}` into `c_k / t - sum a_kd x^{e_d}` and
//! clearing `u^h` gives `c_k - sum a_kd u^{<e_d, g> - h} y^{e_d}`: the facet
//! subsystem at `u = 0` and the unmixed system at `u = 1`.
//!
//! `u` runs along `u(s) = s exp(i theta (1 - s))` for `s` in `[0, 1]`. The
//! angle is shared by every facet of one solve.

pub mod pipeline;
pub mod polyhedral;
pub mod tracker;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::network::UnmixedSystem;
use crate::polytope::lattice::dot;
use crate::polytope::Facet;

pub use pipeline::{solve_network, PathCounts, Solution, SolutionSet, SolveOptions};
pub use polyhedral::{start_solutions_for_facet, IntraFacetOptions};
pub use tracker::{track_path, Homotopy, PathResult, PathStatus, Term, TrackOptions};

#[derive(Clone, Debug)]
pub struct FacetHomotopy {
    pub normal: Vec<i64>,
    pub height: i64,
    /// `t = u^r`.
    pub r: i64,
    /// Per directed edge of the target system, aligned with `UnmixedSystem::edges`.
    pub u_exponents: Vec<i64>,
    pub theta: f64,
    pub homotopy: Homotopy,
}

/// Facet homotopy along the real segment `u` in `[0, 1]`.
pub fn build_facet_homotopy(sys: &UnmixedSystem, f: &Facet) -> Result<FacetHomotopy> {
    build_facet_homotopy_with_angle(sys, f, 0.0)
}

pub fn build_facet_homotopy_with_angle(sys: &UnmixedSystem, f: &Facet, theta: f64) -> Result<FacetHomotopy> {
    let n = sys.dim();
    if f.normal.len() != n {
        return Err(Error::Dimension { expected: n, got: f.normal.len() });
    }
    if f.height >= 0 {
        return Err(Error::Precondition("facet height must be negative".into()));
    }
    let r = -f.height;
    let u_exponents: Vec<i64> = sys.support.iter().map(|e| Ok(dot(e, &f.normal)? - f.height)).collect::<Result<_>>()?;
    if u_exponents.iter().any(|&d| d < 0) {
        return Err(Error::Precondition("normal does not support the system".into()));
    }
    let mut terms = vec![Term::new(&vec![0; n], 0.0, 0.0)];
    terms.extend(sys.support.iter().zip(&u_exponents).map(|(e, &d)| {
        let power = d as f64 / r as f64;
        Term::new(e, power, theta * power)
    }));
    let coefficients = (0..n)
        .map(|k| std::iter::once(sys.constants[k]).chain(sys.coefficients[k].iter().map(|a| -a)).collect())
        .collect();
    Ok(FacetHomotopy {
        normal: f.normal.clone(),
        height: f.height,
        r,
        u_exponents,
        theta,
        homotopy: Homotopy::new(n, terms, coefficients),
    })
}

impl FacetHomotopy {
    /// `u(s)`.
    pub fn u(&self, s: f64) -> Complex64 {
        Complex64::from_polar(s, self.theta * (1.0 - s))
    }

    /// `x_i = y_i u^{g_i}`.
    pub fn to_x(&self, y: &[Complex64], u: Complex64) -> Vec<Complex64> {
        y.iter().zip(&self.normal).map(|(y, &g)| y * u.powi(g as i32)).collect()
    }

    pub fn track(&self, y0: &[Complex64], opts: &TrackOptions) -> PathResult {
        track_path(&self.homotopy, y0, opts)
    }
}
