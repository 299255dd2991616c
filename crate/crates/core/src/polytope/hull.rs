//! Beneath-beyond placing triangulation over exact integers.
//!
//! Points are inserted in the given order. The current boundary is kept as a
//! set of oriented `(d-1)`-simplices; a new point cones every boundary simplex
//! it lies strictly beyond. The result is a triangulation of the convex hull
//! of the inserted points together with a triangulated boundary.

use std::collections::HashMap;

use super::lattice::{affine_rank, dot, hyperplane};
use crate::error::{Error, Result};

/// An oriented boundary simplex: `<x, normal> >= height` on the hull.
#[derive(Clone, Debug)]
pub struct BoundaryFace {
    pub vertices: Vec<usize>,
    pub normal: Vec<i64>,
    pub height: i64,
}

#[derive(Clone, Debug)]
pub struct PlacingTriangulation {
    pub dim: usize,
    /// Full-dimensional simplices as sorted point indices.
    pub simplices: Vec<Vec<usize>>,
    pub boundary: Vec<BoundaryFace>,
}

impl PlacingTriangulation {
    /// Triangulates `points[order[..]]`. Fails when the points do not span `Z^d`.
    pub fn build(points: &[Vec<i64>], order: &[usize]) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.len());
        if dim == 0 {
            return Err(Error::NotFullDimensional);
        }
        let mut initial: Vec<usize> = Vec::with_capacity(dim + 1);
        for &idx in order {
            let mut trial: Vec<&[i64]> = initial.iter().map(|&i| points[i].as_slice()).collect();
            trial.push(&points[idx]);
            if affine_rank(&trial)? == initial.len() {
                initial.push(idx);
                if initial.len() == dim + 1 {
                    break;
                }
            }
        }
        if initial.len() < dim + 1 {
            return Err(Error::NotFullDimensional);
        }
        // interior reference point, scaled by dim + 1
        let mut centre = vec![0i64; dim];
        for &i in &initial {
            for (c, &v) in centre.iter_mut().zip(&points[i]) {
                *c += v;
            }
        }
        let mut tri = Builder { points, centre, scale: dim as i64 + 1, simplices: Vec::new(), faces: HashMap::new() };
        let mut first = initial.clone();
        first.sort_unstable();
        tri.simplices.push(first.clone());
        for skip in 0..first.len() {
            let face: Vec<usize> = first.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
            tri.add_face(face)?;
        }
        for &idx in order {
            if !initial.contains(&idx) {
                tri.insert(idx)?;
            }
        }
        let mut boundary: Vec<BoundaryFace> = tri.faces.into_values().collect();
        boundary.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        Ok(Self { dim, simplices: tri.simplices, boundary })
    }

    /// Sum of `|det|` over all simplices, i.e. `d!` times the hull volume.
    pub fn normalized_volume(&self, points: &[Vec<i64>]) -> Result<u64> {
        let mut total = 0u64;
        for s in &self.simplices {
            total += simplex_volume(points, s)?;
        }
        Ok(total)
    }
}

/// `|det[v_1 - v_0, ..., v_d - v_0]|` for a full-dimensional simplex.
pub fn simplex_volume(points: &[Vec<i64>], simplex: &[usize]) -> Result<u64> {
    let base = &points[simplex[0]];
    let rows: Vec<Vec<i64>> =
        simplex[1..].iter().map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    let det = super::lattice::determinant(&rows)?;
    u64::try_from(det.unsigned_abs()).map_err(|_| Error::Overflow)
}

struct Builder<'a> {
    points: &'a [Vec<i64>],
    centre: Vec<i64>,
    scale: i64,
    simplices: Vec<Vec<usize>>,
    faces: HashMap<Vec<usize>, BoundaryFace>,
}

impl Builder<'_> {
    fn add_face(&mut self, vertices: Vec<usize>) -> Result<()> {
        let pts: Vec<&[i64]> = vertices.iter().map(|&i| self.points[i].as_slice()).collect();
        let (mut normal, mut height) =
            hyperplane(&pts)?.ok_or_else(|| Error::Precondition("degenerate boundary simplex".into()))?;
        let side = dot(&self.centre, &normal)? - self.scale * height;
        if side < 0 {
            normal.iter_mut().for_each(|v| *v = -*v);
            height = -height;
        }
        debug_assert!(side != 0, "reference point on a boundary hyperplane");
        self.faces.insert(vertices.clone(), BoundaryFace { vertices, normal, height });
        Ok(())
    }

    fn insert(&mut self, idx: usize) -> Result<()> {
        let p = &self.points[idx];
        let mut visible = Vec::new();
        for (key, face) in &self.faces {
            if dot(p, &face.normal)? < face.height {
                visible.push(key.clone());
            }
        }
        if visible.is_empty() {
            return Ok(());
        }
        visible.sort();
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for key in &visible {
            for skip in 0..key.len() {
                let ridge: Vec<usize> = key.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
                *ridges.entry(ridge).or_default() += 1;
            }
            let mut simplex = key.clone();
            simplex.push(idx);
            simplex.sort_unstable();
            self.simplices.push(simplex);
        }
        for key in &visible {
            self.faces.remove(key);
        }
        let mut horizon: Vec<Vec<usize>> = ridges.into_iter().filter(|&(_, c)| c == 1).map(|(r, _)| r).collect();
        horizon.sort();
        for mut ridge in horizon {
            ridge.push(idx);
            ridge.sort_unstable();
            self.add_face(ridge)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_triangulation() {
        let pts = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2], vec![1, 1]];
        let order: Vec<usize> = (0..pts.len()).collect();
        let t = PlacingTriangulation::build(&pts, &order).unwrap();
        assert_eq!(t.normalized_volume(&pts).unwrap(), 8);
        assert_eq!(t.simplices.len(), 2);
        assert_eq!(t.boundary.len(), 4);
    }

    #[test]
    fn cube_volume_any_order() {
        let mut pts = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    pts.push(vec![a, b, c]);
                }
            }
        }
        let fwd: Vec<usize> = (0..8).collect();
        let rev: Vec<usize> = (0..8).rev().collect();
        for order in [fwd, rev] {
            let t = PlacingTriangulation::build(&pts, &order).unwrap();
            assert_eq!(t.normalized_volume(&pts).unwrap(), 6);
            assert_eq!(t.boundary.len(), 12);
        }
    }

    #[test]
    fn flat_input_rejected() {
        let pts = vec![vec![0, 0], vec![1, 1], vec![2, 2]];
        assert!(matches!(PlacingTriangulation::build(&pts, &[0, 1, 2]), Err(Error::NotFullDimensional)));
    }
}
