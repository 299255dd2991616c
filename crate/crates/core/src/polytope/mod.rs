//! The adjacency polytope `conv{e_i - e_j : (i, j) directed edge}`.
//!
//! All geometry here is exact: points and normals are integer vectors,
//! determinants are fraction-free.

pub mod hull;
pub mod lattice;

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{edge_exponent, Network};
use hull::{simplex_volume, PlacingTriangulation};
use lattice::dot;

/// Lattice points `e_i - e_j`, one per directed edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<i64>>,
    /// `edges[p]` is the directed edge `(i, j)` giving point `p`.
    edges: Vec<(usize, usize)>,
}

impl PointConfiguration {
    /// A configuration of arbitrary lattice points (no edge labels).
    pub fn from_points(points: Vec<Vec<i64>>) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.len());
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::Precondition("points of mixed dimension".into()));
        }
        let edges = vec![(usize::MAX, usize::MAX); points.len()];
        Ok(Self { dim, points, edges })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn point(&self, idx: usize) -> &[i64] {
        &self.points[idx]
    }

    pub fn edge(&self, idx: usize) -> (usize, usize) {
        self.edges[idx]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the point `-p`, if present.
    pub fn antipode(&self, idx: usize) -> Option<usize> {
        let neg: Vec<i64> = self.points[idx].iter().map(|v| -v).collect();
        self.points.iter().position(|q| *q == neg)
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        (0..self.len()).all(|i| self.antipode(i).is_some())
    }
}

pub fn adjacency_polytope(net: &Network) -> PointConfiguration {
    let n = net.dim();
    let edges = net.directed_edges();
    let points = edges.iter().map(|&(i, j)| edge_exponent(n, i, j)).collect();
    PointConfiguration { dim: n, points, edges }
}

/// A facet with primitive inner normal: `<p, normal> = height` on the facet
/// and `> height` elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub height: i64,
    /// Sorted indices of the configuration points on the facet.
    pub vertex_ids: Vec<usize>,
}

impl Facet {
    /// `normal / -height`, so that `<p, alpha> = -1` on the facet.
    pub fn alpha(&self) -> Vec<Rational64> {
        self.normal.iter().map(|&g| Rational64::new(g, -self.height)).collect()
    }
}

/// All facets of `conv(pc)`, sorted lexicographically by normal.
///
/// The boundary of a placing triangulation (points inserted in index order)
/// is grouped by supporting hyperplane.
pub fn enumerate_facets(pc: &PointConfiguration) -> Result<Vec<Facet>> {
    let order: Vec<usize> = (0..pc.len()).collect();
    let tri = PlacingTriangulation::build(&pc.points, &order)?;
    let mut planes: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for face in &tri.boundary {
        planes.insert(face.normal.clone(), face.height);
    }
    let mut facets = Vec::with_capacity(planes.len());
    for (normal, height) in planes {
        let mut vertex_ids = Vec::new();
        for (idx, p) in pc.points.iter().enumerate() {
            let v = dot(p, &normal)?;
            if v == height {
                vertex_ids.push(idx);
            } else if v < height {
                return Err(Error::Precondition("supporting hyperplane violated".into()));
            }
        }
        facets.push(Facet { normal, height, vertex_ids });
    }
    Ok(facets)
}

/// An `n`-simplex `conv({0} ∪ vertices)` inside the pyramid over a facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexCell {
    /// `n` configuration point indices.
    pub vertices: Vec<usize>,
    /// `|det|` of the matrix whose columns are the vertices.
    pub volume: u64,
}

/// Placing triangulation of the pyramid `conv(F ∪ {0})` in canonical vertex order.
pub fn triangulate_facet(f: &Facet, pc: &PointConfiguration) -> Result<Vec<SimplexCell>> {
    triangulate_facet_in_order(f, pc, &f.vertex_ids)
}

/// As [`triangulate_facet`], placing the facet vertices in `order` (after the apex).
pub fn triangulate_facet_in_order(f: &Facet, pc: &PointConfiguration, order: &[usize]) -> Result<Vec<SimplexCell>> {
    if f.height == 0 {
        return Err(Error::Precondition("facet hyperplane passes through the origin".into()));
    }
    // local point 0 is the apex
    let mut local = vec![vec![0i64; pc.dim]];
    local.extend(order.iter().map(|&i| pc.points[i].clone()));
    let local_order: Vec<usize> = (0..local.len()).collect();
    let tri = PlacingTriangulation::build(&local, &local_order)?;
    tri.simplices
        .iter()
        .map(|s| {
            if s[0] != 0 {
                return Err(Error::Precondition("pyramid cell misses the apex".into()));
            }
            let volume = simplex_volume(&local, s)?;
            let mut vertices: Vec<usize> = s[1..].iter().map(|&k| order[k - 1]).collect();
            vertices.sort_unstable();
            Ok(SimplexCell { vertices, volume })
        })
        .collect()
}

/// `nvol(conv(F ∪ {0}))`.
pub fn normalized_volume_pyramid(f: &Facet, pc: &PointConfiguration) -> Result<u64> {
    Ok(triangulate_facet(f, pc)?.iter().map(|c| c.volume).sum())
}

/// `nvol(conv(pc))` from a placing triangulation of the whole configuration.
pub fn direct_normalized_volume(pc: &PointConfiguration) -> Result<u64> {
    let order: Vec<usize> = (0..pc.len()).collect();
    PlacingTriangulation::build(&pc.points, &order)?.normalized_volume(&pc.points)
}

/// Sum of the facet pyramid volumes, equal to `nvol` of the adjacency polytope.
pub fn adjacency_polytope_bound(net: &Network) -> Result<u64> {
    let pc = adjacency_polytope(net);
    let mut total = 0;
    for f in enumerate_facets(&pc)? {
        total += normalized_volume_pyramid(&f, &pc)?;
    }
    Ok(total)
}

/// One maximal cell of a regular subdivision: configuration indices and the
/// lower-hull normal `(normal, 1)` scaled to `(normal, scale)` in `Z^{d+1}`.
#[derive(Clone, Debug)]
pub struct LiftedCell {
    pub points: Vec<usize>,
    pub normal: Vec<i64>,
    pub scale: i64,
    pub height: i64,
    pub volume: u64,
}

/// Regular subdivision of `conv(points)` induced by `lifting`: the lower
/// facets of the lifted configuration `(p, lifting(p))`.
pub fn regular_subdivision(points: &[Vec<i64>], lifting: &[i64]) -> Result<Vec<LiftedCell>> {
    let lifted: Vec<Vec<i64>> = points
        .iter()
        .zip(lifting)
        .map(|(p, &w)| {
            let mut q = p.clone();
            q.push(w);
            q
        })
        .collect();
    let order: Vec<usize> = (0..lifted.len()).collect();
    let tri = PlacingTriangulation::build(&lifted, &order)?;
    let d = points[0].len();
    let mut planes: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for face in tri.boundary.iter().filter(|f| f.normal[d] > 0) {
        planes.insert(face.normal.clone(), face.height);
    }
    let mut cells = Vec::new();
    for (normal, height) in planes {
        let mut on = Vec::new();
        for (idx, q) in lifted.iter().enumerate() {
            if dot(q, &normal)? == height {
                on.push(idx);
            }
        }
        let volume = if on.len() == d + 1 { simplex_volume(points, &on)? } else { 0 };
        cells.push(LiftedCell { points: on, scale: normal[d], normal: normal[..d].to_vec(), height, volume });
    }
    Ok(cells)
}

/// Facet list export record.
#[derive(Clone, Debug, Serialize)]
pub struct FacetRecord {
    pub normal: Vec<i64>,
    pub height: i64,
    pub vertices: Vec<(usize, usize)>,
    pub volume: u64,
}

pub fn facet_records(facets: &[Facet], pc: &PointConfiguration) -> Result<Vec<FacetRecord>> {
    facets
        .iter()
        .map(|f| {
            Ok(FacetRecord {
                normal: f.normal.clone(),
                height: f.height,
                vertices: f.vertex_ids.iter().map(|&v| pc.edge(v)).collect(),
                volume: normalized_volume_pyramid(f, pc)?,
            })
        })
        .collect()
}
