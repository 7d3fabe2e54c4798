//! Exact-enough convex geometry in low dimensions: hulls, volumes, polars,
//! linear images and containment for vertex-represented bodies.
//!
//! All coordinates are `f64`; vertex sets are deduplicated at `DEDUP_TOL`
//! relative to the body's circumradius. Degenerate inputs fail with typed
//! errors rather than producing empty bodies.

pub mod hull;
pub mod linalg;
mod ops;
pub mod volume;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use ops::{central_symmetral, contains, linear_image, polar, support_point, translate};
pub use volume::{volume, volume_of_points};

/// A point or direction; its length is the ambient dimension.
pub type Vector = Vec<f64>;

/// Relative vertex-dedup tolerance (after normalizing to circumradius ~ 1).
pub const DEDUP_TOL: f64 = 1e-9;
/// Relative tolerance for deciding that a point lies on a supporting hyperplane.
pub const ON_FACET_TOL: f64 = 1e-9;
/// Tolerance for merging coincident facet hyperplanes.
pub const FACET_MERGE_TOL: f64 = 1e-7;
/// Minimal ambient dimension handled by the kernel.
pub const MIN_DIM: usize = 2;
/// Maximal ambient dimension handled by the kernel.
pub const MAX_DIM: usize = 6;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GeomError {
    #[error("degenerate input: affine hull has dimension {found} < ambient {ambient}")]
    FlatInput { ambient: usize, found: usize },
    #[error("polytope has zero volume")]
    ZeroVolume,
    #[error("polar undefined: origin is not strictly interior (margin {margin:.3e})")]
    PolarUndefined { margin: f64 },
    #[error("singular linear map (|det| = {det:.3e})")]
    SingularMap { det: f64 },
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("ambient dimension {0} outside supported range 2..=6")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("too few points: need at least {need}, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("vertex set is not closed under negation")]
    NotSymmetric,
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
}

pub type GeomResult<T> = Result<T, GeomError>;

/// Convex body given by its extreme points.
///
/// Invariants kept by the constructors in [`hull`]:
/// * every listed vertex is an extreme point (no interior/redundant points),
/// * in dimension 2 the vertices are in counterclockwise cyclic order,
/// * `symmetric` means the vertex set is closed under negation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Polytope {
    pub dim: usize,
    pub vertices: Vec<Vector>,
    pub symmetric: bool,
}

impl Polytope {
    /// Wrap an already-reduced vertex list without re-running the hull.
    /// Callers must uphold the extremity and 2D-ordering invariants.
    pub fn from_extreme_points(dim: usize, vertices: Vec<Vector>, symmetric: bool) -> Self {
        Polytope { dim, vertices, symmetric }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Largest vertex norm; the scale used by relative tolerances.
    pub fn circumradius(&self) -> f64 {
        self.vertices.iter().map(|v| linalg::norm(v)).fold(0.0, f64::max)
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for (i, v) in self.vertices.iter().enumerate() {
            for w in &self.vertices[i + 1..] {
                best = best.max(linalg::dist(v, w));
            }
        }
        best
    }

    pub fn centroid_of_vertices(&self) -> Vector {
        let mut c = vec![0.0; self.dim];
        for v in &self.vertices {
            for (ci, vi) in c.iter_mut().zip(v) {
                *ci += vi;
            }
        }
        let n = self.vertices.len() as f64;
        c.iter().map(|x| x / n).collect()
    }

    /// Check that the vertex set is closed under negation (within `tol`,
    /// absolute after scaling by the circumradius).
    pub fn is_negation_closed(&self, tol: f64) -> bool {
        let scale = self.circumradius().max(1e-300);
        self.vertices.iter().all(|v| {
            let nv = linalg::neg(v);
            self.vertices.iter().any(|w| linalg::dist(&nv, w) <= tol * scale)
        })
    }

    /// Antipodal vertex classes `(v, -v)` of a symmetric body, as index pairs
    /// with a deterministic representative (first occurrence).
    pub fn antipodal_classes(&self) -> GeomResult<Vec<(usize, usize)>> {
        let scale = self.circumradius().max(1e-300);
        let mut used = vec![false; self.vertices.len()];
        let mut classes = Vec::new();
        for i in 0..self.vertices.len() {
            if used[i] {
                continue;
            }
            let nv = linalg::neg(&self.vertices[i]);
            let j = (0..self.vertices.len())
                .filter(|&j| j != i && !used[j])
                .find(|&j| linalg::dist(&nv, &self.vertices[j]) <= DEDUP_TOL * 1e3 * scale);
            let Some(j) = j else {
                return Err(GeomError::NotSymmetric);
            };
            used[i] = true;
            used[j] = true;
            classes.push((i, j));
        }
        Ok(classes)
    }
}

/// Facet representation `{x : <normal, x> <= offset}` per row, with unit
/// normals. Produced from the hull, hence irredundant and bounded.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HalfspaceList {
    pub dim: usize,
    pub rows: Vec<(Vector, f64)>,
}

impl HalfspaceList {
    /// Signed slack of `x` against the tightest constraint: negative inside.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        self.rows
            .iter()
            .map(|(n, c)| linalg::dot(n, x) - c)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        self.max_violation(x) <= tol
    }

    /// Distance from the origin to the nearest facet hyperplane.
    pub fn origin_margin(&self) -> f64 {
        self.rows.iter().map(|(_, c)| *c).fold(f64::INFINITY, f64::min)
    }
}

pub(crate) fn check_finite(points: &[Vector]) -> GeomResult<()> {
    for p in points {
        if p.iter().any(|x| !x.is_finite()) {
            return Err(GeomError::NonFinite);
        }
    }
    Ok(())
}

pub(crate) fn check_dim(dim: usize) -> GeomResult<()> {
    if !(MIN_DIM..=MAX_DIM).contains(&dim) {
        return Err(GeomError::UnsupportedDimension(dim));
    }
    Ok(())
}

/// Order-insensitive vertex-set match within `tol` (absolute).
pub fn vertex_sets_match(a: &[Vector], b: &[Vector], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter().all(|v| b.iter().any(|w| linalg::dist(v, w) <= tol))
        && b.iter().all(|w| a.iter().any(|v| linalg::dist(v, w) <= tol))
}

/// Max over one set of the min distance to the other, symmetrized.
pub fn vertex_set_deviation(a: &[Vector], b: &[Vector]) -> f64 {
    let one_way = |x: &[Vector], y: &[Vector]| {
        x.iter()
            .map(|v| y.iter().map(|w| linalg::dist(v, w)).fold(f64::INFINITY, f64::min))
            .fold(0.0f64, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}
