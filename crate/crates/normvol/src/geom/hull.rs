//! Convex hulls and facet extraction for dimensions 2..=6.
//!
//! Dimension 2 uses a monotone chain. Higher dimensions enumerate d-point
//! subsets as candidate supporting hyperplanes and keep the one-sided ones;
//! vertex status is then decided by the rank of the active facet normals.
//! Vertex counts stay below ~10^3 here, so no output-sensitive algorithm is
//! needed.

use super::linalg::{self, dot, orthogonal_to, rank, sub};
use super::{
    check_dim, check_finite, GeomError, GeomResult, HalfspaceList, Polytope, Vector, DEDUP_TOL,
    FACET_MERGE_TOL, ON_FACET_TOL,
};

/// Visit all k-subsets of `0..n` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Number of k-subsets of an n-set, saturating.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn spread(points: &[Vector]) -> f64 {
    let d = points[0].len();
    let mut c = vec![0.0; d];
    for p in points {
        for (ci, pi) in c.iter_mut().zip(p) {
            *ci += pi;
        }
    }
    for ci in c.iter_mut() {
        *ci /= points.len() as f64;
    }
    points
        .iter()
        .map(|p| linalg::dist(p, &c))
        .fold(0.0f64, f64::max)
        .max(1e-300)
}

fn dedup(points: &[Vector], tol_abs: f64) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::with_capacity(points.len());
    for p in points {
        if !out.iter().any(|q| linalg::dist(p, q) <= tol_abs) {
            out.push(p.clone());
        }
    }
    out
}

/// Extreme points of the convex hull of `points`.
///
/// The input must affinely span the ambient space (2..=6); otherwise a
/// `FlatInput` error is returned. In 2D the result is in counterclockwise
/// cyclic order starting from the lexicographically smallest vertex; in
/// higher dimensions vertices are sorted lexicographically.
pub fn convex_hull(points: &[Vector]) -> GeomResult<Polytope> {
    if points.is_empty() {
        return Err(GeomError::TooFewPoints { need: 3, got: 0 });
    }
    let dim = points[0].len();
    check_dim(dim)?;
    check_finite(points)?;
    if points.iter().any(|p| p.len() != dim) {
        return Err(GeomError::DimensionMismatch { expected: dim, got: 0 });
    }
    if points.len() < dim + 1 {
        return Err(GeomError::TooFewPoints { need: dim + 1, got: points.len() });
    }
    let scale = spread(points);
    let pts = dedup(points, DEDUP_TOL * scale);
    if pts.len() < dim + 1 {
        return Err(GeomError::FlatInput { ambient: dim, found: affine_rank(&pts) });
    }
    let arank = affine_rank(&pts);
    if arank < dim {
        return Err(GeomError::FlatInput { ambient: dim, found: arank });
    }
    if dim == 2 {
        let verts = chain_2d(pts, scale);
        if verts.len() < 3 {
            return Err(GeomError::FlatInput { ambient: 2, found: 1 });
        }
        return Ok(Polytope::from_extreme_points(2, verts, false));
    }
    let facets = enumerate_facets(dim, &pts, scale);
    let mut verts: Vec<Vector> = Vec::new();
    for p in &pts {
        let active: Vec<Vector> = facets
            .rows
            .iter()
            .filter(|(n, c)| (dot(n, p) - c).abs() <= ON_FACET_TOL * scale)
            .map(|(n, _)| n.clone())
            .collect();
        if active.len() >= dim && rank(&active, 1e-7) == dim {
            verts.push(p.clone());
        }
    }
    verts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(Polytope::from_extreme_points(dim, verts, false))
}

fn affine_rank(pts: &[Vector]) -> usize {
    let diffs: Vec<Vector> = pts[1..].iter().map(|p| sub(p, &pts[0])).collect();
    rank(&diffs, 1e-9)
}

fn chain_2d(mut pts: Vec<Vector>, _scale: f64) -> Vec<Vector> {
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // strictly convex turns only; near-collinear middle points are dropped
    let turn_ok = |a: &Vector, b: &Vector, c: &Vector| {
        let e1 = sub(b, a);
        let e2 = sub(c, b);
        linalg::cross2(&e1, &e2) > DEDUP_TOL * linalg::norm(&e1) * linalg::norm(&e2)
    };
    let build = |iter: &mut dyn Iterator<Item = &Vector>| {
        let mut h: Vec<Vector> = Vec::new();
        for p in iter {
            while h.len() >= 2 && !turn_ok(&h[h.len() - 2], &h[h.len() - 1], p) {
                h.pop();
            }
            h.push(p.clone());
        }
        h
    };
    let lower = build(&mut pts.iter());
    let mut upper = build(&mut pts.iter().rev());
    let mut hull = lower;
    hull.pop();
    upper.pop();
    hull.extend(upper);
    hull
}

fn enumerate_facets(dim: usize, pts: &[Vector], scale: f64) -> HalfspaceList {
    let side_eps = ON_FACET_TOL * scale;
    let mut rows: Vec<(Vector, f64)> = Vec::new();
    for_each_combination(pts.len(), dim, |comb| {
        let base = &pts[comb[0]];
        let diffs: Vec<Vector> = comb[1..].iter().map(|&i| sub(&pts[i], base)).collect();
        let n = orthogonal_to(&diffs);
        let nn = linalg::norm(&n);
        if nn <= 1e-10 * scale.powi(dim as i32 - 1) {
            return; // degenerate subset
        }
        let mut n: Vector = n.iter().map(|x| x / nn).collect();
        let mut c = comb.iter().map(|&i| dot(&n, &pts[i])).sum::<f64>() / dim as f64;
        let mut above = false;
        let mut below = false;
        for p in pts {
            let s = dot(&n, p) - c;
            if s > side_eps {
                above = true;
            } else if s < -side_eps {
                below = true;
            }
            if above && below {
                return; // not supporting
            }
        }
        if above {
            // flip to outward orientation
            n = linalg::neg(&n);
            c = -c;
        }
        let dup = rows.iter().any(|(m, b)| {
            linalg::dist(m, &n) <= FACET_MERGE_TOL && (b - c).abs() <= FACET_MERGE_TOL * scale
        });
        if !dup {
            rows.push((n, c));
        }
    });
    HalfspaceList { dim, rows }
}

/// Facet halfspaces of a polytope (unit outward normals).
pub fn facets(p: &Polytope) -> GeomResult<HalfspaceList> {
    check_dim(p.dim)?;
    if p.vertices.len() < p.dim + 1 {
        return Err(GeomError::TooFewPoints { need: p.dim + 1, got: p.vertices.len() });
    }
    if p.dim == 2 {
        let mut rows = Vec::with_capacity(p.vertices.len());
        let k = p.vertices.len();
        for i in 0..k {
            let a = &p.vertices[i];
            let b = &p.vertices[(i + 1) % k];
            let e = sub(b, a);
            let nn = linalg::norm(&e);
            if nn == 0.0 {
                return Err(GeomError::ZeroVolume);
            }
            // ccw order => outward normal is the edge rotated by -90 degrees
            let n = vec![e[1] / nn, -e[0] / nn];
            let c = dot(&n, a);
            rows.push((n, c));
        }
        return Ok(HalfspaceList { dim: 2, rows });
    }
    let scale = spread(&p.vertices);
    let rank_check = affine_rank(&p.vertices);
    if rank_check < p.dim {
        return Err(GeomError::FlatInput { ambient: p.dim, found: rank_check });
    }
    Ok(enumerate_facets(p.dim, &p.vertices, scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v2(x: f64, y: f64) -> Vector {
        vec![x, y]
    }

    #[test]
    fn interior_point_is_dropped() {
        let h = convex_hull(&[v2(0.0, 0.0), v2(1.0, 0.0), v2(0.0, 1.0), v2(0.2, 0.2)]).unwrap();
        assert_eq!(h.vertex_count(), 3);
    }

    #[test]
    fn cube_with_centroid_keeps_eight_vertices() {
        let mut pts = Vec::new();
        for ix in [-1.0, 1.0] {
            for iy in [-1.0, 1.0] {
                for iz in [-1.0, 1.0] {
                    pts.push(vec![ix, iy, iz]);
                }
            }
        }
        pts.push(vec![0.0, 0.0, 0.0]);
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertex_count(), 8);
    }

    #[test]
    fn all_circle_points_are_extreme() {
        // deterministic pseudo-random angles
        let mut angles: Vec<f64> = (0..100)
            .map(|i| {
                let x = (i as f64 * 127.1).sin() * 43758.5453;
                (x - x.floor()) * std::f64::consts::TAU
            })
            .collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        angles.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        let pts: Vec<Vector> = angles.iter().map(|t| v2(t.cos(), t.sin())).collect();
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertex_count(), pts.len());
    }

    #[test]
    fn ccw_order_in_2d() {
        let h = convex_hull(&[v2(1.0, 0.0), v2(0.0, 1.0), v2(-1.0, 0.0), v2(0.0, -1.0)]).unwrap();
        let k = h.vertices.len();
        for i in 0..k {
            let a = &h.vertices[i];
            let b = &h.vertices[(i + 1) % k];
            let c = &h.vertices[(i + 2) % k];
            assert!(linalg::cross2(&sub(b, a), &sub(c, b)) > 0.0);
        }
    }

    #[test]
    fn flat_input_errors() {
        let err = convex_hull(&[v2(0.0, 0.0), v2(1.0, 1.0), v2(2.0, 2.0), v2(3.0, 3.0)]).unwrap_err();
        assert!(matches!(err, GeomError::FlatInput { .. }));
    }

    #[test]
    fn octahedron_facets() {
        let pts: Vec<Vector> = vec![
            vec![1.0, 0.0, 0.0],
            vec![-1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, -1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, -1.0],
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertex_count(), 6);
        let f = facets(&h).unwrap();
        assert_eq!(f.rows.len(), 8);
        for (n, c) in &f.rows {
            assert!((linalg::norm(n) - 1.0).abs() < 1e-12);
            assert!((c - 1.0 / 3f64.sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn combination_count_matches_binomial() {
        let mut count = 0u64;
        for_each_combination(7, 3, |_| count += 1);
        assert_eq!(count, binomial(7, 3));
        assert_eq!(binomial(20, 8), 125_970);
    }
}
