//! Lebesgue volume of vertex-represented polytopes.
//!
//! 2D uses the shoelace sum over the stored counterclockwise order. Higher
//! dimensions decompose the body into cones from the vertex centroid over the
//! facets; facet areas are computed recursively in hyperplane coordinates.
//! Two fast paths cover the subset volumes the solvers grind through:
//! simplices (d+1 points) and d+2 points in general position.

use super::hull::{convex_hull, facets};
use super::linalg::{det_of_rows, dot, orthogonal_to, orthonormal_basis, sub};
use super::{GeomError, GeomResult, Polytope, Vector};

/// Factorial as f64 (d <= 20 in practice).
pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Shoelace area of a polygon in counterclockwise cyclic order.
pub fn shoelace(verts: &[Vector]) -> f64 {
    let k = verts.len();
    let mut s = 0.0;
    for i in 0..k {
        let a = &verts[i];
        let b = &verts[(i + 1) % k];
        s += a[0] * b[1] - a[1] * b[0];
    }
    0.5 * s.abs()
}

/// Volume of the simplex spanned by `d+1` points in dimension `d`.
pub fn simplex_volume(pts: &[&Vector]) -> f64 {
    let d = pts.len() - 1;
    let diffs: Vec<Vector> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
    let refs: Vec<&[f64]> = diffs.iter().map(|v| v.as_slice()).collect();
    det_of_rows(&refs).abs() / factorial(d)
}

/// Lebesgue volume of a polytope with nonempty interior.
pub fn volume(p: &Polytope) -> GeomResult<f64> {
    super::check_dim(p.dim)?;
    if p.vertices.len() < p.dim + 1 {
        return Err(GeomError::ZeroVolume);
    }
    if p.dim == 2 {
        let a = shoelace(&p.vertices);
        if a <= 0.0 {
            return Err(GeomError::ZeroVolume);
        }
        return Ok(a);
    }
    let hs = facets(p).map_err(|e| match e {
        GeomError::FlatInput { .. } => GeomError::ZeroVolume,
        other => other,
    })?;
    let c = p.centroid_of_vertices();
    let scale = p.circumradius().max(1e-300);
    let mut vol = 0.0;
    for (n, off) in &hs.rows {
        let on: Vec<&Vector> = p
            .vertices
            .iter()
            .filter(|v| (dot(n, v) - off).abs() <= super::ON_FACET_TOL * scale * 10.0)
            .collect();
        if on.len() < p.dim {
            continue;
        }
        let area = facet_area(p.dim, n, &on)?;
        let height = (off - dot(n, &c)).abs();
        vol += area * height / p.dim as f64;
    }
    if vol <= 0.0 {
        return Err(GeomError::ZeroVolume);
    }
    Ok(vol)
}

/// (d-1)-volume of a facet given by its on-facet points and unit normal.
fn facet_area(dim: usize, normal: &Vector, pts: &[&Vector]) -> GeomResult<f64> {
    // in-plane coordinates: orthonormal basis of the hyperplane
    let mut seed: Vec<Vector> = Vec::with_capacity(dim);
    seed.push(normal.clone());
    for i in 0..dim {
        let mut e = vec![0.0; dim];
        e[i] = 1.0;
        seed.push(e);
    }
    let basis = orthonormal_basis(&seed, 1e-9);
    let plane: Vec<Vector> = basis[1..dim].to_vec();
    let origin = pts[0];
    let proj: Vec<Vector> = pts
        .iter()
        .map(|p| plane.iter().map(|b| dot(b, &sub(p, origin))).collect())
        .collect();
    lower_dim_volume(dim - 1, &proj)
}

fn lower_dim_volume(dim: usize, pts: &[Vector]) -> GeomResult<f64> {
    match dim {
        1 => {
            let lo = pts.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
            let hi = pts.iter().map(|p| p[0]).fold(f64::NEG_INFINITY, f64::max);
            Ok(hi - lo)
        }
        2 => {
            let h = convex_hull(pts)?;
            Ok(shoelace(&h.vertices))
        }
        _ => {
            let h = convex_hull(pts)?;
            volume(&h)
        }
    }
}

/// Volume of `conv(pts)` for d+2 points affinely spanning the space, via the
/// unique affine dependence (Radon split): the polytope is triangulated by
/// the simplices omitting one point of either sign class; points with zero
/// coefficient lie in every simplex. `None` when the dependence is not
/// unique (the points do not span, or a point is redundant in several ways).
pub fn radon_volume(dim: usize, pts: &[&Vector]) -> Option<f64> {
    debug_assert_eq!(pts.len(), dim + 2);
    // rows: one per coordinate plus the all-ones row; nullspace = dependence
    let mut rows: Vec<Vector> = Vec::with_capacity(dim + 1);
    for i in 0..dim {
        rows.push(pts.iter().map(|p| p[i]).collect());
    }
    rows.push(vec![1.0; dim + 2]);
    let alpha = orthogonal_to(&rows);
    let amax = alpha.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let coord_scale = pts
        .iter()
        .flat_map(|p| p.iter())
        .fold(1.0f64, |m, x| m.max(x.abs()));
    if amax <= 1e-9 * coord_scale.powi(dim as i32) || !amax.is_finite() {
        return None; // rank-deficient: no unique dependence
    }
    let tol = 1e-9 * amax;
    let mut pos = Vec::new();
    let mut negi = Vec::new();
    for (i, a) in alpha.iter().enumerate() {
        if *a > tol {
            pos.push(i);
        } else if *a < -tol {
            negi.push(i);
        }
    }
    if pos.is_empty() || negi.is_empty() {
        return None;
    }
    let side = if pos.len() <= negi.len() { pos } else { negi };
    let mut vol = 0.0;
    for &omit in &side {
        let simplex: Vec<&Vector> = pts
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != omit)
            .map(|(_, p)| *p)
            .collect();
        vol += simplex_volume(&simplex);
    }
    Some(vol)
}

/// Volume of the convex hull of an arbitrary point set; 0.0 for flat sets.
///
/// This is the dispatcher the subset-enumeration solvers use: simplices and
/// d+2-point sets take closed-form paths, everything else re-hulls.
pub fn volume_of_points(dim: usize, pts: &[&Vector]) -> f64 {
    if pts.len() < dim + 1 {
        return 0.0;
    }
    if dim == 2 {
        // cyclic sub-order of a convex polygon stays convex; callers in 2D
        // pass vertices in ccw order, so the shoelace applies directly
        let owned: Vec<Vector> = pts.iter().map(|p| (*p).clone()).collect();
        return shoelace(&owned);
    }
    if pts.len() == dim + 1 {
        return simplex_volume(pts);
    }
    if pts.len() == dim + 2 {
        if let Some(v) = radon_volume(dim, pts) {
            return v;
        }
    }
    let owned: Vec<Vector> = pts.iter().map(|p| (*p).clone()).collect();
    match convex_hull(&owned) {
        Ok(h) => volume(&h).unwrap_or(0.0),
        Err(_) => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::hull::convex_hull;

    fn unit_cube(d: usize) -> Polytope {
        let mut pts = Vec::new();
        for mask in 0..(1u32 << d) {
            pts.push((0..d).map(|i| ((mask >> i) & 1) as f64).collect());
        }
        convex_hull(&pts).unwrap()
    }

    #[test]
    fn unit_cube_volume_is_one() {
        for d in 2..=4 {
            let v = volume(&unit_cube(d)).unwrap();
            assert!((v - 1.0).abs() < 1e-9, "d={d}: {v}");
        }
    }

    #[test]
    fn cross_polytope_volume() {
        let mut pts: Vec<Vector> = Vec::new();
        for i in 0..3 {
            for s in [1.0, -1.0] {
                let mut e = vec![0.0; 3];
                e[i] = s;
                pts.push(e);
            }
        }
        let p = convex_hull(&pts).unwrap();
        assert!((volume(&p).unwrap() - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn simplex_fast_path_matches_generic() {
        let a = vec![0.0, 0.0, 0.0];
        let b = vec![1.0, 0.1, 0.0];
        let c = vec![0.0, 1.0, 0.2];
        let d = vec![0.3, 0.0, 1.0];
        let fast = simplex_volume(&[&a, &b, &c, &d]);
        let hull = convex_hull(&[a.clone(), b.clone(), c.clone(), d.clone()]).unwrap();
        assert!((fast - volume(&hull).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn radon_split_matches_hull_volume() {
        // five points in R^3 in general position
        let pts: Vec<Vector> = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.1],
            vec![0.0, 1.0, -0.05],
            vec![0.2, 0.1, 1.0],
            vec![0.9, 0.8, 0.7],
        ];
        let refs: Vec<&Vector> = pts.iter().collect();
        let fast = radon_volume(3, &refs).expect("general position");
        let h = convex_hull(&pts).unwrap();
        assert!((fast - volume(&h).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn radon_split_handles_zero_coefficients() {
        // five points of the octahedron: the dependence skips e3 entirely
        let pts: Vec<Vector> = vec![
            vec![1.0, 0.0, 0.0],
            vec![-1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, -1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ];
        let refs: Vec<&Vector> = pts.iter().collect();
        let fast = radon_volume(3, &refs).expect("unique dependence");
        assert!((fast - 2.0 / 3.0).abs() < 1e-12, "{fast}");
    }

    #[test]
    fn radon_split_matches_hull_on_structured_sets() {
        // antipodal-pair-heavy subsets, as produced by symmetric bodies
        let mut rng_state = 1234567u64;
        let mut next = move || {
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (rng_state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        for _ in 0..50 {
            let a: Vector = (0..3).map(|_| next()).collect();
            let b: Vector = (0..3).map(|_| next()).collect();
            let c: Vector = (0..3).map(|_| next()).collect();
            let pts =
                [a.clone(), vec![-a[0], -a[1], -a[2]], b.clone(), vec![-b[0], -b[1], -b[2]], c];
            let refs: Vec<&Vector> = pts.iter().collect();
            let Some(fast) = radon_volume(3, &refs) else { continue };
            let owned: Vec<Vector> = pts.to_vec();
            let slow = match convex_hull(&owned) {
                Ok(h) => volume(&h).unwrap_or(0.0),
                Err(_) => 0.0,
            };
            assert!((fast - slow).abs() < 1e-9 * slow.max(1e-9), "{fast} vs {slow}");
        }
    }

    #[test]
    fn flat_polytope_is_zero_volume_error() {
        let p = Polytope::from_extreme_points(
            3,
            vec![vec![0.0, 0.0, 0.0], vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]],
            false,
        );
        assert!(matches!(volume(&p), Err(GeomError::ZeroVolume)));
    }
}
