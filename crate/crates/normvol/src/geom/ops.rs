//! Polar bodies, linear images, symmetrals, containment, support points.

use super::hull::{convex_hull, facets};
use super::linalg::{self, dot, Mat};
use super::{GeomError, GeomResult, Polytope, Vector};

/// Polar body `P° = {y : <x,y> <= 1 for all x in P}` of a polytope with the
/// origin strictly interior. Facets `<a,x> <= c` dualize to vertices `a/c`.
pub fn polar(p: &Polytope) -> GeomResult<Polytope> {
    let hs = facets(p)?;
    let margin = hs.origin_margin();
    if margin <= 1e-9 * p.circumradius().max(1e-300) {
        return Err(GeomError::PolarUndefined { margin });
    }
    let dual: Vec<Vector> = hs.rows.iter().map(|(n, c)| linalg::scale(n, 1.0 / c)).collect();
    let mut out = convex_hull(&dual)?;
    out.symmetric = p.symmetric;
    Ok(out)
}

/// Image of a polytope under a nondegenerate linear map (row-major d x d).
pub fn linear_image(p: &Polytope, m: &Mat) -> GeomResult<Polytope> {
    if m.d != p.dim {
        return Err(GeomError::DimensionMismatch { expected: p.dim, got: m.d });
    }
    let det = m.det();
    if det.abs() <= 1e-12 {
        return Err(GeomError::SingularMap { det });
    }
    let mapped: Vec<Vector> = p.vertices.iter().map(|v| m.apply(v)).collect();
    let mut out = convex_hull(&mapped)?;
    out.symmetric = p.symmetric;
    Ok(out)
}

/// Central symmetral `conv(P U -P)`; always origin-symmetric.
pub fn central_symmetral(p: &Polytope) -> GeomResult<Polytope> {
    let mut pts = p.vertices.clone();
    pts.extend(p.vertices.iter().map(|v| linalg::neg(v)));
    let mut out = convex_hull(&pts)?;
    out.symmetric = true;
    Ok(out)
}

/// Translate a polytope by `t` (vertex order is preserved).
pub fn translate(p: &Polytope, t: &[f64]) -> Polytope {
    let vertices: Vec<Vector> = p.vertices.iter().map(|v| linalg::add(v, t)).collect();
    let still_symmetric = p.symmetric && t.iter().all(|x| *x == 0.0);
    Polytope::from_extreme_points(p.dim, vertices, still_symmetric)
}

/// Membership test against the facet representation.
pub fn contains(p: &Polytope, x: &[f64], tol: f64) -> GeomResult<bool> {
    if x.len() != p.dim {
        return Err(GeomError::DimensionMismatch { expected: p.dim, got: x.len() });
    }
    let hs = facets(p)?;
    Ok(hs.contains(x, tol))
}

/// A vertex maximizing `<u, .>`; ties broken by lexicographically largest
/// coordinates.
pub fn support_point(p: &Polytope, u: &[f64]) -> GeomResult<Vector> {
    if linalg::norm(u) == 0.0 {
        return Err(GeomError::ZeroDirection);
    }
    if u.len() != p.dim {
        return Err(GeomError::DimensionMismatch { expected: p.dim, got: u.len() });
    }
    let mut best: Option<(&Vector, f64)> = None;
    for v in &p.vertices {
        let s = dot(u, v);
        match best {
            None => best = Some((v, s)),
            Some((bv, bs)) => {
                if s > bs || (s == bs && lex_greater(v, bv)) {
                    best = Some((v, s));
                }
            }
        }
    }
    Ok(best.expect("nonempty vertex list").0.clone())
}

fn lex_greater(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return true;
        }
        if x < y {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::volume::volume;

    fn square() -> Polytope {
        convex_hull(&[
            vec![1.0, 1.0],
            vec![-1.0, 1.0],
            vec![-1.0, -1.0],
            vec![1.0, -1.0],
        ])
        .unwrap()
    }

    #[test]
    fn polar_of_square_is_cross() {
        let p = polar(&square()).unwrap();
        assert_eq!(p.vertex_count(), 4);
        for v in &p.vertices {
            assert!((linalg::norm(v) - 1.0).abs() < 1e-12);
            assert!(v[0].abs() < 1e-12 || v[1].abs() < 1e-12);
        }
    }

    #[test]
    fn polar_of_octahedron_is_cube() {
        let mut pts: Vec<Vector> = Vec::new();
        for i in 0..3 {
            for s in [1.0_f64, -1.0] {
                let mut e = vec![0.0; 3];
                e[i] = s;
                pts.push(e);
            }
        }
        let oct = convex_hull(&pts).unwrap();
        let cube = polar(&oct).unwrap();
        assert_eq!(cube.vertex_count(), 8);
        assert!((volume(&cube).unwrap() - 8.0).abs() < 1e-9);
    }

    #[test]
    fn polar_requires_interior_origin() {
        let shifted = translate(&square(), &[5.0, 0.0]);
        assert!(matches!(polar(&shifted), Err(GeomError::PolarUndefined { .. })));
    }

    #[test]
    fn hexagon_polar_matches_hand_computation() {
        // regular hexagon, circumradius 1, vertex at (1,0); intersecting the
        // six dual halfplanes by hand gives a hexagon with circumradius
        // 2/sqrt(3), first vertex at angle pi/6, area 2*sqrt(3)
        let pts: Vec<Vector> = (0..6)
            .map(|k| {
                let t = std::f64::consts::PI / 3.0 * k as f64;
                vec![t.cos(), t.sin()]
            })
            .collect();
        let hex = convex_hull(&pts).unwrap();
        let pol = polar(&hex).unwrap();
        assert_eq!(pol.vertex_count(), 6);
        let r = 2.0 / 3f64.sqrt();
        for v in &pol.vertices {
            assert!((linalg::norm(v) - r).abs() < 1e-9);
        }
        assert!((volume(&pol).unwrap() - 2.0 * 3f64.sqrt()).abs() < 1e-9);
        let first_angle = pol.vertices[0][1].atan2(pol.vertices[0][0]);
        let k = (first_angle / (std::f64::consts::PI / 3.0)).round();
        let residual = first_angle - k * std::f64::consts::PI / 3.0 - std::f64::consts::PI / 6.0;
        assert!(
            residual.abs() < 1e-9 || (residual.abs() - std::f64::consts::PI / 3.0).abs() < 1e-9
        );
    }

    #[test]
    fn linear_image_scales_volume() {
        let m = Mat::from_rows(&[vec![2.0, 0.0], vec![0.0, 1.0]]);
        let img = linear_image(&square(), &m).unwrap();
        assert!((volume(&img).unwrap() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn singular_map_rejected() {
        let m = Mat::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert!(matches!(linear_image(&square(), &m), Err(GeomError::SingularMap { .. })));
    }

    #[test]
    fn symmetral_of_triangle_doubles_area() {
        let t = convex_hull(&[vec![1.0, 0.2], vec![-0.6, 0.9], vec![-0.2, -0.8]]).unwrap();
        let s = central_symmetral(&t).unwrap();
        assert_eq!(s.vertex_count(), 6);
        assert!((volume(&s).unwrap() - 2.0 * volume(&t).unwrap()).abs() < 1e-12);
        assert!(s.symmetric && s.is_negation_closed(1e-9));
    }

    #[test]
    fn symmetral_of_symmetric_body_is_identity() {
        let sq = square();
        let s = central_symmetral(&sq).unwrap();
        assert!(crate::geom::vertex_sets_match(&s.vertices, &sq.vertices, 1e-12));
    }

    #[test]
    fn contains_and_support_point() {
        let sq = square();
        assert!(contains(&sq, &[0.0, 0.0], 1e-9).unwrap());
        assert!(!contains(&sq, &[1.0 + 1e-3, 0.0], 1e-6).unwrap());
        for v in &sq.vertices {
            assert!(contains(&sq, v, 1e-9).unwrap());
        }
        // tie on <u,.>: lexicographically largest vertex wins
        let s = support_point(&sq, &[1.0, 0.0]).unwrap();
        assert_eq!(s, vec![1.0, 1.0]);
        assert!(matches!(support_point(&sq, &[0.0, 0.0]), Err(GeomError::ZeroDirection)));
    }
}
