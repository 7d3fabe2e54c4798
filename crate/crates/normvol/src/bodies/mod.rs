//! Constructors and certificates for the named extremal bodies: regular
//! simplices, cross-polytopes, cubes, regular polygons, simplex symmetrals,
//! orthogonal simplex pairs and Radon hexagons, plus the Coxeter
//! affine-regularity test for polygons.

mod radon;

pub use radon::{radon_certificate, radon_hexagon, RadonCertificate};

use crate::geom::hull::convex_hull;
use crate::geom::linalg::{self, dot, norm, orthonormal_basis, sub};
use crate::geom::{central_symmetral, check_dim, GeomError, GeomResult, Polytope, Vector};

/// Vertices of a regular k-simplex centered at the origin with circumradius 1,
/// as coordinates in R^k. Handles k = 1 (a symmetric segment) as well.
fn regular_simplex_coords(k: usize) -> Vec<Vector> {
    if k == 1 {
        return vec![vec![1.0], vec![-1.0]];
    }
    // project the standard basis of R^{k+1} onto the hyperplane orthogonal
    // to (1,...,1) and express it in an orthonormal basis of that hyperplane
    let m = k + 1;
    let c = 1.0 / m as f64;
    let corners: Vec<Vector> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { 1.0 - c } else { -c }).collect())
        .collect();
    let basis = orthonormal_basis(&corners[..k].to_vec(), 1e-12);
    debug_assert_eq!(basis.len(), k);
    let mut verts: Vec<Vector> = corners
        .iter()
        .map(|u| basis.iter().map(|b| dot(b, u)).collect::<Vector>())
        .collect();
    let r = norm(&verts[0]);
    for v in verts.iter_mut() {
        for x in v.iter_mut() {
            *x /= r;
        }
    }
    verts
}

/// Regular d-simplex centered at the origin, circumradius 1.
pub fn regular_simplex(d: usize) -> GeomResult<Polytope> {
    check_dim(d)?;
    convex_hull(&regular_simplex_coords(d))
}

/// Standard cross-polytope `conv{±e_i}`.
pub fn cross_polytope(d: usize) -> GeomResult<Polytope> {
    check_dim(d)?;
    if d == 2 {
        return Ok(Polytope::from_extreme_points(
            2,
            vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![-1.0, 0.0], vec![0.0, -1.0]],
            true,
        ));
    }
    let mut pts = Vec::with_capacity(2 * d);
    for i in 0..d {
        for s in [1.0, -1.0] {
            let mut e = vec![0.0; d];
            e[i] = s;
            pts.push(e);
        }
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(Polytope::from_extreme_points(d, pts, true))
}

/// Cube `[-1, 1]^d`.
pub fn cube(d: usize) -> GeomResult<Polytope> {
    check_dim(d)?;
    if d == 2 {
        return Ok(Polytope::from_extreme_points(
            2,
            vec![vec![-1.0, -1.0], vec![1.0, -1.0], vec![1.0, 1.0], vec![-1.0, 1.0]],
            true,
        ));
    }
    let mut pts: Vec<Vector> = (0..1u32 << d)
        .map(|mask| (0..d).map(|i| if (mask >> i) & 1 == 1 { 1.0 } else { -1.0 }).collect())
        .collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(Polytope::from_extreme_points(d, pts, true))
}

/// Regular n-gon centered at the origin with one vertex on the positive
/// x-axis, in counterclockwise order.
pub fn regular_ngon(n: usize, circumradius: f64) -> GeomResult<Polytope> {
    if n < 3 {
        return Err(GeomError::TooFewPoints { need: 3, got: n });
    }
    if !(circumradius.is_finite() && circumradius > 0.0) {
        return Err(GeomError::NonFinite);
    }
    let verts: Vec<Vector> = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            vec![circumradius * t.cos(), circumradius * t.sin()]
        })
        .collect();
    Ok(Polytope::from_extreme_points(2, verts, n % 2 == 0))
}

/// `conv(S U -S)` for the regular d-simplex S; volume is `C(d, floor(d/2))`
/// times the simplex volume.
pub fn simplex_symmetral(d: usize) -> GeomResult<Polytope> {
    central_symmetral(&regular_simplex(d)?)
}

/// `conv(S1 U S2 U -S1 U -S2)` with S1, S2 regular simplices of dimensions
/// k and d-k centered at the origin in complementary coordinate subspaces.
pub fn simplex_pair_body(d: usize, k: usize) -> GeomResult<Polytope> {
    check_dim(d)?;
    if k == 0 || k >= d {
        return Err(GeomError::DimensionMismatch { expected: d - 1, got: k });
    }
    let embed = |coords: Vec<Vector>, offset: usize| -> Vec<Vector> {
        coords
            .into_iter()
            .map(|v| {
                let mut w = vec![0.0; d];
                w[offset..offset + v.len()].copy_from_slice(&v);
                w
            })
            .collect()
    };
    let s1 = embed(regular_simplex_coords(k), 0);
    let s2 = embed(regular_simplex_coords(d - k), k);
    let mut pts = Vec::new();
    for v in s1.iter().chain(s2.iter()) {
        pts.push(v.clone());
        pts.push(linalg::neg(v));
    }
    let mut out = convex_hull(&pts)?;
    out.symmetric = true;
    Ok(out)
}

/// Intrinsic volume of the regular k-simplex with circumradius 1.
pub fn regular_simplex_intrinsic_volume(k: usize) -> f64 {
    if k == 1 {
        return 2.0;
    }
    // side length s with circumradius 1, then vol = s^k / k! * sqrt((k+1)/2^k)
    let kf = k as f64;
    let s = (2.0 * (kf + 1.0) / kf).sqrt();
    s.powi(k as i32) / crate::geom::volume::factorial(k) * ((kf + 1.0) / 2f64.powi(k as i32)).sqrt()
}

/// Coxeter test: fits `tau >= 0` with `p_{j+2} - p_{j-1} = tau (p_{j+1} - p_j)`
/// over all j by least squares and accepts when the max residual is at most
/// `tol * diameter`. Polygons with fewer than 4 vertices satisfy the relation
/// trivially.
pub fn is_affinely_regular(p: &Polytope, tol: f64) -> GeomResult<(bool, f64)> {
    if p.dim != 2 {
        return Err(GeomError::UnsupportedDimension(p.dim));
    }
    let n = p.vertices.len();
    if n < 3 {
        return Err(GeomError::TooFewPoints { need: 3, got: n });
    }
    let at = |j: isize| -> &Vector {
        let m = n as isize;
        &p.vertices[(((j % m) + m) % m) as usize]
    };
    let mut num = 0.0;
    let mut den = 0.0;
    let mut pairs = Vec::with_capacity(n);
    for j in 0..n as isize {
        let a = sub(at(j + 2), at(j - 1));
        let b = sub(at(j + 1), at(j));
        num += dot(&a, &b);
        den += dot(&b, &b);
        pairs.push((a, b));
    }
    let tau = if den > 0.0 { num / den } else { 0.0 };
    let diam = p.diameter().max(1e-300);
    let max_residual = pairs
        .iter()
        .map(|(a, b)| linalg::dist(a, &linalg::scale(b, tau)))
        .fold(0.0f64, f64::max);
    let ok = max_residual <= tol * diam && tau >= -tol;
    Ok((ok, tau.max(0.0)))
}
