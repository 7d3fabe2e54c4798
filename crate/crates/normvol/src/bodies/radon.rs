//! Radon-curve certificate for planar symmetric bodies.
//!
//! A symmetric disk bounds a Radon curve when some linear image has its polar
//! equal to its own rotation by pi/2. The certificate normalizes the body by
//! mapping a maximum-area inscribed parallelogram onto `(±1,0), (0,±1)` and
//! measures how far the polar of the normalized body is from its quarter
//! rotation. All maximum-area parallelograms are tried (the minimum deviation
//! is reported), which makes the reported value invariant under rotations of
//! the input.

use serde::{Deserialize, Serialize};

use crate::geom::linalg::Mat;
use crate::geom::{
    linear_image, polar, vertex_set_deviation, GeomError, GeomResult, Polytope, Vector,
};

/// Outcome of [`radon_certificate`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RadonCertificate {
    /// Row-major 2x2 map sending the chosen parallelogram to `(±1,0),(0,±1)`.
    pub normalizing_map: [[f64; 2]; 2],
    /// Vertex-set mismatch between the rotated normalized body and its polar.
    pub max_deviation: f64,
    /// Whether `max_deviation` is within the caller's tolerance.
    pub pass: bool,
}

/// Regular hexagon scaled so that its polar is its own rotation by pi/2;
/// circumradius `(2/sqrt(3))^(1/2)`.
pub fn radon_hexagon() -> Polytope {
    let r = (2.0 / 3f64.sqrt()).sqrt();
    super::regular_ngon(6, r).expect("static construction")
}

fn rot90(v: &Vector) -> Vector {
    vec![-v[1], v[0]]
}

/// Certify whether the boundary of a symmetric polygon is a Radon curve.
pub fn radon_certificate(p: &Polytope, tol: f64) -> GeomResult<RadonCertificate> {
    if p.dim != 2 {
        return Err(GeomError::UnsupportedDimension(p.dim));
    }
    if !p.is_negation_closed(1e-7) {
        return Err(GeomError::NotSymmetric);
    }
    let classes = p.antipodal_classes()?;
    let reps: Vec<&Vector> = classes.iter().map(|(i, _)| &p.vertices[*i]).collect();
    // maximum-area inscribed parallelograms have vertices at vertices of p
    let mut best_area = 0.0f64;
    let mut dets: Vec<(usize, usize, f64)> = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let det = reps[i][0] * reps[j][1] - reps[i][1] * reps[j][0];
            dets.push((i, j, det));
            best_area = best_area.max(det.abs());
        }
    }
    let scale = p.circumradius();
    if best_area <= 1e-12 * scale * scale {
        return Err(GeomError::CertificateFailed(
            "maximum-area inscribed parallelogram is degenerate".into(),
        ));
    }
    let mut best: Option<(Mat, f64)> = None;
    for (i, j, det) in dets {
        if det.abs() < best_area * (1.0 - 1e-9) {
            continue;
        }
        let frame = Mat::from_rows(&[
            vec![reps[i][0], reps[j][0]],
            vec![reps[i][1], reps[j][1]],
        ]);
        let Some(t) = frame.inverse() else { continue };
        let normalized = linear_image(p, &t)?;
        let polar_body = polar(&normalized)?;
        let rotated: Vec<Vector> = normalized.vertices.iter().map(rot90).collect();
        let dev = vertex_set_deviation(&rotated, &polar_body.vertices);
        if best.as_ref().is_none_or(|(_, d)| dev < *d) {
            best = Some((t, dev));
        }
    }
    let (t, max_deviation) =
        best.ok_or_else(|| GeomError::CertificateFailed("no usable parallelogram frame".into()))?;
    Ok(RadonCertificate {
        normalizing_map: [[t.at(0, 0), t.at(0, 1)], [t.at(1, 0), t.at(1, 1)]],
        max_deviation,
        pass: max_deviation <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{cube, regular_ngon};
    use crate::geom::hull::convex_hull;
    use crate::geom::linalg;
    use crate::geom::volume::volume;

    #[test]
    fn radon_hexagon_passes_certificate() {
        let cert = radon_certificate(&radon_hexagon(), 1e-9).unwrap();
        assert!(cert.pass, "deviation {}", cert.max_deviation);
    }

    #[test]
    fn volume_product_is_scale_invariant() {
        let a = radon_hexagon();
        let b = regular_ngon(6, 1.0).unwrap();
        let prod = |p: &Polytope| volume(p).unwrap() * volume(&polar(p).unwrap()).unwrap();
        assert!((prod(&a) - prod(&b)).abs() < 1e-9);
        assert!((prod(&b) - 4.5 * 3f64.sqrt() * (2.0 / 3f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn square_fails_certificate() {
        // a parallelogram normalizes to the diamond, whose polar is the
        // square, not the diamond's quarter turn; 4 = 0 mod 4 sides cannot
        // bound a polygonal Radon curve
        let cert = radon_certificate(&cube(2).unwrap(), 1e-9).unwrap();
        assert!(!cert.pass);
        assert!(cert.max_deviation > 1e-3, "deviation {}", cert.max_deviation);
    }

    #[test]
    fn generic_octagon_fails_certificate() {
        let dirs = [0.15f64, 0.95, 1.8, 2.55];
        let radii = [1.0f64, 1.08, 0.93, 1.05];
        let mut pts = Vec::new();
        for (t, r) in dirs.iter().zip(radii) {
            pts.push(vec![r * t.cos(), r * t.sin()]);
            pts.push(vec![-r * t.cos(), -r * t.sin()]);
        }
        let mut oct = convex_hull(&pts).unwrap();
        oct.symmetric = true;
        assert_eq!(oct.vertex_count(), 8);
        let cert = radon_certificate(&oct, 1e-9).unwrap();
        assert!(cert.max_deviation > 1e-3, "deviation {}", cert.max_deviation);
    }

    #[test]
    fn deviation_is_rotation_invariant() {
        let bodies = [radon_hexagon(), cube(2).unwrap()];
        for body in &bodies {
            let base = radon_certificate(body, 1e-9).unwrap().max_deviation;
            for angle in [0.3f64, 1.1, 2.4] {
                let m = Mat::from_rows(&[
                    vec![angle.cos(), -angle.sin()],
                    vec![angle.sin(), angle.cos()],
                ]);
                let rotated = crate::geom::linear_image(body, &m).unwrap();
                let dev = radon_certificate(&rotated, 1e-9).unwrap().max_deviation;
                assert!((dev - base).abs() < 1e-7, "base {base} rotated {dev}");
            }
        }
    }

    #[test]
    fn normalized_hexagon_polar_is_quarter_turn() {
        let hex = radon_hexagon();
        let cert = radon_certificate(&hex, 1e-9).unwrap();
        let m = Mat::from_rows(&[
            cert.normalizing_map[0].to_vec(),
            cert.normalizing_map[1].to_vec(),
        ]);
        let normalized = crate::geom::linear_image(&hex, &m).unwrap();
        // the normalized hexagon is the lattice hexagon (1,0),(1,1)... up to
        // a signed permutation; its polar has the same vertex set rotated
        let pol = polar(&normalized).unwrap();
        for v in &pol.vertices {
            let best = normalized
                .vertices
                .iter()
                .map(|w| linalg::dist(&super::rot90(w), v))
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-9);
        }
    }
}
