//! Minimum-volume circumscribed parallelotope `C(B)` for symmetric bodies.
//!
//! In the plane the optimum has both side directions flush with edges of the
//! polygon: fixing one slab normal at an edge normal, the area as a function
//! of the second normal's angle has a single-signed derivative between
//! support-vertex events, so interval minima sit at event angles, which are
//! again edge normals. Enumerating normal pairs is therefore exact. In higher
//! dimensions a seeded hill climb over slab frames is used and flagged
//! inexact.

use rand::Rng;

use super::{require_symmetric, ExtremalWitness, SolverBudget, SolverResult};
use crate::geom::hull::{convex_hull, facets};
use crate::geom::linalg::{self, cross2, dot, Mat};
use crate::geom::{GeomError, Polytope, Vector};
use crate::rng::stream_rng;

fn support(b: &Polytope, u: &[f64]) -> f64 {
    b.vertices.iter().map(|v| dot(u, v)).fold(f64::NEG_INFINITY, f64::max)
}

fn parallelogram_witness(b: &Polytope, a: &Vector, bn: &Vector) -> SolverResult<ExtremalWitness> {
    let ha = support(b, a);
    let hb = support(b, bn);
    let frame = Mat::from_rows(&[a.clone(), bn.clone()]);
    let mut pts = Vec::with_capacity(4);
    for sa in [1.0, -1.0] {
        for sb in [1.0, -1.0] {
            let x = frame.solve(&[sa * ha, sb * hb]).ok_or(GeomError::ZeroVolume)?;
            pts.push(x);
        }
    }
    let mut object = convex_hull(&pts)?;
    object.symmetric = true;
    let value = 4.0 * ha * hb / cross2(a, bn).abs();
    Ok(ExtremalWitness { object, value, exact: true })
}

fn min_parallelogram_2d(b: &Polytope) -> SolverResult<ExtremalWitness> {
    let hs = facets(b)?;
    // one normal per antipodal edge class
    let mut normals: Vec<Vector> = Vec::new();
    for (n, _) in &hs.rows {
        let canon = if n[1] < 0.0 || (n[1] == 0.0 && n[0] < 0.0) { linalg::neg(n) } else { n.clone() };
        if !normals.iter().any(|m| linalg::dist(m, &canon) <= 1e-9) {
            normals.push(canon);
        }
    }
    let mut best: Option<(f64, usize, usize)> = None;
    for i in 0..normals.len() {
        for j in i + 1..normals.len() {
            let s = cross2(&normals[i], &normals[j]).abs();
            if s <= 1e-12 {
                continue;
            }
            let area = 4.0 * support(b, &normals[i]) * support(b, &normals[j]) / s;
            if best.is_none_or(|(v, _, _)| area < v) {
                best = Some((area, i, j));
            }
        }
    }
    let (_, i, j) = best.ok_or(GeomError::ZeroVolume)?;
    parallelogram_witness(b, &normals[i].clone(), &normals[j].clone())
}

fn frame_volume(b: &Polytope, frame: &Mat) -> f64 {
    let d = frame.d;
    let det = frame.det().abs();
    if det <= 1e-12 {
        return f64::INFINITY;
    }
    let mut prod = 1.0;
    for i in 0..d {
        prod *= support(b, frame.row(i));
    }
    2f64.powi(d as i32) * prod / det
}

fn parallelotope_witness(b: &Polytope, frame: &Mat) -> SolverResult<ExtremalWitness> {
    let d = frame.d;
    let value = frame_volume(b, frame);
    let h: Vec<f64> = (0..d).map(|i| support(b, frame.row(i))).collect();
    let mut pts = Vec::with_capacity(1 << d);
    for mask in 0..(1u32 << d) {
        let rhs: Vec<f64> = (0..d)
            .map(|i| if (mask >> i) & 1 == 1 { h[i] } else { -h[i] })
            .collect();
        pts.push(frame.solve(&rhs).ok_or(GeomError::ZeroVolume)?);
    }
    let mut object = convex_hull(&pts)?;
    object.symmetric = true;
    Ok(ExtremalWitness { object, value, exact: false })
}

fn min_parallelotope_descent(b: &Polytope, budget: &SolverBudget) -> SolverResult<ExtremalWitness> {
    let d = b.dim;
    let mut rng = stream_rng(budget.rng_seed, 0x9A7A);
    let mut best_frame = Mat::identity(d);
    let mut best_val = frame_volume(b, &best_frame);
    for restart in 0..budget.restarts.max(1) {
        let mut frame = if restart == 0 {
            Mat::identity(d)
        } else {
            loop {
                let mut m = Mat::zeros(d);
                for i in 0..d {
                    let mut row: Vector = (0..d).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
                    let n = linalg::norm(&row);
                    if n < 1e-6 {
                        row = vec![0.0; d];
                        row[i] = 1.0;
                    }
                    let n = linalg::norm(&row);
                    for (j, x) in row.iter().enumerate() {
                        m.set(i, j, x / n);
                    }
                }
                if m.det().abs() > 0.1 {
                    break m;
                }
            }
        };
        let mut cur = frame_volume(b, &frame);
        let mut sigma = 0.2;
        let mut stale = 0u32;
        for _ in 0..budget.max_iters {
            let i = rng.gen_range(0..d);
            let mut row: Vector = frame.row(i).to_vec();
            for x in row.iter_mut() {
                *x += sigma * (rng.gen::<f64>() * 2.0 - 1.0);
            }
            let n = linalg::norm(&row);
            if n < 1e-9 {
                continue;
            }
            let old: Vector = frame.row(i).to_vec();
            for (j, x) in row.iter().enumerate() {
                frame.set(i, j, x / n);
            }
            let v = frame_volume(b, &frame);
            if v < cur {
                cur = v;
                stale = 0;
            } else {
                for (j, x) in old.iter().enumerate() {
                    frame.set(i, j, *x);
                }
                stale += 1;
                if stale >= 200 {
                    sigma *= 0.5;
                    stale = 0;
                    if sigma < 1e-7 {
                        break;
                    }
                }
            }
        }
        if cur < best_val {
            best_val = cur;
            best_frame = frame;
        }
    }
    parallelotope_witness(b, &best_frame)
}

/// Minimum-volume parallelotope containing a symmetric body. Exact in the
/// plane (flush-pair enumeration), seeded local descent in d >= 3.
pub fn min_circumscribed_parallelotope(
    b: &Polytope,
    budget: &SolverBudget,
) -> SolverResult<ExtremalWitness> {
    require_symmetric(b)?;
    if b.dim == 2 {
        min_parallelogram_2d(b)
    } else {
        min_parallelotope_descent(b, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{cube, regular_ngon};
    use crate::geom::linear_image;

    #[test]
    fn square_is_its_own_parallelogram() {
        let w = min_circumscribed_parallelotope(&cube(2).unwrap(), &SolverBudget::default()).unwrap();
        assert!(w.exact);
        assert!((w.value - 4.0).abs() < 1e-12);
    }

    #[test]
    fn hexagon_minimum_is_two_sqrt3() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let w = min_circumscribed_parallelotope(&hex, &SolverBudget::default()).unwrap();
        assert!((w.value - 2.0 * 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn affine_equivariance_of_the_minimum() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let m = Mat::from_rows(&[vec![1.4, 0.3], vec![-0.2, 0.9]]);
        let img = linear_image(&hex, &m).unwrap();
        let w = min_circumscribed_parallelotope(&img, &SolverBudget::default()).unwrap();
        let expected = 2.0 * 3f64.sqrt() * m.det().abs();
        assert!((w.value - expected).abs() < 1e-9 * expected);
    }

    #[test]
    fn witness_contains_the_body() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let w = min_circumscribed_parallelotope(&hex, &SolverBudget::default()).unwrap();
        let hs = crate::geom::hull::facets(&w.object).unwrap();
        for v in &hex.vertices {
            assert!(hs.contains(v, 1e-9));
        }
    }

    #[test]
    fn cube3_is_a_fixed_point() {
        let c = cube(3).unwrap();
        let w = min_circumscribed_parallelotope(&c, &SolverBudget::default()).unwrap();
        assert!(!w.exact);
        assert!((w.value - 8.0).abs() < 1e-9);
        let hs = crate::geom::hull::facets(&w.object).unwrap();
        for v in &c.vertices {
            assert!(hs.contains(v, 1e-9));
        }
    }
}
