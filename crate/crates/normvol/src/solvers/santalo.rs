//! Santalo point: the interior translation center minimizing the volume of
//! the polar of the translated body.

use super::{SolverBudget, SolverError, SolverResult};
use crate::geom::linalg::{self, norm};
use crate::geom::volume::volume;
use crate::geom::{polar, translate, Polytope, Vector};

fn polar_volume_at(k: &Polytope, s: &[f64]) -> f64 {
    let shifted = translate(k, &linalg::neg(s));
    match polar(&shifted).and_then(|p| volume(&p)) {
        Ok(v) => v,
        Err(_) => f64::INFINITY,
    }
}

/// Minimize `s -> vol((K - s)°)` over the interior of K by damped descent
/// with central finite-difference gradients. Symmetric bodies short-circuit
/// to the origin. Stops once the accepted step falls below `1e-10 * diameter`;
/// running out of iterations first yields a `Stall` carrying the best iterate.
pub fn santalo_point(k: &Polytope, budget: &SolverBudget) -> SolverResult<Vector> {
    if k.is_negation_closed(1e-9) {
        return Ok(vec![0.0; k.dim]);
    }
    let d = k.dim;
    let diam = k.diameter().max(1e-300);
    let mut s = k.centroid_of_vertices();
    let mut fs = polar_volume_at(k, &s);
    if !fs.is_finite() {
        return Err(SolverError::Geom(crate::geom::GeomError::PolarUndefined { margin: 0.0 }));
    }
    let h = 1e-6 * diam;
    let mut step = 0.05 * diam;
    for _ in 0..budget.max_iters {
        let mut grad = vec![0.0; d];
        for i in 0..d {
            let mut hi = s.clone();
            hi[i] += h;
            let mut lo = s.clone();
            lo[i] -= h;
            let (fhi, flo) = (polar_volume_at(k, &hi), polar_volume_at(k, &lo));
            if !fhi.is_finite() || !flo.is_finite() {
                // near the boundary; fall back to a one-sided estimate
                grad[i] = if fhi.is_finite() { (fhi - fs) / h } else { (fs - flo) / h };
            } else {
                grad[i] = (fhi - flo) / (2.0 * h);
            }
        }
        let g = norm(&grad);
        if g == 0.0 {
            return Ok(s);
        }
        let dir: Vector = grad.iter().map(|x| -x / g).collect();
        step = (step * 2.0).min(0.25 * diam);
        let mut accepted = false;
        while step >= 1e-10 * diam {
            let cand: Vector = s.iter().zip(&dir).map(|(a, b)| a + step * b).collect();
            let fc = polar_volume_at(k, &cand);
            if fc < fs {
                s = cand;
                fs = fc;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted || step < 1e-10 * diam {
            return Ok(s);
        }
    }
    Err(SolverError::Stall { best: s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{cube, regular_ngon};
    use crate::geom::hull::convex_hull;

    #[test]
    fn symmetric_bodies_give_origin() {
        for b in [cube(2).unwrap(), regular_ngon(8, 1.0).unwrap(), cube(3).unwrap()] {
            let s = santalo_point(&b, &SolverBudget::default()).unwrap();
            assert!(norm(&s) == 0.0);
        }
    }

    #[test]
    fn triangle_santalo_is_the_centroid() {
        let t = convex_hull(&[vec![0.0, 0.0], vec![2.0, 0.1], vec![0.4, 1.7]]).unwrap();
        let s = santalo_point(&t, &SolverBudget::default()).unwrap();
        let c = t.centroid_of_vertices();
        let diam = t.diameter();
        assert!(linalg::dist(&s, &c) < 1e-6 * diam, "{s:?} vs {c:?}");
    }

    #[test]
    fn translation_equivariance() {
        let t = convex_hull(&[vec![0.0, 0.0], vec![1.5, 0.2], vec![0.3, 1.2]]).unwrap();
        let s0 = santalo_point(&t, &SolverBudget::default()).unwrap();
        let shift = vec![0.4, -0.7];
        let moved = translate(&t, &shift);
        let s1 = santalo_point(&moved, &SolverBudget::default()).unwrap();
        let expected = linalg::add(&s0, &shift);
        assert!(linalg::dist(&s1, &expected) < 1e-6 * t.diameter());
    }
}
