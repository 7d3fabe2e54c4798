//! Seeded random origin-symmetric polygons for the verification suites and
//! the conjecture search: a handful of support directions with log-uniform
//! radii, symmetrized and normalized to area pi.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::geom::hull::convex_hull;
use crate::geom::volume::volume;
use crate::geom::{Polytope, Vector};

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolygonGenParams {
    pub k_min: usize,
    pub k_max: usize,
    pub r_min: f64,
    pub r_max: f64,
}

impl Default for PolygonGenParams {
    fn default() -> Self {
        PolygonGenParams { k_min: 4, k_max: 10, r_min: 0.5, r_max: 2.0 }
    }
}

/// Draw a symmetric polygon with at least 4 vertices, normalized to area pi.
/// Returns the polygon and the number of direction classes drawn. Degenerate
/// draws (hulls collapsing below a quadrilateral) are skipped and redrawn
/// from the same stream.
pub fn random_symmetric_polygon(
    params: &PolygonGenParams,
    rng: &mut impl Rng,
) -> (Polytope, usize) {
    let ln_lo = params.r_min.ln();
    let ln_hi = params.r_max.ln();
    for _attempt in 0..1000 {
        let k = rng.gen_range(params.k_min..=params.k_max);
        let mut pts: Vec<Vector> = Vec::with_capacity(2 * k);
        for _ in 0..k {
            let theta = rng.gen::<f64>() * std::f64::consts::PI;
            let r = (ln_lo + rng.gen::<f64>() * (ln_hi - ln_lo)).exp();
            let p = vec![r * theta.cos(), r * theta.sin()];
            pts.push(vec![-p[0], -p[1]]);
            pts.push(p);
        }
        let Ok(mut hull) = convex_hull(&pts) else { continue };
        if hull.vertex_count() < 4 || hull.vertex_count() % 2 != 0 {
            continue;
        }
        let Ok(area) = volume(&hull) else { continue };
        let scale = (std::f64::consts::PI / area).sqrt();
        for v in hull.vertices.iter_mut() {
            for x in v.iter_mut() {
                *x *= scale;
            }
        }
        hull.symmetric = true;
        if !hull.is_negation_closed(1e-9) {
            continue;
        }
        return (hull, k);
    }
    unreachable!("polygon generator failed 1000 consecutive draws");
}
