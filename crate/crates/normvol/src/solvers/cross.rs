//! Maximum-volume inscribed cross-polytope `I(B)` for symmetric bodies.

use rand::seq::SliceRandom;

use super::{require_symmetric, ExtremalWitness, SolverBudget, SolverResult};
use crate::geom::hull::{binomial, convex_hull, for_each_combination};
use crate::geom::linalg::{self, det_of_rows, dot, orthogonal_to};
use crate::geom::volume::factorial;
use crate::geom::{support_point, Polytope, Vector};
use crate::rng::stream_rng;

fn witness_from_spokes(
    b: &Polytope,
    spokes: &[Vector],
    exact: bool,
) -> SolverResult<ExtremalWitness> {
    let mut pts: Vec<Vector> = Vec::with_capacity(2 * spokes.len());
    for q in spokes {
        pts.push(q.clone());
        pts.push(linalg::neg(q));
    }
    let mut object = convex_hull(&pts)?;
    object.symmetric = true;
    let refs: Vec<&[f64]> = spokes.iter().map(|q| q.as_slice()).collect();
    let value = 2f64.powi(b.dim as i32) / factorial(b.dim) * det_of_rows(&refs).abs();
    Ok(ExtremalWitness { object, value, exact })
}

/// Maximize `(2^d / d!) |det(q_1, ..., q_d)|` over d-tuples of vertices of a
/// symmetric body; the objective is linear in each argument, so the optimum
/// sits on vertices. Exhaustive over antipodal classes within budget, with an
/// alternating support-point ascent as fallback.
pub fn max_cross_polytope(b: &Polytope, budget: &SolverBudget) -> SolverResult<ExtremalWitness> {
    require_symmetric(b)?;
    let d = b.dim;
    let classes = b.antipodal_classes()?;
    let reps: Vec<&Vector> = classes.iter().map(|(i, _)| &b.vertices[*i]).collect();
    if binomial(reps.len() as u64, d as u64) <= budget.max_subsets {
        let mut best = f64::NEG_INFINITY;
        let mut best_idx: Vec<usize> = Vec::new();
        for_each_combination(reps.len(), d, |comb| {
            let rows: Vec<&[f64]> = comb.iter().map(|&i| reps[i].as_slice()).collect();
            let det = det_of_rows(&rows).abs();
            if det > best {
                best = det;
                best_idx = comb.to_vec();
            }
        });
        let spokes: Vec<Vector> = best_idx.iter().map(|&i| reps[i].clone()).collect();
        return witness_from_spokes(b, &spokes, true);
    }
    // alternating maximization: each spoke moves to the support point of the
    // cofactor direction of the others
    let mut rng = stream_rng(budget.rng_seed, 0xC405);
    let mut best: Option<(f64, Vec<Vector>)> = None;
    for _ in 0..budget.restarts.max(1) {
        let mut spokes: Vec<Vector> = reps
            .choose_multiple(&mut rng, d)
            .map(|q| (*q).clone())
            .collect();
        let mut cur = {
            let rows: Vec<&[f64]> = spokes.iter().map(|q| q.as_slice()).collect();
            det_of_rows(&rows).abs()
        };
        for _ in 0..budget.max_iters {
            let mut improved = false;
            for i in 0..d {
                let others: Vec<Vector> =
                    spokes.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
                let normal = orthogonal_to(&others);
                if linalg::norm(&normal) == 0.0 {
                    continue;
                }
                let cand_pos = support_point(b, &normal)?;
                let cand_neg = support_point(b, &linalg::neg(&normal))?;
                let cand = if dot(&normal, &cand_pos).abs() >= dot(&normal, &cand_neg).abs() {
                    cand_pos
                } else {
                    cand_neg
                };
                let old = std::mem::replace(&mut spokes[i], cand);
                let rows: Vec<&[f64]> = spokes.iter().map(|q| q.as_slice()).collect();
                let v = det_of_rows(&rows).abs();
                if v > cur + 1e-15 * cur.max(1.0) {
                    cur = v;
                    improved = true;
                } else {
                    spokes[i] = old;
                }
            }
            if !improved {
                break;
            }
        }
        if best.as_ref().is_none_or(|(v, _)| cur > *v) {
            best = Some((cur, spokes));
        }
    }
    let (_, spokes) = best.expect("at least one restart");
    witness_from_spokes(b, &spokes, false)
}
