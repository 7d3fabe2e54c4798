//! Maximum-volume inscribed polytopes with a vertex budget.

use rand::seq::SliceRandom;

use super::{require_symmetric, ExtremalWitness, SolverBudget, SolverError, SolverResult};
use crate::geom::hull::{binomial, convex_hull, for_each_combination};
use crate::geom::volume::{volume, volume_of_points};
use crate::geom::{Polytope, Vector};
use crate::rng::stream_rng;

fn witness_from_indices(b: &Polytope, idx: &[usize], exact: bool) -> SolverResult<ExtremalWitness> {
    let pts: Vec<Vector> = idx.iter().map(|&i| b.vertices[i].clone()).collect();
    let object = convex_hull(&pts)?;
    let value = volume(&object)?;
    Ok(ExtremalWitness { object, value, exact })
}

fn whole_body_witness(b: &Polytope) -> SolverResult<ExtremalWitness> {
    let value = volume(b)?;
    Ok(ExtremalWitness { object: b.clone(), value, exact: true })
}

/// Maximum-volume polytope with at most `n` vertices inscribed in `B`.
///
/// The optimum over a polytope is attained with all vertices among the
/// vertices of `B`, so the search runs over vertex subsets: exhaustively when
/// `C(|V|, n)` fits the budget, otherwise by seeded steepest-ascent vertex
/// swaps with restarts.
pub fn max_inscribed_polytope(
    b: &Polytope,
    n: usize,
    budget: &SolverBudget,
) -> SolverResult<ExtremalWitness> {
    let d = b.dim;
    if n < d + 1 {
        return Err(SolverError::InvalidN { n, need: d + 1 });
    }
    let m = b.vertex_count();
    if m <= n {
        return whole_body_witness(b);
    }
    if binomial(m as u64, n as u64) <= budget.max_subsets {
        let mut best_vol = f64::NEG_INFINITY;
        let mut best_idx: Vec<usize> = Vec::new();
        for_each_combination(m, n, |comb| {
            let pts: Vec<&Vector> = comb.iter().map(|&i| &b.vertices[i]).collect();
            let v = volume_of_points(d, &pts);
            if v > best_vol {
                best_vol = v;
                best_idx = comb.to_vec();
            }
        });
        return witness_from_indices(b, &best_idx, true);
    }
    // local search: single-vertex swap steepest ascent, seeded restarts
    let mut rng = stream_rng(budget.rng_seed, 0x5131);
    let mut best: Option<(f64, Vec<usize>)> = None;
    let all: Vec<usize> = (0..m).collect();
    for _ in 0..budget.restarts.max(1) {
        let mut idx: Vec<usize> = all
            .choose_multiple(&mut rng, n)
            .copied()
            .collect();
        idx.sort_unstable();
        let mut cur = subset_volume(b, &idx);
        for _ in 0..budget.max_iters {
            let mut improved = false;
            let mut swap_best = cur;
            let mut swap = None;
            for pos in 0..n {
                for &cand in &all {
                    if idx.contains(&cand) {
                        continue;
                    }
                    let old = idx[pos];
                    idx[pos] = cand;
                    idx.sort_unstable();
                    let v = subset_volume(b, &idx);
                    if v > swap_best {
                        swap_best = v;
                        swap = Some(idx.clone());
                        improved = true;
                    }
                    idx.retain(|&i| i != cand);
                    idx.push(old);
                    idx.sort_unstable();
                }
            }
            if let (true, Some(next)) = (improved, swap.take()) {
                idx = next;
                cur = swap_best;
            } else {
                break;
            }
        }
        if best.as_ref().is_none_or(|(v, _)| cur > *v) {
            best = Some((cur, idx));
        }
    }
    let (_, idx) = best.expect("at least one restart");
    witness_from_indices(b, &idx, false)
}

fn subset_volume(b: &Polytope, idx: &[usize]) -> f64 {
    let pts: Vec<&Vector> = idx.iter().map(|&i| &b.vertices[i]).collect();
    volume_of_points(b.dim, &pts)
}

/// Maximum-area origin-symmetric 2m-gon inscribed in a symmetric polygon,
/// searching only antipodal vertex pairs. For even vertex budgets this
/// matches the unrestricted maximum (Dowker-type symmetry).
pub fn max_inscribed_polygon_symmetric(
    b: &Polytope,
    two_m: usize,
    budget: &SolverBudget,
) -> SolverResult<ExtremalWitness> {
    if b.dim != 2 {
        return Err(SolverError::Geom(crate::geom::GeomError::UnsupportedDimension(b.dim)));
    }
    require_symmetric(b)?;
    if two_m % 2 != 0 || two_m < 4 {
        return Err(SolverError::InvalidN { n: two_m, need: 4 });
    }
    let m = two_m / 2;
    let classes = b.antipodal_classes()?;
    if classes.len() <= m {
        return whole_body_witness(b);
    }
    if binomial(classes.len() as u64, m as u64) > budget.max_subsets {
        return max_inscribed_polytope(b, two_m, budget);
    }
    let mut best_vol = f64::NEG_INFINITY;
    let mut best_idx: Vec<usize> = Vec::new();
    for_each_combination(classes.len(), m, |comb| {
        let mut idx: Vec<usize> = comb
            .iter()
            .flat_map(|&c| [classes[c].0, classes[c].1])
            .collect();
        idx.sort_unstable();
        let v = subset_volume(b, &idx);
        if v > best_vol {
            best_vol = v;
            best_idx = idx;
        }
    });
    witness_from_indices(b, &best_idx, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{cube, regular_ngon, simplex_symmetral};
    use crate::geom::volume::volume;

    #[test]
    fn square_is_its_own_q4() {
        let sq = cube(2).unwrap();
        let w = max_inscribed_polytope(&sq, 4, &SolverBudget::default()).unwrap();
        assert!(w.exact);
        assert!((w.value - 4.0).abs() < 1e-12);
    }

    #[test]
    fn hexagon_q4_is_sqrt3() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let w = max_inscribed_polytope(&hex, 4, &SolverBudget::default()).unwrap();
        assert!(w.exact);
        assert!((w.value - 3f64.sqrt()).abs() < 1e-12);
        let ws = max_inscribed_polygon_symmetric(&hex, 4, &SolverBudget::default()).unwrap();
        assert!((ws.value - w.value).abs() < 1e-12);
    }

    #[test]
    fn symmetral3_q4_recovers_the_simplex() {
        let b = simplex_symmetral(3).unwrap();
        let s = crate::bodies::regular_simplex(3).unwrap();
        let w = max_inscribed_polytope(&b, 4, &SolverBudget::default()).unwrap();
        assert!(w.exact);
        let vs = volume(&s).unwrap();
        assert!((w.value - vs).abs() < 1e-9 * vs, "{} vs {}", w.value, vs);
    }

    #[test]
    fn octagon_symmetric_q6_matches_unrestricted() {
        let oct = regular_ngon(8, 1.0).unwrap();
        let a = max_inscribed_polytope(&oct, 6, &SolverBudget::default()).unwrap();
        let b = max_inscribed_polygon_symmetric(&oct, 6, &SolverBudget::default()).unwrap();
        assert!((a.value - b.value).abs() < 1e-9);
    }

    #[test]
    fn monotone_in_vertex_budget() {
        let oct = regular_ngon(8, 1.3).unwrap();
        let vals: Vec<f64> = (3..=8)
            .map(|n| max_inscribed_polytope(&oct, n, &SolverBudget::default()).unwrap().value)
            .collect();
        for w in vals.windows(2) {
            assert!(w[0] <= w[1] + 1e-12);
        }
        assert!(vals[5] <= volume(&oct).unwrap() + 1e-12);
    }

    #[test]
    fn invalid_n_is_rejected() {
        let sq = cube(2).unwrap();
        assert!(matches!(
            max_inscribed_polytope(&sq, 2, &SolverBudget::default()),
            Err(SolverError::InvalidN { .. })
        ));
    }

    #[test]
    fn local_search_close_to_exhaustive_on_polygon() {
        let gon = regular_ngon(14, 1.0).unwrap();
        let exact = max_inscribed_polytope(&gon, 5, &SolverBudget::default()).unwrap();
        let tight = SolverBudget { max_subsets: 10, restarts: 12, max_iters: 200, rng_seed: 9 };
        let heur = max_inscribed_polytope(&gon, 5, &tight).unwrap();
        assert!(!heur.exact);
        assert!(heur.value <= exact.value + 1e-12);
        assert!(heur.value >= 0.98 * exact.value, "{} vs {}", heur.value, exact.value);
    }

    #[test]
    fn deterministic_given_budget() {
        let gon = regular_ngon(16, 1.0).unwrap();
        let tight = SolverBudget { max_subsets: 10, restarts: 6, max_iters: 100, rng_seed: 1234 };
        let a = max_inscribed_polytope(&gon, 6, &tight).unwrap();
        let b = max_inscribed_polytope(&gon, 6, &tight).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.object.vertices, b.object.vertices);
    }
}
