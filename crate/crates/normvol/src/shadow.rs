//! Shadow systems: one-parameter families `C(t) = conv{x + t lambda_x v}`,
//! grid-based convexity certificates for their volume and for the reciprocal
//! Santalo-centered polar volume, and the simultaneous-projection cascade
//! onto hyperplane families through the origin.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::hull::convex_hull;
use crate::geom::linalg::{self, dot, norm};
use crate::geom::volume::volume;
use crate::geom::{polar, translate, GeomError, Polytope, Vector};
use crate::solvers::{santalo_point, SolverBudget, SolverError};

/// Base points, per-point speeds and a common direction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ShadowSystem {
    pub base: Vec<Vector>,
    pub speeds: Vec<f64>,
    pub direction: Vector,
}

#[derive(Error, Debug, Clone)]
pub enum ShadowError {
    #[error("speeds ({speeds}) and base ({base}) lengths differ, or direction is zero")]
    MalformedSystem { base: usize, speeds: usize },
    #[error("need at least 3 grid steps, got {0}")]
    InvalidGrid(usize),
    #[error("hull degenerates at t = {t}")]
    FlatAt { t: f64 },
    #[error("hyperplane normals do not span the space")]
    InvalidFamily,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

pub type ShadowResult<T> = Result<T, ShadowError>;

/// Sampled values of a scalar family with its worst centered second
/// difference; `pass` certifies convexity up to `tol * max|values|`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConvexityReport {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub min_second_difference: f64,
    pub pass: bool,
}

impl ShadowSystem {
    pub fn new(base: Vec<Vector>, speeds: Vec<f64>, direction: Vector) -> ShadowResult<Self> {
        if base.len() != speeds.len() || base.is_empty() || norm(&direction) == 0.0 {
            return Err(ShadowError::MalformedSystem { base: base.len(), speeds: speeds.len() });
        }
        Ok(ShadowSystem { base, speeds, direction })
    }

    pub fn dim(&self) -> usize {
        self.direction.len()
    }

    pub fn points_at(&self, t: f64) -> Vec<Vector> {
        self.base
            .iter()
            .zip(&self.speeds)
            .map(|(x, s)| {
                x.iter().zip(&self.direction).map(|(xi, vi)| xi + t * s * vi).collect()
            })
            .collect()
    }
}

/// The body `C(t)`; errors when the moved points go flat.
pub fn evaluate(ss: &ShadowSystem, t: f64) -> ShadowResult<Polytope> {
    convex_hull(&ss.points_at(t)).map_err(|e| match e {
        GeomError::FlatInput { .. } | GeomError::TooFewPoints { .. } => ShadowError::FlatAt { t },
        other => ShadowError::Geom(other),
    })
}

fn grid(t_min: f64, t_max: f64, steps: usize) -> Vec<f64> {
    let h = (t_max - t_min) / (steps - 1) as f64;
    (0..steps).map(|i| t_min + h * i as f64).collect()
}

fn report_from_values(grid_pts: Vec<f64>, values: Vec<f64>, tol: f64) -> ConvexityReport {
    let max_val = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut min_dd = f64::INFINITY;
    for i in 1..values.len() - 1 {
        min_dd = min_dd.min(values[i + 1] - 2.0 * values[i] + values[i - 1]);
    }
    ConvexityReport { pass: min_dd >= -tol * max_val, grid: grid_pts, values, min_second_difference: min_dd }
}

/// Sample `t -> vol(C(t))` on a uniform grid and certify convexity through
/// centered second differences.
pub fn volume_profile(
    ss: &ShadowSystem,
    t_min: f64,
    t_max: f64,
    steps: usize,
    tol: f64,
) -> ShadowResult<ConvexityReport> {
    if steps < 3 {
        return Err(ShadowError::InvalidGrid(steps));
    }
    let grid_pts = grid(t_min, t_max, steps);
    let mut values = Vec::with_capacity(steps);
    for &t in &grid_pts {
        let body = evaluate(ss, t)?;
        values.push(volume(&body).map_err(|_| ShadowError::FlatAt { t })?);
    }
    Ok(report_from_values(grid_pts, values, tol))
}

/// Sample `t -> 1 / vol((C(t) - s(C(t)))°)` (Santalo-centered reciprocal
/// polar volume) and certify convexity.
pub fn mr_profile(
    ss: &ShadowSystem,
    t_min: f64,
    t_max: f64,
    steps: usize,
    tol: f64,
    budget: &SolverBudget,
) -> ShadowResult<ConvexityReport> {
    if steps < 3 {
        return Err(ShadowError::InvalidGrid(steps));
    }
    let grid_pts = grid(t_min, t_max, steps);
    let mut values = Vec::with_capacity(steps);
    for &t in &grid_pts {
        let body = evaluate(ss, t)?;
        let s = santalo_point(&body, budget)?;
        let centered = translate(&body, &linalg::neg(&s));
        let pv = volume(&polar(&centered)?)?;
        values.push(1.0 / pv);
    }
    Ok(report_from_values(grid_pts, values, tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CascadeStatus {
    /// `f` dropped to the requested threshold.
    Converged,
    /// Iteration cap reached before the threshold (not an error; the lemma
    /// guarantees only closure).
    IterationCap,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CascadeResult {
    pub final_points: Vec<Vector>,
    /// `f = sum |y_i|` after each accepted projection, starting with f(X).
    pub trace: Vec<f64>,
    pub status: CascadeStatus,
}

fn project_onto(normal: &Vector, y: &Vector) -> Vector {
    let c = dot(normal, y);
    y.iter().zip(normal).map(|(yi, ni)| yi - c * ni).collect()
}

fn cascade_f(points: &[Vector]) -> f64 {
    points.iter().map(|y| norm(y)).sum()
}

/// Repeatedly project all points simultaneously onto the hyperplane (through
/// the origin) that maximizes the decrease of `f(Y) = sum |y_i|`, until
/// `f <= eps` or the sweep cap is hit. The normals must span the space so the
/// common intersection of the hyperplanes is the origin alone.
pub fn projection_cascade(
    hyperplanes: &[Vector],
    points: &[Vector],
    eps: f64,
    max_sweeps: usize,
) -> ShadowResult<CascadeResult> {
    if hyperplanes.is_empty() || points.is_empty() {
        return Err(ShadowError::InvalidFamily);
    }
    let d = hyperplanes[0].len();
    let normals: Vec<Vector> = hyperplanes
        .iter()
        .map(|n| {
            let l = norm(n);
            n.iter().map(|x| x / l).collect()
        })
        .collect();
    if linalg::rank(&normals, 1e-9) < d {
        return Err(ShadowError::InvalidFamily);
    }
    let mut pts: Vec<Vector> = points.to_vec();
    let mut f = cascade_f(&pts);
    let mut trace = vec![f];
    let mut status = CascadeStatus::IterationCap;
    for _ in 0..max_sweeps {
        if f <= eps {
            status = CascadeStatus::Converged;
            break;
        }
        let mut best: Option<(f64, Vec<Vector>)> = None;
        for n in &normals {
            let cand: Vec<Vector> = pts.iter().map(|y| project_onto(n, y)).collect();
            let fc = cascade_f(&cand);
            if best.as_ref().is_none_or(|(bf, _)| fc < *bf) {
                best = Some((fc, cand));
            }
        }
        let (fc, cand) = best.expect("nonempty family");
        if fc >= f {
            break; // no hyperplane makes progress (all points on all planes)
        }
        pts = cand;
        f = fc;
        trace.push(f);
    }
    if f <= eps {
        status = CascadeStatus::Converged;
    }
    Ok(CascadeResult { final_points: pts, trace, status })
}

/// Seeded random shadow system used by the verification suites: a handful of
/// Gaussian base points, unit Gaussian direction, speeds uniform in [-1, 1].
pub fn random_shadow_system(dim: usize, rng: &mut impl Rng) -> ShadowSystem {
    let count = rng.gen_range(dim + 2..=dim + 8);
    let base: Vec<Vector> = (0..count)
        .map(|_| (0..dim).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect())
        .collect();
    let speeds: Vec<f64> = (0..count).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
    let mut direction: Vector = (0..dim).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
    if norm(&direction) < 1e-6 {
        direction = vec![1.0; dim];
    }
    let l = norm(&direction);
    direction = direction.iter().map(|x| x / l).collect();
    ShadowSystem { base, speeds, direction }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::vertex_sets_match;
    use crate::rng::stream_rng;

    fn square_system() -> ShadowSystem {
        ShadowSystem::new(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
            vec![0.0, 0.0, 1.0, 0.0],
            vec![1.0, 0.0],
        )
        .unwrap()
    }

    #[test]
    fn at_zero_is_the_base_hull() {
        let ss = square_system();
        let b = evaluate(&ss, 0.0).unwrap();
        let hull = convex_hull(&ss.base).unwrap();
        assert!(vertex_sets_match(&b.vertices, &hull.vertices, 1e-12));
    }

    #[test]
    fn zero_speeds_give_a_constant_body() {
        let ss = ShadowSystem::new(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.3, 1.0]],
            vec![0.0, 0.0, 0.0],
            vec![0.0, 1.0],
        )
        .unwrap();
        let report = volume_profile(&ss, -2.0, 2.0, 11, 1e-8).unwrap();
        assert!(report.pass);
        assert!(report.values.iter().all(|v| (v - report.values[0]).abs() < 1e-15));
        assert!(report.min_second_difference.abs() < 1e-15);
    }

    #[test]
    fn moved_square_vertex_volume() {
        // at t = 1 the vertex (1,1) moves to (2,1); shoelace of the explicit
        // hull gives 3/2
        let ss = square_system();
        let b = evaluate(&ss, 1.0).unwrap();
        assert!((volume(&b).unwrap() - 1.5).abs() < 1e-12);
    }

    #[test]
    fn random_systems_have_convex_volume_profiles() {
        let mut rng = stream_rng(7, 0);
        for dim in [2usize, 3] {
            for _ in 0..20 {
                let ss = random_shadow_system(dim, &mut rng);
                let report = volume_profile(&ss, -1.5, 1.5, 61, 1e-8).unwrap();
                assert!(report.pass, "dim {dim}: {}", report.min_second_difference);
            }
        }
    }

    #[test]
    fn grid_needs_three_steps() {
        let ss = square_system();
        assert!(matches!(
            volume_profile(&ss, 0.0, 1.0, 2, 1e-8),
            Err(ShadowError::InvalidGrid(2))
        ));
    }

    #[test]
    fn mr_profile_constant_for_translating_systems() {
        // equal speeds translate the body; the Santalo-centered polar volume
        // is translation invariant
        let ss = ShadowSystem::new(
            vec![vec![0.0, 0.0], vec![1.2, 0.1], vec![0.8, 1.0], vec![-0.1, 0.9]],
            vec![1.0, 1.0, 1.0, 1.0],
            vec![0.6, 0.8],
        )
        .unwrap();
        let report = mr_profile(&ss, -1.0, 1.0, 9, 1e-6, &SolverBudget::default()).unwrap();
        assert!(report.pass);
        let v0 = report.values[0];
        for v in &report.values {
            assert!((v - v0).abs() < 1e-6 * v0.abs(), "{v} vs {v0}");
        }
    }

    #[test]
    fn mr_profile_constant_symmetric_system() {
        let ss = ShadowSystem::new(
            vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![-1.0, 0.0], vec![0.0, -1.0]],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![1.0, 0.0],
        )
        .unwrap();
        let report = mr_profile(&ss, -1.0, 1.0, 9, 1e-6, &SolverBudget::default()).unwrap();
        assert!(report.pass);
        assert!(report.min_second_difference.abs() < 1e-12);
    }

    #[test]
    fn cascade_trivial_and_exact_cases() {
        let axes = vec![vec![0.0, 1.0], vec![1.0, 0.0]]; // x-axis, y-axis normals
        let r = projection_cascade(&axes, &[vec![0.0, 0.0]], 1e-12, 100).unwrap();
        assert_eq!(r.status, CascadeStatus::Converged);
        assert_eq!(r.trace, vec![0.0]);

        let r = projection_cascade(&axes, &[vec![3.0, 4.0]], 1e-12, 100).unwrap();
        assert_eq!(r.status, CascadeStatus::Converged);
        assert_eq!(r.trace.len(), 3); // 5 -> 3 -> 0
        assert_eq!(r.trace[0], 5.0);
        assert_eq!(r.trace[1], 3.0);
        assert_eq!(r.trace[2], 0.0);
    }

    #[test]
    fn cascade_on_random_instances_decreases_monotonically() {
        let mut rng = stream_rng(11, 0);
        for dim in [2usize, 3] {
            for _ in 0..5 {
                let k = rng.gen_range(dim + 1..dim + 4);
                let normals: Vec<Vector> = (0..k)
                    .map(|_| (0..dim).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect())
                    .collect();
                if linalg::rank(&normals, 1e-9) < dim {
                    continue;
                }
                let pts: Vec<Vector> = (0..5)
                    .map(|_| (0..dim).map(|_| rng.gen::<f64>() * 4.0 - 2.0).collect())
                    .collect();
                let f0 = cascade_f(&pts);
                let r = projection_cascade(&normals, &pts, 1e-6 * f0, 10_000).unwrap();
                assert_eq!(r.status, CascadeStatus::Converged);
                for w in r.trace.windows(2) {
                    assert!(w[1] < w[0]);
                }
            }
        }
    }

    #[test]
    fn cascade_rejects_non_spanning_family() {
        let normals = vec![vec![1.0, 0.0, 0.0], vec![-1.0, 0.0, 0.0]];
        let pts = vec![vec![1.0, 1.0, 1.0]];
        assert!(matches!(
            projection_cascade(&normals, &pts, 1e-9, 10),
            Err(ShadowError::InvalidFamily)
        ));
    }
}
