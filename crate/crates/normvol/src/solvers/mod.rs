//! Extremal solvers: maximal inscribed polytopes `Q_n`, maximal inscribed
//! cross-polytopes `I`, minimal circumscribed parallelotopes `C`, and the
//! Santalo point.
//!
//! At desk scale everything runs as exact subset enumeration over the body's
//! vertices (justified for inscribed problems because an optimal inscribed
//! polytope can be assumed to have its vertices among the body's vertices).
//! Past the `max_subsets` budget the solvers switch to seeded local search
//! and flag the result `exact = false`.

mod cross;
mod disk;
mod inscribed;
mod parallelotope;
mod santalo;

pub use cross::max_cross_polytope;
pub use disk::max_inscribed_ngon_disk;
pub use inscribed::{max_inscribed_polygon_symmetric, max_inscribed_polytope};
pub use parallelotope::min_circumscribed_parallelotope;
pub use santalo::santalo_point;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{GeomError, Polytope, Vector};

/// Caps and seeding for a solver run. Identical budgets (including the seed)
/// give bitwise-identical outputs.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SolverBudget {
    /// Exhaustive enumeration is used while the subset count stays below this.
    pub max_subsets: u64,
    /// Local-search restarts when enumeration is out of budget.
    pub restarts: u32,
    /// Iteration cap per local search / descent.
    pub max_iters: u32,
    /// Seed for all stochastic choices.
    pub rng_seed: u64,
}

impl SolverBudget {
    pub fn seeded(rng_seed: u64) -> Self {
        SolverBudget { max_subsets: 2_000_000, restarts: 16, max_iters: 10_000, rng_seed }
    }
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget::seeded(0)
    }
}

/// An optimizer found by a solver, with its volume and an exactness flag.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtremalWitness {
    pub object: Polytope,
    pub value: f64,
    /// True iff the result came from exhaustive enumeration.
    pub exact: bool,
}

#[derive(Error, Debug, Clone)]
pub enum SolverError {
    #[error("invalid vertex budget n = {n}: need at least {need}")]
    InvalidN { n: usize, need: usize },
    #[error("body must be origin-symmetric for this solver")]
    NotSymmetric,
    #[error("solver stalled before convergence; best iterate retained")]
    Stall { best: Vector },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

pub type SolverResult<T> = Result<T, SolverError>;

pub(crate) fn require_symmetric(b: &Polytope) -> SolverResult<()> {
    if b.is_negation_closed(1e-7) {
        Ok(())
    } else {
        Err(SolverError::NotSymmetric)
    }
}
