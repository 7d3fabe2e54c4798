//! Normed volumes of convex bodies in dimensions 2..=6.
//!
//! The crate bundles a small convex-geometry kernel (hulls, volumes, polars),
//! constructors for the extremal bodies that show up in normed polytope
//! approximation (simplices, simplex symmetrals, orthogonal simplex pairs,
//! Radon hexagons), exact desk-scale solvers for maximal inscribed polytopes,
//! maximal inscribed cross-polytopes and minimal circumscribed parallelotopes,
//! the four classical volume normalizations (Busemann, Holmes-Thompson,
//! Gromov's mass and mass*), shadow-system convexity certificates, and a
//! verification harness with a randomized search probing the planar
//! `Q6`-Mahler inequality.

pub mod bodies;
pub mod cli;
pub mod geom;
pub mod harness;
pub mod io;
pub mod normed;
pub mod rng;
pub mod shadow;
pub mod svg;
pub mod solvers;

pub use geom::{GeomError, HalfspaceList, Polytope, Vector};
