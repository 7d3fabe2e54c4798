//! The four classical volume normalizations of a finite-dimensional normed
//! space with unit ball `B`, and the functional `mu_n` — the normalized
//! volume of a maximum-volume polytope with at most n vertices inscribed in
//! `B`.
//!
//! * Busemann: `kappa_d / vol(B) * vol(S)`
//! * Holmes-Thompson: `vol(B°) / kappa_d * vol(S)`
//! * Gromov mass: `(2^d / d!) / vol(I(B)) * vol(S)` with `I(B)` the largest
//!   inscribed cross-polytope
//! * Gromov mass* (Benson): `2^d / vol(C(B)) * vol(S)` with `C(B)` the
//!   smallest circumscribed parallelotope

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::geom::volume::{factorial, volume};
use crate::geom::{polar, Polytope};
use crate::solvers::{
    max_cross_polytope, max_inscribed_polygon_symmetric, max_inscribed_polytope,
    min_circumscribed_parallelotope, ExtremalWitness, SolverBudget, SolverError, SolverResult,
};

/// Volume of the Euclidean unit ball, `kappa_d = pi^(d/2) / Gamma(d/2 + 1)`.
pub fn unit_ball_volume(d: usize) -> f64 {
    match d {
        0 => 1.0,
        1 => 2.0,
        _ => unit_ball_volume(d - 2) * std::f64::consts::TAU / d as f64,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VolumeKind {
    Busemann,
    HolmesThompson,
    Mass,
    MassStar,
}

impl VolumeKind {
    pub const ALL: [VolumeKind; 4] =
        [VolumeKind::Busemann, VolumeKind::HolmesThompson, VolumeKind::Mass, VolumeKind::MassStar];

    pub fn flag(&self) -> &'static str {
        match self {
            VolumeKind::Busemann => "bus",
            VolumeKind::HolmesThompson => "ht",
            VolumeKind::Mass => "mass",
            VolumeKind::MassStar => "mass-star",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "bus" | "busemann" => Some(VolumeKind::Busemann),
            "ht" | "holmes-thompson" => Some(VolumeKind::HolmesThompson),
            "mass" | "m" => Some(VolumeKind::Mass),
            "mass-star" | "m*" | "mstar" => Some(VolumeKind::MassStar),
            _ => None,
        }
    }
}

impl std::fmt::Display for VolumeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.flag())
    }
}

/// Content hash of a body (dimension, vertex bits, symmetry flag).
pub fn body_hash(p: &Polytope) -> String {
    let mut h = Sha256::new();
    h.update([p.dim as u8, p.symmetric as u8]);
    for v in &p.vertices {
        for x in v {
            h.update(x.to_bits().to_le_bytes());
        }
    }
    let digest = h.finalize();
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Slot {
    Volume,
    PolarVolume,
    InscribedCross,
    CircumscribedPara,
}

/// Write-once cache for the expensive per-body normalizer scalars, keyed by
/// body content hash. Concurrent re-insertion writes identical values.
#[derive(Default)]
pub struct VolumeCache {
    map: Mutex<HashMap<(String, Slot), (f64, bool)>>,
}

impl VolumeCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn get_or_try_insert(
        &self,
        key: (String, Slot),
        compute: impl FnOnce() -> SolverResult<(f64, bool)>,
    ) -> SolverResult<(f64, bool)> {
        if let Some(hit) = self.map.lock().unwrap().get(&key) {
            return Ok(*hit);
        }
        let val = compute()?;
        self.map.lock().unwrap().insert(key, val);
        Ok(val)
    }
}

fn slot_value(
    b: &Polytope,
    slot: Slot,
    budget: &SolverBudget,
    cache: Option<&VolumeCache>,
) -> SolverResult<(f64, bool)> {
    let compute = || -> SolverResult<(f64, bool)> {
        match slot {
            Slot::Volume => Ok((volume(b)?, true)),
            Slot::PolarVolume => Ok((volume(&polar(b)?)?, true)),
            Slot::InscribedCross => {
                let w = max_cross_polytope(b, budget)?;
                Ok((w.value, w.exact))
            }
            Slot::CircumscribedPara => {
                let w = min_circumscribed_parallelotope(b, budget)?;
                Ok((w.value, w.exact))
            }
        }
    };
    match cache {
        Some(c) => c.get_or_try_insert((body_hash(b), slot), compute),
        None => compute(),
    }
}

/// The scalar multiplying Lebesgue volume for a given unit ball and kind,
/// together with an exactness flag for the underlying solvers.
pub fn normalizer(
    b: &Polytope,
    kind: VolumeKind,
    budget: &SolverBudget,
    cache: Option<&VolumeCache>,
) -> SolverResult<(f64, bool)> {
    let d = b.dim;
    let kappa = unit_ball_volume(d);
    Ok(match kind {
        VolumeKind::Busemann => {
            let (v, _) = slot_value(b, Slot::Volume, budget, cache)?;
            (kappa / v, true)
        }
        VolumeKind::HolmesThompson => {
            let (v, _) = slot_value(b, Slot::PolarVolume, budget, cache)?;
            (v / kappa, true)
        }
        VolumeKind::Mass => {
            let (v, exact) = slot_value(b, Slot::InscribedCross, budget, cache)?;
            (2f64.powi(d as i32) / factorial(d) / v, exact)
        }
        VolumeKind::MassStar => {
            let (v, exact) = slot_value(b, Slot::CircumscribedPara, budget, cache)?;
            (2f64.powi(d as i32) / v, exact)
        }
    })
}

/// Normed volume of a polytope `S` in the space with unit ball `B`.
pub fn normed_volume(
    b: &Polytope,
    s: &Polytope,
    kind: VolumeKind,
    budget: &SolverBudget,
) -> SolverResult<f64> {
    let (nrm, _) = normalizer(b, kind, budget, None)?;
    Ok(nrm * volume(s)?)
}

/// A computed `mu_n` value with its witness and solver provenance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MuResult {
    pub kind: VolumeKind,
    pub n: usize,
    pub value: f64,
    pub witness: ExtremalWitness,
    /// Scalar multiplying Lebesgue volume for this body and kind.
    pub normalizer: f64,
    /// True iff every sub-solver ran exhaustively.
    pub exact: bool,
}

/// `mu_n` of a symmetric body: the chosen normed volume of a maximum-volume
/// inscribed polytope with at most n vertices. Even planar budgets use the
/// symmetric-pair solver, which agrees with the unrestricted maximum.
pub fn mu(b: &Polytope, n: usize, kind: VolumeKind, budget: &SolverBudget) -> SolverResult<MuResult> {
    mu_impl(b, n, kind, budget, None)
}

/// [`mu`] with normalizer scalars shared through `cache`.
pub fn mu_cached(
    b: &Polytope,
    n: usize,
    kind: VolumeKind,
    budget: &SolverBudget,
    cache: &VolumeCache,
) -> SolverResult<MuResult> {
    mu_impl(b, n, kind, budget, Some(cache))
}

fn mu_impl(
    b: &Polytope,
    n: usize,
    kind: VolumeKind,
    budget: &SolverBudget,
    cache: Option<&VolumeCache>,
) -> SolverResult<MuResult> {
    let d = b.dim;
    if n < d + 1 {
        return Err(SolverError::InvalidN { n, need: d + 1 });
    }
    if !b.is_negation_closed(1e-7) {
        return Err(SolverError::NotSymmetric);
    }
    let witness = if d == 2 && n % 2 == 0 {
        max_inscribed_polygon_symmetric(b, n, budget)?
    } else {
        max_inscribed_polytope(b, n, budget)?
    };
    let (nrm, nrm_exact) = normalizer(b, kind, budget, cache)?;
    Ok(MuResult {
        kind,
        n,
        value: nrm * witness.value,
        exact: witness.exact && nrm_exact,
        witness,
        normalizer: nrm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{cube, radon_hexagon, regular_ngon};
    use crate::geom::hull::convex_hull;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1.0)
    }

    #[test]
    fn unit_ball_volumes() {
        assert_eq!(unit_ball_volume(1), 2.0);
        assert!((unit_ball_volume(2) - PI).abs() < 1e-15);
        assert!((unit_ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!((unit_ball_volume(4) - PI * PI / 2.0).abs() < 1e-15);
        assert!((unit_ball_volume(5) - 8.0 * PI * PI / 15.0).abs() < 1e-14);
        assert!((unit_ball_volume(6) - PI.powi(3) / 6.0).abs() < 1e-14);
    }

    #[test]
    fn busemann_volume_of_the_ball_is_kappa() {
        let budget = SolverBudget::default();
        for b in [regular_ngon(6, 1.0).unwrap(), cube(3).unwrap()] {
            let v = normed_volume(&b, &b, VolumeKind::Busemann, &budget).unwrap();
            assert!(rel(v, unit_ball_volume(b.dim)) < 1e-12);
        }
    }

    #[test]
    fn mass_normalization_of_inscribed_cross() {
        let budget = SolverBudget::default();
        for b in [regular_ngon(6, 1.0).unwrap(), cube(3).unwrap()] {
            let i = max_cross_polytope(&b, &budget).unwrap();
            let v = normed_volume(&b, &i.object, VolumeKind::Mass, &budget).unwrap();
            let expected = 2f64.powi(b.dim as i32) / factorial(b.dim);
            assert!(rel(v, expected) < 1e-12, "{v} vs {expected}");
        }
    }

    #[test]
    fn hexagon_mass_volume_is_three() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let v = normed_volume(&hex, &hex, VolumeKind::Mass, &SolverBudget::default()).unwrap();
        assert!(rel(v, 3.0) < 1e-12);
    }

    #[test]
    fn hexagon_mu3_busemann_is_half_pi() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let r = mu(&hex, 3, VolumeKind::Busemann, &SolverBudget::default()).unwrap();
        assert!(r.exact);
        assert!(rel(r.value, PI / 2.0) < 1e-12, "{}", r.value);
    }

    #[test]
    fn hexagon_mu4_holmes_thompson_is_six_over_pi() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let r = mu(&hex, 4, VolumeKind::HolmesThompson, &SolverBudget::default()).unwrap();
        assert!(rel(r.value, 6.0 / PI) < 1e-12, "{}", r.value);
    }

    #[test]
    fn square_mass_star_values() {
        let sq = cube(2).unwrap();
        let budget = SolverBudget::default();
        let r3 = mu(&sq, 3, VolumeKind::MassStar, &budget).unwrap();
        assert!(rel(r3.value, 2.0) < 1e-12);
        for n in 4..=6 {
            let r = mu(&sq, n, VolumeKind::MassStar, &budget).unwrap();
            assert!(rel(r.value, 4.0) < 1e-12, "n={n}: {}", r.value);
        }
    }

    #[test]
    fn radon_hexagon_mu4_mass_star_is_two() {
        let b = radon_hexagon();
        let r = mu(&b, 4, VolumeKind::MassStar, &SolverBudget::default()).unwrap();
        assert!(rel(r.value, 2.0) < 1e-12, "{}", r.value);
    }

    #[test]
    fn mu4_mass_is_two_on_symmetric_polygons() {
        let budget = SolverBudget::default();
        let bodies = [
            regular_ngon(6, 1.0).unwrap(),
            regular_ngon(8, 1.0).unwrap(),
            convex_hull(&[
                vec![1.3, 0.1],
                vec![0.2, 0.9],
                vec![-0.8, 0.6],
                vec![-1.3, -0.1],
                vec![-0.2, -0.9],
                vec![0.8, -0.6],
            ])
            .unwrap(),
        ];
        for b in bodies {
            let r = mu(&b, 4, VolumeKind::Mass, &budget).unwrap();
            assert!(rel(r.value, 2.0) < 1e-9, "{}", r.value);
        }
    }

    #[test]
    fn value_ties_to_witness_and_normalizer() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let r = mu(&hex, 5, VolumeKind::HolmesThompson, &SolverBudget::default()).unwrap();
        assert!((r.value - r.normalizer * r.witness.value).abs() <= 1e-12 * r.value.abs());
    }

    #[test]
    fn monotone_in_n_for_all_kinds() {
        let oct = regular_ngon(8, 1.0).unwrap();
        let budget = SolverBudget::default();
        for kind in VolumeKind::ALL {
            let vals: Vec<f64> =
                (3..=8).map(|n| mu(&oct, n, kind, &budget).unwrap().value).collect();
            for w in vals.windows(2) {
                assert!(w[0] <= w[1] + 1e-12, "{kind}: {vals:?}");
            }
        }
    }

    #[test]
    fn ceilings() {
        let budget = SolverBudget::default();
        let bodies = [cube(2).unwrap(), regular_ngon(10, 1.0).unwrap(), cube(3).unwrap()];
        for b in &bodies {
            let d = b.dim as i32;
            for n in (b.dim + 1)..=(b.vertex_count() + 1) {
                let star = mu(b, n, VolumeKind::MassStar, &budget).unwrap().value;
                assert!(star <= 2f64.powi(d) + 1e-9);
                let bus = mu(b, n, VolumeKind::Busemann, &budget).unwrap().value;
                assert!(bus <= unit_ball_volume(b.dim) + 1e-9);
                if n >= b.vertex_count() {
                    assert!(rel(bus, unit_ball_volume(b.dim)) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn cache_reuses_normalizers() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let cache = VolumeCache::new();
        let budget = SolverBudget::default();
        let a = mu_cached(&hex, 4, VolumeKind::Mass, &budget, &cache).unwrap();
        let b = mu_cached(&hex, 4, VolumeKind::Mass, &budget, &cache).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        let plain = mu(&hex, 4, VolumeKind::Mass, &budget).unwrap();
        assert_eq!(a.value.to_bits(), plain.value.to_bits());
    }

    #[test]
    fn asymmetric_body_is_rejected() {
        let t = crate::bodies::regular_simplex(2).unwrap();
        assert!(matches!(
            mu(&t, 3, VolumeKind::Busemann, &SolverBudget::default()),
            Err(SolverError::NotSymmetric)
        ));
    }
}
