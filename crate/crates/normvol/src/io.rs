//! File formats: the Body JSON `{"dim": d, "vertices": [[..], ..],
//! "symmetric": bool}`, the shadow-system JSON `{"base": [[..], ..],
//! "speeds": [..], "direction": [..]}`, the cascade JSON
//! `{"normals": [[..], ..], "points": [[..], ..]}`, and the run records
//! embedded in every output for reproducibility.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::linalg::{cross2, norm, sub};
use crate::geom::{Polytope, Vector, MAX_DIM, MIN_DIM};
use crate::shadow::ShadowSystem;

#[derive(Error, Debug)]
pub enum IoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("invalid shadow system: {0}")]
    InvalidSystem(String),
}

pub type IoResult<T> = Result<T, IoError>;

/// Validate a deserialized body: dimension in 2..=6, rectangular finite
/// vertex array, enough vertices, and counterclockwise convex cyclic order
/// in the plane. Vertex order is preserved exactly.
pub fn validate_body(p: &Polytope) -> IoResult<()> {
    if !(MIN_DIM..=MAX_DIM).contains(&p.dim) {
        return Err(IoError::InvalidBody(format!(
            "dim {} outside supported range {MIN_DIM}..={MAX_DIM}",
            p.dim
        )));
    }
    if p.vertices.len() < p.dim + 1 {
        return Err(IoError::InvalidBody(format!(
            "{} vertices cannot span dimension {}",
            p.vertices.len(),
            p.dim
        )));
    }
    for v in &p.vertices {
        if v.len() != p.dim {
            return Err(IoError::InvalidBody(format!(
                "vertex of length {} in a dim-{} body (non-rectangular array)",
                v.len(),
                p.dim
            )));
        }
        if v.iter().any(|x| !x.is_finite()) {
            return Err(IoError::InvalidBody("non-finite coordinate".into()));
        }
    }
    if p.dim == 2 {
        let k = p.vertices.len();
        for i in 0..k {
            let a = &p.vertices[i];
            let b = &p.vertices[(i + 1) % k];
            let c = &p.vertices[(i + 2) % k];
            if cross2(&sub(b, a), &sub(c, b)) <= 0.0 {
                return Err(IoError::InvalidBody(
                    "2D vertices must be in strictly convex counterclockwise cyclic order".into(),
                ));
            }
        }
    }
    if p.symmetric && !p.is_negation_closed(1e-7) {
        return Err(IoError::InvalidBody(
            "symmetric flag set but the vertex set is not closed under negation".into(),
        ));
    }
    Ok(())
}

pub fn body_from_json(json: &str) -> IoResult<Polytope> {
    let p: Polytope = serde_json::from_str(json)?;
    validate_body(&p)?;
    Ok(p)
}

pub fn body_to_json(p: &Polytope) -> String {
    serde_json::to_string_pretty(p).expect("body serialization is infallible")
}

pub fn read_body(path: impl AsRef<Path>) -> IoResult<Polytope> {
    body_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_body(path: impl AsRef<Path>, p: &Polytope) -> IoResult<()> {
    Ok(std::fs::write(path, body_to_json(p) + "\n")?)
}

pub fn read_shadow_system(path: impl AsRef<Path>) -> IoResult<ShadowSystem> {
    let raw: ShadowSystem = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let dim = raw.direction.len();
    if raw.base.is_empty() || raw.base.len() != raw.speeds.len() {
        return Err(IoError::InvalidSystem(format!(
            "{} base points vs {} speeds",
            raw.base.len(),
            raw.speeds.len()
        )));
    }
    if raw.base.iter().any(|p| p.len() != dim) {
        return Err(IoError::InvalidSystem("base points and direction disagree on dimension".into()));
    }
    if norm(&raw.direction) == 0.0 {
        return Err(IoError::InvalidSystem("zero direction".into()));
    }
    Ok(raw)
}

/// Input for the projection cascade.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CascadeSpec {
    pub normals: Vec<Vector>,
    pub points: Vec<Vector>,
}

pub fn read_cascade_spec(path: impl AsRef<Path>) -> IoResult<CascadeSpec> {
    let spec: CascadeSpec = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    if spec.normals.is_empty() || spec.points.is_empty() {
        return Err(IoError::InvalidSystem("cascade needs normals and points".into()));
    }
    let dim = spec.normals[0].len();
    if spec.normals.iter().chain(spec.points.iter()).any(|v| v.len() != dim) {
        return Err(IoError::InvalidSystem("mixed dimensions in cascade spec".into()));
    }
    Ok(spec)
}

/// Full invocation record embedded in every output file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub seed: u64,
    pub rng: String,
    pub tool_version: String,
}

impl RunRecord {
    pub fn new(command: &str, seed: u64) -> Self {
        RunRecord {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            seed,
            rng: crate::rng::stamp(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn with(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{cube, regular_ngon};

    #[test]
    fn body_roundtrip_preserves_vertex_order() {
        let hex = regular_ngon(6, 1.0).unwrap();
        let json = body_to_json(&hex);
        let back = body_from_json(&json).unwrap();
        assert_eq!(hex.vertices, back.vertices);
        assert_eq!(hex.symmetric, back.symmetric);
    }

    #[test]
    fn rejects_bad_dimension_and_ragged_arrays() {
        let bad_dim = r#"{"dim": 7, "vertices": [[0,0,0,0,0,0,0]], "symmetric": false}"#;
        assert!(matches!(body_from_json(bad_dim), Err(IoError::InvalidBody(_))));
        let ragged =
            r#"{"dim": 2, "vertices": [[0,0],[1,0],[0,1,5]], "symmetric": false}"#;
        assert!(matches!(body_from_json(ragged), Err(IoError::InvalidBody(_))));
        let one_d = r#"{"dim": 1, "vertices": [[0],[1]], "symmetric": false}"#;
        assert!(matches!(body_from_json(one_d), Err(IoError::InvalidBody(_))));
    }

    #[test]
    fn rejects_clockwise_polygons() {
        let mut sq = cube(2).unwrap();
        sq.vertices.reverse();
        let json = body_to_json(&sq);
        assert!(matches!(body_from_json(&json), Err(IoError::InvalidBody(_))));
    }

    #[test]
    fn rejects_false_symmetry_flag() {
        let json = r#"{"dim": 2, "vertices": [[0,0],[1,0],[0,1]], "symmetric": true}"#;
        assert!(matches!(body_from_json(json), Err(IoError::InvalidBody(_))));
    }
}
