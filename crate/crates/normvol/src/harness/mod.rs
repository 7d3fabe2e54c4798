//! Numerical verification suites tying each closed-form extremal value to a
//! computed one, the exact combinatorial minimization table, and the
//! randomized search probing the planar `Q6`-Mahler inequality.

pub mod combinatorics;
pub mod polygen;
pub mod search;
pub mod suites;

use serde::{Deserialize, Serialize};

/// Pass/fail record tying a claim to a computed value, an expected value and
/// a tolerance. `rel_err = |computed - expected| / max(|expected|, 1)` and
/// `pass` iff `rel_err <= tol` (one-sided checks clamp the error at zero on
/// the allowed side).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub computed: f64,
    pub expected: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_path: Option<String>,
}

impl VerificationReport {
    fn denom(expected: f64) -> f64 {
        expected.abs().max(1.0)
    }

    /// Two-sided check `computed == expected` within `tol` relative.
    pub fn equality(claim_id: impl Into<String>, computed: f64, expected: f64, tol: f64) -> Self {
        let rel_err = (computed - expected).abs() / Self::denom(expected);
        VerificationReport {
            claim_id: claim_id.into(),
            computed,
            expected,
            rel_err,
            tol,
            pass: rel_err <= tol,
            witness_path: None,
        }
    }

    /// One-sided check `computed >= expected` up to `tol`.
    pub fn lower_bound(claim_id: impl Into<String>, computed: f64, expected: f64, tol: f64) -> Self {
        let rel_err = (expected - computed).max(0.0) / Self::denom(expected);
        VerificationReport {
            claim_id: claim_id.into(),
            computed,
            expected,
            rel_err,
            tol,
            pass: rel_err <= tol,
            witness_path: None,
        }
    }

    /// One-sided check `computed <= expected` up to `tol`.
    pub fn upper_bound(claim_id: impl Into<String>, computed: f64, expected: f64, tol: f64) -> Self {
        let rel_err = (computed - expected).max(0.0) / Self::denom(expected);
        VerificationReport {
            claim_id: claim_id.into(),
            computed,
            expected,
            rel_err,
            tol,
            pass: rel_err <= tol,
            witness_path: None,
        }
    }

    /// An exact boolean check (integer identities); tol = 0.
    pub fn exact(claim_id: impl Into<String>, computed: f64, expected: f64, ok: bool) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            computed,
            expected,
            rel_err: if ok { 0.0 } else { f64::INFINITY },
            tol: 0.0,
            pass: ok,
            witness_path: None,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {:<44} computed={:.12e} expected={:.12e} rel_err={:.3e} tol={:.1e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.claim_id,
            self.computed,
            self.expected,
            self.rel_err,
            self.tol
        )
    }
}

/// True iff every report in the slice passed.
pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
