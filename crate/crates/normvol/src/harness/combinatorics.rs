//! Exact integer minimization of `A_d(k) = C(k, [k/2]) * C(d-k, [(d-k)/2])`
//! over `1 <= k <= d/2`, whose minimizer decides the optimal dimension split
//! for the orthogonal simplex pair.

use crate::geom::hull::binomial;

/// `A_d(k)` values for `k = 1 ..= floor(d/2)` with the exact argmin set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdTable {
    pub d: usize,
    /// `values[k-1] = A_d(k)`.
    pub values: Vec<u64>,
    /// All k attaining the minimum, ascending.
    pub argmin: Vec<usize>,
}

fn a_d(d: usize, k: usize) -> u64 {
    binomial(k as u64, (k / 2) as u64) * binomial((d - k) as u64, ((d - k) / 2) as u64)
}

/// Brute-force table; exact integer arithmetic.
pub fn a_d_table(d: usize) -> AdTable {
    assert!(d >= 3, "defined for d >= 3");
    let kmax = d / 2;
    let values: Vec<u64> = (1..=kmax).map(|k| a_d(d, k)).collect();
    let min = *values.iter().min().expect("nonempty");
    let argmin: Vec<usize> =
        (1..=kmax).filter(|&k| values[k - 1] == min).collect();
    AdTable { d, values, argmin }
}

/// The argmin set predicted by the case analysis on `r = d mod 4`
/// (with `d = 4m + r`): `{2m-1}` for r = 0, `{2m-1, 2m}` for r = 1,
/// `{2m+1}` for r in {2, 3}.
pub fn predicted_argmin(d: usize) -> Vec<usize> {
    let m = d / 4;
    match d % 4 {
        0 => vec![2 * m - 1],
        1 => vec![2 * m - 1, 2 * m],
        _ => vec![2 * m + 1],
    }
}

/// The minimum value predicted by the same case analysis.
pub fn predicted_min(d: usize) -> u64 {
    let m = (d / 4) as u64;
    let r = (d % 4) as u64;
    match r {
        0 => binomial(2 * m - 1, m - 1) * binomial(2 * m + 1, m),
        1 => binomial(2 * m, m) * binomial(2 * m + 1, m),
        _ => binomial(2 * m + 1, m) * binomial(2 * m + r - 1, m + r - 2),
    }
}
