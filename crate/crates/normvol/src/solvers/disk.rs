//! Maximum-area inscribed n-gon of the Euclidean unit disk.

use rand::Rng;

use crate::rng::stream_rng;

fn polygon_area(angles: &[f64]) -> f64 {
    let n = angles.len();
    let mut s = 0.0;
    for i in 0..n {
        let next = if i + 1 == n { angles[0] + std::f64::consts::TAU } else { angles[i + 1] };
        s += (next - angles[i]).sin();
    }
    0.5 * s
}

/// Area of the maximum n-gon inscribed in the unit disk, by cyclic coordinate
/// ascent on boundary angles from several seeded starts. Converges to the
/// regular n-gon value `(n/2) sin(2 pi / n)`.
pub fn max_inscribed_ngon_disk(n: usize) -> f64 {
    assert!(n >= 3, "need at least a triangle");
    let tau = std::f64::consts::TAU;
    let mut best = f64::NEG_INFINITY;
    let mut rng = stream_rng(0xD15C, n as u64);
    for start in 0..5 {
        let mut angles: Vec<f64> = if start == 0 {
            // mildly non-uniform deterministic start
            (0..n).map(|i| tau * (i as f64 + 0.3 * ((i * i) as f64).sin()) / n as f64).collect()
        } else {
            (0..n).map(|_| rng.gen::<f64>() * tau).collect()
        };
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for _ in 0..50_000 {
            let mut max_change = 0.0f64;
            for i in 0..n {
                let prev = if i == 0 { angles[n - 1] - tau } else { angles[i - 1] };
                let next = if i + 1 == n { angles[0] + tau } else { angles[i + 1] };
                // coordinate maximum of sin(t - prev) + sin(next - t)
                let mid = 0.5 * (prev + next);
                max_change = max_change.max((angles[i] - mid).abs());
                angles[i] = mid;
            }
            if max_change < 1e-13 {
                break;
            }
        }
        best = best.max(polygon_area(&angles));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_regular_ngon_closed_form() {
        for n in 3..=8 {
            let got = max_inscribed_ngon_disk(n);
            let expected = n as f64 / 2.0 * (std::f64::consts::TAU / n as f64).sin();
            assert!((got - expected).abs() < 1e-8, "n={n}: {got} vs {expected}");
        }
    }

    #[test]
    fn square_in_disk_has_area_two() {
        assert!((max_inscribed_ngon_disk(4) - 2.0).abs() < 1e-8);
    }
}
