//! Small dense linear algebra for ambient dimensions 2..=6.
//!
//! Everything here works on row-major `Vec<f64>` buffers; the dimensions are
//! tiny, so LU with partial pivoting is all we need.

/// Row-major square matrix of side `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub d: usize,
    pub a: Vec<f64>,
}

impl Mat {
    pub fn zeros(d: usize) -> Self {
        Mat { d, a: vec![0.0; d * d] }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Mat::zeros(d);
        for i in 0..d {
            m.a[i * d + i] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let d = rows.len();
        let mut a = Vec::with_capacity(d * d);
        for r in rows {
            debug_assert_eq!(r.len(), d);
            a.extend_from_slice(r);
        }
        Mat { d, a }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.d + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.d + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.a[i * self.d..(i + 1) * self.d]
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let d = self.d;
        (0..d).map(|i| dot(self.row(i), x)).collect()
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> f64 {
        let d = self.d;
        let mut a = self.a.clone();
        let mut det = 1.0;
        for col in 0..d {
            let mut piv = col;
            let mut best = a[col * d + col].abs();
            for r in col + 1..d {
                let v = a[r * d + col].abs();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == 0.0 {
                return 0.0;
            }
            if piv != col {
                for j in 0..d {
                    a.swap(col * d + j, piv * d + j);
                }
                det = -det;
            }
            let p = a[col * d + col];
            det *= p;
            for r in col + 1..d {
                let f = a[r * d + col] / p;
                if f != 0.0 {
                    for j in col..d {
                        a[r * d + j] -= f * a[col * d + j];
                    }
                }
            }
        }
        det
    }

    /// Solve `self * x = b`; `None` if the pivot falls below `1e-13 * scale`.
    pub fn solve(&self, b: &[f64]) -> Option<Vec<f64>> {
        let d = self.d;
        let mut a = self.a.clone();
        let mut x = b.to_vec();
        let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-300);
        for col in 0..d {
            let mut piv = col;
            let mut best = a[col * d + col].abs();
            for r in col + 1..d {
                let v = a[r * d + col].abs();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best <= 1e-13 * scale {
                return None;
            }
            if piv != col {
                for j in 0..d {
                    a.swap(col * d + j, piv * d + j);
                }
                x.swap(col, piv);
            }
            let p = a[col * d + col];
            for r in col + 1..d {
                let f = a[r * d + col] / p;
                if f != 0.0 {
                    for j in col..d {
                        a[r * d + j] -= f * a[col * d + j];
                    }
                    x[r] -= f * x[col];
                }
            }
        }
        for i in (0..d).rev() {
            let mut s = x[i];
            for j in i + 1..d {
                s -= a[i * d + j] * x[j];
            }
            x[i] = s / a[i * d + i];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        let d = self.d;
        let mut inv = Mat::zeros(d);
        for j in 0..d {
            let mut e = vec![0.0; d];
            e[j] = 1.0;
            let col = self.solve(&e)?;
            for i in 0..d {
                inv.set(i, j, col[i]);
            }
        }
        Some(inv)
    }
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[inline]
pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[inline]
pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

#[inline]
pub fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

#[inline]
pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[inline]
pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// 2D cross product (signed parallelogram area).
#[inline]
pub fn cross2(a: &[f64], b: &[f64]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Determinant of the matrix whose rows are `rows` (all of length `rows.len()`).
pub fn det_of_rows(rows: &[&[f64]]) -> f64 {
    let d = rows.len();
    match d {
        1 => rows[0][0],
        2 => rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0],
        3 => {
            let (a, b, c) = (rows[0], rows[1], rows[2]);
            a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0])
        }
        _ => {
            let mut m = Mat::zeros(d);
            for (i, r) in rows.iter().enumerate() {
                for j in 0..d {
                    m.set(i, j, r[j]);
                }
            }
            m.det()
        }
    }
}

/// A vector orthogonal to the `d-1` rows (each of length `d`), i.e. the
/// generalized cross product, computed from cofactors.
pub fn orthogonal_to(rows: &[Vec<f64>]) -> Vec<f64> {
    let d = rows.len() + 1;
    let mut n = vec![0.0; d];
    let mut sign = 1.0;
    for k in 0..d {
        // minor: drop column k
        let minors: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let refs: Vec<&[f64]> = minors.iter().map(|m| m.as_slice()).collect();
        n[k] = sign * det_of_rows(&refs);
        sign = -sign;
    }
    n
}

/// Numerical rank of a set of row vectors, with a relative pivot threshold.
pub fn rank(rows: &[Vec<f64>], tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let d = rows[0].len();
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
        .max(1e-300);
    let mut r = 0;
    for col in 0..d {
        let mut piv = None;
        let mut best = tol * scale;
        for (i, row) in m.iter().enumerate().skip(r) {
            if row[col].abs() > best {
                best = row[col].abs();
                piv = Some(i);
            }
        }
        let Some(piv) = piv else { continue };
        m.swap(r, piv);
        let p = m[r][col];
        for i in r + 1..m.len() {
            let f = m[i][col] / p;
            if f != 0.0 {
                for j in col..d {
                    let v = m[r][j];
                    m[i][j] -= f * v;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Gram-Schmidt orthonormal basis of the span of `rows`; vectors whose
/// residual falls below `tol * |row|` are dropped.
pub fn orthonormal_basis(rows: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for b in &basis {
            let c = dot(&v, b);
            for (x, y) in v.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
        let n = norm(&v);
        if n > tol * norm(row).max(1e-300) {
            basis.push(scale(&v, 1.0 / n));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = Mat::from_rows(&[
            vec![2.0, 1.0, 0.5],
            vec![-1.0, 3.0, 2.0],
            vec![0.0, 1.0, 1.0],
        ]);
        let refs: Vec<&[f64]> = (0..3).map(|i| m.row(i)).collect();
        assert!((m.det() - det_of_rows(&refs)).abs() < 1e-12);
    }

    #[test]
    fn solve_roundtrip() {
        let m = Mat::from_rows(&[vec![4.0, 1.0], vec![2.0, 3.0]]);
        let x = m.solve(&[1.0, 5.0]).unwrap();
        let b = m.apply(&x);
        assert!((b[0] - 1.0).abs() < 1e-12 && (b[1] - 5.0).abs() < 1e-12);
    }

    #[test]
    fn singular_solve_fails() {
        let m = Mat::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(m.solve(&[1.0, 1.0]).is_none());
    }

    #[test]
    fn orthogonal_to_is_orthogonal() {
        let rows = vec![vec![1.0, 2.0, 3.0, 4.0], vec![0.0, 1.0, -1.0, 2.0], vec![5.0, 0.0, 0.0, 1.0]];
        let n = orthogonal_to(&rows);
        for r in &rows {
            assert!(dot(&n, r).abs() < 1e-10 * norm(&n).max(1.0));
        }
        assert!(norm(&n) > 1e-12);
    }

    #[test]
    fn rank_detects_deficiency() {
        let rows = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![1.0, 1.0, 0.0]];
        assert_eq!(rank(&rows, 1e-9), 2);
    }
}
