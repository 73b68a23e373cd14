//! Small dense complex matrices for numeric cross-checks.

use symring::Complex64;

pub type CMatrix = Vec<Vec<Complex64>>;

pub fn identity(n: usize) -> CMatrix {
    (0..n).map(|i| (0..n).map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)).collect()).collect()
}

pub fn diag(d: &[Complex64]) -> CMatrix {
    let n = d.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { d[i] } else { Complex64::new(0.0, 0.0) }).collect()).collect()
}

pub fn mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (n, m, k) = (a.len(), b.first().map_or(0, Vec::len), b.len());
    (0..n).map(|i| (0..m).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect()).collect()
}

pub fn transpose(a: &CMatrix) -> CMatrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// Gauss–Jordan with partial pivoting; `None` when a pivot vanishes.
pub fn inverse(a: &CMatrix) -> Option<CMatrix> {
    let n = a.len();
    let mut m: CMatrix = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let p = (col..n).max_by(|&x, &y| m[x][col].norm().total_cmp(&m[y][col].norm()))?;
        if m[p][col].norm() == 0.0 {
            return None;
        }
        m.swap(col, p);
        inv.swap(col, p);
        let d = m[col][col];
        for j in 0..n {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for r in 0..n {
            if r != col {
                let f = m[r][col];
                if f.norm() != 0.0 {
                    for j in 0..n {
                        let (mc, ic) = (m[col][j], inv[col][j]);
                        m[r][j] -= f * mc;
                        inv[r][j] -= f * ic;
                    }
                }
            }
        }
    }
    Some(inv)
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b).flat_map(|(x, y)| x.iter().zip(y).map(|(p, q)| (p - q).norm())).fold(0.0, f64::max)
}

pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}
