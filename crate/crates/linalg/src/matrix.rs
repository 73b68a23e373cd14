use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde_json::Value;
use symring::{Complex64, GaussianRational, SymExpr, SymbolTable};

use crate::error::LinalgError;

/// Square matrix over `SymExpr`, row-major.
#[derive(Clone)]
pub struct SymMatrix {
    n: usize,
    table: Arc<SymbolTable>,
    data: Vec<SymExpr>,
}

impl SymMatrix {
    pub fn zeros(table: &Arc<SymbolTable>, n: usize) -> Self {
        SymMatrix { n, table: table.clone(), data: vec![SymExpr::zero(table); n * n] }
    }

    pub fn identity(table: &Arc<SymbolTable>, n: usize) -> Self {
        Self::from_fn(table, n, |i, j| if i == j { SymExpr::one(table) } else { SymExpr::zero(table) })
    }

    pub fn from_fn(table: &Arc<SymbolTable>, n: usize, mut f: impl FnMut(usize, usize) -> SymExpr) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SymMatrix { n, table: table.clone(), data }
    }

    pub fn diag(table: &Arc<SymbolTable>, d: &[SymExpr]) -> Self {
        Self::from_fn(table, d.len(), |i, j| if i == j { d[i].clone() } else { SymExpr::zero(table) })
    }

    pub fn from_rows(table: &Arc<SymbolTable>, rows: Vec<Vec<SymExpr>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(LinalgError::DimensionMismatch(n, r.len()));
            }
            data.extend(r);
        }
        Ok(SymMatrix { n, table: table.clone(), data })
    }

    pub fn from_ints(table: &Arc<SymbolTable>, rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(table, rows.iter().map(|r| r.iter().map(|&x| SymExpr::int(table, x)).collect()).collect())
    }

    /// Each entry in the canonical text grammar.
    pub fn parse(table: &Arc<SymbolTable>, rows: &[&[&str]]) -> Result<Self, LinalgError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| SymExpr::parse_in(table, s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(table, rows)
    }

    /// Permutation matrix with `P[k][perm[k]] = 1` (0-based).
    pub fn permutation(table: &Arc<SymbolTable>, perm: &[usize]) -> Self {
        Self::from_fn(table, perm.len(), |i, j| if perm[i] == j { SymExpr::one(table) } else { SymExpr::zero(table) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        &self.table
    }

    pub fn get(&self, i: usize, j: usize) -> &SymExpr {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SymExpr) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[SymExpr] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &SymExpr)> {
        self.data.iter().enumerate().map(move |(k, e)| (k / self.n, k % self.n, e))
    }

    fn check_dims(&self, o: &Self) -> Result<(), LinalgError> {
        if self.n != o.n {
            return Err(LinalgError::DimensionMismatch(self.n, o.n));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, LinalgError> {
        self.check_dims(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.try_add(b)).collect::<Result<_, _>>()?;
        Ok(SymMatrix { n: self.n, table: self.table.clone(), data })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, LinalgError> {
        self.check_dims(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.try_sub(b)).collect::<Result<_, _>>()?;
        Ok(SymMatrix { n: self.n, table: self.table.clone(), data })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, LinalgError> {
        self.check_dims(o)?;
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = SymExpr::zero(&self.table);
                for k in 0..n {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b)?;
                    }
                }
                data.push(acc);
            }
        }
        Ok(SymMatrix { n, table: self.table.clone(), data })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.table, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &SymExpr) -> Self {
        SymMatrix { n: self.n, table: self.table.clone(), data: self.data.iter().map(|e| e * s).collect() }
    }

    pub fn map(&self, f: impl Fn(&SymExpr) -> SymExpr) -> Self {
        SymMatrix { n: self.n, table: self.table.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(&self.table, self.n), |acc, _| &acc * self)
    }

    /// Product of a word of matrices, left to right.
    pub fn product<'a>(table: &Arc<SymbolTable>, n: usize, ms: impl IntoIterator<Item = &'a SymMatrix>) -> Self {
        ms.into_iter().fold(Self::identity(table, n), |acc, m| &acc * m)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.entries().all(|(i, j, e)| if i == j { e.is_one() } else { e.is_zero() })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.entries().all(|(i, j, e)| i <= j || e.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(|e| e.as_constant().is_some())
    }

    /// Exact Gauss-Jordan inverse for matrices with Gaussian-rational entries.
    pub fn inverse_rational(&self) -> Result<Self, LinalgError> {
        let n = self.n;
        let mut a: Vec<Vec<GaussianRational>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(2 * n);
            for j in 0..n {
                row.push(self.get(i, j).as_constant().ok_or(LinalgError::Symbolic(i, j))?);
            }
            for j in 0..n {
                row.push(if i == j { GaussianRational::one() } else { GaussianRational::zero() });
            }
            a.push(row);
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(LinalgError::Singular)?;
            a.swap(col, piv);
            let inv = a[col][col].inv().unwrap();
            for x in a[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..2 * n {
                        let d = &f * &a[col][c];
                        a[r][c] = &a[r][c] - &d;
                    }
                }
            }
        }
        Ok(Self::from_fn(&self.table, n, |i, j| SymExpr::constant(&self.table, a[i][n + j].clone())))
    }

    /// Determinant by cofactor expansion along the sparsest row.
    pub fn determinant(&self) -> SymExpr {
        let idx: Vec<usize> = (0..self.n).collect();
        self.minor_det(&idx, &idx)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> SymExpr {
        if rows.is_empty() {
            return SymExpr::one(&self.table);
        }
        let (ri, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, &r)| cols.iter().filter(|&&c| !self.get(r, c).is_zero()).count())
            .unwrap();
        let r = rows[ri];
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let mut acc = SymExpr::zero(&self.table);
        for (ci, &c) in cols.iter().enumerate() {
            let e = self.get(r, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = e * &self.minor_det(&sub_rows, &sub_cols);
            acc = if (ri + ci) % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    /// `e^{s·X} = Σ_{k<n} (sX)^k / k!`, refusing when `Xⁿ ≠ 0`.
    pub fn matrix_exp_nilpotent(&self, s: &SymExpr) -> Result<Self, LinalgError> {
        if !self.pow(self.n as u32).is_zero() {
            return Err(LinalgError::NotNilpotent);
        }
        let sx = self.scale(s);
        let mut term = Self::identity(&self.table, self.n);
        let mut acc = term.clone();
        for k in 1..self.n.max(1) {
            term = (&term * &sx).scale(&SymExpr::ratio(&self.table, 1, k as i64));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn substitute(&self, name: &str, v: &SymExpr) -> Result<Self, LinalgError> {
        let data = self.data.iter().map(|e| e.substitute(name, v)).collect::<Result<_, _>>()?;
        Ok(SymMatrix { n: self.n, table: self.table.clone(), data })
    }

    pub fn eval_numeric(&self) -> Result<Vec<Vec<Complex64>>, LinalgError> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|e| e.eval_numeric().map_err(Into::into)).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.n)
                .map(|i| Value::Array(self.row(i).iter().map(|e| Value::String(e.to_string())).collect()))
                .collect(),
        )
    }

    pub fn from_json(table: &Arc<SymbolTable>, v: &Value) -> Result<Self, LinalgError> {
        let bad = |m: &str| LinalgError::Malformed(m.to_string());
        let rows = v.as_array().ok_or_else(|| bad("expected array of rows"))?;
        let rows = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad("expected row array"))?
                    .iter()
                    .map(|x| match x {
                        Value::String(s) => SymExpr::parse_in(table, s).map_err(LinalgError::from),
                        Value::Number(n) if n.is_i64() => Ok(SymExpr::int(table, n.as_i64().unwrap())),
                        _ => Err(bad("entry must be a string")),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(table, rows)
    }

    /// Entries that differ, as `(i, j, self, other)`.
    pub fn diff<'a>(&'a self, o: &'a Self) -> Vec<(usize, usize, &'a SymExpr, &'a SymExpr)> {
        self.entries().filter(|(i, j, e)| *e != o.get(*i, *j)).map(|(i, j, e)| (i, j, e, o.get(i, j))).collect()
    }
}

impl PartialEq for SymMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.data == o.data
    }
}

impl Eq for SymMatrix {}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix[{}]", self.n)?;
        for i in 0..self.n {
            let r: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a SymMatrix> for &'a SymMatrix {
            type Output = SymMatrix;
            fn $m(self, o: &SymMatrix) -> SymMatrix {
                self.$try(o).expect("incompatible matrices")
            }
        }
        impl $tr for SymMatrix {
            type Output = SymMatrix;
            fn $m(self, o: SymMatrix) -> SymMatrix {
                self.$try(&o).expect("incompatible matrices")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &SymMatrix {
    type Output = SymMatrix;
    fn neg(self) -> SymMatrix {
        self.map(|e| -e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Arc<SymbolTable> {
        SymbolTable::standard()
    }

    fn eta_a3() -> SymMatrix {
        let q = SymExpr::ratio(&t(), 1, 4);
        let z = SymExpr::zero(&t());
        SymMatrix::from_rows(
            &t(),
            vec![vec![z.clone(), z.clone(), q.clone()], vec![z.clone(), q.clone(), z.clone()], vec![q, z.clone(), z]],
        )
        .unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = SymMatrix::parse(&t(), &[&["pi", "1"], &["i*s2", "gamma"]]).unwrap();
        assert_eq!(&SymMatrix::identity(&t(), 2) * &a, a);
    }

    #[test]
    fn eta_squared() {
        let e = eta_a3();
        assert_eq!(&e * &e, SymMatrix::identity(&t(), 3).scale(&SymExpr::ratio(&t(), 1, 16)));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = SymMatrix::identity(&t(), 2);
        let b = SymMatrix::identity(&t(), 3);
        assert_eq!(a.try_mul(&b), Err(LinalgError::DimensionMismatch(2, 3)));
    }

    #[test]
    fn permutation_inverse_is_transpose() {
        let p = SymMatrix::permutation(&t(), &[4, 3, 1, 0, 2, 5]);
        assert_eq!(p.inverse_rational().unwrap(), p.transpose());
    }

    #[test]
    fn sign_matrix_is_an_involution() {
        let d: Vec<SymExpr> = [1, -1, -1, 1, -1, 1].iter().map(|&x| SymExpr::int(&t(), x)).collect();
        let s = SymMatrix::diag(&t(), &d);
        assert_eq!(s.inverse_rational().unwrap(), s);
    }

    #[test]
    fn inverse_refuses_symbols_and_singular() {
        let a = SymMatrix::parse(&t(), &[&["pi", "0"], &["0", "1"]]).unwrap();
        assert_eq!(a.inverse_rational(), Err(LinalgError::Symbolic(0, 0)));
        let b = SymMatrix::from_ints(&t(), &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(b.inverse_rational(), Err(LinalgError::Singular));
    }

    #[test]
    fn exp_of_zero_and_nilpotent() {
        let z = SymMatrix::zeros(&t(), 3);
        assert!(z.matrix_exp_nilpotent(&SymExpr::one(&t())).unwrap().is_identity());
        let x = SymMatrix::from_ints(&t(), &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]).unwrap();
        let e = x.matrix_exp_nilpotent(&SymExpr::one(&t())).unwrap();
        assert_eq!(e.get(0, 2), &SymExpr::ratio(&t(), 1, 2));
        let back = x.matrix_exp_nilpotent(&SymExpr::int(&t(), -1)).unwrap();
        assert!((&e * &back).is_identity());
        let y = SymMatrix::from_ints(&t(), &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(y.matrix_exp_nilpotent(&SymExpr::one(&t())), Err(LinalgError::NotNilpotent));
    }

    #[test]
    fn determinant_small() {
        let a = SymMatrix::parse(&t(), &[&["1", "2", "0"], &["pi", "1", "0"], &["0", "0", "i"]]).unwrap();
        assert_eq!(a.determinant(), SymExpr::parse("i - 2*i*pi").unwrap());
        assert!(SymMatrix::identity(&t(), 5).determinant().is_one());
    }

    #[test]
    fn json_roundtrip() {
        let a = SymMatrix::parse(&t(), &[&["(-1/3)*i*pi^3", "g14"], &["0", "c12/pi^2"]]).unwrap();
        let v = a.to_json();
        assert_eq!(SymMatrix::from_json(&t(), &v).unwrap(), a);
        assert!(SymMatrix::from_json(&t(), &serde_json::json!([["1", "2"], ["3"]])).is_err());
    }
}
