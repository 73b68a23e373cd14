use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use num_traits::ToPrimitive;
use symring::{BigRational, SymExpr, SymbolTable};

use crate::error::LinalgError;
use crate::matrix::SymMatrix;

/// Finite sum `Σ c·Z^{a/4}·L^b` with `L = log z` treated as a free variable.
/// Keys are `(a, b)` with the Z-exponent stored times four.
#[derive(Clone)]
pub struct ZLPoly {
    table: Arc<SymbolTable>,
    terms: BTreeMap<(i32, u32), SymExpr>,
}

impl ZLPoly {
    pub fn zero(table: &Arc<SymbolTable>) -> Self {
        ZLPoly { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(c: SymExpr, a4: i32, b: u32) -> Self {
        let mut p = Self::zero(c.table());
        if !c.is_zero() {
            p.terms.insert((a4, b), c);
        }
        p
    }

    pub fn constant(c: SymExpr) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, u32), &SymExpr)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a4: i32, b: u32) -> SymExpr {
        self.terms.get(&(a4, b)).cloned().unwrap_or_else(|| SymExpr::zero(&self.table))
    }

    fn insert_add(&mut self, key: (i32, u32), c: &SymExpr) {
        let slot = self.terms.entry(key).or_insert_with(|| SymExpr::zero(&self.table));
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn shift(&self, da4: i32) -> Self {
        ZLPoly { table: self.table.clone(), terms: self.terms.iter().map(|(&(a, b), c)| ((a + da4, b), c.clone())).collect() }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, b)| b == 0 && a >= 0 && a % 4 == 0)
    }

    /// Drops terms of Z-degree above `max` (integer degree).
    pub fn truncate(&self, max: i32) -> Self {
        ZLPoly {
            table: self.table.clone(),
            terms: self.terms.iter().filter(|(&(a, _), _)| a <= 4 * max).map(|(k, c)| (*k, c.clone())).collect(),
        }
    }
}

impl<'a> Add<&'a ZLPoly> for &'a ZLPoly {
    type Output = ZLPoly;
    fn add(self, o: &ZLPoly) -> ZLPoly {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert_add(*k, c);
        }
        out
    }
}

impl<'a> Sub<&'a ZLPoly> for &'a ZLPoly {
    type Output = ZLPoly;
    fn sub(self, o: &ZLPoly) -> ZLPoly {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert_add(*k, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a ZLPoly> for &'a ZLPoly {
    type Output = ZLPoly;
    fn mul(self, o: &ZLPoly) -> ZLPoly {
        let mut out = ZLPoly::zero(&self.table);
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &o.terms {
                out.insert_add((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }
}

impl PartialEq for ZLPoly {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms
    }
}

impl Eq for ZLPoly {}

impl fmt::Debug for ZLPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(&(a, b), c)| format!("({c})*Z^({a}/4)*L^{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Square matrix of `ZLPoly` entries.
#[derive(Clone)]
pub struct ZLMatrix {
    n: usize,
    table: Arc<SymbolTable>,
    data: Vec<ZLPoly>,
}

impl ZLMatrix {
    pub fn from_fn(table: &Arc<SymbolTable>, n: usize, mut f: impl FnMut(usize, usize) -> ZLPoly) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ZLMatrix { n, table: table.clone(), data }
    }

    pub fn from_sym(m: &SymMatrix) -> Self {
        Self::from_fn(m.table(), m.n(), |i, j| ZLPoly::constant(m.get(i, j).clone()))
    }

    /// `Σ_k z^k·M_k`.
    pub fn from_series(table: &Arc<SymbolTable>, n: usize, coeffs: &[SymMatrix]) -> Self {
        Self::from_fn(table, n, |i, j| {
            let mut p = ZLPoly::zero(table);
            for (k, m) in coeffs.iter().enumerate() {
                p = &p + &ZLPoly::monomial(m.get(i, j).clone(), 4 * k as i32, 0);
            }
            p
        })
    }

    pub fn identity(table: &Arc<SymbolTable>, n: usize) -> Self {
        Self::from_sym(&SymMatrix::identity(table, n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ZLPoly {
        &self.data[i * self.n + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.table, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, LinalgError> {
        if self.n != o.n {
            return Err(LinalgError::DimensionMismatch(self.n, o.n));
        }
        Ok(Self::from_fn(&self.table, self.n, |i, j| {
            let mut acc = ZLPoly::zero(&self.table);
            for k in 0..self.n {
                let (a, b) = (self.get(i, k), o.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, LinalgError> {
        if self.n != o.n {
            return Err(LinalgError::DimensionMismatch(self.n, o.n));
        }
        Ok(Self::from_fn(&self.table, self.n, |i, j| self.get(i, j) - o.get(i, j)))
    }

    /// Multiplies entry `(α, β)` by `Z^{left_α + right_β}`.
    pub fn scale_by_zpow(&self, left: &[BigRational], right: &[BigRational]) -> Result<Self, LinalgError> {
        let l = quarters(left)?;
        let r = quarters(right)?;
        if l.len() != self.n || r.len() != self.n {
            return Err(LinalgError::DimensionMismatch(self.n, l.len().min(r.len())));
        }
        Ok(Self::from_fn(&self.table, self.n, |i, j| self.get(i, j).shift(l[i] + r[j])))
    }

    /// `e^{L·R}` for nilpotent `R`.
    pub fn exp_log(r: &SymMatrix) -> Result<Self, LinalgError> {
        let n = r.n();
        let table = r.table();
        if !r.pow(n as u32).is_zero() {
            return Err(LinalgError::NotNilpotent);
        }
        let mut power = SymMatrix::identity(table, n);
        let mut fact = 1i64;
        let mut out = Self::from_fn(table, n, |_, _| ZLPoly::zero(table));
        for k in 0..n {
            if k > 0 {
                power = &power * r;
                fact *= k as i64;
            }
            if power.is_zero() {
                break;
            }
            let inv = SymExpr::ratio(table, 1, fact);
            for i in 0..n {
                for j in 0..n {
                    let c = power.get(i, j) * &inv;
                    out.data[i * n + j] = &out.data[i * n + j] + &ZLPoly::monomial(c, 0, k as u32);
                }
            }
        }
        Ok(out)
    }

    pub fn is_polynomial(&self) -> bool {
        self.data.iter().all(|p| p.is_polynomial())
    }

    pub fn has_log(&self) -> bool {
        self.data.iter().any(|p| p.terms().any(|(&(_, b), _)| b > 0))
    }

    pub fn has_negative_power(&self) -> bool {
        self.data.iter().any(|p| p.terms().any(|(&(a, _), _)| a < 0))
    }

    /// Coefficient of `Z^{a4/4}·L^b` in every entry.
    pub fn coefficient(&self, a4: i32, b: u32) -> SymMatrix {
        SymMatrix::from_fn(&self.table, self.n, |i, j| self.get(i, j).coeff(a4, b))
    }

    /// Value at `z = 0` of a polynomial matrix.
    pub fn at_zero(&self) -> Result<SymMatrix, LinalgError> {
        if !self.is_polynomial() {
            return Err(LinalgError::UnsupportedExponent("not a polynomial in z".into()));
        }
        Ok(self.coefficient(0, 0))
    }

    /// `P(−z)` for a polynomial matrix.
    pub fn negate_z(&self) -> Result<Self, LinalgError> {
        if !self.is_polynomial() {
            return Err(LinalgError::UnsupportedExponent("z ↦ −z needs a polynomial".into()));
        }
        Ok(Self::from_fn(&self.table, self.n, |i, j| {
            let p = self.get(i, j);
            ZLPoly {
                table: self.table.clone(),
                terms: p
                    .terms()
                    .map(|(&(a, b), c)| ((a, b), if (a / 4) % 2 == 0 { c.clone() } else { -c }))
                    .collect(),
            }
        }))
    }

    pub fn truncate(&self, max: i32) -> Self {
        Self::from_fn(&self.table, self.n, |i, j| self.get(i, j).truncate(max))
    }
}

impl<'a> Mul<&'a ZLMatrix> for &'a ZLMatrix {
    type Output = ZLMatrix;
    fn mul(self, o: &ZLMatrix) -> ZLMatrix {
        self.try_mul(o).expect("incompatible matrices")
    }
}

impl PartialEq for ZLMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.data == o.data
    }
}

impl Eq for ZLMatrix {}

impl fmt::Debug for ZLMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ZLMatrix[{}]", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j).is_zero() {
                    writeln!(f, "  ({i},{j}): {:?}", self.get(i, j))?;
                }
            }
        }
        Ok(())
    }
}

fn quarters(v: &[BigRational]) -> Result<Vec<i32>, LinalgError> {
    v.iter()
        .map(|q| {
            let s = q * BigRational::from_integer(4.into());
            if !s.is_integer() {
                return Err(LinalgError::UnsupportedExponent(format!("{q} is not in (1/4)Z")));
            }
            s.to_integer().to_i32().ok_or_else(|| LinalgError::UnsupportedExponent(q.to_string()))
        })
        .collect()
}

/// `z^μ z^R G z^{−R} z^{−μ}` with entry `(α, β)` carrying `Z^{μ_α − μ_β}`.
pub fn conj_by_zpow(g: &SymMatrix, mu: &[BigRational], r: &SymMatrix) -> Result<ZLMatrix, LinalgError> {
    let e_plus = ZLMatrix::exp_log(r)?;
    let e_minus = ZLMatrix::exp_log(&-r)?;
    let mid = e_plus.try_mul(&ZLMatrix::from_sym(g))?.try_mul(&e_minus)?;
    let neg: Vec<BigRational> = mu.iter().map(|q| -q.clone()).collect();
    mid.scale_by_zpow(mu, &neg)
}

pub fn zl_is_polynomial(m: &ZLMatrix) -> bool {
    m.is_polynomial()
}
