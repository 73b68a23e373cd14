use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::SymError;
use crate::gaussian::GaussianRational;
use crate::table::{Monomial, SymbolTable};

/// Finite sum of Gaussian-rational multiples of normal-form Laurent monomials.
#[derive(Clone)]
pub struct SymExpr {
    table: Arc<SymbolTable>,
    terms: BTreeMap<Monomial, GaussianRational>,
}

fn same_table(a: &Arc<SymbolTable>, b: &Arc<SymbolTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SymExpr {
    pub fn zero(table: &Arc<SymbolTable>) -> Self {
        SymExpr { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(table: &Arc<SymbolTable>, c: GaussianRational) -> Self {
        let mut e = Self::zero(table);
        if !c.is_zero() {
            e.terms.insert(table.unit(), c);
        }
        e
    }

    pub fn one(table: &Arc<SymbolTable>) -> Self {
        Self::constant(table, GaussianRational::one())
    }

    pub fn int(table: &Arc<SymbolTable>, n: i64) -> Self {
        Self::constant(table, GaussianRational::from_int(n))
    }

    pub fn ratio(table: &Arc<SymbolTable>, num: i64, den: i64) -> Self {
        Self::constant(table, GaussianRational::from_ratio(num, den))
    }

    pub fn i(table: &Arc<SymbolTable>) -> Self {
        Self::constant(table, GaussianRational::i())
    }

    pub fn symbol(table: &Arc<SymbolTable>, name: &str) -> Result<Self, SymError> {
        let k = table.index_of(name).ok_or_else(|| SymError::UnknownSymbol(name.to_string()))?;
        let mut m = table.unit();
        m[k] = 1;
        Ok(Self::from_term(table, GaussianRational::one(), m))
    }

    /// `coeff·m`, normalizing the monomial.
    pub fn from_term(table: &Arc<SymbolTable>, coeff: GaussianRational, m: Monomial) -> Self {
        let mut e = Self::zero(table);
        e.push_term(coeff, m);
        e
    }

    fn push_term(&mut self, coeff: GaussianRational, m: Monomial) {
        if coeff.is_zero() {
            return;
        }
        let (c, m) = if self.table.is_normal(&m) {
            (coeff, m)
        } else {
            let (c, m) = self.table.normalize(&m);
            (&c * &coeff, m)
        };
        let slot = self.terms.entry(m.clone()).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value when the expression has no symbols.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, SymError> {
        if !same_table(&self.table, &o.table) {
            return Err(SymError::TableMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &o.terms {
            let slot = out.terms.entry(m.clone()).or_default();
            *slot = &*slot + c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, SymError> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, SymError> {
        let mut out = Self::zero(&self.table);
        out.add_product(self, o)?;
        Ok(out)
    }

    /// `self += a·b` without an intermediate product.
    pub fn add_product(&mut self, a: &Self, b: &Self) -> Result<(), SymError> {
        if !same_table(&self.table, &a.table) || !same_table(&a.table, &b.table) {
            return Err(SymError::TableMismatch);
        }
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                self.push_term(ca * cb, m);
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        SymExpr { table: self.table.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.table);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a single nonzero term.
    pub fn inv(&self) -> Result<Self, SymError> {
        if self.terms.len() != 1 {
            return Err(SymError::NotInvertible(self.to_string()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let c = c.inv().ok_or_else(|| SymError::NotInvertible(self.to_string()))?;
        Ok(Self::from_term(&self.table, c, m.iter().map(|e| -e).collect()))
    }

    pub fn powi(&self, e: i32) -> Result<Self, SymError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Complex conjugate; every named constant is taken to be real.
    pub fn conj(&self) -> Self {
        SymExpr { table: self.table.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    pub fn eval_numeric(&self) -> Result<Complex64, SymError> {
        self.eval_with(&[])
    }

    /// Numeric value with per-call overrides (used for free symbols such as `v`).
    pub fn eval_with(&self, overrides: &[(&str, Complex64)]) -> Result<Complex64, SymError> {
        let mut values = Vec::with_capacity(self.table.len());
        for (k, s) in self.table.symbols().iter().enumerate() {
            if !self.uses_symbol(k) {
                values.push(Complex64::new(0.0, 0.0));
                continue;
            }
            let v = overrides.iter().find(|(n, _)| *n == s.name).map(|(_, v)| *v).or(s.value);
            values.push(v.ok_or_else(|| SymError::MissingValue(s.name.clone()))?);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let (re, im) = c.to_f64_pair();
            let mut t = Complex64::new(re, im);
            for (k, &e) in m.iter().enumerate() {
                if e != 0 {
                    t *= values[k].powi(e);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    fn uses_symbol(&self, k: usize) -> bool {
        self.terms.keys().any(|m| m[k] != 0)
    }

    /// Polynomial coefficients in one symbol: `self = Σ_k coeff_k · sym^k`.
    pub fn coefficients_in(&self, name: &str) -> Result<BTreeMap<i32, SymExpr>, SymError> {
        let k = self.table.index_of(name).ok_or_else(|| SymError::UnknownSymbol(name.to_string()))?;
        let mut out: BTreeMap<i32, SymExpr> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let d = rest[k];
            rest[k] = 0;
            let entry = out.entry(d).or_insert_with(|| Self::zero(&self.table));
            entry.terms.insert(rest, c.clone());
        }
        Ok(out)
    }

    /// Replaces a symbol by an expression. Negative powers need an invertible value.
    pub fn substitute(&self, name: &str, value: &SymExpr) -> Result<SymExpr, SymError> {
        let mut out = Self::zero(&self.table);
        for (d, coeff) in self.coefficients_in(name)? {
            out = out.try_add(&coeff.try_mul(&value.powi(d)?)?)?;
        }
        Ok(out)
    }

    /// Exact `e^{iπq}` for `q` with denominator dividing 4.
    pub fn exp_i_pi_rational(table: &Arc<SymbolTable>, q: &BigRational) -> Result<Self, SymError> {
        let four = BigRational::from_integer(BigInt::from(4));
        let scaled = q * &four;
        if !scaled.is_integer() {
            return Err(SymError::UnsupportedRoot(format!("{}/{}", q.numer(), q.denom())));
        }
        let k = scaled.to_integer().mod_floor(&BigInt::from(8)).to_i64().unwrap();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let (re, im) = match k {
            0 => return Ok(Self::one(table)),
            2 => return Ok(Self::i(table)),
            4 => return Ok(Self::int(table, -1)),
            6 => return Ok(-Self::i(table)),
            1 => (half.clone(), half),
            3 => (-half.clone(), half),
            5 => (-half.clone(), -half),
            _ => (half.clone(), -half),
        };
        let s2 = Self::symbol(table, "s2")?;
        Ok(s2.scale(&GaussianRational::new(re, im)))
    }

    /// Sum of absolute values of the numeric coefficients of each term; a
    /// magnitude scale for relative tolerances.
    pub fn numeric_scale(&self) -> Result<f64, SymError> {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let t = SymExpr { table: self.table.clone(), terms: BTreeMap::from([(m.clone(), c.clone())]) };
            acc += t.eval_numeric()?.norm();
        }
        Ok(acc)
    }

    pub fn is_real_rational(&self) -> Option<BigRational> {
        let c = self.as_constant()?;
        c.is_real().then_some(c.re)
    }

    pub fn max_abs_exponent(&self) -> i32 {
        self.terms.keys().flat_map(|m| m.iter().map(|e| e.abs())).max().unwrap_or(0)
    }
}

impl PartialEq for SymExpr {
    fn eq(&self, o: &Self) -> bool {
        same_table(&self.table, &o.table) && self.terms == o.terms
    }
}

impl Eq for SymExpr {}

impl fmt::Debug for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymExpr({self})")
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print(self))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a SymExpr> for &'a SymExpr {
            type Output = SymExpr;
            fn $m(self, o: &SymExpr) -> SymExpr {
                self.$try(o).expect("symbol table mismatch")
            }
        }
        impl $tr for SymExpr {
            type Output = SymExpr;
            fn $m(self, o: SymExpr) -> SymExpr {
                self.$try(&o).expect("symbol table mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &SymExpr {
    type Output = SymExpr;
    fn neg(self) -> SymExpr {
        SymExpr { table: self.table.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for SymExpr {
    type Output = SymExpr;
    fn neg(self) -> SymExpr {
        -&self
    }
}

pub(crate) fn term_parts(e: &SymExpr) -> Vec<(Monomial, GaussianRational)> {
    e.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect()
}

pub(crate) fn is_positive_integer(q: &BigRational) -> bool {
    q.is_integer() && q.is_positive()
}
