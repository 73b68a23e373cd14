use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use linalg::SymMatrix;
use symring::{BigRational, GaussianRational, SymExpr, SymbolTable};

/// Schubert basis `σ₀, σ₁, σ₂, σ₁,₁, σ₂,₁, σ₂,₂`.
pub const BASIS: [&str; 6] = ["s0", "s1", "s2", "s11", "s21", "s22"];

/// Complex degrees of the basis classes.
pub const DEGREES: [usize; 6] = [0, 1, 2, 2, 3, 4];

pub const TOP_DEGREE: usize = 4;

/// `σ_i ∪ σ_j` as a sum of basis classes.
fn schubert_product(i: usize, j: usize) -> &'static [usize] {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    match (a, b) {
        (0, k) => &[0, 1, 2, 3, 4, 5][k..=k],
        (1, 1) => &[2, 3],
        (1, 2) | (1, 3) => &[4],
        (1, 4) | (2, 2) | (3, 3) => &[5],
        _ => &[],
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CohClass {
    table: Arc<SymbolTable>,
    coeffs: Vec<SymExpr>,
}

impl CohClass {
    pub fn zero(table: &Arc<SymbolTable>) -> Self {
        CohClass { table: table.clone(), coeffs: vec![SymExpr::zero(table); 6] }
    }

    pub fn one(table: &Arc<SymbolTable>) -> Self {
        Self::basis(table, 0)
    }

    pub fn basis(table: &Arc<SymbolTable>, k: usize) -> Self {
        let mut c = Self::zero(table);
        c.coeffs[k] = SymExpr::one(table);
        c
    }

    pub fn from_coeffs(table: &Arc<SymbolTable>, coeffs: Vec<SymExpr>) -> Self {
        assert_eq!(coeffs.len(), 6, "a class has six coefficients");
        CohClass { table: table.clone(), coeffs }
    }

    pub fn from_ints(table: &Arc<SymbolTable>, c: [i64; 6]) -> Self {
        Self::from_coeffs(table, c.iter().map(|&k| SymExpr::int(table, k)).collect())
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &[SymExpr] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &SymExpr {
        &self.coeffs[k]
    }

    pub fn scale(&self, s: &SymExpr) -> Self {
        CohClass { table: self.table.clone(), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.scale(&SymExpr::constant(&self.table, GaussianRational::from_rational(q.clone())))
    }

    /// The homogeneous part of complex degree `n`.
    pub fn part(&self, n: usize) -> Self {
        let coeffs =
            self.coeffs.iter().zip(DEGREES).map(|(c, d)| if d == n { c.clone() } else { SymExpr::zero(&self.table) }).collect();
        CohClass { table: self.table.clone(), coeffs }
    }

    pub fn cup(&self, o: &Self) -> Self {
        let mut out = Self::zero(&self.table);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for &k in schubert_product(i, j) {
                    out.coeffs[k] = &out.coeffs[k] + &ab;
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.table), |acc, _| acc.cup(self))
    }

    /// `exp` of a class with vanishing degree-0 part, exact because higher powers vanish.
    pub fn exp_nilpotent(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs a nilpotent class");
        let mut out = Self::one(&self.table);
        let mut term = Self::one(&self.table);
        for k in 1..=TOP_DEGREE as i64 {
            term = term.cup(self).scale(&SymExpr::ratio(&self.table, 1, k));
            out = &out + &term;
        }
        out
    }

    /// Inverse of a class with degree-0 part `1`, as `Σ_k (1 − a)^k`.
    pub fn unit_inverse(&self) -> Self {
        assert!(self.coeffs[0].is_one(), "unit_inverse needs constant term 1");
        let x = &Self::one(&self.table) - self;
        (1..=TOP_DEGREE as u32).fold(Self::one(&self.table), |acc, k| &acc + &x.pow(k))
    }

    /// `∫_𝔾`, the `σ₂,₂` coefficient.
    pub fn integral(&self) -> &SymExpr {
        &self.coeffs[5]
    }

    /// Matrix of `self ∪ (−)`, columns indexed by the basis.
    pub fn cup_matrix(&self) -> SymMatrix {
        let cols: Vec<CohClass> = (0..6).map(|j| self.cup(&Self::basis(&self.table, j))).collect();
        SymMatrix::from_fn(&self.table, 6, |i, j| cols[j].coeffs[i].clone())
    }

    /// `Σ_k (−1)^{deg}` sign flip, which is the effect of dualizing Chern roots.
    pub fn dual(&self) -> Self {
        let coeffs = self.coeffs.iter().zip(DEGREES).map(|(c, d)| if d % 2 == 1 { -c } else { c.clone() }).collect();
        CohClass { table: self.table.clone(), coeffs }
    }

    pub fn substitute(&self, name: &str, v: &SymExpr) -> Result<Self, symring::SymError> {
        let coeffs = self.coeffs.iter().map(|c| c.substitute(name, v)).collect::<Result<_, _>>()?;
        Ok(CohClass { table: self.table.clone(), coeffs })
    }
}

impl Add for &CohClass {
    type Output = CohClass;
    fn add(self, o: &CohClass) -> CohClass {
        CohClass { table: self.table.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &CohClass {
    type Output = CohClass;
    fn sub(self, o: &CohClass) -> CohClass {
        CohClass { table: self.table.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        CohClass { table: self.table.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &CohClass {
    type Output = CohClass;
    fn mul(self, o: &CohClass) -> CohClass {
        self.cup(o)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(BASIS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| if b == "s0" { format!("({c})") } else { format!("({c})*{b}") })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Arc<SymbolTable> {
        SymbolTable::standard()
    }

    #[test]
    fn pieri_products() {
        let s = |k| CohClass::basis(&t(), k);
        assert_eq!(s(1).cup(&s(1)), CohClass::from_ints(&t(), [0, 0, 1, 1, 0, 0]));
        assert_eq!(s(2).cup(&s(3)), CohClass::zero(&t()));
        assert_eq!(s(1).cup(&s(4)), s(5));
        assert_eq!(s(2).cup(&s(2)), s(5));
        assert_eq!(s(3).cup(&s(3)), s(5));
        assert_eq!(s(2).cup(&s(4)), CohClass::zero(&t()));
        let x = CohClass::from_ints(&t(), [3, -1, 2, 5, 7, 1]);
        assert_eq!(CohClass::one(&t()).cup(&x), x);
    }

    #[test]
    fn cup_is_commutative_and_associative_on_the_basis() {
        let s = |k| CohClass::basis(&t(), k);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(s(i).cup(&s(j)), s(j).cup(&s(i)));
                for k in 0..6 {
                    assert_eq!(s(i).cup(&s(j)).cup(&s(k)), s(i).cup(&s(j).cup(&s(k))));
                }
            }
        }
    }

    #[test]
    fn sigma1_to_the_fourth_is_two_points() {
        assert_eq!(CohClass::basis(&t(), 1).pow(4), CohClass::from_ints(&t(), [0, 0, 0, 0, 0, 2]));
        assert!(CohClass::basis(&t(), 1).pow(5) == CohClass::zero(&t()));
    }

    #[test]
    fn exp_inverts() {
        let x = CohClass::from_ints(&t(), [0, 2, -1, 3, 1, 4]);
        assert_eq!(x.exp_nilpotent().cup(&(-&x).exp_nilpotent()), CohClass::one(&t()));
    }
}
