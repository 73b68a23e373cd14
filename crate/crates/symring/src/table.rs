use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use crate::error::SymError;
use crate::gaussian::GaussianRational;

/// Dense exponent vector indexed by symbol position in the table.
pub type Monomial = Vec<i32>;

/// Weight class of a symbol in the termination measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    /// Free Laurent variable; never rewritten.
    Base,
    /// Square root of a base quantity (`s2`, `spi`, `c12`).
    Root,
    /// Factor of a product relation (`g14`, `g34`).
    Product,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymbolDef {
    pub name: String,
    pub value: Option<Complex64>,
    pub tier: Tier,
}

impl SymbolDef {
    pub fn new(name: &str, value: Option<f64>, tier: Tier) -> Self {
        SymbolDef { name: name.to_string(), value: value.map(|x| Complex64::new(x, 0.0)), tier }
    }
}

/// `lhs → coeff·rhs` on monomials. A monomial matches when it contains `lhs`
/// with the same signs (positive exponents at least as large, negative ones at
/// least as negative).
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Monomial,
    pub coeff: GaussianRational,
    pub rhs: Monomial,
}

impl Rule {
    pub fn matches(&self, m: &[i32]) -> bool {
        self.lhs.iter().zip(m).all(|(&l, &e)| match l.cmp(&0) {
            Ordering::Greater => e >= l,
            Ordering::Less => e <= l,
            Ordering::Equal => true,
        })
    }

    pub fn apply(&self, m: &[i32]) -> Monomial {
        m.iter().zip(&self.lhs).zip(&self.rhs).map(|((&e, &l), &r)| e - l + r).collect()
    }
}

#[derive(Debug, PartialEq)]
pub struct SymbolTable {
    symbols: Vec<SymbolDef>,
    rules: Vec<Rule>,
}

pub const STANDARD_SYMBOLS: [&str; 11] =
    ["pi", "gamma", "zeta3", "s2", "spi", "g14", "g34", "c12", "c", "v", "q"];

const G14: f64 = 3.625_609_908_221_908_3;
const G34: f64 = 1.225_416_702_465_177_7;
const ZETA3: f64 = 1.202_056_903_159_594_2;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

impl SymbolTable {
    /// Builds a table and runs the termination and critical-pair checks.
    pub fn new(symbols: Vec<SymbolDef>, rules: Vec<Rule>) -> Result<Arc<SymbolTable>, SymError> {
        let n = symbols.len();
        for (k, s) in symbols.iter().enumerate() {
            if s.name == "i" || !valid_ident(&s.name) {
                return Err(SymError::InvalidTable(format!("bad symbol name '{}'", s.name)));
            }
            if symbols[..k].iter().any(|t| t.name == s.name) {
                return Err(SymError::InvalidTable(format!("duplicate symbol '{}'", s.name)));
            }
        }
        for r in &rules {
            if r.lhs.len() != n || r.rhs.len() != n || r.lhs.iter().all(|&e| e == 0) || r.coeff.is_zero() {
                return Err(SymError::InvalidTable("malformed rule".into()));
            }
        }
        let table = SymbolTable { symbols, rules };
        table.check_termination()?;
        table.check_critical_pairs()?;
        table.check_rule_values()?;
        Ok(Arc::new(table))
    }

    /// The shared table of the named constants used by both datasets, plus the
    /// free polynomial symbols `v` and `q`.
    pub fn standard() -> Arc<SymbolTable> {
        static STD: OnceLock<Arc<SymbolTable>> = OnceLock::new();
        STD.get_or_init(|| {
            let pi = std::f64::consts::PI;
            let symbols = vec![
                SymbolDef::new("pi", Some(pi), Tier::Base),
                SymbolDef::new("gamma", Some(EULER_GAMMA), Tier::Base),
                SymbolDef::new("zeta3", Some(ZETA3), Tier::Base),
                SymbolDef::new("s2", Some(std::f64::consts::SQRT_2), Tier::Root),
                SymbolDef::new("spi", Some(pi.sqrt()), Tier::Root),
                SymbolDef::new("g14", Some(G14), Tier::Product),
                SymbolDef::new("g34", Some(G34), Tier::Product),
                SymbolDef::new("c12", Some(1.0), Tier::Root),
                SymbolDef::new("c", Some(1.0), Tier::Base),
                SymbolDef::new("v", None, Tier::Base),
                SymbolDef::new("q", None, Tier::Base),
            ];
            let idx = |name: &str| STANDARD_SYMBOLS.iter().position(|s| *s == name).unwrap();
            let mono = |parts: &[(&str, i32)]| {
                let mut m = vec![0; STANDARD_SYMBOLS.len()];
                for (s, e) in parts {
                    m[idx(s)] = *e;
                }
                m
            };
            let one = GaussianRational::one();
            let half = GaussianRational::from_ratio(1, 2);
            let rules = vec![
                Rule { lhs: mono(&[("s2", 2)]), coeff: GaussianRational::from_int(2), rhs: mono(&[]) },
                Rule { lhs: mono(&[("spi", 2)]), coeff: one.clone(), rhs: mono(&[("pi", 1)]) },
                Rule { lhs: mono(&[("g14", 1), ("g34", 1)]), coeff: one.clone(), rhs: mono(&[("s2", 1), ("pi", 1)]) },
                Rule { lhs: mono(&[("c12", 2)]), coeff: one.clone(), rhs: mono(&[("c", 1)]) },
                Rule { lhs: mono(&[("s2", -1)]), coeff: half.clone(), rhs: mono(&[("s2", 1)]) },
                Rule { lhs: mono(&[("spi", -1)]), coeff: one.clone(), rhs: mono(&[("pi", -1), ("spi", 1)]) },
                Rule { lhs: mono(&[("c12", -1)]), coeff: one.clone(), rhs: mono(&[("c", -1), ("c12", 1)]) },
                Rule {
                    lhs: mono(&[("g14", -1)]),
                    coeff: half.clone(),
                    rhs: mono(&[("s2", 1), ("pi", -1), ("g34", 1)]),
                },
                Rule { lhs: mono(&[("g34", -1)]), coeff: half, rhs: mono(&[("s2", 1), ("pi", -1), ("g14", 1)]) },
            ];
            SymbolTable::new(symbols, rules).expect("standard rewrite system is terminating and confluent")
        })
        .clone()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[SymbolDef] {
        &self.symbols
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn name(&self, k: usize) -> &str {
        &self.symbols[k].name
    }

    pub fn unit(&self) -> Monomial {
        vec![0; self.symbols.len()]
    }

    /// Rewrites to normal form, always firing the first matching rule.
    pub fn normalize(&self, m: &[i32]) -> (GaussianRational, Monomial) {
        self.normalize_from(GaussianRational::one(), m.to_vec())
    }

    fn normalize_from(&self, mut coeff: GaussianRational, mut m: Monomial) -> (GaussianRational, Monomial) {
        while let Some(r) = self.rules.iter().find(|r| r.matches(&m)) {
            coeff = &coeff * &r.coeff;
            m = r.apply(&m);
        }
        (coeff, m)
    }

    pub fn is_normal(&self, m: &[i32]) -> bool {
        !self.rules.iter().any(|r| r.matches(m))
    }

    /// Lexicographic pair (product-tier weight, root-tier weight), where an
    /// exponent `e` weighs `e` if nonnegative and `2|e|` otherwise.
    pub fn measure(&self, m: &[i32]) -> (i64, i64) {
        let mut prod = 0i64;
        let mut root = 0i64;
        for (s, &e) in self.symbols.iter().zip(m) {
            let e = e as i64;
            match s.tier {
                Tier::Product => prod += if e >= 0 { e } else { -2 * e },
                Tier::Root => root += if e >= 0 { e } else { -2 * e },
                Tier::Base => {}
            }
        }
        (prod, root)
    }

    fn check_termination(&self) -> Result<(), SymError> {
        for (k, r) in self.rules.iter().enumerate() {
            for extra in 0..3 {
                for ctx in -2..=2 {
                    let m: Monomial = r
                        .lhs
                        .iter()
                        .zip(&r.rhs)
                        .map(|(&l, &rh)| match l.cmp(&0) {
                            Ordering::Greater => l + extra,
                            Ordering::Less => l - extra,
                            Ordering::Equal if rh != 0 => ctx,
                            Ordering::Equal => 0,
                        })
                        .collect();
                    if self.measure(&r.apply(&m)) >= self.measure(&m) {
                        return Err(SymError::NonTerminating(format!("rule {k} does not decrease the measure")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every pair of rules whose left sides can fire on one monomial is joined
    /// at their least common multiple; both orders must reach the same form.
    fn check_critical_pairs(&self) -> Result<(), SymError> {
        for (a, ra) in self.rules.iter().enumerate() {
            for (b, rb) in self.rules.iter().enumerate().skip(a) {
                let Some(m) = overlap(&ra.lhs, &rb.lhs) else { continue };
                let left = self.normalize_from(ra.coeff.clone(), ra.apply(&m));
                let right = self.normalize_from(rb.coeff.clone(), rb.apply(&m));
                if left != right {
                    return Err(SymError::NonConfluent(format!("rules {a} and {b} diverge")));
                }
            }
        }
        Ok(())
    }

    fn check_rule_values(&self) -> Result<(), SymError> {
        for (k, r) in self.rules.iter().enumerate() {
            let (Some(l), Some(rv)) = (self.eval_monomial(&r.lhs), self.eval_monomial(&r.rhs)) else { continue };
            let (cr, ci) = r.coeff.to_f64_pair();
            let rhs = Complex64::new(cr, ci) * rv;
            if (l - rhs).norm() > 1e-12 * (1.0 + l.norm()) {
                return Err(SymError::InvalidTable(format!("rule {k} is numerically false")));
            }
        }
        Ok(())
    }

    pub fn eval_monomial(&self, m: &[i32]) -> Option<Complex64> {
        let mut acc = Complex64::new(1.0, 0.0);
        for (s, &e) in self.symbols.iter().zip(m) {
            if e != 0 {
                acc *= s.value?.powi(e);
            }
        }
        Some(acc)
    }
}

fn overlap(a: &[i32], b: &[i32]) -> Option<Monomial> {
    let mut m = Vec::with_capacity(a.len());
    for (&x, &y) in a.iter().zip(b) {
        if x != 0 && y != 0 && (x > 0) != (y > 0) {
            return None;
        }
        m.push(if x >= 0 && y >= 0 { x.max(y) } else { x.min(y) });
    }
    Some(m)
}

pub(crate) fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
