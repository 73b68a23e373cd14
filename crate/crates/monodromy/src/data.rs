use std::sync::Arc;

use linalg::SymMatrix;
use serde_json::{json, Map, Value};
use symring::{format_rational, parse_rational, BigRational, Complex64, SymExpr, SymbolTable};

use crate::error::MonodromyError;

/// The tuple `(μ, R, η, S, C)` with optional canonical coordinates `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonodromyData {
    pub mu: Vec<BigRational>,
    pub r: SymMatrix,
    pub eta: SymMatrix,
    pub s: SymMatrix,
    pub c: SymMatrix,
    pub u: Option<Vec<Complex64>>,
}

fn quarter_integral(q: &BigRational) -> bool {
    (q * BigRational::from_integer(4.into())).is_integer()
}

fn is_positive_integer(q: &BigRational) -> bool {
    q.is_integer() && *q > BigRational::from_integer(0.into())
}

impl MonodromyData {
    pub fn new(
        mu: Vec<BigRational>,
        r: SymMatrix,
        eta: SymMatrix,
        s: SymMatrix,
        c: SymMatrix,
        u: Option<Vec<Complex64>>,
    ) -> Result<Self, MonodromyError> {
        let md = MonodromyData { mu, r, eta, s, c, u };
        md.validate()?;
        Ok(md)
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        self.s.table()
    }

    /// The structural invariants: shapes, η symmetric and nondegenerate,
    /// `μη + ημ = 0`, unit diagonal of `S`, and the support of `R`.
    pub fn validate(&self) -> Result<(), MonodromyError> {
        let n = self.n();
        let bad = |m: String| Err(MonodromyError::Invalid(m));
        for (name, m) in [("R", &self.r), ("eta", &self.eta), ("S", &self.s), ("C", &self.c)] {
            if m.n() != n {
                return bad(format!("{name} has dimension {} but mu has {n} entries", m.n()));
            }
        }
        if let Some(u) = &self.u {
            if u.len() != n {
                return bad(format!("u has {} entries, expected {n}", u.len()));
            }
            if u.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return bad("u has non-finite entries".into());
            }
        }
        if let Some(q) = self.mu.iter().find(|q| !quarter_integral(q)) {
            return Err(MonodromyError::UnsupportedMu(format_rational(q)));
        }
        if !self.eta.is_symmetric() {
            return bad("eta is not symmetric".into());
        }
        if self.eta.determinant().is_zero() {
            return bad("eta is degenerate".into());
        }
        for (a, b, e) in self.eta.entries() {
            if !e.is_zero() && (&self.mu[a] + &self.mu[b]) != BigRational::from_integer(0.into()) {
                return bad(format!("eta[{a}][{b}] != 0 but mu_a + mu_b != 0"));
            }
        }
        for k in 0..n {
            if !self.s.get(k, k).is_one() {
                return bad(format!("S[{k}][{k}] != 1"));
            }
        }
        for (a, b, e) in self.r.entries() {
            if !e.is_zero() && !is_positive_integer(&(&self.mu[a] - &self.mu[b])) {
                return bad(format!("R[{a}][{b}] != 0 but mu_a - mu_b is not a positive integer"));
            }
        }
        Ok(())
    }

    /// `e^{iπ·k·μ}` as a diagonal matrix.
    pub fn exp_mu(&self, k: i64) -> Result<SymMatrix, MonodromyError> {
        let t = self.table();
        let d = self
            .mu
            .iter()
            .map(|q| SymExpr::exp_i_pi_rational(t, &(q * BigRational::from_integer(k.into()))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SymMatrix::diag(t, &d))
    }

    /// `e^{iπ·k·R}`.
    pub fn exp_r(&self, k: i64) -> Result<SymMatrix, MonodromyError> {
        let s = SymExpr::parse_in(self.table(), "i*pi")?.scale(&symring::GaussianRational::from_int(k));
        Ok(self.r.matrix_exp_nilpotent(&s)?)
    }

    /// `M₀ = e^{2πiμ} e^{2πiR}`.
    pub fn m0(&self) -> Result<SymMatrix, MonodromyError> {
        Ok(&self.exp_mu(2)? * &self.exp_r(2)?)
    }

    /// `M₀⁻¹ = e^{−2πiR} e^{−2πiμ}`.
    pub fn m0_inv(&self) -> Result<SymMatrix, MonodromyError> {
        Ok(&self.exp_r(-2)? * &self.exp_mu(-2)?)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("n".into(), json!(self.n()));
        m.insert("mu".into(), Value::Array(self.mu.iter().map(|q| Value::String(format_rational(q))).collect()));
        m.insert("R".into(), self.r.to_json());
        m.insert("eta".into(), self.eta.to_json());
        m.insert("S".into(), self.s.to_json());
        m.insert("C".into(), self.c.to_json());
        if let Some(u) = &self.u {
            m.insert("u".into(), Value::Array(u.iter().map(|z| json!([round15(z.re), round15(z.im)])).collect()));
        }
        Value::Object(m)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(table: &Arc<SymbolTable>, v: &Value) -> Result<Self, MonodromyError> {
        let bad = |m: &str| MonodromyError::Json(m.to_string());
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let mu = obj
            .get("mu")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing mu"))?
            .iter()
            .map(|x| match x {
                Value::String(s) => parse_rational(s).map_err(MonodromyError::from),
                Value::Number(k) if k.is_i64() => Ok(BigRational::from_integer(k.as_i64().unwrap().into())),
                _ => Err(bad("mu entries must be rational strings")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(n) = obj.get("n") {
            if n.as_u64() != Some(mu.len() as u64) {
                return Err(bad("n does not match the length of mu"));
            }
        }
        let mat = |key: &str| -> Result<SymMatrix, MonodromyError> {
            Ok(SymMatrix::from_json(table, obj.get(key).ok_or_else(|| bad(&format!("missing {key}")))?)?)
        };
        let u = match obj.get("u") {
            None | Some(Value::Null) => None,
            Some(Value::Array(a)) => Some(
                a.iter()
                    .map(|z| match z.as_array().map(|p| p.as_slice()) {
                        Some([re, im]) => Ok(Complex64::new(
                            re.as_f64().ok_or_else(|| bad("u entry"))?,
                            im.as_f64().ok_or_else(|| bad("u entry"))?,
                        )),
                        _ => Err(bad("u entries must be [re, im]")),
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            _ => return Err(bad("u must be an array")),
        };
        Self::new(mu, mat("R")?, mat("eta")?, mat("S")?, mat("C")?, u)
    }

    pub fn from_json_str(table: &Arc<SymbolTable>, s: &str) -> Result<Self, MonodromyError> {
        let v: Value = serde_json::from_str(s).map_err(|e| MonodromyError::Json(e.to_string()))?;
        Self::from_json(table, &v)
    }
}

/// Rounds to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}
