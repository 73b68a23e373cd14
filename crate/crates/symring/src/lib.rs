//! Exact coefficient ring for monodromy computations: Gaussian rationals
//! adjoined with named real constants (`pi`, `gamma`, `zeta3`, square roots and
//! the two Gamma values `g14 = Γ(1/4)`, `g34 = Γ(3/4)`), kept in normal form by a
//! small monomial rewrite system that is checked for termination and local
//! confluence whenever a table is built.

mod error;
mod expr;
mod gaussian;
mod table;
mod text;

pub use error::SymError;
pub use expr::SymExpr;
pub use gaussian::GaussianRational;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
pub use table::{Monomial, Rule, SymbolDef, SymbolTable, Tier, STANDARD_SYMBOLS};

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational, SymError> {
    let bad = || SymError::Parse { pos: 0, msg: format!("bad rational '{s}'") };
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
