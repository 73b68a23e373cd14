//! Canonical text form: terms joined by ` + `, each `coeff*sym^e*…` with the
//! coefficient parenthesized unless it is a positive integer or a positive
//! integer multiple of `i`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::SymError;
use crate::expr::{is_positive_integer, term_parts, SymExpr};
use crate::gaussian::{fmt_ratio, GaussianRational};
use crate::table::SymbolTable;

pub(crate) fn print(e: &SymExpr) -> String {
    let parts = term_parts(e);
    if parts.is_empty() {
        return "0".into();
    }
    let table = e.table();
    parts
        .iter()
        .map(|(m, c)| {
            let syms: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(k, &x)| if x == 1 { table.name(k).to_string() } else { format!("{}^{}", table.name(k), x) })
                .collect();
            let coeff = coeff_text(c);
            match (syms.is_empty(), c.is_one()) {
                (true, _) => coeff,
                (false, true) => syms.join("*"),
                (false, false) => format!("{coeff}*{}", syms.join("*")),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn coeff_text(c: &GaussianRational) -> String {
    if c.im.is_zero() {
        if is_positive_integer(&c.re) {
            return fmt_ratio(&c.re);
        }
        return format!("({})", fmt_ratio(&c.re));
    }
    if c.re.is_zero() {
        if c.im.is_one() {
            return "i".into();
        }
        if is_positive_integer(&c.im) {
            return format!("{}*i", fmt_ratio(&c.im));
        }
        return format!("({})*i", fmt_ratio(&c.im));
    }
    format!("({c})")
}

impl SymExpr {
    /// Parses with the standard symbol table.
    pub fn parse(s: &str) -> Result<SymExpr, SymError> {
        Self::parse_in(&SymbolTable::standard(), s)
    }

    pub fn parse_in(table: &Arc<SymbolTable>, s: &str) -> Result<SymExpr, SymError> {
        let mut p = Parser { table, src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

impl std::str::FromStr for SymExpr {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        SymExpr::parse(s)
    }
}

struct Parser<'a> {
    table: &'a Arc<SymbolTable>,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> SymError {
        SymError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SymExpr, SymError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SymExpr, SymError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.factor()?;
                let inv = d.inv().map_err(|_| SymError::Parse { pos: at, msg: "divisor must be a single nonzero term".into() })?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<SymExpr, SymError> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        if self.eat(b'+') {
            return self.factor();
        }
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let at = self.pos;
        let n = self.integer()?;
        let n: i32 = n.try_into().map_err(|_| SymError::Parse { pos: at, msg: "exponent too large".into() })?;
        base.powi(if neg { -n } else { n })
            .map_err(|_| SymError::Parse { pos: at, msg: "negative power of a non-monomial".into() })
    }

    fn integer(&mut self) -> Result<BigInt, SymError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<SymExpr, SymError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(SymExpr::constant(
                    self.table,
                    GaussianRational::from_rational(BigRational::from_integer(n)),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "i" {
                    return Ok(SymExpr::i(self.table));
                }
                SymExpr::symbol(self.table, name).map_err(|_| SymError::Parse {
                    pos: start,
                    msg: format!("unknown symbol '{name}'"),
                })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> String {
        SymExpr::parse(s).unwrap().to_string()
    }

    #[test]
    fn prints_canonical_examples() {
        assert_eq!(rt("-1/3*i*pi^3"), "(-1/3)*i*pi^3");
        assert_eq!(rt("(1/2 - 3/4*i)*s2"), "(1/2-3/4*i)*s2");
        assert_eq!(rt("0"), "0");
        assert_eq!(rt("2 - 2"), "0");
        assert_eq!(rt("i*i"), "(-1)");
        assert_eq!(rt("3*i"), "3*i");
    }

    #[test]
    fn parse_applies_rules() {
        assert_eq!(rt("g14*g34"), rt("s2*pi"));
        assert_eq!(rt("1/s2"), rt("s2/2"));
        assert_eq!(rt("spi^3"), "pi*spi");
        assert_eq!(rt("pi^-2"), "pi^-2");
    }

    #[test]
    fn print_parse_roundtrip() {
        for s in [
            "(4*gamma + i*pi)/(2*pi^2)",
            "(48*gamma^2 + 24*i*gamma*pi - 5*pi^2)/(12*pi^2*c12)",
            "v^2 - 6*v + 1",
            "(1-i)*g34/spi",
            "-zeta3 + 16*gamma^3",
        ] {
            let e = SymExpr::parse(s).unwrap();
            let back = SymExpr::parse(&e.to_string()).unwrap();
            assert_eq!(e, back, "{s}");
            assert_eq!(back.to_string(), e.to_string());
        }
    }

    #[test]
    fn division_by_sum_is_rejected() {
        assert!(matches!(SymExpr::parse("1/(1+pi)"), Err(SymError::Parse { .. })));
        assert!(matches!(SymExpr::parse("(1+pi)^-1"), Err(SymError::Parse { .. })));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(SymExpr::parse("pi +"), Err(SymError::Parse { .. })));
        assert!(matches!(SymExpr::parse("foo"), Err(SymError::Parse { .. })));
        assert!(matches!(SymExpr::parse("(pi"), Err(SymError::Parse { .. })));
        assert!(matches!(SymExpr::parse("pi pi"), Err(SymError::Parse { .. })));
        assert!(matches!(SymExpr::parse("1/0"), Err(SymError::Parse { .. })));
    }
}
