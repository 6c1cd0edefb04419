//! Parser for the restricted expression grammar used in inputs:
//! identifiers, rational constants, `+ - * /`, integer powers, parentheses
//! and `exp(<linear form>)`.
//!
//! Identifiers resolve first to parameters with given values, then to the
//! variable list; anything else is an error. Columns in errors are 1-based
//! character positions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::expfun::ExpFunction;
use crate::arith::poly::{Polynomial, VarSet};
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn err(col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { col, msg: msg.into() }
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().map_err(|_| err(col, "bad number"))?), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(err(col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a VarSet,
    params: &'a [(&'a str, Rational)],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.col(), format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<ExpFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ExpFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.col();
                self.pos += 1;
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(err(col, "division by zero"));
                }
                let inv = d.inv().ok_or_else(|| err(col, "divisor must have a single exponential term"))?;
                acc = acc.mul(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ExpFunction> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn integer(&mut self) -> Result<i32> {
        let col = self.col();
        let paren = self.eat('(');
        let neg = self.eat('-');
        let n = match self.toks.get(self.pos) {
            Some((Tok::Num(n), _)) => {
                let v: i32 = n.try_into().map_err(|_| err(col, "exponent too large"))?;
                self.pos += 1;
                v
            }
            _ => return Err(err(self.col(), "expected an integer exponent")),
        };
        if paren {
            self.expect(')')?;
        }
        Ok(if neg { -n } else { n })
    }

    fn power(&mut self) -> Result<ExpFunction> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            let col = self.col();
            self.pos += 1;
            let e = self.integer()?;
            if e < 0 && base.is_zero() {
                return Err(err(col, "zero to a negative power"));
            }
            return base.pow(e).ok_or_else(|| err(col, "negative power of a multi-frequency sum"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExpFunction> {
        let col = self.col();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Num(n), _)) => {
                self.pos += 1;
                Ok(ExpFunction::constant(self.vars, Rational::from(n)))
            }
            Some((Tok::Op('('), _)) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some((Tok::Ident(name), _)) => {
                self.pos += 1;
                if name == "exp" && self.peek() == Some(&Tok::Op('(')) {
                    self.pos += 1;
                    let arg_col = self.col();
                    let arg = self.expr()?;
                    self.expect(')')?;
                    return self.exponential(&arg, arg_col);
                }
                if let Some((_, v)) = self.params.iter().find(|(p, _)| *p == name) {
                    return Ok(ExpFunction::constant(self.vars, v.clone()));
                }
                match self.vars.index(&name) {
                    Some(i) => Ok(ExpFunction::from_polynomial(Polynomial::var(self.vars, i))),
                    None => Err(err(col, format!("unknown identifier `{name}`"))),
                }
            }
            Some(_) => Err(err(col, "unexpected token")),
            None => Err(err(col, "unexpected end of input")),
        }
    }

    fn exponential(&self, arg: &ExpFunction, col: usize) -> Result<ExpFunction> {
        let bad = || err(col, "exp argument must be a linear form with rational coefficients");
        let p = arg.as_ratfun().ok_or_else(bad)?;
        let p = p.as_polynomial().ok_or_else(bad)?.clone();
        let mut freq = alloc::vec![Rational::zero(); self.vars.len()];
        for (e, c) in p.terms() {
            let deg: u32 = e.iter().map(|&k| k as u32).sum();
            if deg != 1 {
                return Err(bad());
            }
            let i = e.iter().position(|&k| k == 1).unwrap();
            freq[i] = c.clone();
        }
        Ok(ExpFunction::term(self.vars, freq, RationalFunction::from_polynomial(Polynomial::one(self.vars))))
    }
}

/// Parses with parameters substituted by the given values.
pub fn parse_exp_function(s: &str, vars: &VarSet, params: &[(&str, Rational)]) -> Result<ExpFunction> {
    let toks = lex(s)?;
    let end = s.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end, vars, params };
    if p.peek().is_none() {
        return Err(err(1, "empty expression"));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.col(), "trailing input"));
    }
    Ok(e)
}

pub fn parse_rational_function_with(s: &str, vars: &VarSet, params: &[(&str, Rational)]) -> Result<RationalFunction> {
    let e = parse_exp_function(s, vars, params)?;
    e.as_ratfun().ok_or_else(|| err(1, "exponential not allowed here"))
}

pub fn parse_rational_function(s: &str, vars: &VarSet) -> Result<RationalFunction> {
    parse_rational_function_with(s, vars, &[])
}

pub fn parse_polynomial(s: &str, vars: &VarSet) -> Result<Polynomial> {
    let f = parse_rational_function(s, vars)?;
    f.as_polynomial().cloned().ok_or_else(|| err(1, "not a polynomial"))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let f = parse_rational_function(s, &VarSet::empty())?;
    f.constant_value().ok_or_else(|| err(1, "not a constant"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/3").unwrap(), Rational::new(1, 3));
        assert_eq!(parse_rational("-6/4").unwrap(), Rational::new(-3, 2));
        assert_eq!(parse_rational("2^-2").unwrap(), Rational::new(1, 4));
    }

    #[test]
    fn two_term_polynomial() {
        let v = VarSet::new(&["x1", "x2"]);
        let p = parse_polynomial("x1^2*x2 - 3/2", &v).unwrap();
        assert_eq!(p.nterms(), 2);
        assert_eq!(p.to_string(), "x1^2*x2 - 3/2");
    }

    #[test]
    fn exponential_with_parameter() {
        let v = VarSet::new(&["x", "z2"]);
        let f = parse_exp_function("exp(-e*x)*z2", &v, &[("e", Rational::from_int(2))]).unwrap();
        assert_eq!(f.nterms(), 1);
        let (freq, c) = f.terms().next().unwrap();
        assert_eq!(freq, &alloc::vec![Rational::from_int(-2), Rational::zero()]);
        assert_eq!(c, &parse_rational_function("z2", &v).unwrap());
    }

    #[test]
    fn errors_carry_columns() {
        let v = VarSet::new(&["x"]);
        assert_eq!(parse_polynomial("x + y", &v).unwrap_err(), Error::Parse { col: 5, msg: "unknown identifier `y`".into() });
        assert!(matches!(parse_polynomial("x +", &v), Err(Error::Parse { col: 4, .. })));
        assert!(matches!(parse_exp_function("exp(x^2)", &v, &[]), Err(Error::Parse { col: 5, .. })));
        assert!(matches!(parse_polynomial("x # 2", &v), Err(Error::Parse { col: 3, .. })));
    }

    #[test]
    fn round_trips() {
        let v = VarSet::new(&["x", "y"]);
        for s in ["x^2*y - 3/2", "(x + 1)/(x^2 - y)", "exp(2*x - y/3)*(x/(y + 1)) + x", "-7/3"] {
            let e = parse_exp_function(s, &v, &[]).unwrap();
            let again = parse_exp_function(&e.to_string(), &v, &[]).unwrap();
            assert_eq!(e, again, "{s}");
        }
    }
}
