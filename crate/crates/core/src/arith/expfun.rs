//! Exponential polynomials Σ_λ c_λ(x)·exp(λ·x) with rational-function
//! coefficients and rational frequency vectors.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::poly::{Polynomial, VarSet};
use super::ratfun::RationalFunction;
use super::rational::Rational;
use crate::error::{Error, Result};

pub type Frequency = Vec<Rational>;

#[derive(Clone)]
pub struct ExpFunction {
    vars: VarSet,
    terms: BTreeMap<Frequency, RationalFunction>,
}

impl ExpFunction {
    pub fn zero(vars: &VarSet) -> Self {
        ExpFunction { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn from_ratfun(f: RationalFunction) -> Self {
        let vars = f.vars().clone();
        Self::term(&vars, vec![Rational::zero(); vars.len()], f)
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::from_ratfun(RationalFunction::from_polynomial(p))
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(vars, c))
    }

    /// `c · exp(λ·x)`; `freq` has one entry per variable of `vars`.
    pub fn term(vars: &VarSet, freq: Frequency, c: RationalFunction) -> Self {
        assert_eq!(freq.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            let c = if c.vars().same(vars) { c } else { c.embed(vars) };
            terms.insert(freq, c);
        }
        ExpFunction { vars: vars.clone(), terms }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Frequency, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Zero iff every frequency component vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(|c| c.is_zero()))
    }

    pub fn as_ratfun(&self) -> Option<RationalFunction> {
        if !self.is_rational() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(|| RationalFunction::zero().embed(&self.vars)))
    }

    pub fn component(&self, freq: &[Rational]) -> Option<&RationalFunction> {
        self.terms.get(freq)
    }

    pub fn embed(&self, target: &VarSet) -> Self {
        if self.vars.same(target) {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|v| target.index(v).expect("embed target lacks a variable"))
            .collect();
        let mut terms = BTreeMap::new();
        for (f, c) in &self.terms {
            let mut nf = vec![Rational::zero(); target.len()];
            for (i, &j) in map.iter().enumerate() {
                nf[j] = f[i].clone();
            }
            terms.insert(nf, c.embed(target));
        }
        ExpFunction { vars: target.clone(), terms }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars.same(&other.vars) {
            return (self.clone(), other.clone());
        }
        let (u, _) = self.vars.union(&other.vars);
        (self.embed(&u), other.embed(&u))
    }

    pub fn neg(&self) -> Self {
        ExpFunction { vars: self.vars.clone(), terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        ExpFunction { vars: self.vars.clone(), terms: self.terms.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect() }
    }

    pub fn mul_ratfun(&self, r: &RationalFunction) -> Self {
        self.mul(&Self::from_ratfun(r.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (k, v) in b.terms {
            match a.terms.get(&k) {
                Some(cur) => {
                    let s = cur.add(&v);
                    if s.is_zero() {
                        a.terms.remove(&k);
                    } else {
                        a.terms.insert(k, s);
                    }
                }
                None => {
                    a.terms.insert(k, v);
                }
            }
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut out = Self::zero(&a.vars);
        for (ka, va) in &a.terms {
            for (kb, vb) in &b.terms {
                let k: Frequency = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                out = out.add(&Self::term(&a.vars, k, va.mul(vb)));
            }
        }
        out
    }

    /// Inverse of a single-frequency function.
    pub fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, v) = self.terms.iter().next().unwrap();
        let nk: Frequency = k.iter().map(|x| -x).collect();
        Some(Self::term(&self.vars, nk, v.inv()?))
    }

    pub fn pow(&self, e: i32) -> Option<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut out = Self::constant(&self.vars, Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        Some(out)
    }

    /// ∂/∂x_i (c e^{λ·x}) = (∂c/∂x_i + λ_i c) e^{λ·x}.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (k, c) in &self.terms {
            let d = c.derivative(var).add(&c.scale(&k[var]));
            out = out.add(&Self::term(&self.vars, k.clone(), d));
        }
        out
    }

    pub fn derivative_by_name(&self, name: &str) -> Result<Self> {
        let i = self.vars.index(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(self.derivative(i))
    }

    /// Substitutes values for some variables.  Frequencies in the substituted
    /// variables turn into the rational factor exp(λ_i v_i), which is only
    /// representable when λ_i v_i = 0.
    pub fn substitute_values(&self, values: &[(usize, Rational)]) -> Result<Self> {
        let mut out = Self::zero(&self.vars);
        for (k, c) in &self.terms {
            for (i, v) in values {
                if !(&k[*i] * v).is_zero() {
                    return Err(Error::Unsupported("substituting into an exponential argument".into()));
                }
            }
            let mut nk = k.clone();
            for (i, _) in values {
                nk[*i] = Rational::zero();
            }
            out = out.add(&Self::term(&self.vars, nk, c.substitute_values(values)?));
        }
        Ok(out)
    }

    /// Multiplies every coefficient by a common polynomial denominator and
    /// returns the per-frequency polynomial numerators.
    pub fn numerators_over(&self, den: &Polynomial) -> Vec<(Frequency, Polynomial)> {
        self.terms
            .iter()
            .map(|(k, c)| {
                let p = c.mul(&RationalFunction::from_polynomial(den.clone()));
                let p = p.as_polynomial().cloned().expect("denominator does not clear");
                (k.clone(), p)
            })
            .collect()
    }
}

impl PartialEq for ExpFunction {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for ExpFunction {}

impl From<RationalFunction> for ExpFunction {
    fn from(f: RationalFunction) -> Self {
        Self::from_ratfun(f)
    }
}

fn fmt_linear_form(f: &mut fmt::Formatter<'_>, vars: &VarSet, k: &[Rational]) -> fmt::Result {
    let terms: Vec<(Vec<u16>, Rational)> = k
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mut e = vec![0u16; vars.len()];
            e[i] = 1;
            (e, c.clone())
        })
        .collect();
    let mut p = Polynomial::zero(vars);
    for (e, c) in terms {
        p = p.add(&Polynomial::monomial(vars, &e, c));
    }
    write!(f, "{p}")
}

impl fmt::Display for ExpFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if k.iter().all(|x| x.is_zero()) {
                write!(f, "({c})")?;
            } else {
                write!(f, "exp(")?;
                fmt_linear_form(f, &self.vars, k)?;
                write!(f, ")*({c})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExpFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExpFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_exp_function;

    #[test]
    fn product_rule_with_exponential() {
        let v = VarSet::new(&["x"]);
        let f = parse_exp_function("exp(-x)*x", &v, &[]).unwrap();
        let g = parse_exp_function("exp(-x)*(1 - x)", &v, &[]).unwrap();
        assert_eq!(f.derivative(0), g);
    }

    #[test]
    fn distinct_frequencies_do_not_cancel() {
        let v = VarSet::new(&["x", "y"]);
        let f = parse_exp_function("exp(x)*y + exp(-x)*y", &v, &[]).unwrap();
        assert_eq!(f.nterms(), 2);
        let g = f.sub(&parse_exp_function("exp(x)*y", &v, &[]).unwrap());
        assert_eq!(g.nterms(), 1);
        assert!(g.sub(&parse_exp_function("y*exp(-x)", &v, &[]).unwrap()).is_zero());
    }

    #[test]
    fn mixed_partials_commute() {
        let v = VarSet::new(&["x", "y"]);
        let f = parse_exp_function("exp(2*x - y/3)*(x^2*y + 1)/(x + y)", &v, &[]).unwrap();
        assert_eq!(f.derivative(0).derivative(1), f.derivative(1).derivative(0));
    }
}
