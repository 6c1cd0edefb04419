//! Rational functions: quotients of ℚ-polynomials.

use alloc::vec::Vec;
use core::fmt;

use super::gcd::gcd;
use super::poly::{Polynomial, VarSet};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Denominators up to this total degree are fully gcd-reduced after every
/// operation; larger ones are only content-reduced.
pub const DEFAULT_GCD_DEGREE_CAP: u32 = 20;

/// `num / den` with `den` monic (leading coefficient 1 in grlex order).
#[derive(Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn zero() -> Self {
        let v = VarSet::empty();
        RationalFunction { num: Polynomial::zero(&v), den: Polynomial::one(&v) }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let v = VarSet::empty();
        RationalFunction { num: Polynomial::constant(&v, c), den: Polynomial::one(&v) }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let den = Polynomial::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Self::from_polynomial(Polynomial::var(vars, i))
    }

    /// `num / den`, reduced; panics if `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        Self::with_gcd_cap(num, den, DEFAULT_GCD_DEGREE_CAP)
    }

    pub fn with_gcd_cap(num: Polynomial, den: Polynomial, cap: u32) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let (num, den) = Polynomial::align(&num, &den);
        if num.is_zero() {
            return RationalFunction { den: Polynomial::one(num.vars()), num };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else if den.total_degree() <= cap {
            let g = gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        } else {
            (num, den)
        };
        let lc = den.leading_coeff().inv().unwrap();
        RationalFunction { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn embed(&self, target: &VarSet) -> Self {
        RationalFunction { num: self.num.embed(target), den: self.den.embed(target) }
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalFunction { num: Polynomial::zero(self.vars()), den: Polynomial::one(self.vars()) };
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        if self.is_polynomial() {
            return Self::new(self.num.mul(&other.den).add(&other.num), other.den.clone());
        }
        if other.is_polynomial() {
            return Self::new(self.num.add(&other.num.mul(&self.den)), self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = other.den.div_exact(&g).unwrap();
        Self::new(self.num.mul(&b).add(&other.num.mul(&a)), a.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            let (n, _) = Polynomial::align(&self.num, &other.num);
            return RationalFunction { den: Polynomial::one(n.vars()), num: Polynomial::zero(n.vars()) };
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Self::from_polynomial(self.num.mul(&other.num));
        }
        if let Some(c) = other.num.constant_value().filter(|_| other.is_polynomial()) {
            return self.scale(&c);
        }
        if let Some(c) = self.num.constant_value().filter(|_| self.is_polynomial()) {
            return other.scale(&c);
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.inv().expect("zero to negative power").pow(-e);
        }
        RationalFunction { num: self.num.pow(e as u32), den: self.den.pow(e as u32) }
    }

    /// Partial derivative in the variable with the given name; a variable not
    /// present in the list yields zero only if `name` is known to the caller's
    /// coordinate system, so the lookup failing is reported.
    pub fn derivative_by_name(&self, name: &str) -> Result<Self> {
        let i = self.vars().index(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(self.derivative(i))
    }

    pub fn derivative(&self, var: usize) -> Self {
        let dn = self.num.derivative(var);
        if self.is_polynomial() {
            return Self::from_polynomial(dn);
        }
        let dd = self.den.derivative(var);
        if dd.is_zero() {
            return Self::new(dn, self.den.clone());
        }
        Self::new(dn.mul(&self.den).sub(&self.num.mul(&dd)), self.den.mul(&self.den))
    }

    /// Exact value at `point`; fails when the denominator vanishes there.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(&self.num.evaluate(point) / &d)
    }

    pub fn substitute_values(&self, values: &[(usize, Rational)]) -> Result<Self> {
        let d = self.den.substitute_values(values);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(Self::new(self.num.substitute_values(values), d))
    }

    /// Substitutes named values; names absent from the variable list are ignored.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> Result<Self> {
        let idx: Vec<(usize, Rational)> =
            values.iter().filter_map(|(n, v)| self.vars().index(n).map(|i| (i, v.clone()))).collect();
        if idx.is_empty() {
            return Ok(self.clone());
        }
        self.substitute_values(&idx)
    }

    /// Substitutes rational functions for every variable.
    pub fn compose(&self, images: &[RationalFunction]) -> Result<Self> {
        assert_eq!(images.len(), self.vars().len());
        let eval = |p: &Polynomial| -> RationalFunction {
            let mut acc = RationalFunction::zero();
            for (e, c) in p.terms() {
                let mut t = RationalFunction::constant(c.clone());
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        t = t.mul(&images[i].pow(k as i32));
                    }
                }
                acc = acc.add(&t);
            }
            acc
        };
        let n = eval(&self.num);
        let d = eval(&self.den);
        n.div(&d).ok_or(Error::DenominatorVanishes)
    }

    /// Total degree of the denominator, used to decide gcd reduction.
    pub fn denominator_degree(&self) -> u32 {
        self.den.total_degree()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        // both sides are reduced with monic denominators, but a capped
        // reduction may leave a common factor, so compare cross products
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFunction {}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let wrap_num = self.num.nterms() > 1;
        let (e, c) = &self.den.terms()[0];
        let wrap_den = self.den.nterms() > 1 || !c.is_one() || e.iter().filter(|&&a| a > 0).count() > 1;
        match (wrap_num, wrap_den) {
            (true, true) => write!(f, "({})/({})", self.num, self.den),
            (true, false) => write!(f, "({})/{}", self.num, self.den),
            (false, true) => write!(f, "{}/({})", self.num, self.den),
            (false, false) => write!(f, "{}/{}", self.num, self.den),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_rational_function;

    fn rf(s: &str, v: &VarSet) -> RationalFunction {
        parse_rational_function(s, v).unwrap()
    }

    #[test]
    fn derivative_of_reciprocal() {
        let v = VarSet::new(&["x1"]);
        let f = rf("1/x1", &v);
        assert_eq!(f.derivative(0), rf("-1/x1^2", &v));
    }

    #[test]
    fn evaluation_and_vanishing_denominator() {
        let v = VarSet::new(&["x"]);
        let f = rf("(x^2+1)/x", &v);
        assert_eq!(f.evaluate(&[Rational::from_int(2)]).unwrap(), Rational::new(5, 2));
        let g = rf("1/x", &v);
        assert_eq!(g.evaluate(&[Rational::zero()]), Err(Error::DenominatorVanishes));
    }

    #[test]
    fn cancels_common_factors() {
        let v = VarSet::new(&["x", "y"]);
        let f = rf("(x^2 - y^2)/(2*x + 2*y)", &v);
        assert!(f.is_polynomial());
        assert_eq!(f, rf("x/2 - y/2", &v));
        let s = rf("1/(x+y)", &v).add(&rf("1/(x-y)", &v));
        assert_eq!(s, rf("2*x/(x^2-y^2)", &v));
        assert!(s.denom().leading_coeff().is_one());
    }

    #[test]
    fn substitution_into_rational_function() {
        let v = VarSet::new(&["k"]);
        let w = VarSet::new(&["m"]);
        let f = rf("k^2 + 1", &v);
        let g = f.compose(&[rf("2*m - 1", &w)]).unwrap();
        assert_eq!(g, rf("4*m^2 - 4*m + 2", &w));
    }
}
