use alloc::collections::BTreeMap;
use alloc::vec;
use core::fmt;

use super::metric::Metric;
use crate::arith::poly::{total_degree, Exponents, VarSet};
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

/// Σ_α c_α(x) p^α; homogeneity in p is not required but is preserved by the
/// bracket.
#[derive(Clone, PartialEq)]
pub struct MomentumPolynomial {
    vars: VarSet,
    terms: BTreeMap<Exponents, RationalFunction>,
}

impl MomentumPolynomial {
    pub fn zero(vars: &VarSet) -> Self {
        MomentumPolynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// c · p^α
    pub fn monomial(vars: &VarSet, alpha: &[u16], c: RationalFunction) -> Self {
        let mut out = Self::zero(vars);
        out.add_term(Exponents::from_slice(alpha), c);
        out
    }

    /// p_i
    pub fn p(vars: &VarSet, i: usize) -> Self {
        let mut e = vec![0u16; vars.len()];
        e[i] = 1;
        Self::monomial(vars, &e, RationalFunction::one())
    }

    fn add_term(&mut self, e: Exponents, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        let c = if c.vars().same(&self.vars) { c } else { c.embed(&self.vars) };
        match self.terms.get(&e) {
            Some(cur) => {
                let s = cur.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn coeff(&self, alpha: &[u16]) -> RationalFunction {
        self.terms.get(alpha).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Degree in p, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|e| total_degree(e));
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.scale(s));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let e: Exponents = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn d_x(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.derivative(i));
        }
        out
    }

    pub fn d_p(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                out.add_term(ne, c.scale(&Rational::from_int(e[i] as i64)));
            }
        }
        out
    }
}

/// {F, G} = Σ_i ∂F/∂p_i ∂G/∂x_i − ∂F/∂x_i ∂G/∂p_i.
pub fn poisson_bracket(f: &MomentumPolynomial, g: &MomentumPolynomial) -> Result<MomentumPolynomial> {
    if !f.vars.same(&g.vars) {
        return Err(Error::DimensionMismatch("momentum polynomials on different coordinates".into()));
    }
    let mut out = MomentumPolynomial::zero(&f.vars);
    for i in 0..f.vars.len() {
        out = out.add(&f.d_p(i).mul(&g.d_x(i))).sub(&f.d_x(i).mul(&g.d_p(i)));
    }
    Ok(out)
}

/// H = Σ g^{ij} p_i p_j (no factor ½; scaling does not change the integrals).
pub fn geodesic_hamiltonian(g: &Metric) -> MomentumPolynomial {
    let n = g.dim();
    let inv = g.inverse();
    let mut h = MomentumPolynomial::zero(g.vars());
    for i in 0..n {
        for j in 0..n {
            let mut e = vec![0u16; n];
            e[i] += 1;
            e[j] += 1;
            h.add_term(Exponents::from_slice(&e), inv[i][j].clone());
        }
    }
    h
}

impl fmt::Display for MomentumPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*p{}", i + 1)?,
                    _ => write!(f, "*p{}^{a}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MomentumPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MomentumPolynomial({self})")
    }
}
