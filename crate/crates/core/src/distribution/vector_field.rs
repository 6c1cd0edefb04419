use alloc::vec::Vec;
use core::fmt;

use crate::arith::expfun::ExpFunction;
use crate::arith::poly::{Polynomial, VarSet};
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

/// V = Σ a_j(x) ∂_j over the coordinates listed in `vars`.
#[derive(Clone, PartialEq)]
pub struct VectorField {
    vars: VarSet,
    coeffs: Vec<ExpFunction>,
}

impl VectorField {
    pub fn new(vars: &VarSet, coeffs: Vec<ExpFunction>) -> Result<Self> {
        if coeffs.len() != vars.len() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} coefficients for {} coordinates",
                coeffs.len(),
                vars.len()
            )));
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| {
                if c.vars().same(vars) {
                    Ok(c)
                } else if c.vars().names().iter().all(|n| vars.index(n).is_some()) {
                    Ok(c.embed(vars))
                } else {
                    Err(Error::Invalid("coefficient uses a variable outside the coordinates".into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorField { vars: vars.clone(), coeffs })
    }

    pub fn zero(vars: &VarSet) -> Self {
        VectorField { vars: vars.clone(), coeffs: (0..vars.len()).map(|_| ExpFunction::zero(vars)).collect() }
    }

    /// ∂ along coordinate `i`.
    pub fn coordinate(vars: &VarSet, i: usize) -> Self {
        let mut v = Self::zero(vars);
        v.coeffs[i] = ExpFunction::constant(vars, Rational::one());
        v
    }

    pub fn from_ratfuns(vars: &VarSet, coeffs: Vec<RationalFunction>) -> Result<Self> {
        Self::new(vars, coeffs.into_iter().map(ExpFunction::from_ratfun).collect())
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn coeffs(&self) -> &[ExpFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &ExpFunction {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    pub fn rational_coeffs(&self) -> Result<Vec<RationalFunction>> {
        self.coeffs
            .iter()
            .map(|c| c.as_ratfun().ok_or_else(|| Error::Unsupported("exponential coefficients here".into())))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        VectorField { vars: self.vars.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        VectorField { vars: self.vars.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        VectorField { vars: self.vars.clone(), coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul_function(&self, f: &ExpFunction) -> Self {
        VectorField { vars: self.vars.clone(), coeffs: self.coeffs.iter().map(|a| a.mul(f)).collect() }
    }

    /// V(f) = Σ V^i ∂_i f.
    pub fn apply(&self, f: &ExpFunction) -> ExpFunction {
        let mut out = ExpFunction::zero(&self.vars);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = f.derivative(i);
            if !d.is_zero() {
                out = out.add(&a.mul(&d));
            }
        }
        out
    }

    pub fn apply_polynomial(&self, p: &Polynomial) -> ExpFunction {
        self.apply(&ExpFunction::from_polynomial(p.clone()))
    }

    /// Values at a point; exponential coefficients cannot be evaluated exactly.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.coeffs
            .iter()
            .map(|c| {
                let r = c.as_ratfun().ok_or_else(|| Error::Unsupported("evaluating an exponential coefficient".into()))?;
                r.evaluate(point)
            })
            .collect()
    }
}

/// [V,W]^j = Σ_i V^i ∂_i W^j - W^i ∂_i V^j.
pub fn lie_bracket(v: &VectorField, w: &VectorField) -> Result<VectorField> {
    if !v.vars.same(&w.vars) {
        return Err(Error::DimensionMismatch("vector fields live on different coordinates".into()));
    }
    let coeffs = (0..v.dim()).map(|j| v.apply(&w.coeffs[j]).sub(&w.apply(&v.coeffs[j]))).collect();
    Ok(VectorField { vars: v.vars.clone(), coeffs })
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*d_{}", self.vars.names()[i])?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}
