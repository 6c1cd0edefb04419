use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::field::Field;
use crate::arith::linalg::rank_of_vectors;
use crate::arith::poly::{Polynomial, VarSet};
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

/// Coordinates x1, …, xn.
pub fn metric_vars(n: usize) -> VarSet {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    VarSet::new(&names)
}

/// Gauss–Jordan inverse of a square matrix over a field.
pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].inverse()?;
        a[c] = a[c].iter().map(|x| x.times(&inv)).collect();
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let s = a[r][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x = x.minus(&s.times(y));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Metric {
    vars: VarSet,
    g: Vec<Vec<RationalFunction>>,
}

impl Metric {
    pub fn new(g: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let n = g.len();
        if n == 0 || g.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("metric must be a square matrix".into()));
        }
        let vars = metric_vars(n);
        let mut g: Vec<Vec<RationalFunction>> = g;
        for r in g.iter_mut() {
            for c in r.iter_mut() {
                if c.vars().names().iter().any(|v| vars.index(v).is_none()) {
                    return Err(Error::Invalid(format!("metric entry {c} uses a variable outside x1..x{n}")));
                }
                *c = c.embed(&vars);
            }
        }
        for i in 0..n {
            for j in 0..i {
                if g[i][j] != g[j][i] {
                    return Err(Error::Invalid(format!("metric is not symmetric at ({i}, {j})")));
                }
            }
        }
        if invert(&g).is_none() {
            return Err(Error::DegenerateMetric);
        }
        Ok(Metric { vars, g })
    }

    pub fn diagonal(entries: Vec<RationalFunction>) -> Result<Self> {
        let n = entries.len();
        let mut g = vec![vec![RationalFunction::zero(); n]; n];
        for (i, e) in entries.into_iter().enumerate() {
            g[i][i] = e;
        }
        Self::new(g)
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn entries(&self) -> &[Vec<RationalFunction>] {
        &self.g
    }

    pub fn inverse(&self) -> Vec<Vec<RationalFunction>> {
        invert(&self.g).expect("checked at construction")
    }

    /// Values at a point; errors if a denominator vanishes or det g = 0 there.
    pub fn at(&self, p: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        let v = self
            .g
            .iter()
            .map(|r| r.iter().map(|c| c.evaluate(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rank_of_vectors(&v) < self.dim() {
            return Err(Error::DegenerateMetric);
        }
        Ok(v)
    }
}

fn x(vars: &VarSet, i: usize) -> Polynomial {
    Polynomial::var(vars, i)
}

/// Σ dx_i².
pub fn flat(n: usize) -> Metric {
    Metric::diagonal(vec![RationalFunction::one(); n]).unwrap()
}

/// x1 Σ dx_i².
pub fn linear_factor(n: usize) -> Metric {
    let v = metric_vars(n);
    Metric::diagonal(vec![RationalFunction::from_polynomial(x(&v, 0)); n]).unwrap()
}

/// dx1² + (R² + c Σ_{i≥2} x_i²)^{-2} Σ_{i≥2} dx_i²: the second factor has
/// constant curvature of the sign of c.  For c = 1 the geodesic Hamiltonian
/// is p1² + (R² + Σ x_i²)² Σ p_i².
pub fn warped_product(n: usize, c: Rational, r: Rational) -> Result<Metric> {
    if n < 2 {
        return Err(Error::Invalid("warped_product needs n ≥ 2".into()));
    }
    if c.is_zero() {
        return Err(Error::Invalid("curvature parameter must be nonzero".into()));
    }
    let v = metric_vars(n);
    let mut s = Polynomial::constant(&v, &r * &r);
    for i in 1..n {
        s = s.add(&x(&v, i).pow(2).scale(&c));
    }
    let f = RationalFunction::from_polynomial(s.pow(2)).inv().ok_or(Error::DegenerateMetric)?;
    let mut d = vec![RationalFunction::one()];
    d.extend((1..n).map(|_| f.clone()));
    Metric::diagonal(d)
}

/// dr² + f(r)² ds²_{n-1}, the round factor in stereographic coordinates
/// 4|dy|²/(1+|y|²)²; r = x1 and `f` is a rational function of one variable.
pub fn revolution(n: usize, f: &RationalFunction) -> Result<Metric> {
    if n < 2 {
        return Err(Error::Invalid("revolution metrics need n ≥ 2".into()));
    }
    if f.vars().len() > 1 {
        return Err(Error::Invalid("profile must depend on r only".into()));
    }
    let v = metric_vars(n);
    let r = RationalFunction::from_polynomial(x(&v, 0));
    let fr = if f.vars().is_empty() { f.embed(&v) } else { f.compose(&[r])? };
    let mut s = Polynomial::one(&v);
    for i in 1..n {
        s = s.add(&x(&v, i).pow(2));
    }
    let round = RationalFunction::new(Polynomial::constant(&v, Rational::from_int(4)), s.pow(2));
    let w = fr.mul(&fr).mul(&round);
    let mut d = vec![RationalFunction::one()];
    d.extend((1..n).map(|_| w.clone()));
    Metric::diagonal(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_rational_matrix() {
        let q = |a: i64| Rational::from_int(a);
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn degenerate_metric_rejected() {
        let z = RationalFunction::zero();
        assert_eq!(Metric::diagonal(vec![RationalFunction::one(), z]), Err(Error::DegenerateMetric));
        assert_eq!(linear_factor(2).at(&[Rational::zero(), Rational::one()]), Err(Error::DegenerateMetric));
    }
}
