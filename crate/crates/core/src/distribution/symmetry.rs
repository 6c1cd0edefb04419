use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::sample::{Sampler, RESAMPLE_BUDGET};
use super::vector_field::{lie_bracket, VectorField};
use super::{derived_flag, Distribution};
use crate::arith::expfun::{ExpFunction, Frequency};
use crate::arith::linalg::{Coordinates, Echelon, SparseVec};
use crate::arith::poly::{monomials_up_to, Exponents, Polynomial, VarSet};
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};
use crate::lie::algebra::LieAlgebra;

/// ω = Σ ω_j dx_j.
#[derive(Clone, PartialEq)]
pub struct OneForm {
    vars: VarSet,
    coeffs: Vec<RationalFunction>,
}

impl OneForm {
    pub fn new(vars: &VarSet, coeffs: Vec<RationalFunction>) -> Result<Self> {
        if coeffs.len() != vars.len() {
            return Err(Error::DimensionMismatch("one coefficient per coordinate".into()));
        }
        let coeffs = coeffs.into_iter().map(|c| if c.vars().same(vars) { c } else { c.embed(vars) }).collect();
        Ok(OneForm { vars: vars.clone(), coeffs })
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn apply(&self, v: &VectorField) -> ExpFunction {
        let mut out = ExpFunction::zero(&self.vars);
        for (w, a) in self.coeffs.iter().zip(v.coeffs()) {
            if !w.is_zero() && !a.is_zero() {
                out = out.add(&a.mul_ratfun(w));
            }
        }
        out
    }

    /// Polynomial coefficients, when every denominator is constant.
    pub fn polynomial_coeffs(&self) -> Option<Vec<Polynomial>> {
        self.coeffs.iter().map(|c| c.as_polynomial().cloned()).collect()
    }
}

impl fmt::Display for OneForm {
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
            write!(f, "({c})*d{}", self.vars.names()[i])?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OneForm({self})")
    }
}

fn clear_denominators(v: Vec<RationalFunction>) -> Vec<RationalFunction> {
    let mut v = v;
    for i in 0..v.len() {
        if v[i].is_polynomial() {
            continue;
        }
        let d = RationalFunction::from_polynomial(v[i].denom().clone());
        v = v.iter().map(|c| c.mul(&d)).collect();
    }
    v
}

/// Forms vanishing on every generator, with denominators cleared.
pub fn annihilator(d: &Distribution) -> Result<Vec<OneForm>> {
    let n = d.ambient_dim();
    let mut ech: Echelon<RationalFunction> = Echelon::new(n);
    for g in d.generators() {
        let row: SparseVec<RationalFunction> =
            g.rational_coeffs()?.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        ech.insert(&row);
    }
    ech.kernel()
        .into_iter()
        .map(|v| OneForm::new(d.vars(), clear_denominators(v)))
        .collect()
}

fn check_vars(v: &VectorField, d: &Distribution) -> Result<()> {
    if v.vars().same(d.vars()) {
        Ok(())
    } else {
        Err(Error::DimensionMismatch("field and distribution live on different coordinates".into()))
    }
}

/// Checks ω([V, G]) ≡ 0 for prepared annihilator forms.
pub fn is_symmetry_with(v: &VectorField, d: &Distribution, forms: &[OneForm]) -> Result<bool> {
    check_vars(v, d)?;
    for g in d.generators() {
        let b = lie_bracket(v, g)?;
        if forms.iter().any(|w| !w.apply(&b).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_symmetry(v: &VectorField, d: &Distribution) -> Result<bool> {
    check_vars(v, d)?;
    is_symmetry_with(v, d, &annihilator(d)?)
}

#[derive(Clone, Debug)]
pub struct PolySymmetries {
    pub dimension: usize,
    pub basis: Vec<VectorField>,
    pub degree_cap: u32,
}

fn polynomial_parts(v: &[RationalFunction], what: &str) -> Result<Vec<Polynomial>> {
    clear_denominators(v.to_vec())
        .into_iter()
        .map(|c| c.as_polynomial().cloned().ok_or_else(|| Error::Unsupported(format!("non-polynomial {what}"))))
        .collect()
}

/// Solves for all fields with polynomial coefficients of total degree ≤ cap
/// preserving `d`.  `seed` picks the point where the annihilator rank is checked.
pub fn polynomial_symmetries(d: &Distribution, degree_cap: u32, seed: u64) -> Result<PolySymmetries> {
    let n = d.ambient_dim();
    let vars = d.vars().clone();
    let forms = annihilator(d)?;
    let r = derived_flag(d, None, seed)?.dims[0];
    if forms.len() + r != n {
        return Err(Error::Invalid(format!("annihilator has {} forms but the rank is {r}", forms.len())));
    }
    let gens: Vec<Vec<Polynomial>> =
        d.generators().iter().map(|g| polynomial_parts(&g.rational_coeffs()?, "generator")).collect::<Result<_>>()?;
    let omegas: Vec<Vec<Polynomial>> =
        forms.iter().map(|w| polynomial_parts(w.coeffs(), "form")).collect::<Result<_>>()?;
    let monos = monomials_up_to(n, degree_cap);
    let ncols = n * monos.len();
    let col = |j: usize, m: usize| j * monos.len() + m;

    // rows are keyed by (form, generator, monomial)
    let mut rows: BTreeMap<(usize, usize, Exponents), SparseVec<Rational>> = BTreeMap::new();
    for (k, w) in omegas.iter().enumerate() {
        for (i, g) in gens.iter().enumerate() {
            let q: Vec<Polynomial> = (0..n)
                .map(|j| {
                    let mut s = Polynomial::zero(&vars);
                    for l in 0..n {
                        if !w[l].is_zero() {
                            s = s.add(&w[l].mul(&g[l].derivative(j)));
                        }
                    }
                    s
                })
                .collect();
            for (m, alpha) in monos.iter().enumerate() {
                // G_i(x^α)
                let mut ga = Polynomial::zero(&vars);
                for l in 0..n {
                    if alpha[l] > 0 && !g[l].is_zero() {
                        let mut e = alpha.clone();
                        e[l] -= 1;
                        ga = ga.add(&g[l].mul_monomial(&e, &Rational::from_int(alpha[l] as i64)));
                    }
                }
                for j in 0..n {
                    let mut p = q[j].mul_monomial(alpha, &Rational::one());
                    if !w[j].is_zero() && !ga.is_zero() {
                        p = p.sub(&w[j].mul(&ga));
                    }
                    for (e, c) in p.terms() {
                        rows.entry((k, i, e.clone())).or_default().push((col(j, m), c.clone()));
                    }
                }
            }
        }
    }
    let mut ech: Echelon<Rational> = Echelon::new(ncols);
    ech.extend(rows.into_values().map(|mut r| {
        r.sort_by_key(|e| e.0);
        r
    }));
    let basis = ech
        .kernel_sparse()
        .into_iter()
        .map(|v| {
            let mut coeffs = vec![Polynomial::zero(&vars); n];
            for (c, x) in v {
                let (j, m) = (c / monos.len(), c % monos.len());
                coeffs[j] = coeffs[j].add(&Polynomial::monomial(&vars, &monos[m], x));
            }
            VectorField::new(&vars, coeffs.into_iter().map(ExpFunction::from_polynomial).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolySymmetries { dimension: basis.len(), basis, degree_cap })
}

/// Linear functionals "coefficient of component j at frequency λ, evaluated
/// at p" used to test linear relations between fields.
struct Probe {
    keys: Vec<(usize, Frequency, Vec<Rational>)>,
}

impl Probe {
    fn eval(&self, v: &VectorField) -> Result<Option<Vec<Rational>>> {
        let mut out = Vec::with_capacity(self.keys.len());
        for (j, lam, p) in &self.keys {
            let x = match v.coeff(*j).component(lam) {
                Some(c) => c.evaluate(p)?,
                None => Rational::zero(),
            };
            out.push(x);
        }
        Ok(Some(out))
    }
}

fn frequencies(v: &VectorField) -> Vec<(usize, Frequency)> {
    let mut out = Vec::new();
    for (j, c) in v.coeffs().iter().enumerate() {
        for (lam, _) in c.terms() {
            out.push((j, lam.clone()));
        }
    }
    out
}

/// Structure constants of the span of `fields`, which must be linearly
/// independent and closed under brackets.  Element names are W1, W2, ….
pub fn structure_constants(fields: &[VectorField]) -> Result<LieAlgebra<Rational>> {
    let k = fields.len();
    if k == 0 {
        return Ok(LieAlgebra::abelian(Vec::new()));
    }
    let vars = fields[0].vars().clone();
    if fields.iter().any(|f| !f.vars().same(&vars)) {
        return Err(Error::DimensionMismatch("fields live on different coordinates".into()));
    }
    let mut support: Vec<(usize, Frequency)> = fields.iter().flat_map(frequencies).collect();
    support.sort();
    support.dedup();

    // add sample points until the fields are independent as functionals
    let mut sampler = Sampler::new(0x5eed);
    let mut probe = Probe { keys: Vec::new() };
    let mut coords = None;
    for _ in 0..RESAMPLE_BUDGET {
        let p = sampler.point(vars.len());
        let mut trial = Probe { keys: probe.keys.clone() };
        trial.keys.extend(support.iter().map(|(j, l)| (*j, l.clone(), p.clone())));
        let vals: Result<Vec<Vec<Rational>>> =
            fields.iter().map(|f| trial.eval(f).map(|x| x.unwrap())).collect();
        let Ok(vals) = vals else { continue };
        probe = trial;
        if let Some(c) = Coordinates::new(&vals, probe.keys.len()) {
            coords = Some(c);
            break;
        }
    }
    let coords = coords.ok_or_else(|| Error::Invalid("fields are linearly dependent".into()))?;

    let names: Vec<String> = (1..=k).map(|i| format!("W{i}")).collect();
    let mut table = vec![vec![vec![Rational::zero(); k]; k]; k];
    for a in 0..k {
        for b in (a + 1)..k {
            let br = lie_bracket(&fields[a], &fields[b])?;
            if frequencies(&br).iter().any(|x| support.binary_search(x).is_err()) {
                return Err(Error::NotClosed(a, b));
            }
            let val = probe.eval(&br)?.unwrap();
            let c = coords.solve(&val).ok_or(Error::NotClosed(a, b))?;
            let mut comb = VectorField::zero(&vars);
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    comb = comb.add(&fields[i].scale(x));
                }
            }
            if !comb.sub(&br).is_zero() {
                return Err(Error::NotClosed(a, b));
            }
            table[b][a] = c.iter().map(|x| -x).collect();
            table[a][b] = c;
        }
    }
    Ok(LieAlgebra::from_table(names, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_exp_function;

    fn field(vars: &VarSet, cs: &[&str]) -> VectorField {
        VectorField::new(vars, cs.iter().map(|c| parse_exp_function(c, vars, &[]).unwrap()).collect()).unwrap()
    }

    #[test]
    fn annihilator_examples() {
        let v = VarSet::new(&["x", "y"]);
        let d = Distribution::new(&v, vec![field(&v, &["1", "0"])]).unwrap();
        let a = annihilator(&d).unwrap();
        assert_eq!(a.len(), 1);
        assert!(a[0].coeffs()[0].is_zero() && !a[0].coeffs()[1].is_zero());
        let full = Distribution::new(&v, vec![field(&v, &["1", "0"]), field(&v, &["0", "1"])]).unwrap();
        assert!(annihilator(&full).unwrap().is_empty());
    }

    #[test]
    fn line_fields_in_one_dimension() {
        let v = VarSet::new(&["x"]);
        let d = Distribution::new(&v, vec![field(&v, &["1"])]).unwrap();
        let s = polynomial_symmetries(&d, 2, 0).unwrap();
        assert_eq!(s.dimension, 3);
    }

    #[test]
    fn affine_line_algebra() {
        let v = VarSet::new(&["x"]);
        let l = structure_constants(&[field(&v, &["1"]), field(&v, &["x"])]).unwrap();
        assert_eq!(l.basis_bracket(0, 1), &vec![Rational::one(), Rational::zero()]);
        let e = structure_constants(&[field(&v, &["1"]), field(&v, &["x^2"])]);
        assert_eq!(e.unwrap_err(), Error::NotClosed(0, 1));
    }

    #[test]
    fn exponential_fields_close() {
        let v = VarSet::new(&["x", "y"]);
        let fs = [field(&v, &["1", "0"]), field(&v, &["0", "exp(x)"]), field(&v, &["0", "exp(-x)"])];
        let l = structure_constants(&fs).unwrap();
        assert_eq!(l.basis_bracket(0, 1)[1], Rational::one());
        assert_eq!(l.basis_bracket(0, 2)[2], Rational::from_int(-1));
        assert!(l.is_lie_algebra());
    }
}
