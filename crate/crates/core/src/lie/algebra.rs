//! Finite-dimensional Lie algebras given by structure constants.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::field::Field;
use crate::arith::linalg::{rank_of_vectors, span_basis};
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

/// Dense element of a Lie algebra in its presentation basis.
pub type Element<F> = Vec<F>;

#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<F> {
    names: Vec<String>,
    /// `table[i][j] = [e_i, e_j]`
    table: Vec<Vec<Element<F>>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiResidual<F> {
    pub triple: (usize, usize, usize),
    pub residual: Element<F>,
}

impl<F: Field> LieAlgebra<F> {
    pub fn abelian(names: Vec<String>) -> Self {
        let n = names.len();
        LieAlgebra { table: vec![vec![vec![F::zero(); n]; n]; n], names }
    }

    /// Builds from a list of brackets `[e_i, e_j] = v`. Both orders may be
    /// listed only if they agree up to sign.
    pub fn from_brackets(names: Vec<String>, brackets: &[(usize, usize, Element<F>)]) -> Result<Self> {
        let mut l = Self::abelian(names);
        let n = l.dim();
        let mut seen = vec![vec![false; n]; n];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || v.len() != n {
                return Err(Error::DimensionMismatch(format!("bracket [{i},{j}] out of range")));
            }
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Invalid(format!("[{0},{0}] must vanish", l.names[i])));
                }
                continue;
            }
            if seen[i][j] {
                if l.table[i][j] != *v {
                    return Err(Error::Invalid(format!(
                        "bracket [{}, {}] given twice with different values",
                        l.names[i], l.names[j]
                    )));
                }
                continue;
            }
            seen[i][j] = true;
            seen[j][i] = true;
            l.table[i][j] = v.clone();
            l.table[j][i] = v.iter().map(|x| x.negated()).collect();
        }
        Ok(l)
    }

    /// Takes a full bracket table; antisymmetry is not checked here.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<Element<F>>>) -> Self {
        LieAlgebra { names, table }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Element<F> {
        &self.table[i][j]
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: Element<F>) {
        self.table[j][i] = v.iter().map(|x| x.negated()).collect();
        self.table[i][j] = v;
    }

    pub fn unit(&self, i: usize) -> Element<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Element<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let c = x[i].times(&y[j]);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].plus(&c.times(t));
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad(x): column j is [x, e_j], stored as rows `m[k][j]`.
    pub fn ad(&self, x: &[F]) -> Vec<Vec<F>> {
        let n = self.dim();
        let mut m = vec![vec![F::zero(); n]; n];
        for j in 0..n {
            let c = self.bracket(x, &self.unit(j));
            for k in 0..n {
                m[k][j] = c[k].clone();
            }
        }
        m
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            self.table[i][i].iter().all(|x| x.is_zero())
                && (0..n).all(|j| self.table[i][j].iter().zip(&self.table[j][i]).all(|(a, b)| a.plus(b).is_zero()))
        })
    }

    /// Nonzero Jacobi residuals over basis triples i < j < k.
    pub fn jacobi_residuals(&self) -> Vec<JacobiResidual<F>> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.bracket(&ei, &self.table[j][k]);
                    let b = self.bracket(&ej, &self.table[k][i]);
                    let c = self.bracket(&ek, &self.table[i][j]);
                    let r: Element<F> = (0..n).map(|t| a[t].plus(&b[t]).plus(&c[t])).collect();
                    if r.iter().any(|x| !x.is_zero()) {
                        out.push(JacobiResidual { triple: (i, j, k), residual: r });
                    }
                }
            }
        }
        out
    }

    pub fn is_lie_algebra(&self) -> bool {
        self.is_antisymmetric() && self.jacobi_residuals().is_empty()
    }

    /// Basis of [A, B] for subspaces given by spanning vectors.
    pub fn bracket_span(&self, a: &[Element<F>], b: &[Element<F>]) -> Vec<Element<F>> {
        let mut vs = Vec::new();
        for x in a {
            for y in b {
                let v = self.bracket(x, y);
                if v.iter().any(|t| !t.is_zero()) {
                    vs.push(v);
                }
            }
        }
        span_basis(&vs)
    }

    pub fn whole(&self) -> Vec<Element<F>> {
        (0..self.dim()).map(|i| self.unit(i)).collect()
    }

    /// dims of L, [L,L], [[L,L],[L,L]], … down to 0 or stabilization.
    pub fn derived_series(&self) -> Vec<usize> {
        let mut cur = self.whole();
        let mut dims = vec![cur.len()];
        while !cur.is_empty() {
            let next = self.bracket_span(&cur, &cur);
            if next.len() == cur.len() {
                break;
            }
            dims.push(next.len());
            cur = next;
        }
        dims
    }

    /// dims of L, [L,L], [L,[L,L]], … down to 0 or stabilization.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let all = self.whole();
        let mut cur = all.clone();
        let mut dims = vec![cur.len()];
        while !cur.is_empty() {
            let next = self.bracket_span(&all, &cur);
            if next.len() == cur.len() {
                break;
            }
            dims.push(next.len());
            cur = next;
        }
        dims
    }

    pub fn derived_subalgebra(&self) -> Vec<Element<F>> {
        let all = self.whole();
        self.bracket_span(&all, &all)
    }

    pub fn center_dim(&self) -> usize {
        // x is central iff ad(x) = 0: stack all [x, e_j] conditions
        let n = self.dim();
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.table[i][j][k].clone()).collect::<Vec<F>>());
            }
        }
        n - rank_of_vectors(&rows)
    }

    /// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs. `d[k][j]` is the k-th
    /// coordinate of D(e_j).
    pub fn is_derivation(&self, d: &[Vec<F>]) -> bool {
        let n = self.dim();
        let apply = |v: &[F]| -> Vec<F> {
            (0..n).map(|k| (0..n).fold(F::zero(), |acc, j| acc.plus(&d[k][j].times(&v[j])))).collect()
        };
        let col = |j: usize| -> Vec<F> { (0..n).map(|k| d[k][j].clone()).collect() };
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = apply(&self.table[i][j]);
                let a = self.bracket(&col(i), &self.unit(j));
                let b = self.bracket(&self.unit(i), &col(j));
                if (0..n).any(|k| !lhs[k].minus(&a[k]).minus(&b[k]).is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Semidirect extension by a derivation: the new last basis element `name`
    /// acts as `d`, i.e. [name, e_j] = D(e_j).
    pub fn extend_by_derivation(&self, d: &[Vec<F>], name: &str) -> Result<Self> {
        if d.len() != self.dim() || d.iter().any(|r| r.len() != self.dim()) {
            return Err(Error::DimensionMismatch("derivation matrix".into()));
        }
        if !self.is_derivation(d) {
            return Err(Error::NotADerivation);
        }
        let n = self.dim();
        let mut names = self.names.clone();
        names.push(name.into());
        let mut out = Self::abelian(names);
        for i in 0..n {
            for j in 0..n {
                let mut v = self.table[i][j].clone();
                v.push(F::zero());
                out.table[i][j] = v;
            }
        }
        for j in 0..n {
            let mut v: Vec<F> = (0..n).map(|k| d[k][j].clone()).collect();
            v.push(F::zero());
            out.set_bracket(n, j, v);
        }
        Ok(out)
    }

    /// Rewrites the algebra in a new basis `f_i = Σ_j p[i][j] e_j`.
    pub fn change_basis(&self, p: &[Vec<F>], names: Vec<String>) -> Result<Self> {
        let n = self.dim();
        let coords = crate::arith::linalg::Coordinates::new(p, n)
            .ok_or_else(|| Error::Invalid("new basis is linearly dependent".into()))?;
        let mut out = Self::abelian(names);
        for i in 0..n {
            for j in (i + 1)..n {
                let v = self.bracket(&p[i], &p[j]);
                out.set_bracket(i, j, coords.solve(&v).unwrap());
            }
        }
        Ok(out)
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<LieAlgebra<G>> {
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(&f).collect::<Result<Vec<G>>>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(LieAlgebra { names: self.names.clone(), table })
    }
}

impl LieAlgebra<Rational> {
    pub fn to_ratfun(&self) -> LieAlgebra<RationalFunction> {
        self.map_field(|x| Ok(RationalFunction::constant(x.clone()))).unwrap()
    }
}

impl LieAlgebra<RationalFunction> {
    /// Substitutes values for named parameters.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> Result<LieAlgebra<RationalFunction>> {
        self.map_field(|x| x.specialize(values))
    }

    /// Converts to ℚ; fails if a coefficient still depends on a parameter.
    pub fn to_rational(&self) -> Result<LieAlgebra<Rational>> {
        self.map_field(|x| x.constant_value().ok_or_else(|| Error::SymbolicParameter(format!("{x}"))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    pub(crate) fn sl2() -> LieAlgebra<Rational> {
        let names = ["e", "h", "f"].iter().map(|s| s.to_string()).collect();
        LieAlgebra::from_brackets(
            names,
            &[(1, 0, vec![q(2), q(0), q(0)]), (1, 2, vec![q(0), q(0), q(-2)]), (0, 2, vec![q(0), q(1), q(0)])],
        )
        .unwrap()
    }

    #[test]
    fn sl2_is_perfect() {
        let l = sl2();
        assert!(l.is_lie_algebra());
        assert_eq!(l.derived_series(), vec![3]);
        assert_eq!(l.center_dim(), 0);
    }

    #[test]
    fn ad_is_a_derivation() {
        let l = sl2();
        for i in 0..3 {
            assert!(l.is_derivation(&l.ad(&l.unit(i))));
        }
    }

    #[test]
    fn perturbed_constant_breaks_jacobi() {
        let mut l = sl2();
        l.set_bracket(0, 2, vec![q(1), q(1), q(0)]);
        assert!(!l.jacobi_residuals().is_empty());
        let names = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let bad = LieAlgebra::<Rational>::from_brackets(names, &[(0, 1, vec![q(1), q(0)]), (0, 1, vec![q(0), q(1)])]);
        assert!(bad.is_err());
    }
}
