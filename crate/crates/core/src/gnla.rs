//! Graded nilpotent Lie algebras 𝔪 = g_{-k} ⊕ … ⊕ g_{-1}.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::linalg::{rank_of_vectors, SparseVec};
use crate::arith::rational::Rational;
use crate::error::{Error, Result};
use crate::lie::algebra::LieAlgebra;

/// A bracket `[e_a, e_b] = Σ c·e_c` in input form.
pub type BracketSpec = (usize, usize, SparseVec<Rational>);

#[derive(Clone, Debug, PartialEq)]
pub struct Gnla {
    names: Vec<String>,
    /// depth d means degree -d
    depth: Vec<usize>,
    table: Vec<Vec<SparseVec<Rational>>>,
    inconsistent: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct GnlaReport {
    pub dims: Vec<usize>,
    /// pairs whose bracket was given more than once with different values
    pub inconsistent: Vec<(String, String)>,
    /// (a, b, c): [e_a, e_b] has a component on e_c of the wrong degree
    pub grading_violations: Vec<(String, String, String)>,
    pub jacobi_failures: Vec<(String, String, String)>,
    pub fundamental: bool,
}

impl GnlaReport {
    pub fn is_valid(&self) -> bool {
        self.inconsistent.is_empty() && self.grading_violations.is_empty() && self.jacobi_failures.is_empty()
    }
}

impl Gnla {
    /// `depths[i] ≥ 1` is the depth of basis element `i` (degree `-depths[i]`).
    pub fn new(names: Vec<String>, depths: Vec<usize>, brackets: &[BracketSpec]) -> Result<Self> {
        let n = names.len();
        if depths.len() != n {
            return Err(Error::DimensionMismatch("one depth per basis element".into()));
        }
        if depths.contains(&0) {
            return Err(Error::Invalid("degrees of 𝔪 must be negative".into()));
        }
        let mut table: Vec<Vec<SparseVec<Rational>>> = vec![vec![Vec::new(); n]; n];
        let mut given = vec![vec![false; n]; n];
        let mut inconsistent = Vec::new();
        for (a, b, v) in brackets {
            let (a, b) = (*a, *b);
            if a >= n || b >= n || v.iter().any(|(c, _)| *c >= n) {
                return Err(Error::DimensionMismatch(format!("bracket ({a}, {b}) refers to a missing element")));
            }
            let mut v: SparseVec<Rational> = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
            v.sort_by_key(|e| e.0);
            if a == b {
                if !v.is_empty() {
                    inconsistent.push((a, b));
                }
                continue;
            }
            if given[a][b] {
                if table[a][b] != v {
                    inconsistent.push((a.min(b), a.max(b)));
                }
                continue;
            }
            given[a][b] = true;
            given[b][a] = true;
            table[b][a] = v.iter().map(|(c, x)| (*c, -x)).collect();
            table[a][b] = v;
        }
        Ok(Gnla { names, depth: depths, table, inconsistent })
    }

    /// Builds from component dims, naming elements e1, e2, … in order.
    pub fn from_dims(dims: &[usize], brackets: &[BracketSpec]) -> Result<Self> {
        let mut depths = Vec::new();
        for (i, &d) in dims.iter().enumerate() {
            depths.extend(core::iter::repeat_n(i + 1, d));
        }
        let names = (1..=depths.len()).map(|i| format!("e{i}")).collect();
        Self::new(names, depths, brackets)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn depth_of(&self, a: usize) -> usize {
        self.depth[a]
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// dims of g_{-1}, g_{-2}, …
    pub fn dims(&self) -> Vec<usize> {
        (1..=self.max_depth()).map(|d| self.depth.iter().filter(|&&x| x == d).count()).collect()
    }

    /// Basis indices of g_{-d}, in basis order.
    pub fn component(&self, d: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&a| self.depth[a] == d).collect()
    }

    pub fn bracket(&self, a: usize, b: usize) -> &SparseVec<Rational> {
        &self.table[a][b]
    }

    pub fn to_lie_algebra(&self) -> LieAlgebra<Rational> {
        let n = self.dim();
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut v = vec![Rational::zero(); n];
                        for (c, x) in &self.table[a][b] {
                            v[*c] = x.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        LieAlgebra::from_table(self.names.clone(), table)
    }

    /// g_{-1} generates: [g_{-1}, g_{-d}] spans g_{-d-1} for every d.
    pub fn is_fundamental(&self) -> bool {
        let n = self.dim();
        let ones = self.component(1);
        for d in 1..self.max_depth() {
            let next = self.component(d + 1);
            let mut vs = Vec::new();
            for &a in &ones {
                for &b in &self.component(d) {
                    let mut v = vec![Rational::zero(); n];
                    for (c, x) in &self.table[a][b] {
                        v[*c] = x.clone();
                    }
                    vs.push(v);
                }
            }
            let vs: Vec<Vec<Rational>> =
                vs.into_iter().map(|v| next.iter().map(|&c| v[c].clone()).collect()).collect();
            if rank_of_vectors(&vs) != next.len() {
                return false;
            }
        }
        true
    }

    pub fn validate(&self) -> GnlaReport {
        let name = |i: usize| self.names[i].clone();
        let mut rep = GnlaReport { dims: self.dims(), ..Default::default() };
        rep.inconsistent = self.inconsistent.iter().map(|&(a, b)| (name(a), name(b))).collect();
        for a in 0..self.dim() {
            for b in (a + 1)..self.dim() {
                for (c, _) in &self.table[a][b] {
                    if self.depth[*c] != self.depth[a] + self.depth[b] {
                        rep.grading_violations.push((name(a), name(b), name(*c)));
                    }
                }
            }
        }
        for r in self.to_lie_algebra().jacobi_residuals() {
            let (i, j, k) = r.triple;
            rep.jacobi_failures.push((name(i), name(j), name(k)));
        }
        rep.fundamental = self.is_fundamental();
        rep
    }
}

fn br(a: usize, b: usize, c: usize, x: i64) -> BracketSpec {
    (a, b, vec![(c, Rational::from_int(x))])
}

/// Heisenberg algebra of dimension 2k+1.
pub fn heisenberg(dim: usize) -> Result<Gnla> {
    if dim < 3 || dim.is_multiple_of(2) {
        return Err(Error::Invalid(format!("heisenberg dimension must be odd and at least 3, got {dim}")));
    }
    let k = (dim - 1) / 2;
    let brackets: Vec<BracketSpec> = (0..k).map(|i| br(i, k + i, 2 * k, 1)).collect();
    Gnla::from_dims(&[2 * k, 1], &brackets)
}

/// Free 2-step-generated algebra of type (2,3,5).
pub fn free235() -> Gnla {
    Gnla::from_dims(&[2, 1, 2], &[br(0, 1, 2, 1), br(0, 2, 3, 1), br(1, 2, 4, 1)]).unwrap()
}

pub fn abelian(n: usize) -> Gnla {
    Gnla::from_dims(&[n], &[]).unwrap()
}

/// Negative part of the graded 11-dimensional algebra with growth (2,3,5,6):
/// g_{-1} = ⟨S0, Z3⟩, g_{-2} = ⟨Z2⟩, g_{-3} = ⟨Y0, Z1⟩, g_{-4} = ⟨Z0⟩.
pub fn symbol2356() -> Gnla {
    let names = ["S0", "Z3", "Z2", "Y0", "Z1", "Z0"].iter().map(|s| s.to_string()).collect();
    Gnla::new(
        names,
        vec![1, 1, 2, 3, 3, 4],
        &[br(0, 1, 2, 1), br(0, 2, 4, 1), br(0, 4, 5, 1), br(2, 1, 3, 2)],
    )
    .unwrap()
}
