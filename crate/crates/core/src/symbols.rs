//! Symbol spaces g_k ⊆ S^kT*⊗W and their algebraic prolongations.
//!
//! A vector in S^kT*⊗W has one coordinate per pair (σ, a) with |σ| = k (grlex
//! descending) and 0 ≤ a < w, laid out as `index(σ)·w + a`. The coordinate is
//! the coefficient of x^σ, so the contraction with ∂_i reads
//! (δ_i u)_{σ,a} = (σ_i + 1) u_{σ+e_i, a}.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::linalg::{kernel_basis, rank_of_vectors, sparse_from_dense, Echelon, ExactMatrix};
use crate::arith::poly::{binomial, monomials_of_degree, Exponents};
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 10;

/// Multi-index table for S^kT* in `n` variables.
#[derive(Clone, Debug)]
pub struct MultiIndices {
    pub list: Vec<Exponents>,
    lookup: BTreeMap<Exponents, usize>,
}

impl MultiIndices {
    pub fn new(n: usize, k: u32) -> Self {
        let list = monomials_of_degree(n, k);
        let lookup = list.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MultiIndices { list, lookup }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn index(&self, e: &[u16]) -> Option<usize> {
        self.lookup.get(e).copied()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymbolSpace {
    pub n: usize,
    pub w: usize,
    pub k: u32,
    pub basis: Vec<Vec<Rational>>,
}

impl SymbolSpace {
    pub fn ambient_dim(n: usize, w: usize, k: u32) -> usize {
        binomial(n + k as usize - 1, k as usize) * w
    }

    /// Checks lengths and linear independence.
    pub fn new(n: usize, w: usize, k: u32, basis: Vec<Vec<Rational>>) -> Result<Self> {
        let amb = Self::ambient_dim(n, w, k);
        if let Some(v) = basis.iter().find(|v| v.len() != amb) {
            return Err(Error::DimensionMismatch(alloc::format!(
                "basis vector of length {} in a space of dimension {amb}",
                v.len()
            )));
        }
        if rank_of_vectors(&basis) != basis.len() {
            return Err(Error::Invalid("symbol basis is linearly dependent".into()));
        }
        Ok(SymbolSpace { n, w, k, basis })
    }

    pub fn full(n: usize, w: usize, k: u32) -> Self {
        let amb = Self::ambient_dim(n, w, k);
        let basis = (0..amb)
            .map(|i| {
                let mut v = vec![Rational::zero(); amb];
                v[i] = Rational::one();
                v
            })
            .collect();
        SymbolSpace { n, w, k, basis }
    }

    pub fn zero(n: usize, w: usize, k: u32) -> Self {
        SymbolSpace { n, w, k, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        Self::ambient_dim(self.n, self.w, self.k)
    }

    /// Linear forms cutting out the space inside S^kT*⊗W.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        if self.basis.is_empty() {
            return (0..self.ambient())
                .map(|i| {
                    let mut v = vec![Rational::zero(); self.ambient()];
                    v[i] = Rational::one();
                    v
                })
                .collect();
        }
        kernel_basis(&ExactMatrix::from_dense(&self.basis))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut e = Echelon::new(self.ambient());
        e.extend(self.basis.iter().map(|b| sparse_from_dense(b)));
        e.contains(&sparse_from_dense(v))
    }
}

/// The contraction δ_i: S^{k+1}T*⊗W → S^kT*⊗W as sparse entries
/// (source column, target column, factor).
pub fn contraction(n: usize, w: usize, k: u32, i: usize) -> Vec<(usize, usize, Rational)> {
    let lower = MultiIndices::new(n, k);
    let upper = MultiIndices::new(n, k + 1);
    let mut out = Vec::new();
    for (ti, sigma) in lower.list.iter().enumerate() {
        let mut up = sigma.clone();
        up[i] += 1;
        let si = upper.index(&up).unwrap();
        let f = Rational::from_int(up[i] as i64);
        for a in 0..w {
            out.push((si * w + a, ti * w + a, f.clone()));
        }
    }
    out
}

/// g^{(1)} = {u ∈ S^{k+1}T*⊗W : δ_i u ∈ g for all i}.
pub fn prolong(g: &SymbolSpace) -> SymbolSpace {
    let (n, w, k) = (g.n, g.w, g.k);
    let up = SymbolSpace::ambient_dim(n, w, k + 1);
    if g.basis.is_empty() || n == 0 {
        return SymbolSpace::zero(n, w, k + 1);
    }
    let ann = g.annihilator();
    if ann.is_empty() {
        return SymbolSpace::full(n, w, k + 1);
    }
    let ann: Vec<Vec<(usize, Rational)>> = ann.iter().map(|c| sparse_from_dense(c)).collect();
    let mut m = ExactMatrix::new(up);
    for i in 0..n {
        // target column -> (source column, factor)
        let mut back: Vec<(usize, Rational)> = vec![(0, Rational::zero()); g.ambient()];
        for (s, t, f) in contraction(n, w, k, i) {
            back[t] = (s, f);
        }
        for c in &ann {
            m.push_entries(c.iter().map(|(t, x)| (back[*t].0, x * &back[*t].1)));
        }
    }
    SymbolSpace { n, w, k: k + 1, basis: kernel_basis(&m) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceStatus {
    Terminated,
    Capped,
}

#[derive(Clone, Debug)]
pub struct SymbolSequence {
    pub first_order: u32,
    pub dims: Vec<usize>,
    pub spaces: Vec<SymbolSpace>,
    pub status: SequenceStatus,
}

impl SymbolSequence {
    /// A sequence supplied as dimensions only.
    pub fn given(first_order: u32, dims: Vec<usize>) -> Self {
        let status = if dims.last() == Some(&0) { SequenceStatus::Terminated } else { SequenceStatus::Capped };
        SymbolSequence { first_order, dims, spaces: Vec::new(), status }
    }

    pub fn is_terminated(&self) -> bool {
        self.status == SequenceStatus::Terminated
    }
}

/// Lists g, g^{(1)}, … until a zero space or `cap` spaces.
pub fn prolongation_sequence(g: &SymbolSpace, cap: usize) -> SymbolSequence {
    assert!(cap >= 1);
    let mut spaces = vec![g.clone()];
    while spaces.len() < cap && spaces.last().unwrap().dim() > 0 {
        let next = prolong(spaces.last().unwrap());
        spaces.push(next);
    }
    let status = if spaces.last().unwrap().dim() == 0 { SequenceStatus::Terminated } else { SequenceStatus::Capped };
    SymbolSequence { first_order: g.k, dims: spaces.iter().map(|s| s.dim()).collect(), spaces, status }
}

/// g0_dim + Σ dim g_i.
pub fn dimension_bound(seq: &SymbolSequence, g0_dim: usize) -> Result<usize> {
    if !seq.is_terminated() {
        return Err(Error::NotFiniteType);
    }
    Ok(g0_dim + seq.dims.iter().sum::<usize>())
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Column of the matrix entry A^a_i (row a, column i) in T*⊗T.
fn gl_coord(n: usize, a: usize, i: usize) -> usize {
    // σ = e_i sits at position i in descending grlex order
    i * n + a
}

pub fn gl(n: usize) -> SymbolSpace {
    SymbolSpace::full(n, n, 1)
}

pub fn so(n: usize) -> SymbolSpace {
    let amb = n * n;
    let mut basis = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = vec![Rational::zero(); amb];
            v[gl_coord(n, i, j)] = Rational::one();
            v[gl_coord(n, j, i)] = -Rational::one();
            basis.push(v);
        }
    }
    SymbolSpace { n, w: n, k: 1, basis }
}

pub fn identity_map(n: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n * n];
    for i in 0..n {
        v[gl_coord(n, i, i)] = Rational::one();
    }
    v
}

pub fn co(n: usize) -> SymbolSpace {
    let mut g = so(n);
    g.basis.insert(0, identity_map(n));
    g
}

pub fn sl(n: usize) -> SymbolSpace {
    let amb = n * n;
    let mut basis = Vec::new();
    for a in 0..n {
        for i in 0..n {
            if a != i {
                basis.push(unit(amb, gl_coord(n, a, i)));
            }
        }
    }
    for i in 1..n {
        let mut v = vec![Rational::zero(); amb];
        v[gl_coord(n, 0, 0)] = Rational::one();
        v[gl_coord(n, i, i)] = -Rational::one();
        basis.push(v);
    }
    SymbolSpace { n, w: n, k: 1, basis }
}

/// Kernel of the symmetrization T*⊗S^dT → S^{d+1}T, (i, τ) ↦ p^{τ+e_i}.
pub fn killing_symbol(n: usize, d: u32) -> SymbolSpace {
    let fiber = MultiIndices::new(n, d);
    let target = MultiIndices::new(n, d + 1);
    let w = fiber.len();
    let mut m = ExactMatrix::new(n * w);
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); target.len()];
    for i in 0..n {
        for (ti, tau) in fiber.list.iter().enumerate() {
            let mut e = tau.clone();
            e[i] += 1;
            rows[target.index(&e).unwrap()].push((i * w + ti, Rational::one()));
        }
    }
    for r in rows {
        m.push_entries(r);
    }
    SymbolSpace { n, w, k: 1, basis: kernel_basis(&m) }
}

/// ∇ξ = ρ·Id: the line spanned by the identity in T*⊗T.
pub fn concircular(n: usize) -> SymbolSpace {
    SymbolSpace { n, w: n, k: 1, basis: vec![identity_map(n)] }
}

/// Second-order part of the projective Lie equation inside S²T*⊗T:
/// ξ^a = x^a (α·x) for α ∈ T*.
pub fn projective_second_order(n: usize) -> SymbolSpace {
    let quad = MultiIndices::new(n, 2);
    let amb = SymbolSpace::ambient_dim(n, n, 2);
    let basis = (0..n)
        .map(|k| {
            let mut v = vec![Rational::zero(); amb];
            for a in 0..n {
                let mut e = vec![0u16; n];
                e[a] += 1;
                e[k] += 1;
                v[quad.index(&e).unwrap() * n + a] = Rational::one();
            }
            v
        })
        .collect();
    SymbolSpace { n, w: n, k: 2, basis }
}

/// ∇_k a_ij = λ_i g_jk + λ_j g_ik on symmetric a, fibre S²T indexed by
/// the quadratic monomials x_i x_j.
pub fn mobility(n: usize) -> SymbolSpace {
    let pairs = MultiIndices::new(n, 2);
    let lin = MultiIndices::new(n, 1);
    let w = pairs.len();
    let amb = SymbolSpace::ambient_dim(n, w, 1);
    let pair = |a: usize, b: usize| {
        let mut e = vec![0u16; n];
        e[a] += 1;
        e[b] += 1;
        pairs.index(&e).unwrap()
    };
    let basis = (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); amb];
            for k in 0..n {
                let mut e = vec![0u16; n];
                e[k] = 1;
                let row = lin.index(&e).unwrap() * w;
                // a_ik and a_ki are the same coordinate
                let c = &v[row + pair(i, k)] + &Rational::one();
                v[row + pair(i, k)] = if i == k { Rational::from_int(2) } else { c };
            }
            v
        })
        .collect();
    SymbolSpace { n, w, k: 1, basis }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_symbols() {
        for n in 2..=5 {
            assert_eq!(prolongation_sequence(&concircular(n), DEFAULT_CAP).dims, vec![1, 0]);
            assert_eq!(prolongation_sequence(&projective_second_order(n), DEFAULT_CAP).dims, vec![n, 0]);
        }
        for n in 2..=4 {
            assert_eq!(prolongation_sequence(&mobility(n), DEFAULT_CAP).dims, vec![n, 1, 0]);
        }
    }

    #[test]
    fn skew_symbols_prolong_to_zero() {
        assert_eq!(prolong(&so(3)).dim(), 0);
        assert_eq!(prolongation_sequence(&so(4), DEFAULT_CAP).dims, vec![6, 0]);
    }

    #[test]
    fn full_space_prolongs_to_full() {
        for n in 1..=3 {
            for w in 1..=2 {
                for k in 0..=3 {
                    let p = prolong(&SymbolSpace::full(n, w, k));
                    assert_eq!(p.dim(), SymbolSpace::ambient_dim(n, w, k + 1));
                }
            }
        }
    }

    #[test]
    fn conformal_chain() {
        let s = prolongation_sequence(&co(3), DEFAULT_CAP);
        assert_eq!(s.dims, vec![4, 3, 0]);
        assert_eq!(dimension_bound(&s, 3), Ok(10));
    }

    #[test]
    fn gl2_is_capped() {
        let s = prolongation_sequence(&gl(2), 4);
        assert_eq!(s.dims, vec![4, 6, 8, 10]);
        assert_eq!(s.status, SequenceStatus::Capped);
        assert_eq!(dimension_bound(&s, 2), Err(Error::NotFiniteType));
    }

    #[test]
    fn killing_symbol_dims() {
        assert_eq!(killing_symbol(3, 2).dim(), 8);
        assert_eq!(killing_symbol(2, 1).dim(), 1);
        assert_eq!(killing_symbol(2, 3).dim(), 3);
    }

    #[test]
    fn killing_bounds() {
        let s = prolongation_sequence(&so(3), DEFAULT_CAP);
        assert_eq!(dimension_bound(&s, 3), Ok(6));
        let s = prolongation_sequence(&killing_symbol(3, 2), DEFAULT_CAP);
        assert_eq!(s.dims, vec![8, 6, 0]);
        assert_eq!(dimension_bound(&s, 6), Ok(20));
    }

    #[test]
    fn sl_has_codimension_one() {
        assert_eq!(sl(3).dim(), 8);
        assert!(prolong(&sl(2)).dim() > 0);
    }

    #[test]
    fn given_sequences() {
        let n = 3;
        assert_eq!(dimension_bound(&SymbolSequence::given(0, vec![n, n * n, 0]), 0), Ok(n + n * n));
        assert_eq!(dimension_bound(&SymbolSequence::given(0, vec![n, n * n, n, 0]), 0), Ok(n + n * n + n));
    }
}
