//! Exact sparse linear algebra over a [`Field`].
//!
//! Everything is built on an incrementally maintained reduced row echelon
//! form. Rows are fed in order of (number of nonzeros, input index), and each
//! new pivot is normalized to 1 and eliminated from the existing rows, so the
//! stored form is the unique RREF of the row space whatever the feed order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;

/// Sorted `(column, value)` pairs without zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn dense_from_sparse<F: Field>(v: &[(usize, F)], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

fn get<F: Field>(v: &[(usize, F)], col: usize) -> Option<&F> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|i| &v[i].1)
}

/// `a + s·b`.
fn axpy<F: Field>(a: &[(usize, F)], s: &F, b: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, s.times(&b[j].1)));
            j += 1;
        } else {
            let x = a[i].1.plus(&s.times(&b[j].1));
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<F> {
    cols: usize,
    rows: Vec<SparseVec<F>>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(cols: usize) -> Self {
        ExactMatrix { cols, rows: Vec::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { cols, rows: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix { cols: n, rows: (0..n).map(|i| vec![(i, F::one())]).collect() }
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::new(cols);
        for r in rows {
            m.push_dense(r);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn push_dense(&mut self, row: &[F]) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(sparse_from_dense(row));
    }

    /// Appends a row given as unsorted entries; duplicates are summed.
    pub fn push_entries(&mut self, entries: impl IntoIterator<Item = (usize, F)>) {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (c, x) in entries {
            assert!(c < self.cols, "column out of range");
            let e = acc.entry(c).or_insert_with(F::zero);
            *e = e.plus(&x);
        }
        self.rows.push(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect());
    }

    pub fn push_sparse(&mut self, row: SparseVec<F>) {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        self.rows.push(row);
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        get(&self.rows[r], c).cloned().unwrap_or_else(F::zero)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        self.rows
            .iter()
            .map(|r| r.iter().fold(F::zero(), |acc, (c, x)| acc.plus(&x.times(&v[*c]))))
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|r| dense_from_sparse(r, self.cols)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t: Vec<SparseVec<F>> = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (c, x) in r {
                t[*c].push((i, x.clone()));
            }
        }
        ExactMatrix { cols: self.rows.len(), rows: t }
    }

    pub fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(self.cols);
        e.extend(self.rows.iter().cloned());
        e
    }
}

/// Reduced row echelon form of a growing row space.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    cols: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: BTreeMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row.contains_key(&c)
    }

    /// Rows of the RREF, sorted by pivot column.
    pub fn basis(&self) -> Vec<SparseVec<F>> {
        self.pivot_row.values().map(|&i| self.rows[i].clone()).collect()
    }

    /// Remainder of `v` after eliminating all pivot columns.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut out: SparseVec<F> = v.to_vec();
        let hits: Vec<(usize, F)> =
            v.iter().filter_map(|(c, x)| self.pivot_row.get(c).map(|&r| (r, x.negated()))).collect();
        if hits.is_empty() {
            return out;
        }
        if hits.len() > 8 {
            let mut acc: BTreeMap<usize, F> = out.into_iter().collect();
            for (r, s) in &hits {
                for (c, x) in &self.rows[*r] {
                    let e = acc.entry(*c).or_insert_with(F::zero);
                    *e = e.plus(&s.times(x));
                }
            }
            return acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        }
        for (r, s) in &hits {
            out = axpy(&out, s, &self.rows[*r]);
        }
        out
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns the new pivot column if `v` was independent.
    pub fn insert(&mut self, v: &[(usize, F)]) -> Option<usize> {
        let r = self.reduce(v);
        let (p, lead) = r.first()?.clone();
        let inv = lead.inverse().expect("nonzero pivot");
        let r: SparseVec<F> = r.into_iter().map(|(c, x)| (c, x.times(&inv))).collect();
        for row in self.rows.iter_mut() {
            if let Some(x) = get(row, p) {
                let s = x.negated();
                *row = axpy(row, &s, &r);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(r);
        Some(p)
    }

    /// Inserts rows in order of (nnz, index).
    pub fn extend(&mut self, rows: impl IntoIterator<Item = SparseVec<F>>) {
        let mut rows: Vec<(usize, usize, SparseVec<F>)> =
            rows.into_iter().enumerate().map(|(i, r)| (r.len(), i, r)).collect();
        rows.sort_by_key(|(n, i, _)| (*n, *i));
        for (_, _, r) in rows {
            if self.rank() == self.cols {
                break;
            }
            self.insert(&r);
        }
    }

    /// Kernel of the row space viewed as a linear map, one vector per free
    /// column in increasing order.
    pub fn kernel_sparse(&self) -> Vec<SparseVec<F>> {
        let mut free_index = BTreeMap::new();
        for c in 0..self.cols {
            if !self.pivot_row.contains_key(&c) {
                free_index.insert(c, free_index.len());
            }
        }
        let mut vecs: Vec<SparseVec<F>> = free_index.keys().map(|&c| vec![(c, F::one())]).collect();
        for (&p, &ri) in &self.pivot_row {
            for (c, x) in &self.rows[ri] {
                if *c != p {
                    vecs[free_index[c]].push((p, x.negated()));
                }
            }
        }
        for v in vecs.iter_mut() {
            v.sort_by_key(|e| e.0);
        }
        vecs
    }

    pub fn kernel(&self) -> Vec<Vec<F>> {
        self.kernel_sparse().iter().map(|v| dense_from_sparse(v, self.cols)).collect()
    }
}

pub fn rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    m.echelon().rank()
}

pub fn kernel_basis<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<F>> {
    m.echelon().kernel()
}

/// RREF basis of the span of the given vectors.
pub fn span_basis<F: Field>(vs: &[Vec<F>]) -> Vec<Vec<F>> {
    let Some(n) = vs.first().map(|v| v.len()) else { return Vec::new() };
    let mut e = Echelon::new(n);
    e.extend(vs.iter().map(|v| sparse_from_dense(v)));
    e.basis().iter().map(|r| dense_from_sparse(r, n)).collect()
}

pub fn rank_of_vectors<F: Field>(vs: &[Vec<F>]) -> usize {
    let Some(n) = vs.first().map(|v| v.len()) else { return 0 };
    let mut e = Echelon::new(n);
    e.extend(vs.iter().map(|v| sparse_from_dense(v)));
    e.rank()
}

/// Basis of span(A) ∩ span(B).
pub fn intersect_subspaces<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a[0].len();
    let a = span_basis(a);
    let b = span_basis(b);
    // columns: a_i then -b_j; rows: ambient coordinates
    let mut m = ExactMatrix::new(a.len() + b.len());
    for k in 0..n {
        let mut row = Vec::with_capacity(a.len() + b.len());
        row.extend(a.iter().map(|v| v[k].clone()));
        row.extend(b.iter().map(|v| v[k].negated()));
        m.push_dense(&row);
    }
    let ker = kernel_basis(&m);
    let vs: Vec<Vec<F>> = ker
        .iter()
        .map(|c| {
            let mut out = vec![F::zero(); n];
            for (i, v) in a.iter().enumerate() {
                if c[i].is_zero() {
                    continue;
                }
                for k in 0..n {
                    out[k] = out[k].plus(&c[i].times(&v[k]));
                }
            }
            out
        })
        .collect();
    span_basis(&vs)
}

/// Expresses vectors in a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinates<F> {
    ambient: usize,
    size: usize,
    ech: Echelon<F>,
}

impl<F: Field> Coordinates<F> {
    /// `None` if the family is dependent.
    pub fn new(basis: &[Vec<F>], ambient: usize) -> Option<Self> {
        let size = basis.len();
        let mut ech = Echelon::new(ambient + size);
        for (i, b) in basis.iter().enumerate() {
            let mut r = sparse_from_dense(b);
            r.push((ambient + i, F::one()));
            ech.insert(&r);
        }
        if ech.pivots().any(|p| p >= ambient) {
            return None;
        }
        Some(Coordinates { ambient, size, ech })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn solve_sparse(&self, v: &[(usize, F)]) -> Option<Vec<F>> {
        let r = self.ech.reduce(v);
        let mut out = vec![F::zero(); self.size];
        for (c, x) in r {
            if c < self.ambient {
                return None;
            }
            out[c - self.ambient] = x.negated();
        }
        Some(out)
    }

    /// Coefficients `c` with `v = Σ c_i basis_i`, or `None` if `v` is outside
    /// the span.
    pub fn solve(&self, v: &[F]) -> Option<Vec<F>> {
        self.solve_sparse(&sparse_from_dense(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&ExactMatrix::<Rational>::identity(3)).is_empty());
        assert_eq!(kernel_basis(&ExactMatrix::<Rational>::zeros(2, 3)).len(), 3);
        let k = kernel_basis(&mat(&[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![q(1), q(-1), q(1)]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&ExactMatrix::<Rational>::identity(4)), 4);
        assert_eq!(rank(&mat(&[&[2, 4, 6], &[-1, -2, -3], &[3, 6, 9]])), 1);
    }

    #[test]
    fn intersections() {
        let a = vec![vec![q(1), q(0)]];
        let b = vec![vec![q(0), q(1)]];
        assert!(intersect_subspaces(&a, &b).is_empty());
        assert_eq!(intersect_subspaces(&a, &a).len(), 1);
        let p1 = vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]];
        let p2 = vec![vec![q(1), q(1), q(1)], vec![q(0), q(1), q(-1)]];
        let i = intersect_subspaces(&p1, &p2);
        assert_eq!(i.len(), 1);
        assert!(i[0][2].is_zero());
    }

    #[test]
    fn coordinates_in_basis() {
        let b = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let c = Coordinates::new(&b, 3).unwrap();
        assert_eq!(c.solve(&[q(2), q(5), q(3)]), Some(vec![q(2), q(3)]));
        assert_eq!(c.solve(&[q(1), q(0), q(0)]), None);
    }
}
