//! Tanaka prolongation of a graded nilpotent Lie algebra.
//!
//! An element of g_k (k ≥ 0) is stored as its values on the basis of 𝔪:
//! u(e_a) lies in degree k - d_a, which is a piece of 𝔪 when negative and
//! the already computed g_{k-d_a} otherwise. The coordinate space V_k lists,
//! for each a in basis order, the coordinates of u(e_a) in that target.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::linalg::{kernel_basis, rank_of_vectors, Coordinates, ExactMatrix};
use crate::arith::rational::Rational;
use crate::error::{Error, Result};
use crate::gnla::Gnla;
use crate::lie::algebra::LieAlgebra;

pub const DEFAULT_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TanakaStatus {
    Terminated,
    Capped,
}

#[derive(Clone, Debug)]
pub struct TanakaAlgebra {
    pub m: Gnla,
    /// bases of g_0, g_1, … (all nonzero), in V_k coordinates
    pub components: Vec<Vec<Vec<Rational>>>,
    pub status: TanakaStatus,
}

/// Where the value of a degree-k map on a basis element lands.
#[derive(Clone, Copy, Debug)]
enum Target {
    /// the depth of a component of 𝔪
    Neg(usize),
    /// index of a non-negative component
    Pos(usize),
}

struct Layout {
    offsets: Vec<usize>,
    targets: Vec<Target>,
    len: usize,
}

fn target(k: usize, d: usize) -> Target {
    if k < d {
        Target::Neg(d - k)
    } else {
        Target::Pos(k - d)
    }
}

impl TanakaAlgebra {
    fn target_size(m: &Gnla, comps: &[Vec<Vec<Rational>>], t: Target) -> usize {
        match t {
            Target::Neg(d) => m.component(d).len(),
            Target::Pos(l) => comps.get(l).map_or(0, |c| c.len()),
        }
    }

    fn layout(m: &Gnla, comps: &[Vec<Vec<Rational>>], k: usize) -> Layout {
        let mut offsets = Vec::new();
        let mut targets = Vec::new();
        let mut len = 0;
        for a in 0..m.dim() {
            let t = target(k, m.depth_of(a));
            offsets.push(len);
            targets.push(t);
            len += Self::target_size(m, comps, t);
        }
        Layout { offsets, targets, len }
    }

    /// Derivation conditions on V_k, one row per (pair a<b, target coordinate).
    fn conditions(m: &Gnla, comps: &[Vec<Vec<Rational>>], k: usize) -> (Layout, ExactMatrix<Rational>) {
        let lay = Self::layout(m, comps, k);
        let mut mat = ExactMatrix::new(lay.len);
        let n = m.dim();
        // position of each basis element of 𝔪 inside its component
        let mut pos_in = vec![0; n];
        for d in 1..=m.max_depth() {
            for (i, a) in m.component(d).into_iter().enumerate() {
                pos_in[a] = i;
            }
        }
        // contributions of -[u e_x, e_y] with u e_x in target of x
        let term = |x: usize, y: usize, sign: i64, rows: &mut Vec<Vec<(usize, Rational)>>| match lay.targets[x] {
            Target::Neg(d) => {
                for (t, &mt) in m.component(d).iter().enumerate() {
                    for (c, coef) in m.bracket(mt, y) {
                        let r = pos_in[*c];
                        rows[r].push((lay.offsets[x] + t, coef * &Rational::from_int(-sign)));
                    }
                }
            }
            Target::Pos(s) => {
                let sub = Self::layout(m, comps, s);
                let off = sub.offsets[y];
                let size = Self::target_size(m, comps, sub.targets[y]);
                for (t, xt) in comps[s].iter().enumerate() {
                    for (r, row) in rows.iter_mut().enumerate().take(size) {
                        let v = &xt[off + r];
                        if !v.is_zero() {
                            row.push((lay.offsets[x] + t, v * &Rational::from_int(-sign)));
                        }
                    }
                }
            }
        };
        for a in 0..n {
            for b in (a + 1)..n {
                let da = m.depth_of(a);
                let db = m.depth_of(b);
                let tgt = target(k, da + db);
                let size = Self::target_size(m, comps, tgt);
                if size == 0 {
                    continue;
                }
                let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); size];
                for (c, coef) in m.bracket(a, b) {
                    for (r, row) in rows.iter_mut().enumerate() {
                        row.push((lay.offsets[*c] + r, coef.clone()));
                    }
                }
                term(a, b, 1, &mut rows);
                term(b, a, -1, &mut rows);
                for row in rows {
                    mat.push_entries(row);
                }
            }
        }
        (lay, mat)
    }

    /// Dims of the non-negative components g_0, g_1, … (nonzero ones).
    pub fn nonneg_dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.len()).collect()
    }

    pub fn negative_dims(&self) -> Vec<usize> {
        self.m.dims()
    }

    /// Component dims from g_{-k} up to the top non-negative degree.
    pub fn all_dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.m.dims().into_iter().rev().collect();
        d.extend(self.nonneg_dims());
        d
    }

    pub fn total_dim(&self) -> usize {
        self.m.dim() + self.nonneg_dims().iter().sum::<usize>()
    }

    /// Re-checks every stored element against the derivation identity.
    pub fn derivation_residual_free(&self) -> bool {
        (0..self.components.len()).all(|k| {
            let (_, mat) = Self::conditions(&self.m, &self.components, k);
            self.components[k].iter().all(|u| mat.mul_vec(u).iter().all(|x| x.is_zero()))
        })
    }

    /// Rank of g_k → Hom(g_{-1}, g_{k-1}) for each k.
    pub fn restriction_ranks(&self) -> Vec<usize> {
        let ones = self.m.component(1);
        (0..self.components.len())
            .map(|k| {
                let lay = Self::layout(&self.m, &self.components, k);
                let vs: Vec<Vec<Rational>> = self.components[k]
                    .iter()
                    .map(|u| {
                        let mut r = Vec::new();
                        for &a in &ones {
                            let size = Self::target_size(&self.m, &self.components, lay.targets[a]);
                            r.extend_from_slice(&u[lay.offsets[a]..lay.offsets[a] + size]);
                        }
                        r
                    })
                    .collect();
                rank_of_vectors(&vs)
            })
            .collect()
    }

    /// The full graded Lie algebra 𝔪 ⊕ g_0 ⊕ g_1 ⊕ …; brackets of
    /// non-negative elements are [X,Y](Z) = [X,[Y,Z]] - [Y,[X,Z]].
    pub fn assemble(&self) -> Result<LieAlgebra<Rational>> {
        let m = &self.m;
        let nm = m.dim();
        let mut starts = vec![nm];
        for c in &self.components {
            starts.push(starts.last().unwrap() + c.len());
        }
        let total = *starts.last().unwrap();
        let mut names: Vec<String> = m.names().to_vec();
        for (k, c) in self.components.iter().enumerate() {
            for t in 0..c.len() {
                names.push(format!("g{k}_{}", t + 1));
            }
        }
        let layouts: Vec<Layout> = (0..=self.components.len() * 2)
            .map(|k| Self::layout(m, &self.components, k))
            .collect();
        // full index of coordinate r inside a target
        let full_index = |t: Target, r: usize| -> usize {
            match t {
                Target::Neg(d) => m.component(d)[r],
                Target::Pos(l) => starts[l] + r,
            }
        };
        // value of a stored map (component s, element t) on e_a, as a full vector
        let apply = |s: usize, t: usize, a: usize| -> Vec<Rational> {
            let lay = &layouts[s];
            let tg = lay.targets[a];
            let size = Self::target_size(m, &self.components, tg);
            let mut v = vec![Rational::zero(); total];
            for r in 0..size {
                let x = &self.components[s][t][lay.offsets[a] + r];
                if !x.is_zero() {
                    v[full_index(tg, r)] = x.clone();
                }
            }
            v
        };
        let degree_of = |i: usize| -> (bool, usize) {
            if i < nm {
                (false, m.depth_of(i))
            } else {
                let k = (0..self.components.len()).find(|&k| i < starts[k + 1]).unwrap();
                (true, k)
            }
        };
        let mut table = vec![vec![vec![Rational::zero(); total]; total]; total];
        for a in 0..nm {
            for b in 0..nm {
                for (c, x) in m.bracket(a, b) {
                    table[a][b][*c] = x.clone();
                }
            }
        }
        for i in nm..total {
            let (_, s) = degree_of(i);
            let t = i - starts[s];
            for a in 0..nm {
                let v = apply(s, t, a);
                table[a][i] = v.iter().map(|x| -x).collect();
                table[i][a] = v;
            }
        }
        let bracket = |table: &Vec<Vec<Vec<Rational>>>, x: usize, y: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); total];
            for (j, c) in y.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (o, v) in out.iter_mut().zip(&table[x][j]) {
                    if !v.is_zero() {
                        *o += &(c * v);
                    }
                }
            }
            out
        };
        let ncomp = self.components.len();
        for deg in 0..(2 * ncomp) {
            for s1 in 0..ncomp {
                if deg < s1 || deg - s1 >= ncomp {
                    continue;
                }
                let s2 = deg - s1;
                if s2 < s1 {
                    continue;
                }
                for i in starts[s1]..starts[s1 + 1] {
                    for j in starts[s2]..starts[s2 + 1] {
                        if i >= j {
                            continue;
                        }
                        // values on every e_a of 𝔪, in V_deg coordinates
                        let lay = &layouts[deg];
                        let mut coords = vec![Rational::zero(); lay.len];
                        for a in 0..nm {
                            let ea = {
                                let mut v = vec![Rational::zero(); total];
                                v[a] = Rational::one();
                                v
                            };
                            let yz = bracket(&table, j, &ea);
                            let xz = bracket(&table, i, &ea);
                            let p = bracket(&table, i, &yz);
                            let q = bracket(&table, j, &xz);
                            let val: Vec<Rational> = p.iter().zip(&q).map(|(u, v)| u - v).collect();
                            let tg = lay.targets[a];
                            let size = Self::target_size(m, &self.components, tg);
                            for r in 0..size {
                                coords[lay.offsets[a] + r] = val[full_index(tg, r)].clone();
                            }
                            let stray = val.iter().enumerate().any(|(idx, x)| {
                                !x.is_zero() && !(0..size).any(|r| full_index(tg, r) == idx)
                            });
                            if stray {
                                return Err(Error::Invalid("assembled bracket leaves its degree".into()));
                            }
                        }
                        let mut v = vec![Rational::zero(); total];
                        if deg < ncomp {
                            let cs = Coordinates::new(&self.components[deg], lay.len).unwrap();
                            let c = cs.solve(&coords).ok_or_else(|| {
                                Error::Invalid("assembled bracket is not in the prolongation".into())
                            })?;
                            for (r, x) in c.into_iter().enumerate() {
                                v[starts[deg] + r] = x;
                            }
                        } else if coords.iter().any(|x| !x.is_zero()) {
                            return Err(Error::Invalid("bracket lands beyond the last component".into()));
                        }
                        table[j][i] = v.iter().map(|x| -x).collect();
                        table[i][j] = v;
                    }
                }
            }
        }
        Ok(LieAlgebra::from_table(names, table))
    }
}

/// Computes g_0, g_1, … for 𝔪, optionally with g_0 prescribed (as vectors in
/// V_0 coordinates), stopping at the first zero component or after `cap`
/// non-negative components.
pub fn tanaka_prolongation(m: &Gnla, g0: Option<&[Vec<Rational>]>, cap: usize) -> Result<TanakaAlgebra> {
    let rep = m.validate();
    if !rep.is_valid() {
        return Err(Error::Invalid(format!("not a graded nilpotent Lie algebra: {rep:?}")));
    }
    if !rep.fundamental {
        return Err(Error::NotFundamental);
    }
    let mut comps: Vec<Vec<Vec<Rational>>> = Vec::new();
    let mut status = TanakaStatus::Capped;
    for k in 0..cap {
        let (lay, mat) = TanakaAlgebra::conditions(m, &comps, k);
        let basis = match (k, g0) {
            (0, Some(given)) => {
                if given.iter().any(|u| u.len() != lay.len) {
                    return Err(Error::DimensionMismatch(format!("degree-0 maps have {} coordinates", lay.len)));
                }
                if given.iter().any(|u| mat.mul_vec(u).iter().any(|x| !x.is_zero())) {
                    return Err(Error::PrescribedG0NotDerivations);
                }
                crate::arith::linalg::span_basis(given)
            }
            _ => kernel_basis(&mat),
        };
        if basis.is_empty() {
            status = TanakaStatus::Terminated;
            break;
        }
        comps.push(basis);
    }
    Ok(TanakaAlgebra { m: m.clone(), components: comps, status })
}

/// Σ dim g_i over all components, if the prolongation terminated.
pub fn dimension_certificate(t: &TanakaAlgebra) -> Result<usize> {
    match t.status {
        TanakaStatus::Terminated => Ok(t.total_dim()),
        TanakaStatus::Capped => Err(Error::NotFiniteType),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnla::{abelian, free235, heisenberg, symbol2356};

    #[test]
    fn free235_gives_fourteen() {
        let t = tanaka_prolongation(&free235(), None, DEFAULT_CAP).unwrap();
        assert_eq!(t.all_dims(), vec![2, 1, 2, 4, 2, 1, 2]);
        assert_eq!(dimension_certificate(&t), Ok(14));
        assert!(t.derivation_residual_free());
        let l = t.assemble().unwrap();
        assert!(l.is_lie_algebra());
        assert_eq!(t.restriction_ranks(), t.nonneg_dims());
    }

    #[test]
    fn growth_2356_symbol_gives_eleven() {
        let t = tanaka_prolongation(&symbol2356(), None, DEFAULT_CAP).unwrap();
        assert_eq!(dimension_certificate(&t), Ok(11));
        assert_eq!(t.nonneg_dims(), vec![3, 2]);
    }

    #[test]
    fn abelian_with_conformal_g0() {
        let g0 = crate::symbols::co(3).basis;
        let t = tanaka_prolongation(&abelian(3), Some(&g0), DEFAULT_CAP).unwrap();
        assert_eq!(t.nonneg_dims(), vec![4, 3]);
        assert_eq!(dimension_certificate(&t), Ok(10));
    }

    #[test]
    fn contact_algebra_is_capped() {
        let t = tanaka_prolongation(&heisenberg(3).unwrap(), None, 6).unwrap();
        assert_eq!(t.status, TanakaStatus::Capped);
        assert_eq!(t.nonneg_dims().len(), 6);
        assert_eq!(dimension_certificate(&t), Err(Error::NotFiniteType));
    }

    #[test]
    fn prescribing_all_derivations_changes_nothing() {
        let free = tanaka_prolongation(&free235(), None, DEFAULT_CAP).unwrap();
        let again = tanaka_prolongation(&free235(), Some(&free.components[0]), DEFAULT_CAP).unwrap();
        assert_eq!(free.all_dims(), again.all_dims());
        let mut both = free.components[0].clone();
        both.extend(again.components[0].iter().cloned());
        assert_eq!(rank_of_vectors(&both), free.components[0].len());
    }

    #[test]
    fn non_derivation_rejected() {
        let n = 9;
        let mut bad = vec![Rational::zero(); n];
        bad[0] = Rational::one();
        let r = tanaka_prolongation(&free235(), Some(&[bad]), DEFAULT_CAP);
        assert_eq!(r.unwrap_err(), Error::PrescribedG0NotDerivations);
    }
}
