//! Chevalley–Eilenberg cohomology with adjoint coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::algebra::LieAlgebra;
use crate::arith::linalg::Echelon;
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// dim Hom(Λᵏ L, L)
pub fn cochain_dim(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut b = 1usize;
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b * n
}

/// Rank of d: C^k → C^{k+1}, assembled row by row from
/// (dω)(x₀..x_k) = Σ (−1)^i [x_i, ω(..x̂_i..)] + Σ_{i<j} (−1)^{i+j} ω([x_i,x_j], ..x̂_i..x̂_j..).
pub fn differential_rank(l: &LieAlgebra<Rational>, k: usize) -> usize {
    let n = l.dim();
    if k >= n {
        return 0;
    }
    let src: BTreeMap<Vec<usize>, usize> = subsets(n, k).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    let col = |s: &[usize], a: usize| src[s] * n + a;
    let mut ech = Echelon::new(src.len() * n);
    let sign = |p: usize| if p.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    for t in subsets(n, k + 1) {
        let mut rows: Vec<BTreeMap<usize, Rational>> = (0..n).map(|_| BTreeMap::new()).collect();
        let add = |b: usize, c: usize, v: Rational, rows: &mut Vec<BTreeMap<usize, Rational>>| {
            let e = rows[b].entry(c).or_insert_with(Rational::zero);
            *e = &*e + &v;
        };
        for i in 0..=k {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &x)| x).collect();
            for a in 0..n {
                // [e_{t_i}, e_a] has coordinates in column a of ad(e_{t_i})
                let br = l.basis_bracket(t[i], a);
                for (b, cf) in br.iter().enumerate() {
                    if !cf.is_zero() {
                        add(b, col(&rest, a), &sign(i) * cf, &mut rows);
                    }
                }
            }
        }
        for i in 0..=k {
            for j in (i + 1)..=k {
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &x)| x).collect();
                let br = l.basis_bracket(t[i], t[j]);
                for (c, cf) in br.iter().enumerate() {
                    if cf.is_zero() || rest.contains(&c) {
                        continue;
                    }
                    // sort (c, rest..) and track the sign of the permutation
                    let pos = rest.iter().filter(|&&x| x < c).count();
                    let mut s = rest.clone();
                    s.insert(pos, c);
                    let sg = &sign(i + j + pos) * cf;
                    for b in 0..n {
                        add(b, col(&s, b), sg.clone(), &mut rows);
                    }
                }
            }
        }
        ech.extend(rows.into_iter().map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect()));
    }
    ech.rank()
}

/// dim Hᵏ(L, L). Parameters must already be specialized to rationals.
pub fn chevalley_eilenberg(l: &LieAlgebra<Rational>, k: usize) -> usize {
    let n = l.dim();
    let c = cochain_dim(n, k);
    let out = differential_rank(l, k);
    let inc = if k == 0 { 0 } else { differential_rank(l, k - 1) };
    c - out - inc
}

/// Same for an algebra over ℚ(params); refuses non-constant structure constants.
pub fn chevalley_eilenberg_checked(l: &LieAlgebra<RationalFunction>, k: usize) -> Result<usize> {
    let q = l.to_rational().map_err(|_| Error::SymbolicParameter("specialize all parameters first".into()))?;
    Ok(chevalley_eilenberg(&q, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::presets::{heisenberg, sl2};
    use alloc::string::ToString;

    fn abelian(n: usize) -> LieAlgebra<Rational> {
        LieAlgebra::abelian((0..n).map(|i| i.to_string()).collect())
    }

    #[test]
    fn small_cases() {
        assert_eq!(chevalley_eilenberg(&abelian(1), 2), 0);
        assert_eq!(chevalley_eilenberg(&abelian(2), 2), 2);
        assert_eq!(chevalley_eilenberg(&sl2(), 2), 0);
        assert_eq!(chevalley_eilenberg(&sl2(), 0), 0);
        assert_eq!(chevalley_eilenberg(&sl2(), 1), 0);
    }

    #[test]
    fn symbolic_input_refused() {
        let w = crate::lie::presets::w7(crate::lie::presets::parameter("m")).unwrap();
        assert!(matches!(chevalley_eilenberg_checked(&w, 1), Err(Error::SymbolicParameter(_))));
        let w3 = w.specialize(&[("m", Rational::from_int(3))]).unwrap();
        assert_eq!(chevalley_eilenberg_checked(&w3, 0), Ok(0));
    }

    #[test]
    fn heisenberg3_outer_derivations() {
        // Der(h3) has dim 6, inner derivations dim 2
        let h = heisenberg(3).unwrap();
        assert_eq!(chevalley_eilenberg(&h, 0), 1);
        assert_eq!(chevalley_eilenberg(&h, 1), 4);
    }

    #[test]
    fn euler_characteristic() {
        for l in [sl2(), heisenberg(3).unwrap(), abelian(2)] {
            let n = l.dim();
            let mut chi_c = 0i64;
            let mut chi_h = 0i64;
            for k in 0..=n {
                let s = if k % 2 == 0 { 1 } else { -1 };
                chi_c += s * cochain_dim(n, k) as i64;
                chi_h += s * chevalley_eilenberg(&l, k) as i64;
            }
            assert_eq!(chi_c, chi_h);
        }
    }
}
