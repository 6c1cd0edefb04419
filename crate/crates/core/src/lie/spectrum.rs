//! Endomorphisms of a Lie algebra: characteristic polynomials, trace
//! invariants and gradings by a semisimple element.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::algebra::{Element, LieAlgebra};
use crate::arith::field::Field;
use crate::arith::linalg::{kernel_basis, rank_of_vectors, Coordinates, ExactMatrix};
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

/// `m[k][j]` is the k-th coordinate of the image of the j-th basis vector.
pub type LinearEndomorphism<F> = Vec<Vec<F>>;

pub fn identity<F: Field>(n: usize) -> LinearEndomorphism<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> LinearEndomorphism<F> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    a[i].iter().zip(b).fold(F::zero(), |acc, (x, row)| if x.is_zero() { acc } else { acc.plus(&x.times(&row[j])) })
                })
                .collect()
        })
        .collect()
}

pub fn apply<F: Field>(a: &[Vec<F>], v: &[F]) -> Vec<F> {
    a.iter().map(|r| r.iter().zip(v).fold(F::zero(), |acc, (x, y)| acc.plus(&x.times(y)))).collect()
}

pub fn trace<F: Field>(a: &[Vec<F>]) -> F {
    (0..a.len()).fold(F::zero(), |acc, i| acc.plus(&a[i][i]))
}

/// Matrix of `a` on span(`basis`), which must be invariant.
pub fn restrict<F: Field>(a: &[Vec<F>], basis: &[Element<F>]) -> Result<LinearEndomorphism<F>> {
    let n = a.len();
    if basis.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch("subspace vectors".into()));
    }
    let coords = Coordinates::new(basis, n).ok_or_else(|| Error::Invalid("subspace basis is dependent".into()))?;
    let k = basis.len();
    let mut out = vec![vec![F::zero(); k]; k];
    for (j, v) in basis.iter().enumerate() {
        let c = coords.solve(&apply(a, v)).ok_or_else(|| Error::Invalid("subspace is not invariant".into()))?;
        for i in 0..k {
            out[i][j] = c[i].clone();
        }
    }
    Ok(out)
}

/// Coefficients of det(t − A), lowest degree first (Faddeev–LeVerrier).
pub fn charpoly<F: Field>(a: &[Vec<F>]) -> Vec<F> {
    let n = a.len();
    let mut c = vec![F::zero(); n + 1];
    c[n] = F::one();
    let mut m: LinearEndomorphism<F> = vec![vec![F::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &m);
        for i in 0..n {
            next[i][i] = next[i][i].plus(&c[n - k + 1]);
        }
        m = next;
        let t = trace(&mat_mul(a, &m));
        c[n - k] = t.negated().quotient(&F::from_int(k as i64)).unwrap();
    }
    c
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumInvariants<F> {
    pub tr2: F,
    pub tr4: F,
    /// Tr A⁴ / (Tr A²)²
    pub lambda: F,
    /// 2(1 − 2λ)
    pub j: F,
    pub charpoly: Vec<F>,
}

pub fn ad_spectrum_invariants<F: Field>(
    l: &LieAlgebra<F>,
    a: &[Vec<F>],
    subspace: &[Element<F>],
) -> Result<SpectrumInvariants<F>> {
    if a.len() != l.dim() || a.iter().any(|r| r.len() != l.dim()) {
        return Err(Error::DimensionMismatch("endomorphism".into()));
    }
    let r = restrict(a, subspace)?;
    let a2 = mat_mul(&r, &r);
    let tr2 = trace(&a2);
    let tr4 = trace(&mat_mul(&a2, &a2));
    let lambda = tr4.quotient(&tr2.times(&tr2)).ok_or(Error::ZeroTrace)?;
    let j = F::from_int(2).times(&F::one().minus(&F::from_int(2).times(&lambda)));
    Ok(SpectrumInvariants { tr2, tr4, lambda, j, charpoly: charpoly(&r) })
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs().to_u64().ok_or_else(|| Error::Unsupported("eigenvalue search on huge coefficients".into()))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

/// Divides p by (t − r) if r is a root.
fn deflate(p: &[Rational], r: &Rational) -> Option<Vec<Rational>> {
    let n = p.len() - 1;
    let mut q = vec![Rational::zero(); n];
    let mut acc = Rational::zero();
    for i in (0..=n).rev() {
        acc = &(&acc * r) + &p[i];
        if i > 0 {
            q[i - 1] = acc.clone();
        }
    }
    acc.is_zero().then_some(q)
}

/// Rational roots with multiplicity; the second value is the degree of the
/// part without rational roots.
pub fn rational_roots(p: &[Rational]) -> Result<(Vec<(Rational, usize)>, usize)> {
    let mut p: Vec<Rational> = p.to_vec();
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let push = |r: Rational, roots: &mut Vec<(Rational, usize)>| match roots.iter_mut().find(|(x, _)| *x == r) {
        Some(e) => e.1 += 1,
        None => roots.push((r, 1)),
    };
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        push(Rational::zero(), &mut roots);
    }
    loop {
        if p.len() <= 1 {
            return Ok((roots, 0));
        }
        let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let mut found = None;
        'search: for a in divisors(&ints[0])? {
            for b in divisors(ints.last().unwrap())? {
                for s in [1i64, -1] {
                    let r = Rational::from_bigints(&a * s, b.clone());
                    if let Some(q) = deflate(&p, &r) {
                        found = Some((r, q));
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some((r, q)) => {
                push(r, &mut roots);
                p = q;
            }
            None => return Ok((roots, p.len() - 1)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradingComponent<F> {
    pub eigenvalue: Rational,
    /// Eigenvectors in the algebra's basis.
    pub basis: Vec<Element<F>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Grading<F> {
    /// Components ordered by eigenvalue.
    pub components: Vec<GradingComponent<F>>,
    /// Pairs (a, b) with [L_a, L_b] ⊄ L_{a+b}.
    pub violations: Vec<(Rational, Rational)>,
}

impl<F: Field> Grading<F> {
    pub fn is_grading(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn dims(&self) -> Vec<(Rational, usize)> {
        self.components.iter().map(|c| (c.eigenvalue.clone(), c.basis.len())).collect()
    }
}

/// Eigenspace decomposition of `a` on `subspace` (the whole algebra if None).
/// Eigenvalues must be rational constants; the bracket compatibility is
/// checked whenever the subspace is closed under the bracket.
pub fn grading_by_endomorphism<F: Field>(
    l: &LieAlgebra<F>,
    a: &[Vec<F>],
    subspace: Option<&[Element<F>]>,
) -> Result<Grading<F>> {
    let whole = l.whole();
    let sub = subspace.unwrap_or(&whole);
    let r = restrict(a, sub)?;
    let cp: Vec<Rational> = charpoly(&r)
        .iter()
        .map(|c| c.as_rational().ok_or_else(|| Error::NotDiagonalizable(format!("eigenvalue depends on parameters ({c})"))))
        .collect::<Result<_>>()?;
    let (roots, rest) = rational_roots(&cp)?;
    if rest > 0 {
        return Err(Error::NotDiagonalizable(format!("{rest} eigenvalues are not rational")));
    }
    let n = l.dim();
    let k = sub.len();
    let mut components = Vec::new();
    for (ev, mult) in roots {
        let mut shifted = r.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = row[i].minus(&F::from_rational(ev.clone()));
        }
        let ker = kernel_basis(&ExactMatrix::from_dense(&shifted));
        if ker.len() != mult {
            return Err(Error::NotDiagonalizable(format!(
                "eigenvalue {ev} has multiplicity {mult} but only {} eigenvectors",
                ker.len()
            )));
        }
        let basis = ker
            .iter()
            .map(|c| (0..n).map(|t| (0..k).fold(F::zero(), |acc, i| acc.plus(&c[i].times(&sub[i][t])))).collect())
            .collect();
        components.push(GradingComponent { eigenvalue: ev, basis });
    }
    components.sort_by(|a, b| a.eigenvalue.cmp(&b.eigenvalue));
    let closed = {
        let br = l.bracket_span(sub, sub);
        let mut both = sub.to_vec();
        both.extend(br);
        rank_of_vectors(&both) == sub.len()
    };
    let mut violations = Vec::new();
    if closed {
        for (x, ca) in components.iter().enumerate() {
            for cb in &components[x..] {
                let target = &ca.eigenvalue + &cb.eigenvalue;
                let tgt: Vec<Element<F>> =
                    components.iter().find(|c| c.eigenvalue == target).map(|c| c.basis.clone()).unwrap_or_default();
                let base = rank_of_vectors(&tgt);
                let ok = ca.basis.iter().all(|u| {
                    cb.basis.iter().all(|v| {
                        let w = l.bracket(u, v);
                        if w.iter().all(|x| x.is_zero()) {
                            return true;
                        }
                        let mut t = tgt.clone();
                        t.push(w);
                        rank_of_vectors(&t) == base
                    })
                });
                if !ok {
                    violations.push((ca.eigenvalue.clone(), cb.eigenvalue.clone()));
                }
            }
        }
    }
    Ok(Grading { components, violations })
}

/// Grading by ad(z) for an element z.
pub fn grading_by_element<F: Field>(l: &LieAlgebra<F>, z: &[F], subspace: Option<&[Element<F>]>) -> Result<Grading<F>> {
    grading_by_endomorphism(l, &l.ad(z), subspace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::presets::{sl2, graded2356};

    #[test]
    fn charpoly_of_companion() {
        let q = Rational::from_int;
        // t^2 - 3t + 2
        let a = vec![vec![q(0), q(-2)], vec![q(1), q(3)]];
        assert_eq!(charpoly(&a), vec![q(2), q(-3), q(1)]);
        let (roots, rest) = rational_roots(&charpoly(&a)).unwrap();
        assert_eq!((roots.len(), rest), (2, 0));
    }

    #[test]
    fn irrational_roots_are_left_over() {
        let q = Rational::from_int;
        // t^3 - 2t = t (t^2 - 2)
        let (roots, rest) = rational_roots(&[q(0), q(-2), q(0), q(1)]).unwrap();
        assert_eq!(roots, vec![(q(0), 1)]);
        assert_eq!(rest, 2);
    }

    #[test]
    fn identity_invariants() {
        let l = crate::lie::presets::heisenberg(5).unwrap();
        let id = identity::<Rational>(5);
        let sub: Vec<_> = (0..4).map(|i| l.unit(i)).collect();
        let s = ad_spectrum_invariants(&l, &id, &sub).unwrap();
        assert_eq!(s.lambda, Rational::new(1, 4));
        assert_eq!(s.j, Rational::one());
        let zero = vec![vec![Rational::zero(); 5]; 5];
        assert_eq!(ad_spectrum_invariants(&l, &zero, &sub), Err(Error::ZeroTrace));
    }

    #[test]
    fn sl2_cartan_grading() {
        let l = sl2();
        let g = grading_by_element(&l, &l.unit(1), None).unwrap();
        assert!(g.is_grading());
        let q = Rational::from_int;
        assert_eq!(g.dims(), vec![(q(-2), 1), (q(0), 1), (q(2), 1)]);
        // ad(e) is nilpotent and nonzero
        assert!(matches!(grading_by_element(&l, &l.unit(0), None), Err(Error::NotDiagonalizable(_))));
    }

    #[test]
    fn graded2356_grading() {
        let l = graded2356();
        let mut z = l.unit(l.index("S1").unwrap());
        let r = l.unit(l.index("R").unwrap());
        // S1 + R acts with eigenvalues in ½ℤ; the bracket respects them
        for (x, y) in z.iter_mut().zip(&r) {
            *x = &*x + y;
        }
        let g = grading_by_element(&l, &z, None).unwrap();
        assert!(g.is_grading());
    }
}
