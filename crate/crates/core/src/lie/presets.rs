//! Named Lie algebras.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::LieAlgebra;
use crate::arith::field::Field;
use crate::arith::poly::VarSet;
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};
use crate::gnla;

/// Named bracket `[a, b] = Σ c·e`.
pub type NamedBracket<'a, F> = (&'a str, &'a str, Vec<(&'a str, F)>);

pub fn from_named<F: Field>(names: &[&str], brackets: &[NamedBracket<'_, F>]) -> Result<LieAlgebra<F>> {
    let idx = |s: &str| names.iter().position(|n| *n == s).ok_or_else(|| Error::UnknownVariable(s.to_string()));
    let n = names.len();
    let mut list = Vec::new();
    for (a, b, v) in brackets {
        let mut e = vec![F::zero(); n];
        for (c, x) in v {
            let k = idx(c)?;
            e[k] = e[k].plus(x);
        }
        list.push((idx(a)?, idx(b)?, e));
    }
    LieAlgebra::from_brackets(names.iter().map(|s| s.to_string()).collect(), &list)
}

/// A parameter as an element of ℚ(name).
pub fn parameter(name: &str) -> RationalFunction {
    RationalFunction::var(&VarSet::new(&[name]), 0)
}

fn q(n: i64) -> RationalFunction {
    RationalFunction::constant(Rational::from_int(n))
}

fn qr(a: i64, b: i64) -> RationalFunction {
    RationalFunction::constant(Rational::new(a, b))
}

fn diag<F: Field>(d: &[F]) -> Vec<Vec<F>> {
    let n = d.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { d[i].clone() } else { F::zero() }).collect()).collect()
}

/// Permutes basis elements into the order given by `names`.
pub fn reorder<F: Field>(l: &LieAlgebra<F>, names: &[&str]) -> Result<LieAlgebra<F>> {
    let p = names
        .iter()
        .map(|s| l.index(s).map(|i| l.unit(i)).ok_or_else(|| Error::UnknownVariable(s.to_string())))
        .collect::<Result<Vec<_>>>()?;
    l.change_basis(&p, names.iter().map(|s| s.to_string()).collect())
}

pub fn sl2() -> LieAlgebra<Rational> {
    let r = Rational::from_int;
    from_named(
        &["e", "h", "f"],
        &[("h", "e", vec![("e", r(2))]), ("h", "f", vec![("f", r(-2))]), ("e", "f", vec![("h", r(1))])],
    )
    .unwrap()
}

pub fn heisenberg(dim: usize) -> Result<LieAlgebra<Rational>> {
    Ok(gnla::heisenberg(dim)?.to_lie_algebra())
}

/// Seven-dimensional algebra in the Cartan basis X1..X5, Y1, Y2 with
/// parameter `i` (a constant or a symbol).
pub fn cartan7(i: RationalFunction) -> LieAlgebra<RationalFunction> {
    let one = q(1);
    from_named(
        &["X1", "X2", "X3", "X4", "X5", "Y1", "Y2"],
        &[
            ("X1", "Y1", vec![("X1", q(2))]),
            ("X2", "Y2", vec![("X1", one.clone())]),
            ("X3", "X4", vec![("X1", one.clone())]),
            ("X2", "Y1", vec![("X2", one.clone())]),
            ("X3", "Y1", vec![("X3", one.clone())]),
            ("X4", "Y1", vec![("X4", one.clone())]),
            ("Y2", "Y1", vec![("Y2", one.clone())]),
            ("X2", "X5", vec![("X3", i.clone()), ("Y2", one.clone())]),
            ("X3", "X5", vec![("X2", one.clone()), ("X4", qr(4, 3).mul(&i))]),
            ("X4", "X5", vec![("X3", one.clone()), ("Y2", i.neg())]),
            ("X5", "Y2", vec![("X4", one)]),
        ],
    )
    .unwrap()
}

/// h̃ = Heisenberg ⟨W1, W2, W5, W7 | W3⟩ plus the grading element W4, in
/// the basis order W1, W2, W3, W5, W7, W4.
pub fn w7_base(m: &RationalFunction) -> Result<LieAlgebra<RationalFunction>> {
    let inv_m = m.inv().ok_or_else(|| Error::Invalid("m must be nonzero".into()))?;
    let h = from_named(
        &["W1", "W2", "W3", "W5", "W7"],
        &[("W1", "W5", vec![("W3", q(1))]), ("W2", "W7", vec![("W3", inv_m.neg())])],
    )?;
    // ad(W4) = k on degree k, with W3 in degree -2
    h.extend_by_derivation(&diag(&[q(-1), q(-1), q(-2), q(-1), q(-1)]), "W4")
}

/// −ad(W6) = m W2⊗θ2 + W3⊗θ3 + W5⊗θ5 + (1−m) W7⊗θ7 on `w7_base`.
pub fn w7_derivation(m: &RationalFunction) -> Vec<Vec<RationalFunction>> {
    let neg = |x: RationalFunction| x.neg();
    diag(&[q(0), neg(m.clone()), q(-1), q(-1), neg(q(1).sub(m)), q(0)])
}

/// The 7-dimensional symmetry algebra of y' = (z'')^m in the basis W1..W7,
/// built as a double extension of the Heisenberg algebra.
pub fn w7(m: RationalFunction) -> Result<LieAlgebra<RationalFunction>> {
    let g = w7_base(&m)?.extend_by_derivation(&w7_derivation(&m), "W6")?;
    reorder(&g, &["W1", "W2", "W3", "W4", "W5", "W6", "W7"])
}

/// ad(W6 − ½W4) for the exceptional value m = ½:
/// −A = ½W5⊗θ5 − ½W1⊗θ1 + ½W2⊗θ7 (on `w7_base` order, zero on W3, W4).
pub fn w7_half_operator() -> Vec<Vec<RationalFunction>> {
    let mut a = vec![vec![q(0); 6]; 6];
    // columns: W1, W2, W3, W5, W7, W4
    a[0][0] = qr(1, 2);
    a[3][3] = qr(-1, 2);
    a[1][4] = qr(-1, 2);
    a
}

/// The m = ½ algebra: h̃ extended by the operator above, basis W1..W5, W7, W6'
/// where W6' stands for W6 − ½W4.
pub fn w7_half() -> Result<LieAlgebra<RationalFunction>> {
    let g = w7_base(&qr(1, 2))?.extend_by_derivation(&w7_half_operator(), "W6'")?;
    reorder(&g, &["W1", "W2", "W3", "W4", "W5", "W6'", "W7"])
}

/// The Heisenberg algebra on ⟨W3, W5, W6, W7, W8, W9 | W2⟩ plus its grading
/// element W4, in the order W2, W3, W5, W6, W7, W8, W9, W4.
pub fn submax9_base(eps: &RationalFunction) -> Result<LieAlgebra<RationalFunction>> {
    let e2 = eps.mul(eps);
    let e5 = e2.mul(&e2).mul(eps);
    let h = from_named(
        &["W2", "W3", "W5", "W6", "W7", "W8", "W9"],
        &[
            ("W3", "W7", vec![("W2", e2.scale(&Rational::from_int(-2)))]),
            ("W5", "W6", vec![("W2", e2.scale(&Rational::from_int(2)))]),
            ("W6", "W7", vec![("W2", q(2))]),
            ("W8", "W9", vec![("W2", e5.scale(&Rational::from_int(-4)))]),
        ],
    )?;
    // ad(W4) = k on degree k, W2 in degree -2; the fields force negative degrees
    h.extend_by_derivation(&diag(&[q(-2), q(-1), q(-1), q(-1), q(-1), q(-1), q(-1)]), "W4")
}

/// ad(W1) = W3⊗θ5 + W5⊗θ6 + W6⊗θ7 − εW8⊗θ8 + εW9⊗θ9 on `submax9_base`.
pub fn submax9_derivation(eps: &RationalFunction) -> Vec<Vec<RationalFunction>> {
    let mut d = vec![vec![q(0); 8]; 8];
    d[1][2] = q(1);
    d[2][3] = q(1);
    d[3][4] = q(1);
    d[5][5] = eps.neg();
    d[6][6] = eps.clone();
    d
}

/// Nine-dimensional algebra with parameter ε, basis W1..W9.
pub fn submax9(eps: RationalFunction) -> Result<LieAlgebra<RationalFunction>> {
    let g = submax9_base(&eps)?.extend_by_derivation(&submax9_derivation(&eps), "W1")?;
    reorder(&g, &["W1", "W2", "W3", "W4", "W5", "W6", "W7", "W8", "W9"])
}

/// The graded 11-dimensional algebra with negative part of growth (2,3,5,6),
/// basis ordered by degree -4..1.
pub fn graded2356() -> LieAlgebra<Rational> {
    let names = ["Z0", "Y0", "Z1", "Z2", "S0", "Z3", "S1", "R", "Z4", "S2", "Z5"];
    let z: Vec<String> = (0..6).map(|i| alloc::format!("Z{i}")).collect();
    let r = |a: i64, b: i64| Rational::new(a, b);
    type Owned = (String, String, Vec<(String, Rational)>);
    let mut br: Vec<Owned> = vec![
        ("S0".into(), "S1".into(), vec![("S0".into(), r(1, 1))]),
        ("S0".into(), "S2".into(), vec![("S1".into(), r(2, 1))]),
        ("S1".into(), "S2".into(), vec![("S2".into(), r(1, 1))]),
        ("Z0".into(), "Z5".into(), vec![("Y0".into(), r(2, 1))]),
        ("Z1".into(), "Z4".into(), vec![("Y0".into(), r(-2, 1))]),
        ("Z2".into(), "Z3".into(), vec![("Y0".into(), r(2, 1))]),
        ("Y0".into(), "R".into(), vec![("Y0".into(), r(1, 1))]),
    ];
    for i in 0..6i64 {
        let zi = z[i as usize].clone();
        if i > 0 {
            br.push(("S0".into(), zi.clone(), vec![(z[i as usize - 1].clone(), r(1, 1))]));
        }
        br.push(("S1".into(), zi.clone(), vec![(zi.clone(), r(2 * i - 5, 2))]));
        if i < 5 {
            br.push(("S2".into(), zi.clone(), vec![(z[i as usize + 1].clone(), r((i + 1) * (i - 5), 1))]));
        }
        br.push((zi.clone(), "R".into(), vec![(zi, r(1, 2))]));
    }
    let br: Vec<NamedBracket<'_, Rational>> = br
        .iter()
        .map(|(a, b, v)| (a.as_str(), b.as_str(), v.iter().map(|(c, x)| (c.as_str(), x.clone())).collect()))
        .collect();
    from_named(&names, &br).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_satisfy_jacobi_symbolically() {
        assert!(sl2().is_lie_algebra());
        assert!(heisenberg(5).unwrap().is_lie_algebra());
        assert!(cartan7(parameter("I")).is_lie_algebra());
        assert!(w7(parameter("m")).unwrap().is_lie_algebra());
        assert!(w7_half().unwrap().is_lie_algebra());
        assert!(submax9(parameter("eps")).unwrap().is_lie_algebra());
        assert!(graded2356().is_lie_algebra());
    }

    #[test]
    fn series_fingerprints() {
        let w = w7(RationalFunction::constant(Rational::from_int(3))).unwrap();
        assert_eq!(w.derived_series(), vec![7, 5, 1, 0]);
        let s = submax9(q(1)).unwrap();
        assert_eq!(s.derived_series(), vec![9, 7, 1, 0]);
        let h = heisenberg(5).unwrap();
        assert_eq!((h.derived_series(), h.center_dim()), (vec![5, 1, 0], 1));
    }

    #[test]
    fn graded2356_levi_pieces() {
        let g = graded2356();
        let idx = |s: &str| g.index(s).unwrap();
        let rad: Vec<Vec<Rational>> = ["R", "Y0", "Z0", "Z1", "Z2", "Z3", "Z4", "Z5"].iter().map(|s| g.unit(idx(s))).collect();
        // the radical part is an ideal
        let all = g.whole();
        let br = g.bracket_span(&all, &rad);
        let mut both = rad.clone();
        both.extend(br);
        assert_eq!(crate::arith::linalg::rank_of_vectors(&both), 8);
        // and solvable
        let mut cur = rad;
        for _ in 0..8 {
            cur = g.bracket_span(&cur, &cur);
        }
        assert!(cur.is_empty());
        assert_eq!(g.derived_subalgebra().len(), 10);
    }
}
