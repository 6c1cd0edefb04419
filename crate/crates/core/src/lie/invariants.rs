//! Symbolic checks on the invariants of the 7-dimensional family.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::algebra::{Element, LieAlgebra};
use super::presets::{cartan7, parameter, w7, w7_half};
use super::spectrum::{ad_spectrum_invariants, grading_by_endomorphism, SpectrumInvariants};
use crate::arith::field::Field;
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

fn c(a: i64, b: i64) -> RationalFunction {
    RationalFunction::constant(Rational::new(a, b))
}

fn units<F: Field>(l: &LieAlgebra<F>, names: &[&str]) -> Vec<Element<F>> {
    names.iter().map(|s| l.unit(l.index(s).expect("preset basis name"))).collect()
}

/// A = ad(W6 − ½W4) and the degree −1 part ⟨W1, W2, W5, W7⟩.
pub fn w7_operator(l: &LieAlgebra<RationalFunction>) -> (Vec<Vec<RationalFunction>>, Vec<Element<RationalFunction>>) {
    let mut z = l.unit(l.index("W6").unwrap());
    z[l.index("W4").unwrap()] = c(-1, 2);
    (l.ad(&z), units(l, &["W1", "W2", "W5", "W7"]))
}

/// Trace invariants of A on the degree −1 part of w7(m), m symbolic or not.
pub fn w7_spectrum(m: RationalFunction) -> Result<SpectrumInvariants<RationalFunction>> {
    let l = w7(m)?;
    let (a, h1) = w7_operator(&l);
    ad_spectrum_invariants(&l, &a, &h1)
}

/// (1−2m)² / (1−2m+2m²)²
pub fn j_closed_form(m: &RationalFunction) -> RationalFunction {
    let one = c(1, 1);
    let a = one.sub(&m.scale(&Rational::from_int(2)));
    let b = one.sub(&m.scale(&Rational::from_int(2))).add(&m.mul(m).scale(&Rational::from_int(2)));
    a.mul(&a).div(&b.mul(&b)).expect("1-2m+2m^2 has no rational zero")
}

/// I² = (k²+1)² / ((k²−9)(1/9−k²))
pub fn i_squared(k: &RationalFunction) -> RationalFunction {
    let k2 = k.mul(k);
    let num = k2.add(&c(1, 1)).pow(2);
    let den = k2.sub(&c(9, 1)).mul(&c(1, 9).sub(&k2));
    num.div(&den).expect("nonzero denominator")
}

/// (9/25)(1 + I⁻²)
pub fn j_from_i_squared(i2: &RationalFunction) -> RationalFunction {
    c(9, 25).mul(&c(1, 1).add(&i2.inv().expect("I² ≠ 0")))
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport {
    pub convention: String,
    pub checks: Vec<IdentityCheck>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn residual_check(name: &str, lhs: &RationalFunction, rhs: &RationalFunction) -> IdentityCheck {
    let r = lhs.sub(rhs);
    IdentityCheck { name: name.into(), passed: r.is_zero(), detail: format!("residual {r}") }
}

pub fn verify_invariant_relations() -> Result<InvariantReport> {
    let m = parameter("m");
    let k = parameter("k");
    let mut checks = Vec::new();

    let s = w7_spectrum(m.clone())?;
    checks.push(residual_check("J(m) from traces = (1-2m)^2/(1-2m+2m^2)^2", &s.j, &j_closed_form(&m)));

    // det(t − A) = (t² − ¼)(t² − (½ − m)²)
    let b2 = c(1, 2).sub(&m).pow(2);
    let expected = [b2.mul(&c(1, 4)), c(0, 1), c(-1, 4).sub(&b2), c(0, 1), c(1, 1)];
    let diff: Vec<RationalFunction> = s.charpoly.iter().zip(&expected).map(|(a, b)| a.sub(b)).collect();
    checks.push(IdentityCheck {
        name: "charpoly of A on degree -1 = (t^2-1/4)(t^2-(1/2-m)^2)".into(),
        passed: s.charpoly.len() == 5 && diff.iter().all(|d| d.is_zero()),
        detail: format!("coefficients {:?}", s.charpoly.iter().map(|x| format!("{x}")).collect::<Vec<_>>()),
    });

    // m = (k+1)/2
    let m_of_k = k.add(&c(1, 1)).mul(&c(1, 2));
    let j_k = j_closed_form(&m).compose(&[m_of_k])?;
    let i2 = i_squared(&k);
    checks.push(residual_check("J = (9/25)(1 + I^-2) under k = 2m-1", &j_k, &j_from_i_squared(&i2)));
    checks.push(residual_check("I^2(k) = I^2(1/k)", &i2, &i2.compose(&[k.inv().unwrap()])?));
    checks.push(residual_check("I^2(k) = I^2(-k)", &i2, &i2.compose(&[k.neg()])?));

    let poles = [Rational::from_int(3), Rational::from_int(-3), Rational::new(1, 3), Rational::new(-1, 3)];
    let den = RationalFunction::from_polynomial(i2.denom().clone());
    let num = RationalFunction::from_polynomial(i2.numer().clone());
    let at = |f: &RationalFunction, x: &Rational| f.evaluate(core::slice::from_ref(x));
    let pole_ok = poles.iter().all(|x| at(&den, x).map(|v| v.is_zero()).unwrap_or(false) && at(&num, x).map(|v| !v.is_zero()).unwrap_or(false));
    checks.push(IdentityCheck {
        name: "poles of I^2 at k = ±3, ±1/3".into(),
        passed: pole_ok && den.numer().total_degree() == 4,
        detail: format!("denominator {den}"),
    });

    // m = ½: A has a Jordan block
    let half = w7_half()?;
    let h1 = units(&half, &["W1", "W2", "W5", "W7"]);
    let a = half.ad(&half.unit(half.index("W6'").unwrap()));
    let jordan = matches!(grading_by_endomorphism(&half, &a, Some(&h1)), Err(Error::NotDiagonalizable(_)));
    checks.push(IdentityCheck {
        name: "A is not semisimple at m = 1/2".into(),
        passed: jordan,
        detail: "eigenvalue 0 has a 2x2 Jordan block on <W2, W7>".into(),
    });

    // Cartan basis: ad(X5) on ⟨X2, X3, X4, Y2⟩
    let i = parameter("I");
    let cl = cartan7(i.clone());
    let x5 = cl.unit(cl.index("X5").unwrap());
    let cs = ad_spectrum_invariants(&cl, &cl.ad(&x5), &units(&cl, &["X2", "X3", "X4", "Y2"]))?;
    checks.push(residual_check("J of ad(X5) in the Cartan basis = (9/25)(1 + I^-2)", &cs.j, &j_from_i_squared(&i.mul(&i))));

    Ok(InvariantReport { convention: "negative grading: ad(W4) = k on the degree k part, W3 in degree -2".into(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_case_numbers() {
        let s = w7_spectrum(c(3, 1)).unwrap();
        assert_eq!(s.j.constant_value(), Some(Rational::new(25, 169)));
        assert_eq!(j_closed_form(&c(3, 1)).constant_value(), Some(Rational::new(25, 169)));
    }

    #[test]
    fn all_relations_hold() {
        let r = verify_invariant_relations().unwrap();
        for ch in &r.checks {
            assert!(ch.passed, "{}: {}", ch.name, ch.detail);
        }
    }
}
