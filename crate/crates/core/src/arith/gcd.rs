//! Multivariate polynomial gcd over ℚ.
//!
//! Recursive primitive polynomial remainder sequences. A polynomial is
//! viewed as univariate in its first occurring variable over the remaining
//! ones; contents are split off recursively before pseudo-remainder steps.

use alloc::vec::Vec;

use super::poly::{Exponents, Polynomial};
use super::rational::Rational;

/// Greatest common divisor, primitive over ℤ with positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (a, b) = Polynomial::align(a, b);
    gcd_rec(&a, &b)
}

fn is_monomial(p: &Polynomial) -> bool {
    p.nterms() == 1
}

fn monomial_gcd(m: &Polynomial, p: &Polynomial) -> Polynomial {
    let mut e: Exponents = m.terms()[0].0.clone();
    for (pe, _) in p.terms() {
        for (x, y) in e.iter_mut().zip(pe.iter()) {
            *x = (*x).min(*y);
        }
    }
    Polynomial::monomial(m.vars(), &e, Rational::one())
}

fn gcd_rec(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.vars());
    }
    if is_monomial(a) {
        return monomial_gcd(a, b);
    }
    if is_monomial(b) {
        return monomial_gcd(b, a);
    }
    if a == b {
        return a.primitive_part();
    }
    let nv = a.vars().len();
    let v = (0..nv).find(|&i| a.depends_on(i) || b.depends_on(i)).unwrap();
    if !a.depends_on(v) {
        return gcd_rec(a, &content_in(b, v));
    }
    if !b.depends_on(v) {
        return gcd_rec(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let gc = gcd_rec(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    loop {
        let r = pseudo_remainder(&f, &g, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            g = Polynomial::one(a.vars());
            break;
        }
        let r = primitive_in(&r, v);
        f = g;
        g = r;
    }
    let g = primitive_in(&g, v);
    g.mul(&gc).primitive_part()
}

/// Content with respect to `var`: the gcd of all coefficients in that variable.
pub fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let coeffs: Vec<Polynomial> = p.coefficients_in(var).into_iter().filter(|c| !c.is_zero()).collect();
    let mut g = Polynomial::zero(p.vars());
    for c in &coeffs {
        g = gcd_rec(&g, c);
        if g.is_constant() {
            return Polynomial::one(p.vars());
        }
    }
    g
}

fn primitive_in(p: &Polynomial, var: usize) -> Polynomial {
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides").primitive_part()
}

fn pseudo_remainder(f: &Polynomial, g: &Polynomial, var: usize) -> Polynomial {
    let dg = g.degree_in(var);
    let gc = g.coefficients_in(var);
    let lc = gc[dg as usize].clone();
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(var) >= dg {
        let dr = r.degree_in(var);
        let lr = r.coefficients_in(var)[dr as usize].clone();
        let mut shift: Exponents = smallvec::SmallVec::from_elem(0, f.vars().len());
        shift[var] = dr - dg;
        r = r.mul(&lc).sub(&lr.mul(g).mul_monomial(&shift, &Rational::one()));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::VarSet;
    use crate::expr::parse_polynomial;

    fn p(s: &str, v: &VarSet) -> Polynomial {
        parse_polynomial(s, v).unwrap()
    }

    #[test]
    fn recovers_planted_factor() {
        let v = VarSet::new(&["x", "y", "z"]);
        let g = p("x*y - z^2 + 3", &v);
        let a = g.mul(&p("x + y + 1", &v));
        let b = g.mul(&p("x - 2*z", &v));
        assert_eq!(gcd(&a, &b), g.primitive_part());
    }

    #[test]
    fn coprime_and_constants() {
        let v = VarSet::new(&["x", "y"]);
        assert!(gcd(&p("x^2 + y", &v), &p("x + y^2", &v)).is_one());
        assert!(gcd(&p("3", &v), &p("x", &v)).is_one());
        assert_eq!(gcd(&p("4*x^2*y", &v), &p("6*x*y^3 + 2*x^2", &v)), p("x", &v));
    }

    #[test]
    fn content_in_variable() {
        let v = VarSet::new(&["x", "y"]);
        let f = p("(y^2 - 1)*x^2 + (y - 1)*x", &v);
        assert_eq!(content_in(&f, 0), p("y - 1", &v));
    }
}
