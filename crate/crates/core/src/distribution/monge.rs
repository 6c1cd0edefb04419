//! Monge equations y' = F(x, y, z, z₁, …, z_n) and their rank-2 distributions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::vector_field::VectorField;
use super::Distribution;
use crate::arith::expfun::ExpFunction;
use crate::arith::poly::{Polynomial, VarSet};
use crate::arith::rational::Rational;
use crate::error::{Error, Result};
use crate::expr::parse_exp_function;

/// Coordinates (x, y, z, z1, …, zn).
pub fn monge_vars(n: usize) -> VarSet {
    let mut names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
    names.extend((1..=n).map(|i| format!("z{i}")));
    VarSet::new(&names)
}

/// index of z_i, with z_0 = z
fn zi(i: usize) -> usize {
    2 + i
}

#[derive(Clone, Debug)]
pub struct MongeEquation {
    n: usize,
    f: ExpFunction,
}

impl MongeEquation {
    pub fn new(n: usize, f: ExpFunction) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("Monge equations need order at least 1".into()));
        }
        let vars = monge_vars(n);
        if let Some(bad) = f.vars().names().iter().find(|v| vars.index(v).is_none()) {
            return Err(Error::UnknownVariable(bad.clone()));
        }
        Ok(MongeEquation { n, f: f.embed(&vars) })
    }

    pub fn parse(n: usize, f: &str, params: &[(&str, Rational)]) -> Result<Self> {
        Self::new(n, parse_exp_function(f, &monge_vars(n), params)?)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rhs(&self) -> &ExpFunction {
        &self.f
    }

    pub fn vars(&self) -> VarSet {
        monge_vars(self.n)
    }
}

/// ⟨D_x = ∂x + Σ z_{i+1}∂z_i + F∂y, ∂z_n⟩.
pub fn monge_distribution(eq: &MongeEquation) -> Distribution {
    let vars = eq.vars();
    let n = eq.n;
    let mut dx = vec![ExpFunction::zero(&vars); vars.len()];
    dx[0] = ExpFunction::constant(&vars, Rational::one());
    dx[1] = eq.f.clone();
    for i in 0..n {
        dx[zi(i)] = ExpFunction::from_polynomial(Polynomial::var(&vars, zi(i + 1)));
    }
    let dx = VectorField::new(&vars, dx).unwrap();
    let top = VectorField::coordinate(&vars, zi(n));
    Distribution::new(&vars, vec![dx, top]).unwrap()
}

/// y' = (z'')².
pub fn hilbert_cartan() -> MongeEquation {
    power(2, 2).unwrap()
}

/// y' = (z^{(n)})^m for a non-negative integer m.
pub fn power(m: u32, n: usize) -> Result<MongeEquation> {
    MongeEquation::parse(n, &format!("z{n}^{m}"), &[])
}

/// y' = (z^{(n)})² + ε (z^{(j)})².
pub fn perturbed(n: usize, j: usize, eps: Rational) -> Result<MongeEquation> {
    if j > n {
        return Err(Error::Invalid(format!("perturbation order {j} exceeds {n}")));
    }
    let zj = if j == 0 { "z".into() } else { format!("z{j}") };
    MongeEquation::parse(n, &format!("z{n}^2 + e*{zj}^2"), &[("e", eps)])
}

fn parse_fields(vars: &VarSet, rows: &[Vec<String>], params: &[(&str, Rational)]) -> Result<Vec<VectorField>> {
    rows.iter()
        .map(|r| {
            let cs = r.iter().map(|c| parse_exp_function(c, vars, params)).collect::<Result<Vec<_>>>()?;
            VectorField::new(vars, cs)
        })
        .collect()
}

fn row(cs: &[&str]) -> Vec<String> {
    cs.iter().map(|s| String::from(*s)).collect()
}

/// Seven symmetries of y' = (z'')^m for an integer m ≥ 2, in the order
/// W1, …, W7.  Coordinates (x, y, z, z1, z2).
pub fn power_symmetries(m: i64) -> Result<Vec<VectorField>> {
    if m < 2 {
        return Err(Error::Unsupported(format!("m = {m}; only integers m ≥ 2 keep the coefficients polynomial")));
    }
    let vars = monge_vars(2);
    let w7 = vec![
        format!("z2^{}", m - 1),
        // (m-1) ∫ z2^(2m-2) dz2
        format!("{}/{} * z2^{}", m - 1, 2 * m - 1, 2 * m - 1),
        format!("z1*z2^{} - y/{m}", m - 1),
        format!("(1 - 1/{m})*z2^{m}"),
        "0".into(),
    ];
    let rows = vec![
        row(&["1", "0", "0", "0", "0"]),
        row(&["0", "1", "0", "0", "0"]),
        row(&["0", "0", "1", "0", "0"]),
        row(&["x", "y", "2*z", "z1", "0"]),
        row(&["0", "0", "x", "1", "0"]),
        vec!["0".into(), format!("{m}*y"), "z".into(), "z1".into(), "z2".into()],
        w7,
    ];
    parse_fields(&vars, &rows, &[])
}

/// Nine symmetries of y' = (z''')² + ε²(z'')², W1, …, W9, for rational ε ≠ 0.
/// The matching equation is `perturbed(3, 2, ε²)`.
pub fn submax9_symmetries(eps: Rational) -> Result<Vec<VectorField>> {
    if eps.is_zero() {
        return Err(Error::Invalid("ε must be nonzero".into()));
    }
    let vars = monge_vars(3);
    let rows = vec![
        row(&["1", "0", "0", "0", "0", "0"]),
        row(&["0", "1", "0", "0", "0", "0"]),
        row(&["0", "0", "1", "0", "0", "0"]),
        row(&["0", "2*y", "z", "z1", "z2", "z3"]),
        row(&["0", "0", "x", "1", "0", "0"]),
        row(&["0", "2*e^2*z1", "x^2/2", "x", "1", "0"]),
        row(&["0", "2*(z2 + e^2*(x*z1 - z))", "x^3/6", "x^2/2", "x", "1"]),
        row(&["0", "exp(-e*x)*2*e^3*z2", "-exp(-e*x)", "exp(-e*x)*e", "-exp(-e*x)*e^2", "exp(-e*x)*e^3"]),
        row(&["0", "exp(e*x)*2*e^3*z2", "exp(e*x)", "exp(e*x)*e", "exp(e*x)*e^2", "exp(e*x)*e^3"]),
    ];
    parse_fields(&vars, &rows, &[("e", eps)])
}

/// 2n+3 symmetries of y' = (z^{(n)})² + δ²(z^{(n-1)})², n ≥ 2, δ ≠ 0.
///
/// Each solution φ(x) of φ^{(2n)} = δ² φ^{(2n-2)} gives
/// V_φ = Ψ∂y + Σ_i φ^{(i)} ∂z_i with Ψ = 2 Σ_a c_a Σ_{i<a} (-1)^i z_{a-1-i} φ^{(a+i)},
/// where c_n = 1, c_{n-1} = δ².  The remaining three are ∂x, ∂y and the
/// scaling 2y∂y + Σ z_i∂z_i.  The matching equation is `perturbed(n, n-1, δ²)`.
pub fn el_shift_symmetries(n: usize, delta: Rational) -> Result<Vec<VectorField>> {
    if n < 2 || delta.is_zero() {
        return Err(Error::Invalid("need n ≥ 2 and δ ≠ 0".into()));
    }
    let vars = monge_vars(n);
    let dim = vars.len();
    let mut sols: Vec<ExpFunction> = (0..(2 * n - 2))
        .map(|k| {
            let mut e = vec![0u16; dim];
            e[0] = k as u16;
            ExpFunction::from_polynomial(Polynomial::monomial(&vars, &e, Rational::one()))
        })
        .collect();
    for s in [Rational::one(), -Rational::one()] {
        let mut lam = vec![Rational::zero(); dim];
        lam[0] = &s * &delta;
        sols.push(ExpFunction::term(&vars, lam, Polynomial::one(&vars).into()));
    }
    let c = |a: usize| {
        if a == n {
            Rational::one()
        } else if a + 1 == n {
            &delta * &delta
        } else {
            Rational::zero()
        }
    };
    let mut out = vec![VectorField::coordinate(&vars, 0), VectorField::coordinate(&vars, 1)];
    let mut scaling = vec![ExpFunction::zero(&vars); dim];
    scaling[1] = ExpFunction::from_polynomial(Polynomial::var(&vars, 1).scale(&Rational::from_int(2)));
    for i in 0..=n {
        scaling[zi(i)] = ExpFunction::from_polynomial(Polynomial::var(&vars, zi(i)));
    }
    out.push(VectorField::new(&vars, scaling)?);
    for phi in sols {
        let mut ders = vec![phi];
        for _ in 0..(2 * n) {
            let d = ders.last().unwrap().derivative(0);
            ders.push(d);
        }
        let mut psi = ExpFunction::zero(&vars);
        for a in (n - 1)..=n {
            for i in 0..a {
                let zv = ExpFunction::from_polynomial(Polynomial::var(&vars, zi(a - 1 - i)));
                let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
                psi = psi.add(&zv.mul(&ders[a + i]).scale(&(&sign * &c(a))));
            }
        }
        let mut cs = vec![ExpFunction::zero(&vars); dim];
        cs[1] = psi.scale(&Rational::from_int(2));
        for i in 0..=n {
            cs[zi(i)] = ders[i].clone();
        }
        out.push(VectorField::new(&vars, cs)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::symmetry::{annihilator, is_symmetry_with, structure_constants};
    use super::super::{derived_flag, symbol_at_point, Saturation};
    use super::*;
    use crate::arith::linalg::rank_of_vectors;
    use crate::arith::ratfun::RationalFunction;
    use crate::expr::parse_rational_function;

    #[test]
    fn hilbert_cartan_bracket() {
        let d = monge_distribution(&hilbert_cartan());
        let g = d.generators();
        let b = super::super::lie_bracket(&g[1], &g[0]).unwrap();
        let v = d.vars();
        let expect = VectorField::new(
            v,
            ["0", "2*z2", "0", "1", "0"].iter().map(|c| parse_exp_function(c, v, &[]).unwrap()).collect(),
        )
        .unwrap();
        assert_eq!(b, expect);
    }

    #[test]
    fn growth_vectors() {
        assert_eq!(derived_flag(&monge_distribution(&hilbert_cartan()), None, 1).unwrap().dims, vec![2, 3, 5]);
        assert_eq!(derived_flag(&monge_distribution(&power(2, 3).unwrap()), None, 1).unwrap().dims, vec![2, 3, 5, 6]);
        let e = derived_flag(&monge_distribution(&power(1, 2).unwrap()), None, 1).unwrap();
        assert_eq!(e.dims, vec![2, 3, 4, 4]);
        assert_eq!(e.saturation, Saturation::Stabilized);
        let (s, _) = symbol_at_point(&monge_distribution(&power(2, 3).unwrap()), None, 2).unwrap();
        assert_eq!(s.dims(), vec![2, 1, 2, 1]);
        assert!(s.validate().is_valid());
    }

    #[test]
    fn pfaffian_system() {
        let eq = MongeEquation::parse(2, "x*y + z2^2", &[]).unwrap();
        let d = monge_distribution(&eq);
        let forms = annihilator(&d).unwrap();
        assert_eq!(forms.len(), 3);
        let v = d.vars();
        let p = |s: &str| parse_rational_function(s, v).unwrap();
        let listed: Vec<Vec<RationalFunction>> = vec![
            vec![p("-z1"), p("0"), p("1"), p("0"), p("0")],
            vec![p("-z2"), p("0"), p("0"), p("1"), p("0")],
            vec![p("-(x*y + z2^2)"), p("1"), p("0"), p("0"), p("0")],
        ];
        let mut all: Vec<Vec<RationalFunction>> = forms.iter().map(|w| w.coeffs().to_vec()).collect();
        all.extend(listed);
        assert_eq!(rank_of_vectors(&all), 3);
    }

    #[test]
    fn power_fields_are_symmetries() {
        let d = monge_distribution(&power(3, 2).unwrap());
        let forms = annihilator(&d).unwrap();
        for w in power_symmetries(3).unwrap() {
            assert!(is_symmetry_with(&w, &d, &forms).unwrap(), "{w}");
        }
        let dz1 = VectorField::coordinate(d.vars(), 3);
        let hc = monge_distribution(&hilbert_cartan());
        assert!(!is_symmetry_with(&dz1, &hc, &annihilator(&hc).unwrap()).unwrap());
        let l = structure_constants(&power_symmetries(3).unwrap()).unwrap();
        assert_eq!(l.derived_series(), vec![7, 5, 1, 0]);
    }

    #[test]
    fn submax9_fields_are_symmetries() {
        let d = monge_distribution(&perturbed(3, 2, Rational::one()).unwrap());
        let forms = annihilator(&d).unwrap();
        let ws = submax9_symmetries(Rational::one()).unwrap();
        for w in &ws {
            assert!(is_symmetry_with(w, &d, &forms).unwrap(), "{w}");
        }
        let l = structure_constants(&ws).unwrap();
        assert_eq!(l.derived_series(), vec![9, 7, 1, 0]);
    }

    #[test]
    fn el_shift_matches_listed_fields() {
        let half = Rational::new(1, 2);
        let d3 = monge_distribution(&perturbed(3, 2, Rational::new(1, 4)).unwrap());
        let forms3 = annihilator(&d3).unwrap();
        let ws = submax9_symmetries(half.clone()).unwrap();
        let el = el_shift_symmetries(3, half).unwrap();
        for w in ws.iter().chain(&el) {
            assert!(is_symmetry_with(w, &d3, &forms3).unwrap(), "{w}");
        }
        assert_eq!(structure_constants(&el).unwrap().dim(), 9);
        let d = monge_distribution(&perturbed(4, 3, Rational::from_int(4)).unwrap());
        let forms = annihilator(&d).unwrap();
        let el4 = el_shift_symmetries(4, Rational::from_int(2)).unwrap();
        assert_eq!(el4.len(), 11);
        for w in &el4 {
            assert!(is_symmetry_with(w, &d, &forms).unwrap(), "{w}");
        }
        assert_eq!(structure_constants(&el4).unwrap().dim(), 11);
    }
}
