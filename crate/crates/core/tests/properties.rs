use proptest::prelude::*;

use lacune_core::arith::expfun::ExpFunction;
use lacune_core::arith::linalg::{kernel_basis, rank, ExactMatrix};
use lacune_core::arith::poly::{Polynomial, VarSet};
use lacune_core::arith::ratfun::RationalFunction;
use lacune_core::arith::rational::Rational;
use lacune_core::expr::{parse_exp_function, parse_polynomial, parse_rational, parse_rational_function};
use lacune_core::integrals::{poisson_bracket, MomentumPolynomial};
use lacune_core::symbols::{prolong, SymbolSpace};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| Rational::new(a, b))
}

fn polynomial(vars: VarSet, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    prop::collection::vec((prop::collection::vec(0u16..3, n), rational()), 0..=max_terms)
        .prop_map(move |ts| ts.into_iter().fold(Polynomial::zero(&vars), |acc, (e, c)| acc.add(&Polynomial::monomial(&vars, &e, c))))
}

fn xy() -> VarSet {
    VarSet::new(&["x", "y"])
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (polynomial(xy(), 3), polynomial(xy(), 2)).prop_map(|(n, d)| {
        let d = if d.is_zero() { Polynomial::one(&xy()) } else { d };
        RationalFunction::new(n, d)
    })
}

fn expfun() -> impl Strategy<Value = ExpFunction> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, 2), ratfun()), 0..3).prop_map(|ts| {
        ts.into_iter().fold(ExpFunction::zero(&xy()), |acc, (f, c)| {
            acc.add(&ExpFunction::term(&xy(), f.into_iter().map(Rational::from_int).collect(), c))
        })
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
        // small entries with many zeros so that rank drops happen
        prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(Rational::zero()), 2 => rational()], c), r)
    })
}

fn momentum(vars: VarSet) -> impl Strategy<Value = MomentumPolynomial> {
    let v2 = vars.clone();
    prop::collection::vec((prop::collection::vec(0u16..3, 2), polynomial(vars, 2)), 0..3).prop_map(move |ts| {
        ts.into_iter().fold(MomentumPolynomial::zero(&v2), |acc, (a, c)| {
            acc.add(&MomentumPolynomial::monomial(&v2, &a, RationalFunction::from_polynomial(c)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(rows in matrix()) {
        let m = ExactMatrix::from_dense(&rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.ncols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn mixed_partials_commute(f in ratfun(), g in expfun()) {
        prop_assert_eq!(f.derivative(0).derivative(1), f.derivative(1).derivative(0));
        prop_assert_eq!(g.derivative(0).derivative(1), g.derivative(1).derivative(0));
    }

    #[test]
    fn printed_forms_parse_back(q in rational(), p in polynomial(xy(), 4), f in ratfun(), e in expfun(), rows in matrix()) {
        prop_assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
        prop_assert_eq!(parse_polynomial(&p.to_string(), &xy()).unwrap(), p);
        prop_assert_eq!(parse_rational_function(&f.to_string(), &xy()).unwrap(), f);
        prop_assert_eq!(parse_exp_function(&e.to_string(), &xy(), &[]).unwrap(), e);
        let printed: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let back: Vec<Vec<Rational>> = printed.iter().map(|r| r.iter().map(|s| parse_rational(s).unwrap()).collect()).collect();
        prop_assert_eq!(ExactMatrix::from_dense(&back).to_dense(), ExactMatrix::from_dense(&rows).to_dense());
    }

    #[test]
    fn poisson_bracket_is_a_lie_bracket(
        a in momentum(xy()),
        b in momentum(xy()),
        c in momentum(xy()),
    ) {
        let ab = poisson_bracket(&a, &b).unwrap();
        prop_assert!(ab.add(&poisson_bracket(&b, &a).unwrap()).is_zero());
        let jac = poisson_bracket(&a, &poisson_bracket(&b, &c).unwrap()).unwrap()
            .add(&poisson_bracket(&b, &poisson_bracket(&c, &a).unwrap()).unwrap())
            .add(&poisson_bracket(&c, &ab).unwrap());
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn prolongation_is_bounded_by_contractions(
        (n, w, k, picks) in (1usize..4, 1usize..3, 1u32..3).prop_flat_map(|(n, w, k)| {
            let amb = SymbolSpace::ambient_dim(n, w, k);
            (Just(n), Just(w), Just(k), prop::collection::vec(prop::collection::vec(-2i64..=2, amb), 1..4))
        })
    ) {
        let basis: Vec<Vec<Rational>> = picks.iter().map(|v| v.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        // dependent picks are rejected by the constructor; skip those
        if let Ok(g) = SymbolSpace::new(n, w, k, basis) {
            let p = prolong(&g);
            prop_assert!(p.dim() <= g.dim() * n);
            prop_assert_eq!(p.k, k + 1);
        }
    }
}

#[test]
fn full_symbol_spaces_prolong_to_full_spaces() {
    for n in 1..=3 {
        for w in 1..=2 {
            for k in 1..=4 {
                let p = prolong(&SymbolSpace::full(n, w, k));
                assert_eq!(p.dim(), SymbolSpace::ambient_dim(n, w, k + 1), "n={n} w={w} k={k}");
            }
        }
    }
}
