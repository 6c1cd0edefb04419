use lacune_core::arith::poly::binomial;
use lacune_core::arith::rational::Rational;
use lacune_core::expr::parse_rational_function;
use lacune_core::integrals::jets::DEFAULT_EXTRA_ORDERS;
use lacune_core::integrals::metric::metric_vars;
use lacune_core::integrals::{
    flat, geodesic_hamiltonian, integral_dimension, linear_factor, warped_product, poisson_bracket, MomentumPolynomial,
};
use lacune_core::symbols::{dimension_bound, killing_symbol, prolongation_sequence, DEFAULT_CAP};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Momentum polynomial from (coefficient, exponents) pairs.
fn mp(n: usize, terms: &[(&str, &[u16])]) -> MomentumPolynomial {
    let v = metric_vars(n);
    let mut out = MomentumPolynomial::zero(&v);
    for (c, e) in terms {
        out = out.add(&MomentumPolynomial::monomial(&v, e, parse_rational_function(c, &v).unwrap()));
    }
    out
}

#[test]
fn flat_metrics_match_symbol_bound() {
    for (n, d, expect) in [(2, 1, 3), (3, 1, 6), (2, 2, 6), (3, 2, 20), (2, 3, 10)] {
        let seq = prolongation_sequence(&killing_symbol(n, d as u32), DEFAULT_CAP);
        let bound = dimension_bound(&seq, binomial(n + d - 1, d)).unwrap();
        assert_eq!(bound, expect);
        assert_eq!(integral_dimension(&flat(n), d, DEFAULT_EXTRA_ORDERS, 3).unwrap(), expect, "n={n} d={d}");
    }
}

#[test]
fn conformally_flat_example() {
    assert_eq!(integral_dimension(&linear_factor(2), 2, DEFAULT_EXTRA_ORDERS, 1).unwrap(), 4);
    assert_eq!(integral_dimension(&linear_factor(3), 2, DEFAULT_EXTRA_ORDERS, 1).unwrap(), 12);
    for n in [2, 3] {
        assert_eq!(integral_dimension(&linear_factor(n), 1, DEFAULT_EXTRA_ORDERS, 1).unwrap(), n * (n - 1) / 2);
    }
}

#[test]
fn product_with_round_factor() {
    let g = warped_product(3, q(1), q(1)).unwrap();
    assert_eq!(integral_dimension(&g, 2, DEFAULT_EXTRA_ORDERS, 2).unwrap(), 10);
    assert_eq!(integral_dimension(&g, 1, DEFAULT_EXTRA_ORDERS, 2).unwrap(), 4);
}

#[test]
fn seed_independence() {
    let dims: Vec<usize> =
        (0..3).map(|s| integral_dimension(&linear_factor(3), 2, DEFAULT_EXTRA_ORDERS, s).unwrap()).collect();
    assert_eq!(dims, vec![12, 12, 12]);
}

#[test]
fn hamiltonians() {
    assert_eq!(geodesic_hamiltonian(&flat(2)), mp(2, &[("1", &[2, 0]), ("1", &[0, 2])]));
    assert_eq!(geodesic_hamiltonian(&linear_factor(2)), mp(2, &[("1/x1", &[2, 0]), ("1/x1", &[0, 2])]));
    let w = "(1 + x2^2 + x3^2)^2";
    let h = mp(3, &[("1", &[2, 0, 0]), (w, &[0, 2, 0]), (w, &[0, 0, 2])]);
    assert_eq!(geodesic_hamiltonian(&warped_product(3, q(1), q(1)).unwrap()), h);
}

#[test]
fn bracket_properties() {
    let h = geodesic_hamiltonian(&flat(2));
    let p1 = mp(2, &[("1", &[1, 0])]);
    assert!(poisson_bracket(&h, &p1).unwrap().is_zero());
    let f3 = mp(2, &[("x1*x2", &[3, 0]), ("x2^2", &[1, 2])]);
    let hl = geodesic_hamiltonian(&linear_factor(2));
    assert_eq!(poisson_bracket(&hl, &f3).unwrap().degree(), Some(4));

    let a = mp(2, &[("x1^2", &[1, 0]), ("x2", &[0, 1])]);
    let b = mp(2, &[("x1*x2", &[2, 0])]);
    let c = mp(2, &[("1/x1", &[0, 2]), ("x2^3", &[1, 0])]);
    let ab = poisson_bracket(&a, &b).unwrap();
    assert!(ab.add(&poisson_bracket(&b, &a).unwrap()).is_zero());
    let jac = poisson_bracket(&a, &poisson_bracket(&b, &c).unwrap())
        .unwrap()
        .add(&poisson_bracket(&b, &poisson_bracket(&c, &a).unwrap()).unwrap())
        .add(&poisson_bracket(&c, &ab).unwrap());
    assert!(jac.is_zero());
}

#[test]
fn products_of_killing_fields_are_integrals() {
    let h = geodesic_hamiltonian(&warped_product(3, q(1), q(1)).unwrap());
    let ks = [
        mp(3, &[("1", &[1, 0, 0])]),
        mp(3, &[("1 - x2^2 - x3^2 + 2*x2^2", &[0, 1, 0]), ("2*x2*x3", &[0, 0, 1])]),
        mp(3, &[("2*x3*x2", &[0, 1, 0]), ("1 - x2^2 - x3^2 + 2*x3^2", &[0, 0, 1])]),
        mp(3, &[("x2", &[0, 0, 1]), ("-x3", &[0, 1, 0])]),
    ];
    for k in &ks {
        assert!(poisson_bracket(&h, k).unwrap().is_zero(), "{k}");
    }
    for a in &ks {
        for b in &ks {
            assert!(poisson_bracket(&h, &a.mul(b)).unwrap().is_zero());
        }
    }
}
