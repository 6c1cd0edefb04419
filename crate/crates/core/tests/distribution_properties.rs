use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lacune_core::arith::expfun::ExpFunction;
use lacune_core::arith::poly::Polynomial;
use lacune_core::arith::rational::Rational;
use lacune_core::distribution::monge::{
    hilbert_cartan, monge_distribution, perturbed, power, power_symmetries, submax9_symmetries,
};
use lacune_core::distribution::symmetry::{annihilator, is_symmetry_with, polynomial_symmetries};
use lacune_core::distribution::{derived_flag, symbol_at_point, Distribution, VectorField};
use lacune_core::tanaka::{dimension_certificate, tanaka_prolongation, DEFAULT_CAP};

fn all_symmetries(fields: &[VectorField], d: &Distribution) -> bool {
    let forms = annihilator(d).unwrap();
    fields.iter().all(|v| is_symmetry_with(v, d, &forms).unwrap())
}

#[test]
fn witnesses_hold_at_other_parameters() {
    for m in [3, 4] {
        let d = monge_distribution(&power(m as u32, 2).unwrap());
        assert!(all_symmetries(&power_symmetries(m).unwrap(), &d), "m = {m}");
    }
    for e in [1, 2] {
        let eps = Rational::from_int(e);
        let d = monge_distribution(&perturbed(3, 2, &eps * &eps).unwrap());
        assert!(all_symmetries(&submax9_symmetries(eps).unwrap(), &d), "eps = {e}");
    }
}

#[test]
fn perturbed_witnesses_are_rejected() {
    let eq = power(3, 2).unwrap();
    let d = monge_distribution(&eq);
    let vars = eq.vars();
    let n = vars.len();
    let forms = annihilator(&d).unwrap();
    let ws = power_symmetries(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..20 {
        let mut e = vec![0u16; n];
        // one or two factors, so the extra term is never constant
        for _ in 0..1 + rng.next_u32() % 2 {
            e[(rng.next_u32() as usize) % n] += 1;
        }
        let c = Rational::new(1 + (rng.next_u32() % 5) as i64, 1 + (rng.next_u32() % 3) as i64);
        let mut coeffs = vec![ExpFunction::zero(&vars); n];
        coeffs[(rng.next_u32() as usize) % n] = ExpFunction::from_polynomial(Polynomial::monomial(&vars, &e, c));
        let v = ws[(rng.next_u32() as usize) % ws.len()].add(&VectorField::new(&vars, coeffs).unwrap());
        assert!(!is_symmetry_with(&v, &d, &forms).unwrap(), "{v}");
    }
}

#[test]
fn flags_agree_across_seeds_and_symbols_match_increments() {
    for eq in [hilbert_cartan(), power(2, 3).unwrap(), perturbed(4, 3, Rational::one()).unwrap()] {
        let d = monge_distribution(&eq);
        let flags: Vec<Vec<usize>> = [1, 2, 3].iter().map(|&s| derived_flag(&d, None, s).unwrap().dims).collect();
        assert!(flags.windows(2).all(|w| w[0] == w[1]), "{flags:?}");
        let (m, _) = symbol_at_point(&d, None, 1).unwrap();
        let rep = m.validate();
        assert!(rep.is_valid() && rep.fundamental, "{rep:?}");
        let g = &flags[0];
        let diffs: Vec<usize> = (0..g.len()).map(|i| g[i] - if i == 0 { 0 } else { g[i - 1] }).collect();
        assert_eq!(m.dims(), diffs);
    }
}

#[test]
fn polynomial_symmetries_are_monotone_and_sandwiched() {
    for eq in [hilbert_cartan(), power(2, 3).unwrap()] {
        let d = monge_distribution(&eq);
        let (m, _) = symbol_at_point(&d, None, 0).unwrap();
        let bound = dimension_certificate(&tanaka_prolongation(&m, None, DEFAULT_CAP).unwrap()).unwrap();
        let forms = annihilator(&d).unwrap();
        let mut last = 0;
        for cap in 1..=4 {
            let p = polynomial_symmetries(&d, cap, 0).unwrap();
            assert!(p.dimension >= last && p.dimension <= bound, "cap {cap}: {} vs {bound}", p.dimension);
            assert!(p.basis.iter().all(|v| is_symmetry_with(v, &d, &forms).unwrap()));
            last = p.dimension;
        }
    }
}
