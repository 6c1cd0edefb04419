use lacune_core::distribution::monge::{hilbert_cartan, power};
use lacune_core::distribution::symmetry::{annihilator, is_symmetry_with};
use lacune_core::distribution::{monge_distribution, polynomial_symmetries, symbol_at_point};
use lacune_core::tanaka::{tanaka_prolongation, DEFAULT_CAP};

#[test]
fn higher_monge_tanaka_totals() {
    for (n, expect) in [(2, 14), (3, 11), (4, 13)] {
        let d = monge_distribution(&power(2, n).unwrap());
        let (m, _) = symbol_at_point(&d, None, 11).unwrap();
        let g = tanaka_prolongation(&m, None, DEFAULT_CAP).unwrap();
        assert_eq!(g.total_dim(), expect, "n = {n}, dims {:?}", g.all_dims());
    }
}

#[test]
fn hilbert_cartan_polynomial_symmetries_grow_to_bound() {
    let d = monge_distribution(&hilbert_cartan());
    let forms = annihilator(&d).unwrap();
    let dims: Vec<usize> = (2..=7).map(|c| polynomial_symmetries(&d, c, 5).unwrap().dimension).collect();
    assert_eq!(dims, vec![8, 10, 12, 13, 14, 14]);
    for v in polynomial_symmetries(&d, 6, 5).unwrap().basis {
        assert!(is_symmetry_with(&v, &d, &forms).unwrap());
    }
}

#[test]
fn cubic_power_has_seven_polynomial_symmetries() {
    let d = monge_distribution(&power(3, 2).unwrap());
    assert_eq!(polynomial_symmetries(&d, 4, 0).unwrap().dimension, 6);
    assert_eq!(polynomial_symmetries(&d, 5, 0).unwrap().dimension, 7);
}
