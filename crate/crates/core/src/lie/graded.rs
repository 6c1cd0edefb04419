//! Filtrations by integer weights and associated graded algebras.

use alloc::format;
use alloc::vec::Vec;

use super::algebra::LieAlgebra;
use crate::arith::field::Field;
use crate::error::{Error, Result};

/// Weight per basis element; F_i is spanned by the elements of weight ≤ i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredBasis {
    pub weights: Vec<i64>,
}

impl FilteredBasis {
    pub fn new(weights: Vec<i64>) -> Self {
        FilteredBasis { weights }
    }

    /// First pair (i, j) whose bracket has a component of weight above w_i + w_j.
    pub fn violation<F: Field>(&self, l: &LieAlgebra<F>) -> Option<(usize, usize)> {
        let n = l.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let cap = self.weights[i] + self.weights[j];
                if l.basis_bracket(i, j).iter().enumerate().any(|(c, x)| !x.is_zero() && self.weights[c] > cap) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// gr(L): keeps the components of [e_i, e_j] of weight exactly w_i + w_j.
pub fn associated_graded<F: Field>(l: &LieAlgebra<F>, f: &FilteredBasis) -> Result<LieAlgebra<F>> {
    let n = l.dim();
    if f.weights.len() != n {
        return Err(Error::DimensionMismatch("one weight per basis element".into()));
    }
    if let Some((i, j)) = f.violation(l) {
        let names = l.names();
        return Err(Error::IncompatibleFiltration(format!("[{}, {}] leaves F_{}", names[i], names[j], f.weights[i] + f.weights[j])));
    }
    let mut out = LieAlgebra::abelian(l.names().to_vec());
    for i in 0..n {
        for j in (i + 1)..n {
            let cap = f.weights[i] + f.weights[j];
            let v = l
                .basis_bracket(i, j)
                .iter()
                .enumerate()
                .map(|(c, x)| if f.weights[c] == cap { x.clone() } else { F::zero() })
                .collect();
            out.set_bracket(i, j, v);
        }
    }
    if !out.is_lie_algebra() {
        return Err(Error::Invalid("associated graded fails Jacobi".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::Rational;
    use crate::lie::presets::{from_named, heisenberg};
    use alloc::vec;

    #[test]
    fn graded_input_is_unchanged() {
        let h = heisenberg(5).unwrap();
        let f = FilteredBasis::new(vec![-1, -1, -1, -1, -2]);
        assert_eq!(associated_graded(&h, &f).unwrap(), h);
    }

    #[test]
    fn deformation_of_abelian() {
        let l = from_named(&["e1", "e2"], &[("e1", "e2", vec![("e1", Rational::one())])]).unwrap();
        let g = associated_graded(&l, &FilteredBasis::new(vec![1, 1])).unwrap();
        assert_eq!(g.derived_series(), vec![2, 0]);
        // e1 of weight 3 would sit outside F_2
        let bad = associated_graded(&l, &FilteredBasis::new(vec![3, -1]));
        assert!(matches!(bad, Err(Error::IncompatibleFiltration(_))));
    }
}
