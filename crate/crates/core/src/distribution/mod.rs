//! Distributions spanned by vector fields: derived flags, pointwise symbols,
//! annihilators and symmetries.

pub mod monge;
pub mod sample;
pub mod symmetry;
pub mod vector_field;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::linalg::{Coordinates, Echelon, SparseVec};
use crate::arith::linalg::sparse_from_dense;
use crate::arith::poly::VarSet;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};
use crate::gnla::{BracketSpec, Gnla};

pub use monge::{monge_distribution, MongeEquation};
pub use sample::Sampler;
pub use symmetry::{annihilator, is_symmetry, polynomial_symmetries, structure_constants, OneForm, PolySymmetries};
pub use vector_field::{lie_bracket, VectorField};

#[derive(Clone, Debug)]
pub struct Distribution {
    vars: VarSet,
    generators: Vec<VectorField>,
}

impl Distribution {
    pub fn new(vars: &VarSet, generators: Vec<VectorField>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Invalid("a distribution needs at least one generator".into()));
        }
        if generators.iter().any(|g| !g.vars().same(vars)) {
            return Err(Error::DimensionMismatch("generators must share the ambient coordinates".into()));
        }
        Ok(Distribution { vars: vars.clone(), generators })
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn ambient_dim(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[VectorField] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Saturation {
    /// the flag reached the whole tangent space
    Full,
    /// the flag stopped growing below the ambient dimension
    Stabilized,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthVector {
    /// ranks of Δ₁ ⊂ Δ₂ ⊂ …; a stabilized flag ends with a repeated entry
    pub dims: Vec<usize>,
    pub saturation: Saturation,
    pub point: Vec<Rational>,
    /// set when the two first sample points disagreed and a vote was taken
    pub warning: Option<String>,
}

impl GrowthVector {
    /// dims of g_{-1}, g_{-2}, … of the symbol
    pub fn increments(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut prev = 0;
        for &d in &self.dims {
            if d > prev {
                out.push(d - prev);
            }
            prev = d;
        }
        out
    }
}

/// Fields kept at a point, grouped by the flag level where they appeared.
struct PointFlag {
    fields: Vec<(usize, VectorField)>,
    values: Vec<Vec<Rational>>,
    dims: Vec<usize>,
    saturation: Saturation,
}

/// Evaluation failures mean the point is special.
enum Attempt<T> {
    Done(T),
    Special,
}

fn eval_or_special(v: &VectorField, p: &[Rational]) -> Result<Attempt<Vec<Rational>>> {
    match v.evaluate(p) {
        Ok(x) => Ok(Attempt::Done(x)),
        Err(Error::DenominatorVanishes) => Ok(Attempt::Special),
        Err(e) => Err(e),
    }
}

fn flag_at(d: &Distribution, p: &[Rational]) -> Result<Attempt<PointFlag>> {
    let n = d.ambient_dim();
    let mut ech: Echelon<Rational> = Echelon::new(n);
    let mut fields = Vec::new();
    let mut values = Vec::new();
    for g in &d.generators {
        let val = match eval_or_special(g, p)? {
            Attempt::Done(v) => v,
            Attempt::Special => return Ok(Attempt::Special),
        };
        if ech.insert(&sparse_from_dense(&val)).is_none() {
            return Ok(Attempt::Special);
        }
        fields.push((1, g.clone()));
        values.push(val);
    }
    let mut dims = vec![ech.rank()];
    let mut level_start = 0;
    let mut level = 1;
    let saturation = loop {
        if ech.rank() == n {
            break Saturation::Full;
        }
        let level_end = fields.len();
        let mut added = 0;
        for f in level_start..level_end {
            for g in &d.generators {
                let b = lie_bracket(g, &fields[f].1)?;
                let val = match eval_or_special(&b, p)? {
                    Attempt::Done(v) => v,
                    Attempt::Special => return Ok(Attempt::Special),
                };
                if ech.insert(&sparse_from_dense(&val)).is_some() {
                    fields.push((level + 1, b));
                    values.push(val);
                    added += 1;
                }
            }
        }
        dims.push(ech.rank());
        if added == 0 {
            break Saturation::Stabilized;
        }
        level_start = level_end;
        level += 1;
    };
    Ok(Attempt::Done(PointFlag { fields, values, dims, saturation }))
}

/// Runs `flag_at` at sampled points: first agreement of two points wins,
/// otherwise the majority of five.
fn sampled_flag(d: &Distribution, point: Option<&[Rational]>, seed: u64) -> Result<(PointFlag, Vec<Rational>, Option<String>)> {
    if let Some(p) = point {
        if p.len() != d.ambient_dim() {
            return Err(Error::DimensionMismatch(format!("point has {} coordinates, expected {}", p.len(), d.ambient_dim())));
        }
        return match flag_at(d, p)? {
            Attempt::Done(f) => Ok((f, p.to_vec(), None)),
            Attempt::Special => Err(Error::NonGenericPoint(1)),
        };
    }
    let mut sampler = Sampler::new(seed);
    let mut good: Vec<(PointFlag, Vec<Rational>)> = Vec::new();
    let mut tries = 0;
    while tries < sample::RESAMPLE_BUDGET {
        tries += 1;
        let p = sampler.point(d.ambient_dim());
        if let Attempt::Done(f) = flag_at(d, &p)? {
            good.push((f, p));
            if good.len() == 2 && good[0].0.dims == good[1].0.dims {
                let (f, p) = good.swap_remove(0);
                return Ok((f, p, None));
            }
            if good.len() == 5 {
                break;
            }
        }
    }
    if good.is_empty() {
        return Err(Error::NonGenericPoint(tries));
    }
    if good.len() == 1 {
        let (f, p) = good.pop().unwrap();
        return Ok((f, p, Some("flag dims observed at a single point only".into())));
    }
    // majority vote; ties go to the larger flag since ranks only drop at special points
    let mut best = 0;
    let mut best_count = 0;
    for i in 0..good.len() {
        let c = good.iter().filter(|g| g.0.dims == good[i].0.dims).count();
        if c > best_count || (c == best_count && good[i].0.dims > good[best].0.dims) {
            best = i;
            best_count = c;
        }
    }
    let warn = format!("sample points disagreed; kept dims {:?} seen at {best_count} of {} points", good[best].0.dims, good.len());
    let (f, p) = good.swap_remove(best);
    Ok((f, p, Some(warn)))
}

pub fn derived_flag(d: &Distribution, point: Option<&[Rational]>, seed: u64) -> Result<GrowthVector> {
    let (f, p, warning) = sampled_flag(d, point, seed)?;
    Ok(GrowthVector { dims: f.dims, saturation: f.saturation, point: p, warning })
}

/// Symbol algebra at a (sampled) point, together with the point used.
pub fn symbol_at_point(d: &Distribution, point: Option<&[Rational]>, seed: u64) -> Result<(Gnla, Vec<Rational>)> {
    let (f, p, _) = sampled_flag(d, point, seed)?;
    let n = d.ambient_dim();
    let k = f.fields.len();
    let coords = Coordinates::new(&f.values, n).ok_or(Error::NonGenericPoint(1))?;
    let top = f.fields.last().map(|x| x.0).unwrap_or(0);
    let mut brackets: Vec<BracketSpec> = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            let target = f.fields[a].0 + f.fields[b].0;
            if target > top {
                continue;
            }
            let br = lie_bracket(&f.fields[a].1, &f.fields[b].1)?;
            let val = br.evaluate(&p).map_err(|_| Error::NonGenericPoint(1))?;
            let c = coords.solve(&val).ok_or(Error::NonGenericPoint(1))?;
            let v: SparseVec<Rational> =
                c.into_iter().enumerate().filter(|(i, x)| !x.is_zero() && f.fields[*i].0 == target).collect();
            if !v.is_empty() {
                brackets.push((a, b, v));
            }
        }
    }
    let names = (1..=k).map(|i| format!("e{i}")).collect();
    let depths = f.fields.iter().map(|x| x.0).collect();
    Ok((Gnla::new(names, depths, &brackets)?, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_exp_function;

    fn field(vars: &VarSet, cs: &[&str]) -> VectorField {
        VectorField::new(vars, cs.iter().map(|c| parse_exp_function(c, vars, &[]).unwrap()).collect()).unwrap()
    }

    #[test]
    fn heisenberg_symbol() {
        let v = VarSet::new(&["x", "y", "z"]);
        let d = Distribution::new(&v, vec![field(&v, &["1", "0", "y"]), field(&v, &["0", "1", "0"])]).unwrap();
        let g = derived_flag(&d, None, 1).unwrap();
        assert_eq!(g.dims, vec![2, 3]);
        assert_eq!(g.saturation, Saturation::Full);
        let (s, _) = symbol_at_point(&d, None, 1).unwrap();
        assert_eq!(s.dims(), vec![2, 1]);
        assert!(s.validate().is_valid());
    }

    #[test]
    fn integrable_distribution_stabilizes() {
        let v = VarSet::new(&["x", "y", "z"]);
        let d = Distribution::new(&v, vec![field(&v, &["1", "0", "0"]), field(&v, &["0", "1", "0"])]).unwrap();
        let g = derived_flag(&d, None, 3).unwrap();
        assert_eq!(g.dims, vec![2, 2]);
        assert_eq!(g.saturation, Saturation::Stabilized);
    }

    #[test]
    fn explicit_special_point_is_rejected() {
        let v = VarSet::new(&["x", "y"]);
        let d = Distribution::new(&v, vec![field(&v, &["1", "1/x"])]).unwrap();
        let p = [Rational::zero(), Rational::one()];
        assert_eq!(derived_flag(&d, Some(&p), 0), Err(Error::NonGenericPoint(1)));
    }
}
