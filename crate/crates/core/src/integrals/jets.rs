//! Determining equations of {H, F} = 0 and their prolongation at a point.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::metric::Metric;
use crate::arith::linalg::{Echelon, SparseVec};
use crate::arith::poly::{monomials_of_degree, total_degree, Exponents, Polynomial, VarSet};
use crate::arith::ratfun::RationalFunction;
use crate::arith::rational::Rational;
use crate::distribution::sample::{Sampler, RESAMPLE_BUDGET};
use crate::error::{Error, Result};

pub const DEFAULT_EXTRA_ORDERS: usize = 6;

/// coeff · ∂_deriv b_unknown (or coeff · b_unknown when `deriv` is None)
#[derive(Clone, Debug, PartialEq)]
pub struct DetTerm {
    pub unknown: usize,
    pub deriv: Option<usize>,
    pub coeff: RationalFunction,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DetEquation {
    /// momentum monomial of degree d+1 whose coefficient this is
    pub monomial: Exponents,
    pub terms: Vec<DetTerm>,
}

#[derive(Clone, Debug)]
pub struct DeterminingSystem {
    pub vars: VarSet,
    pub degree: usize,
    /// F = Σ b_σ p^σ over these σ
    pub unknowns: Vec<Exponents>,
    pub equations: Vec<DetEquation>,
}

impl DeterminingSystem {
    pub fn n_unknowns(&self) -> usize {
        self.unknowns.len()
    }

    pub fn n_equations(&self) -> usize {
        self.equations.len()
    }
}

fn add_exp(a: &[u16], plus: &[usize], minus: Option<usize>) -> Exponents {
    let mut e = Exponents::from_slice(a);
    for &i in plus {
        e[i] += 1;
    }
    if let Some(i) = minus {
        e[i] -= 1;
    }
    e
}

/// Coefficient equations of {H, F} = 0 for F of degree d, with H = Σ g^{ij} p_i p_j.
pub fn determining_system(g: &Metric, d: usize) -> Result<DeterminingSystem> {
    if d == 0 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    let n = g.dim();
    let h = g.inverse();
    let unknowns = monomials_of_degree(n, d as u32);
    let targets = monomials_of_degree(n, d as u32 + 1);
    let row_of: BTreeMap<Exponents, usize> = targets.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut acc: Vec<BTreeMap<(usize, Option<usize>), RationalFunction>> = vec![BTreeMap::new(); targets.len()];
    let mut push = |tau: Exponents, s: usize, deriv: Option<usize>, c: RationalFunction| {
        if c.is_zero() {
            return;
        }
        let e = acc[row_of[&tau]].entry((s, deriv)).or_insert_with(RationalFunction::zero);
        *e = e.add(&c);
    };
    let dh: Vec<Vec<Vec<RationalFunction>>> =
        (0..n).map(|i| h.iter().map(|r| r.iter().map(|c| c.derivative(i)).collect()).collect()).collect();
    for (s, sigma) in unknowns.iter().enumerate() {
        for i in 0..n {
            // ∂H/∂p_i ∂F/∂x_i
            for j in 0..n {
                push(add_exp(sigma, &[j], None), s, Some(i), h[i][j].scale(&Rational::from_int(2)));
            }
            // −∂H/∂x_i ∂F/∂p_i
            if sigma[i] > 0 {
                let k = Rational::from_int(-(sigma[i] as i64));
                for j in 0..n {
                    for l in 0..n {
                        push(add_exp(sigma, &[j, l], Some(i)), s, None, dh[i][j][l].scale(&k));
                    }
                }
            }
        }
    }
    let equations = targets
        .into_iter()
        .zip(acc)
        .map(|(monomial, terms)| DetEquation {
            monomial,
            terms: terms
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((unknown, deriv), coeff)| DetTerm { unknown, deriv, coeff })
                .collect(),
        })
        .collect();
    Ok(DeterminingSystem { vars: g.vars().clone(), degree: d, unknowns, equations })
}

fn truncate(p: &Polynomial, order: u32) -> Polynomial {
    Polynomial::from_terms(
        p.vars(),
        p.terms().iter().filter(|(e, _)| total_degree(e) <= order).cloned().collect(),
    )
}

/// Taylor coefficients c_μ = ∂^μ f(x0)/μ! for |μ| ≤ order.
pub fn taylor(f: &RationalFunction, x0: &[Rational], order: u32) -> Result<Vec<(Exponents, Rational)>> {
    let vars = f.vars().clone();
    if vars.is_empty() {
        let c = f.constant_value().unwrap_or_else(Rational::zero);
        return Ok(if c.is_zero() { Vec::new() } else { vec![(Exponents::new(), c)] });
    }
    let shift: Vec<Polynomial> = (0..vars.len())
        .map(|i| Polynomial::var(&vars, i).add(&Polynomial::constant(&vars, x0[i].clone())))
        .collect();
    let num = truncate(&f.numer().compose(&shift, &vars), order);
    let den = f.denom().compose(&shift, &vars);
    let d0 = den.evaluate(&vec![Rational::zero(); vars.len()]);
    let inv0 = d0.inv().ok_or(Error::DenominatorVanishes)?;
    // 1/den = (1/d0) Σ_k (−u)^k, u = den/d0 − 1
    let u = truncate(&den.scale(&inv0).sub(&Polynomial::one(&vars)), order);
    let neg_u = u.neg();
    let mut series = Polynomial::one(&vars);
    let mut power = Polynomial::one(&vars);
    for _ in 0..order {
        power = truncate(&power.mul(&neg_u), order);
        if power.is_zero() {
            break;
        }
        series = series.add(&power);
    }
    let out = truncate(&num.mul(&series), order).scale(&inv0);
    Ok(out.terms().to_vec())
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrderStep {
    pub order: usize,
    pub jets: usize,
    pub rank: usize,
    /// free jets D(L) = jets − rank
    pub free: usize,
    /// dim of the top-order symbol g_L
    pub symbol: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralReport {
    pub dimension: usize,
    pub point: Vec<Rational>,
    pub steps: Vec<OrderStep>,
}

/// Jet columns ordered by (order, multi-index, unknown).
struct JetIndex {
    n_unknowns: usize,
    pos: BTreeMap<Exponents, usize>,
    by_order: Vec<Vec<Exponents>>,
}

impl JetIndex {
    fn new(n: usize, u: usize, max_order: usize) -> Self {
        let by_order: Vec<Vec<Exponents>> = (0..=max_order).map(|k| monomials_of_degree(n, k as u32)).collect();
        let mut pos = BTreeMap::new();
        for e in by_order.iter().flatten() {
            let l = pos.len();
            pos.insert(e.clone(), l);
        }
        JetIndex { n_unknowns: u, pos, by_order }
    }

    fn col(&self, alpha: &[u16], s: usize) -> usize {
        self.pos[alpha] * self.n_unknowns + s
    }

    fn count_up_to(&self, order: usize) -> usize {
        self.by_order[..=order].iter().map(|v| v.len()).sum::<usize>() * self.n_unknowns
    }
}

/// Taylor data of one determining system at a base point.
struct JetSystem<'a> {
    sys: &'a DeterminingSystem,
    series: Vec<Vec<Vec<(Exponents, Rational)>>>,
}

impl<'a> JetSystem<'a> {
    fn new(sys: &'a DeterminingSystem, x0: &[Rational], order: u32) -> Result<Self> {
        let series = sys
            .equations
            .iter()
            .map(|e| e.terms.iter().map(|t| taylor(&t.coeff, x0, order)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(JetSystem { sys, series })
    }

    /// Row for D^γ of equation `k`, Taylor-normalized.
    fn row(&self, k: usize, gamma: &[u16], idx: &JetIndex) -> SparseVec<Rational> {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (t, ser) in self.sys.equations[k].terms.iter().zip(&self.series[k]) {
            for (mu, c) in ser {
                if mu.iter().zip(gamma).any(|(a, b)| a > b) {
                    continue;
                }
                let mut nu: Exponents = gamma.iter().zip(mu.iter()).map(|(g, m)| g - m).collect();
                let factor = match t.deriv {
                    None => c.clone(),
                    Some(e) => {
                        nu[e] += 1;
                        c * &Rational::from_int(nu[e] as i64)
                    }
                };
                let col = idx.col(&nu, t.unknown);
                let v = acc.entry(col).or_insert_with(Rational::zero);
                *v += &factor;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }
}

fn valid_base_point(g: &Metric, p: &[Rational]) -> bool {
    g.at(p).is_ok()
}

/// dim Q_d(g) by prolongation–projection at a sampled base point.
pub fn integral_dimension_report(g: &Metric, d: usize, extra_orders: usize, seed: u64) -> Result<IntegralReport> {
    let sys = determining_system(g, d)?;
    let n = g.dim();
    let max_order = d + 1 + extra_orders;
    let mut sampler = Sampler::new(seed);
    let mut tries = 0;
    let (point, jet) = loop {
        if tries == RESAMPLE_BUDGET {
            return Err(Error::NonGenericPoint(tries));
        }
        tries += 1;
        let p = sampler.point(n);
        if !valid_base_point(g, &p) {
            continue;
        }
        match JetSystem::new(&sys, &p, max_order as u32) {
            Ok(j) => break (p, j),
            Err(Error::DenominatorVanishes) => continue,
            Err(e) => return Err(e),
        }
    };
    let u = sys.n_unknowns();
    let idx = JetIndex::new(n, u, max_order + 1);
    let mut ech: Echelon<Rational> = Echelon::new(idx.count_up_to(max_order + 1));
    let mut steps: Vec<OrderStep> = Vec::new();
    // order 0 jets carry no relations
    for order in 1..=(max_order + 1) {
        let top_start = idx.count_up_to(order - 1);
        let mut sym: Echelon<Rational> = Echelon::new(idx.count_up_to(order) - top_start);
        let mut rows = Vec::new();
        for gamma in &idx.by_order[order - 1] {
            for k in 0..sys.n_equations() {
                let r = jet.row(k, gamma, &idx);
                let top: SparseVec<Rational> =
                    r.iter().filter(|(c, _)| *c >= top_start).map(|(c, x)| (c - top_start, x.clone())).collect();
                sym.insert(&top);
                rows.push(r);
            }
        }
        ech.extend(rows);
        let jets = idx.count_up_to(order);
        let symbol = (jets - top_start) - sym.rank();
        steps.push(OrderStep { order, jets, rank: ech.rank(), free: jets - ech.rank(), symbol });
        if order > d + 1 {
            let prev = &steps[steps.len() - 2];
            let cur = &steps[steps.len() - 1];
            if prev.free == cur.free && prev.symbol == 0 {
                return Ok(IntegralReport { dimension: prev.free, point, steps });
            }
        }
    }
    Err(Error::NoStabilization(max_order))
}

pub fn integral_dimension(g: &Metric, d: usize, extra_orders: usize, seed: u64) -> Result<usize> {
    integral_dimension_report(g, d, extra_orders, seed).map(|r| r.dimension)
}
