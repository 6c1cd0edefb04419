//! Sparse multivariate polynomials over ℚ.
//!
//! Terms are kept in a `Vec` sorted by descending graded-lexicographic order
//! of their exponent vectors, with no zero coefficients. Every polynomial
//! carries its ordered variable list; binary operations on polynomials with
//! different lists first embed both into the union (left list first).

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use smallvec::SmallVec;

use super::rational::Rational;

pub type Exponents = SmallVec<[u16; 8]>;

/// Ordered list of variable names, shared between polynomials.
#[derive(Clone, Default)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        VarSet(names.iter().map(|s| String::from(s.as_ref())).collect())
    }

    pub fn empty() -> Self {
        VarSet(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn same(&self, other: &VarSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    /// Union with `self` first, plus the position map of `other` inside it.
    pub fn union(&self, other: &VarSet) -> (VarSet, Vec<usize>) {
        let mut names: Vec<String> = self.0.to_vec();
        let mut map = Vec::with_capacity(other.len());
        for v in other.0.iter() {
            match names.iter().position(|n| n == v) {
                Some(i) => map.push(i),
                None => {
                    map.push(names.len());
                    names.push(v.clone());
                }
            }
        }
        if names.len() == self.len() {
            (self.clone(), map)
        } else {
            (VarSet(names.into()), map)
        }
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub fn total_degree(e: &[u16]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

/// Graded lexicographic comparison.
pub fn grlex(a: &[u16], b: &[u16]) -> Ordering {
    total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b))
}

/// Exponent vectors in `n` variables of total degree `k`, descending grlex.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<Exponents> {
    fn rec(n: usize, k: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if cur.len() + 1 == n {
            cur.push(k as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=k).rev() {
            cur.push(first as u16);
            rec(n, k - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Exponents::new());
        }
        return out;
    }
    rec(n, k, &mut Exponents::new(), &mut out);
    out
}

/// All exponent vectors of total degree at most `k`, by increasing degree.
pub fn monomials_up_to(n: usize, k: u32) -> Vec<Exponents> {
    (0..=k).flat_map(|d| monomials_of_degree(n, d)).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[derive(Clone)]
pub struct Polynomial {
    vars: VarSet,
    terms: Vec<(Exponents, Rational)>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((SmallVec::from_elem(0, vars.len()), c));
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        let mut e: Exponents = SmallVec::from_elem(0, vars.len());
        e[i] = 1;
        Polynomial { vars: vars.clone(), terms: vec![(e, Rational::one())] }
    }

    pub fn monomial(vars: &VarSet, exps: &[u16], c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((SmallVec::from_slice(exps), c));
        }
        p
    }

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(vars: &VarSet, terms: Vec<(Exponents, Rational)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| grlex(&b.0, &a.0));
        let mut out: Vec<(Exponents, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            debug_assert_eq!(e.len(), vars.len());
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { vars: vars.clone(), terms: out }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &[(Exponents, Rational)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && total_degree(&self.terms[0].0) == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if total_degree(e) == 0 => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub fn embed(&self, target: &VarSet) -> Self {
        if self.vars.same(target) {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|v| target.index(v).expect("embed target lacks a variable"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne: Exponents = SmallVec::from_elem(0, target.len());
                for (i, &k) in e.iter().enumerate() {
                    ne[map[i]] = k;
                }
                (ne, c.clone())
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Brings two polynomials onto a common variable list.
    pub fn align(a: &Self, b: &Self) -> (Self, Self) {
        if a.vars.same(&b.vars) {
            return (a.clone(), b.clone());
        }
        let (u, _) = a.vars.union(&b.vars);
        (a.embed(&u), b.embed(&u))
    }

    pub fn leading(&self) -> Option<&(Exponents, Rational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| total_degree(&t.0)).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|t| t.0[var]).max().unwrap_or(0)
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.0[var] > 0)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    fn merge(a: &Self, b: &Self, negate_b: bool) -> Self {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match grlex(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (e, c) = &b.terms[j];
                    out.push((e.clone(), if negate_b { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
                    if !c.is_zero() {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        for (e, c) in &b.terms[j..] {
            out.push((e.clone(), if negate_b { -c } else { c.clone() }));
        }
        Polynomial { vars: a.vars.clone(), terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.vars.same(&other.vars) {
            return Self::merge(self, other, false);
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let (a, b) = Self::align(self, other);
        Self::merge(&a, &b, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        if self.vars.same(&other.vars) {
            return Self::merge(self, other, true);
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.neg();
        }
        let (a, b) = Self::align(self, other);
        Self::merge(&a, &b, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if !self.vars.same(&other.vars) {
            if self.is_zero() || other.is_zero() {
                let (u, _) = self.vars.union(&other.vars);
                return Self::zero(&u);
            }
            let (a, b) = Self::align(self, other);
            return a.mul(&b);
        }
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.vars);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                prods.push((e, ca * cb));
            }
        }
        Self::from_terms(&self.vars, prods)
    }

    pub fn mul_monomial(&self, exps: &[u16], c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        // multiplying by a monomial preserves the term order
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.iter().zip(exps.iter()).map(|(x, y)| x + y).collect(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[var] > 0)
            .map(|(e, c)| {
                let mut ne = e.clone();
                let k = ne[var];
                ne[var] -= 1;
                (ne, c * &Rational::from_int(k as i64))
            })
            .collect();
        Self::from_terms(&self.vars, terms)
    }

    /// Full evaluation; `point.len()` must equal the number of variables.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len(), "point dimension mismatch");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &point[i].pow(k as i32);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes rational values for some variables; the variable list is kept.
    pub fn substitute_values(&self, values: &[(usize, Rational)]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                let mut nc = c.clone();
                for (i, v) in values {
                    if ne[*i] > 0 {
                        nc = &nc * &v.pow(ne[*i] as i32);
                        ne[*i] = 0;
                    }
                }
                (ne, nc)
            })
            .collect();
        Self::from_terms(&self.vars, terms)
    }

    /// Substitutes polynomials for variables (all images must share a variable list).
    pub fn compose(&self, images: &[Polynomial], target: &VarSet) -> Self {
        assert_eq!(images.len(), self.vars.len());
        let images: Vec<Polynomial> = images.iter().map(|p| p.embed(target)).collect();
        let mut acc = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&images[i].pow(k as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Coefficients with respect to one variable, indexed by its degree.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Exponents, Rational)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[var] as usize;
            ne[var] = 0;
            buckets[k].push((ne, c.clone()));
        }
        buckets.into_iter().map(|t| Self::from_terms(&self.vars, t)).collect()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (a, d) = Self::align(self, d);
        if let Some(c) = d.constant_value() {
            return Some(a.scale(&c.inv().unwrap()));
        }
        let (lde, ldc) = d.terms[0].clone();
        let ldc_inv = ldc.inv().unwrap();
        let mut rem = a;
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.terms.first().cloned() {
            if re.iter().zip(lde.iter()).any(|(x, y)| x < y) {
                return None;
            }
            let qe: Exponents = re.iter().zip(lde.iter()).map(|(x, y)| x - y).collect();
            let qc = &rc * &ldc_inv;
            rem = rem.sub(&d.mul_monomial(&qe, &qc));
            quot.push((qe, qc));
        }
        Some(Self::from_terms(&d.vars, quot))
    }

    /// Least common multiple of coefficient denominators and gcd of numerators,
    /// returned as the rational `c` with `self / c` primitive over ℤ and
    /// with positive leading coefficient.
    pub fn content(&self) -> Rational {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return Rational::one();
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            g = g.gcd(&c.numer());
            l = l.lcm(&c.denom());
        }
        let c = Rational::from_bigints(g, l);
        if self.leading_coeff().is_negative() {
            -c
        } else {
            c
        }
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.content().inv().unwrap())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().inv().unwrap())
    }

    /// Per-variable maximal exponent.
    pub fn max_exponents(&self) -> Vec<u16> {
        let mut m = vec![0u16; self.vars.len()];
        for (e, _) in &self.terms {
            for (i, &k) in e.iter().enumerate() {
                m[i] = m[i].max(k);
            }
        }
        m
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.vars.same(&other.vars) {
            return self.terms == other.terms;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (a, b) = Self::align(self, other);
        a.terms == b.terms
    }
}

impl Eq for Polynomial {}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, vars: &VarSet, e: &[u16]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", vars.names()[i])?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if total_degree(e) == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                fmt_monomial(f, &self.vars, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn xy() -> VarSet {
        VarSet::new(&["x", "y"])
    }

    #[test]
    fn arithmetic_and_display() {
        let v = xy();
        let x = Polynomial::var(&v, 0);
        let y = Polynomial::var(&v, 1);
        let p = x.mul(&x).mul(&y).sub(&Polynomial::constant(&v, Rational::new(3, 2)));
        assert_eq!(p.to_string(), "x^2*y - 3/2");
        assert_eq!(p.derivative(0).to_string(), "2*x*y");
        let q = x.add(&y).pow(2);
        assert_eq!(q.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(q.div_exact(&x.add(&y)).unwrap(), x.add(&y));
        assert!(q.div_exact(&x).is_none());
    }

    #[test]
    fn alignment_of_different_var_lists() {
        let a = Polynomial::var(&VarSet::new(&["x"]), 0);
        let b = Polynomial::var(&VarSet::new(&["y"]), 0);
        let s = a.add(&b);
        assert_eq!(s.vars().names(), &["x", "y"]);
        let t = b.add(&a);
        assert_eq!(s, t);
    }

    #[test]
    fn content_is_signed_by_leading_coefficient() {
        let v = xy();
        let p = Polynomial::from_terms(
            &v,
            vec![
                (SmallVec::from_slice(&[1, 0]), Rational::new(-2, 3)),
                (SmallVec::from_slice(&[0, 0]), Rational::new(4, 9)),
            ],
        );
        let pp = p.primitive_part();
        assert_eq!(pp.to_string(), "3*x - 2");
    }
}
