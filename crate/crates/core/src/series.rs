//! Truncated multivariate power series over exact coefficient rings, and
//! polynomials in `log x` with series coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graded::ChowElement;
use crate::linalg::Q;

/// Commutative coefficient ring for series.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn is_zero_c(&self) -> bool;
    fn add_c(&self, o: &Self) -> Self;
    fn sub_c(&self, o: &Self) -> Self;
    fn mul_c(&self, o: &Self) -> Self;
    fn scale_c(&self, x: &Q) -> Self;
    fn inverse_c(&self) -> Option<Self>;
}

impl Coeff for Q {
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_c(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_c(&self, o: &Self) -> Self {
        self * o
    }
    fn scale_c(&self, x: &Q) -> Self {
        self * x
    }
    fn inverse_c(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Coeff for ChowElement {
    fn zero_like(&self) -> Self {
        ChowElement::zero(self.algebra())
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_c(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_c(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn scale_c(&self, x: &Q) -> Self {
        self.scale(x)
    }
    fn inverse_c(&self) -> Option<Self> {
        self.inverse()
    }
}

/// Sum of `c_n x^n` over exponents of total degree below `order`.
#[derive(Clone, PartialEq)]
pub struct MultiSeries<C: Coeff> {
    nvars: usize,
    order: u32,
    one: C,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> fmt::Debug for MultiSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiSeries")
            .field("order", &self.order)
            .field("terms", &self.terms)
            .finish()
    }
}

fn deg(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl<C: Coeff> MultiSeries<C> {
    /// The zero series; `one` fixes the coefficient ring.
    pub fn zero(nvars: usize, order: u32, one: C) -> Self {
        Self {
            nvars,
            order,
            one,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, order: u32, one: C, c: C) -> Self {
        let mut s = Self::zero(nvars, order, one);
        s.set(vec![0; nvars], c);
        s
    }

    pub fn one_series(nvars: usize, order: u32, one: C) -> Self {
        Self::constant(nvars, order, one.clone(), one)
    }

    /// `x_i` with unit coefficient.
    pub fn var(nvars: usize, order: u32, one: C, i: usize) -> Self {
        let mut s = Self::zero(nvars, order, one.clone());
        let mut e = vec![0; nvars];
        e[i] = 1;
        s.set(e, one);
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn unit(&self) -> &C {
        &self.one
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn set(&mut self, e: Vec<u32>, c: C) {
        if deg(&e) >= self.order || c.is_zero_c() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, c);
        }
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(|| self.one.zero_like())
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        Self {
            nvars: self.nvars,
            order,
            one: self.one.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| deg(e) < order)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map<D: Coeff>(&self, one: D, f: impl Fn(&C) -> D) -> MultiSeries<D> {
        let mut s = MultiSeries::zero(self.nvars, self.order, one);
        for (e, c) in &self.terms {
            s.set(e.clone(), f(c));
        }
        s
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.truncate(o.order);
        for (e, c) in &o.terms {
            if deg(e) < s.order {
                let v = s.coeff(e).add_c(c);
                s.set(e.clone(), v);
            }
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, x: &Q) -> Self {
        self.map(self.one.clone(), |c| c.scale_c(x))
    }

    pub fn mul_coeff(&self, k: &C) -> Self {
        self.map(self.one.clone(), |c| c.mul_c(k))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut s = Self::zero(self.nvars, order, self.one.clone());
        for (e1, c1) in &self.terms {
            let d1 = deg(e1);
            if d1 >= order {
                continue;
            }
            for (e2, c2) in &o.terms {
                if d1 + deg(e2) >= order {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let v = s.coeff(&e).add_c(&c1.mul_c(c2));
                s.set(e, v);
            }
        }
        s
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one_series(self.nvars, self.order, self.one.clone()), |acc, _| acc.mul(self))
    }

    fn without_constant(&self) -> Self {
        let mut s = self.clone();
        s.terms.remove(&vec![0; self.nvars]);
        s
    }

    /// Multiplicative inverse when the constant term is invertible.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.constant_term().inverse_c()?;
        let h = self.without_constant().mul_coeff(&c0).scale(&-Q::one());
        let mut term = Self::one_series(self.nvars, self.order, self.one.clone());
        let mut sum = term.clone();
        for _ in 1..self.order {
            term = term.mul(&h);
            if term.terms.is_empty() {
                break;
            }
            sum = sum.add(&term);
        }
        Some(sum.mul_coeff(&c0))
    }

    /// `log` of a series with constant term exactly one.
    pub fn log(&self) -> Option<Self> {
        if self.constant_term() != self.one {
            return None;
        }
        let u = self.without_constant();
        let mut term = Self::one_series(self.nvars, self.order, self.one.clone());
        let mut sum = Self::zero(self.nvars, self.order, self.one.clone());
        for k in 1..self.order.max(1) {
            term = term.mul(&u);
            if term.terms.is_empty() {
                break;
            }
            let sign = if k % 2 == 1 { Q::one() } else { -Q::one() };
            sum = sum.add(&term.scale(&(sign / BigInt::from(k))));
        }
        Some(sum)
    }

    /// `exp` of a series without constant term.
    pub fn exp(&self) -> Option<Self> {
        if !self.constant_term().is_zero_c() {
            return None;
        }
        let mut term = Self::one_series(self.nvars, self.order, self.one.clone());
        let mut sum = term.clone();
        for k in 1..self.order.max(1) {
            term = term.mul(self).scale(&Q::from(BigInt::from(k)).recip());
            if term.terms.is_empty() {
                break;
            }
            sum = sum.add(&term);
        }
        Some(sum)
    }

    /// `theta_i = x_i d/dx_i`.
    pub fn theta(&self, i: usize) -> Self {
        let mut s = Self::zero(self.nvars, self.order, self.one.clone());
        for (e, c) in &self.terms {
            s.set(e.clone(), c.scale_c(&Q::from(BigInt::from(e[i]))));
        }
        s
    }

    /// Multiply by `x^m`, shifting exponents and the order.
    pub fn shift(&self, m: &[u32]) -> Self {
        let mut s = Self::zero(self.nvars, self.order + deg(m), self.one.clone());
        for (e, c) in &self.terms {
            let f: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
            s.set(f, c.clone());
        }
        s
    }

    /// Substitute `x_i -> subs[i]`, each without constant term.
    pub fn compose(&self, subs: &[MultiSeries<Q>]) -> Self {
        assert_eq!(subs.len(), self.nvars);
        let m = subs[0].nvars;
        let order = subs.iter().map(|s| s.order).min().unwrap_or(self.order).min(self.order);
        let mut powers: Vec<Vec<MultiSeries<Q>>> = Vec::new();
        for s in subs {
            let s = s.truncate(order);
            let mut p = vec![MultiSeries::one_series(m, order, Q::one())];
            for k in 1..order {
                let next = p[k as usize - 1].mul(&s);
                p.push(next);
            }
            powers.push(p);
        }
        let mut out = Self::zero(m, order, self.one.clone());
        for (e, c) in &self.terms {
            if deg(e) >= order {
                continue;
            }
            let mut prod = MultiSeries::one_series(m, order, Q::one());
            for (i, &k) in e.iter().enumerate() {
                prod = prod.mul(&powers[i][k as usize]);
            }
            for (f, x) in prod.terms() {
                let v = out.coeff(f).add_c(&c.scale_c(x));
                out.set(f.clone(), v);
            }
        }
        out
    }

    /// Terms sorted by total degree, then lex.
    pub fn sorted_terms(&self) -> Vec<(Vec<u32>, C)> {
        let mut v: Vec<(Vec<u32>, C)> = self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| deg(&a.0).cmp(&deg(&b.0)).then_with(|| a.0.cmp(&b.0)));
        v
    }
}

/// Exponent vectors of total degree below `order`, sorted by degree then lex.
pub fn exponents_below(nvars: usize, order: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for k in 0..order {
        let mut v = crate::poly::monomials_of_degree(nvars, k);
        v.sort();
        out.extend(v);
    }
    out
}

/// `sum_k (log x)^k f_k` with `k` a multi-exponent in the logs of the variables.
#[derive(Clone, Debug, PartialEq)]
pub struct LogSeries<C: Coeff> {
    pub parts: BTreeMap<Vec<u32>, MultiSeries<C>>,
}

impl<C: Coeff> LogSeries<C> {
    pub fn from_series(s: MultiSeries<C>) -> Self {
        let mut parts = BTreeMap::new();
        parts.insert(vec![0; s.nvars()], s);
        Self { parts }
    }

    /// `(log x)^k * s`.
    pub fn monomial(k: Vec<u32>, s: MultiSeries<C>) -> Self {
        let mut parts = BTreeMap::new();
        parts.insert(k, s);
        Self { parts }
    }

    pub fn part(&self, k: &[u32]) -> Option<&MultiSeries<C>> {
        self.parts.get(k)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut parts = self.parts.clone();
        for (k, s) in &o.parts {
            let v = match parts.get(k) {
                Some(t) => t.add(s),
                None => s.clone(),
            };
            parts.insert(k.clone(), v);
        }
        Self { parts }.pruned()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out: BTreeMap<Vec<u32>, MultiSeries<C>> = BTreeMap::new();
        for (k1, s1) in &self.parts {
            for (k2, s2) in &o.parts {
                let k: Vec<u32> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                let p = s1.mul(s2);
                let v = match out.get(&k) {
                    Some(t) => t.add(&p),
                    None => p,
                };
                out.insert(k, v);
            }
        }
        Self { parts: out }.pruned()
    }

    pub fn scale(&self, x: &Q) -> Self {
        Self {
            parts: self.parts.iter().map(|(k, s)| (k.clone(), s.scale(x))).collect(),
        }
        .pruned()
    }

    pub fn map_series(&self, f: impl Fn(&MultiSeries<C>) -> MultiSeries<C>) -> Self {
        Self {
            parts: self.parts.iter().map(|(k, s)| (k.clone(), f(s))).collect(),
        }
        .pruned()
    }

    fn pruned(mut self) -> Self {
        self.parts.retain(|_, s| !s.terms().is_empty());
        self
    }
}
