//! Mirror map, prepotential, Yukawa couplings and instanton numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chow::{chern_data, ChowRing, HypersurfaceRing};
use crate::constants::SymbolicConstant;
use crate::error::{Error, Result};
use crate::gkz::{coefficient_ratio, GkzContext, GradedSeriesBundle};
use crate::graded::{ChowElement, GradedAlgebra};
use crate::lattice::MoriBasis;
use crate::linalg::{self, Q};
use crate::series::MultiSeries;

/// Coordinates of the degree-1 part of `e` on the generators `J_a`.
pub fn degree_one_coords(alg: &GradedAlgebra, e: &ChowElement) -> Vec<Q> {
    let gens = alg.generator_coords();
    let r = gens.len();
    let target = e.part(1);
    let m = linalg::transpose(gens, alg.dim());
    linalg::solve(&m, target.coeffs()).unwrap_or_else(|| vec![Q::zero(); r])
}

/// `2 pi i t_a = log x_a + g_a(x)` and its inverse `x(q)`.
#[derive(Clone, Debug)]
pub struct MirrorMap {
    /// `g_a = tilde_w^(1)_a / w^(0)`
    pub forward: Vec<MultiSeries<Q>>,
    /// `x_a(q)`
    pub inverse: Vec<MultiSeries<Q>>,
}

fn shift_var(s: &MultiSeries<Q>, a: usize) -> MultiSeries<Q> {
    let mut e = vec![0; s.nvars()];
    e[a] = 1;
    s.shift(&e).truncate(s.order())
}

/// Mirror map from the series bundle; inversion by fixed-point iteration.
pub fn special_coordinates(bundle: &GradedSeriesBundle, order: u32) -> MirrorMap {
    let r = bundle.w0.nvars();
    let order = order.min(bundle.w0.order());
    let alg = bundle.ratio.unit().algebra().clone();
    let w0 = bundle.w0.truncate(order);
    let w0inv = w0.inverse().expect("w0 has constant term 1");
    let mut comps = vec![MultiSeries::zero(r, order, Q::one()); r];
    for (e, c) in bundle.tilde_r[1].terms() {
        if e.iter().sum::<u32>() >= order {
            continue;
        }
        for (a, y) in degree_one_coords(&alg, c).into_iter().enumerate() {
            comps[a].set(e.clone(), y);
        }
    }
    let forward: Vec<MultiSeries<Q>> = comps.iter().map(|s| s.mul(&w0inv)).collect();
    let q: Vec<MultiSeries<Q>> = (0..r).map(|a| MultiSeries::var(r, order, Q::one(), a)).collect();
    let mut x = q.clone();
    for _ in 0..order {
        let next: Vec<MultiSeries<Q>> = (0..r)
            .map(|a| {
                let g = forward[a].compose(&x).scale(&-Q::one());
                let e = g.exp().expect("no constant term");
                shift_var(&e, a)
            })
            .collect();
        if next == x {
            break;
        }
        x = next;
    }
    MirrorMap { forward, inverse: x }
}

/// `F = 1/6 (tJ)^3 - c2/24 (tJ) + zeta(3)/2 c3 + F_inst(q)` with formal grading.
#[derive(Clone, Debug)]
pub struct Prepotential {
    /// `int_X J_a J_b J_c` for `a <= b <= c`
    pub triple: BTreeMap<(usize, usize, usize), Q>,
    /// `int_X c2 J_a`
    pub c2_linear: Vec<Q>,
    /// `zeta(3) chi / 2`, carrying `(2 pi i)^{-3}`
    pub constant: SymbolicConstant,
    pub euler: Q,
    /// `-1/2 int_X [log sum ratio(n) x^n]` as a series in `x`
    pub instanton_x: MultiSeries<Q>,
    /// the same composed with `x(q)`
    pub instanton: MultiSeries<Q>,
}

impl Prepotential {
    pub fn cubic_coefficient(&self, a: usize, b: usize, c: usize) -> Q {
        let mut k = [a, b, c];
        k.sort();
        self.triple[&(k[0], k[1], k[2])].clone() / BigInt::from(6)
    }

    pub fn linear_coefficient(&self, a: usize) -> Q {
        -self.c2_linear[a].clone() / BigInt::from(24)
    }
}

pub fn triple_intersections(hx: &HypersurfaceRing, r: usize) -> BTreeMap<(usize, usize, usize), Q> {
    let alg = hx.algebra();
    let j: Vec<ChowElement> = (0..r).map(|a| ChowElement::generator(alg, a)).collect();
    let mut out = BTreeMap::new();
    for a in 0..r {
        for b in a..r {
            for c in b..r {
                out.insert((a, b, c), hx.integrate(&j[a].mul(&j[b]).mul(&j[c])));
            }
        }
    }
    out
}

/// Prepotential on the hypersurface; `ctx` must live in the ring of `hx`.
pub fn prepotential(
    ring: &ChowRing,
    hx: &HypersurfaceRing,
    a: &MoriBasis,
    bundle: &GradedSeriesBundle,
    mm: &MirrorMap,
) -> Result<Prepotential> {
    let chern = chern_data(ring, a);
    if chern.euler.is_zero() {
        return Err(Error::ChiZero);
    }
    if ring.dim() != 4 {
        return Err(Error::UnsupportedDimension(ring.dim()));
    }
    let r = a.rank();
    let alg = hx.algebra();
    let c2 = hx.project(&chern.c2);
    let c2_linear = (0..r)
        .map(|k| hx.integrate(&c2.mul(&ChowElement::generator(alg, k))))
        .collect();
    let constant = SymbolicConstant::zeta3().scale(&(chern.euler.clone() / BigInt::from(2)));
    let log = bundle
        .ratio
        .log()
        .ok_or_else(|| Error::Invalid("series constant term is not 1".into()))?;
    let half = Q::new((-1).into(), 2.into());
    let instanton_x = log.map(Q::one(), |c| hx_integral(alg, c) * &half);
    let instanton = instanton_x.compose(&mm.inverse);
    Ok(Prepotential {
        triple: triple_intersections(hx, r),
        c2_linear,
        constant,
        euler: chern.euler,
        instanton_x,
        instanton,
    })
}

fn hx_integral(alg: &GradedAlgebra, c: &ChowElement) -> Q {
    debug_assert!(std::ptr::eq(alg, c.algebra().as_ref()));
    c.integrate()
}

/// `K_abc(q) = int_X J_a J_b J_c + theta_a theta_b theta_c F_inst`.
#[derive(Clone, Debug)]
pub struct YukawaCoupling {
    pub classical: BTreeMap<(usize, usize, usize), Q>,
    pub k: BTreeMap<(usize, usize, usize), MultiSeries<Q>>,
}

impl YukawaCoupling {
    pub fn get(&self, a: usize, b: usize, c: usize) -> &MultiSeries<Q> {
        let mut k = [a, b, c];
        k.sort();
        &self.k[&(k[0], k[1], k[2])]
    }
}

pub fn yukawa_couplings(f: &Prepotential) -> YukawaCoupling {
    let s = &f.instanton;
    let r = s.nvars();
    let mut k = BTreeMap::new();
    for (&(a, b, c), v) in &f.triple {
        let d = s.theta(a).theta(b).theta(c);
        let cl = MultiSeries::constant(r, s.order(), Q::one(), v.clone());
        k.insert((a, b, c), d.add(&cl));
    }
    YukawaCoupling {
        classical: f.triple.clone(),
        k,
    }
}

type SeriesMatrix = Vec<Vec<MultiSeries<Q>>>;

fn mat_mul(a: &SeriesMatrix, b: &SeriesMatrix) -> SeriesMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(MultiSeries::zero(a[0][0].nvars(), a[0][0].order(), Q::one()), |acc, k| {
                        acc.add(&a[i][k].mul(&b[k][j]))
                    })
                })
                .collect()
        })
        .collect()
}

/// Yukawa couplings through the chain rule in `x`: `theta_q = (M^T)^{-1} theta_x`
/// with `M_ab = delta_ab + theta_{x_b} g_a`, composed with `x(q)` at the end.
pub fn yukawa_via_chain_rule(f: &Prepotential, mm: &MirrorMap) -> YukawaCoupling {
    let g = &mm.forward;
    let r = g.len();
    let order = f.instanton_x.order().min(g[0].order());
    let zero = MultiSeries::zero(r, order, Q::one());
    // N = M^T - I, (M^T)^{-1} = sum (-N)^k
    let n: SeriesMatrix = (0..r)
        .map(|a| (0..r).map(|b| g[b].theta(a).truncate(order)).collect())
        .collect();
    let ident: SeriesMatrix = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| if a == b { MultiSeries::one_series(r, order, Q::one()) } else { zero.clone() })
                .collect()
        })
        .collect();
    let neg: SeriesMatrix = n.iter().map(|row| row.iter().map(|s| s.scale(&-Q::one())).collect()).collect();
    let mut w = ident.clone();
    let mut term = ident;
    for _ in 1..order {
        term = mat_mul(&term, &neg);
        w = w
            .iter()
            .zip(&term)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(y)).collect())
            .collect();
    }
    let theta_q = |s: &MultiSeries<Q>, a: usize| -> MultiSeries<Q> {
        (0..r).fold(zero.clone(), |acc, b| acc.add(&w[a][b].mul(&s.theta(b))))
    };
    let base = f.instanton_x.truncate(order);
    let mut k = BTreeMap::new();
    for (&(a, b, c), v) in &f.triple {
        let d = theta_q(&theta_q(&theta_q(&base, c), b), a);
        let cl = MultiSeries::constant(r, order, Q::one(), v.clone());
        k.insert((a, b, c), d.compose(&mm.inverse).add(&cl));
    }
    YukawaCoupling {
        classical: f.triple.clone(),
        k,
    }
}

/// Rational-curve counts `N(Gamma)` by degree vector.
#[derive(Clone, Debug, PartialEq)]
pub struct InstantonTable {
    pub numbers: BTreeMap<Vec<u32>, Q>,
    pub order: u32,
}

impl InstantonTable {
    /// Rows sorted by total degree, then lex.
    pub fn rows(&self) -> Vec<(Vec<u32>, Q)> {
        let mut v: Vec<(Vec<u32>, Q)> = self.numbers.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        v.sort_by(|a, b| {
            a.0.iter()
                .sum::<u32>()
                .cmp(&b.0.iter().sum::<u32>())
                .then_with(|| a.0.cmp(&b.0))
        });
        v
    }

    pub fn get(&self, d: &[u32]) -> Option<&Q> {
        self.numbers.get(d)
    }
}

/// Triangular extraction with multi-cover subtraction.
pub fn instanton_numbers(k: &YukawaCoupling, order: u32) -> Result<InstantonTable> {
    let any = k.k.values().next().expect("at least one coupling");
    let order = order.min(any.order());
    let r = any.nvars();
    let mut numbers: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
    for d in crate::series::exponents_below(r, order) {
        if d.iter().all(|&x| x == 0) {
            continue;
        }
        let mut value: Option<Q> = None;
        for (&(a, b, c), s) in &k.k {
            let f = d[a] as i64 * d[b] as i64 * d[c] as i64;
            if f == 0 {
                continue;
            }
            let mut coef = s.coeff(&d);
            for mult in 2..=*d.iter().max().expect("nonempty") {
                if d.iter().any(|&x| x % mult != 0) {
                    continue;
                }
                let g: Vec<u32> = d.iter().map(|&x| x / mult).collect();
                let fg = g[a] as i64 * g[b] as i64 * g[c] as i64;
                coef -= numbers[&g].clone() * BigInt::from(fg);
            }
            let n = coef / BigInt::from(f);
            match &value {
                None => value = Some(n),
                Some(v) if *v != n => return Err(Error::InconsistentExtraction(d)),
                _ => {}
            }
        }
        numbers.insert(d, value.expect("some nonzero degree factor"));
    }
    Ok(InstantonTable { numbers, order })
}

/// `-1/2 int_X c(Gamma + J)/c(J)`; `ctx` must live in the hypersurface ring.
pub fn lines_number(gamma: &[u32], ctx: &GkzContext) -> Result<Q> {
    let c = coefficient_ratio(gamma, ctx)?;
    Ok(c.integrate() * Q::new((-1).into(), 2.into()))
}
