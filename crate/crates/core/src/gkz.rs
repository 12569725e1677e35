//! GKZ series in a Mori chart: exact coefficient ratios with nilpotent shift,
//! graded series bundles, psi-function values and operator application.
//!
//! Chow elements are formal: the degree-`k` part stands for `(2 pi i)^{-k}`
//! times the same class, so `J` here plays the role of `J / 2 pi i`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chow::{divisor_in_j_basis, ChowRing, HypersurfaceRing};
use crate::constants::{SymChow, SymbolicConstant};
use crate::error::{Error, Result};
use crate::graded::{ChowElement, GradedAlgebra};
use crate::lattice::MoriBasis;
use crate::linalg::Q;
use crate::series::{exponents_below, MultiSeries};

/// A Mori basis together with the classes `J.l_i` in some graded algebra.
#[derive(Clone)]
pub struct GkzContext {
    pub basis: MoriBasis,
    /// `J.l_i` for `i = 0..=p`
    pub jl: Vec<ChowElement>,
}

impl GkzContext {
    /// Classes in the ambient Chow ring.
    pub fn ambient(ring: &ChowRing, a: &MoriBasis) -> Self {
        let n = a.lattice.ambient();
        Self {
            basis: a.clone(),
            jl: (0..n).map(|i| divisor_in_j_basis(ring, i, a)).collect(),
        }
    }

    /// Classes projected to the hypersurface ring.
    pub fn hypersurface(ring: &ChowRing, hx: &HypersurfaceRing, a: &MoriBasis) -> Self {
        let amb = Self::ambient(ring, a);
        Self {
            basis: a.clone(),
            jl: amb.jl.iter().map(|e| hx.project(e)).collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        self.jl[0].algebra()
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn one(&self) -> ChowElement {
        ChowElement::one(self.algebra())
    }

    /// `m = sum_a n_a l^(a)`.
    pub fn exponents(&self, n: &[u32]) -> Vec<i64> {
        let n: Vec<i64> = n.iter().map(|&x| x as i64).collect();
        self.basis.relation(&n)
    }
}

fn qi(x: i64) -> Q {
    Q::from(BigInt::from(x))
}

/// `c(n + J) / c(J)` as an exact finite product of Gamma-shift factors.
pub fn coefficient_ratio(n: &[u32], ctx: &GkzContext) -> Result<ChowElement> {
    let m = ctx.exponents(n);
    let one = ctx.one();
    let mut num: Vec<ChowElement> = Vec::new();
    let mut den: Vec<ChowElement> = Vec::new();
    let minus_d0 = ctx.jl[0].neg();
    if m[0] <= 0 {
        for j in 1..=-m[0] {
            num.push(minus_d0.add_scalar(&qi(j)));
        }
    } else {
        for j in 0..m[0] {
            den.push(minus_d0.add_scalar(&qi(-j)));
        }
    }
    for i in 1..m.len() {
        let d = &ctx.jl[i];
        if m[i] > 0 {
            for j in 1..=m[i] {
                den.push(d.add_scalar(&qi(j)));
            }
        } else {
            for j in 0..-m[i] {
                num.push(d.add_scalar(&qi(-j)));
            }
        }
    }
    let mut inv = Vec::new();
    for f in den {
        if f.scalar_part().is_zero() {
            match num.iter().position(|g| *g == f) {
                Some(k) => {
                    num.swap_remove(k);
                }
                None => return Err(Error::SingularCoefficient),
            }
        } else {
            inv.push(f.inverse().expect("nonzero scalar part"));
        }
    }
    Ok(num.iter().chain(&inv).fold(one, |acc, f| acc.mul(f)))
}

/// Power series `sum_n ratio(n) x^n` and its graded parts.
#[derive(Clone, Debug)]
pub struct GradedSeriesBundle {
    /// `sum_n c(n+J)/c(J) x^n`
    pub ratio: MultiSeries<ChowElement>,
    /// degree-0 part
    pub w0: MultiSeries<Q>,
    /// `tilde_r[k] = k! * (degree-k part of ratio)`, `k = 0..=3`
    pub tilde_r: Vec<MultiSeries<ChowElement>>,
}

#[derive(Clone, Copy, Debug)]
pub struct SeriesOptions {
    pub order: u32,
    /// Keep only exponents with `n.l_0 <= 0`.
    pub restrict_origin_sign: bool,
}

pub fn w0_series(ctx: &GkzContext, order: u32) -> Result<GradedSeriesBundle> {
    w0_series_with(
        ctx,
        SeriesOptions {
            order,
            restrict_origin_sign: false,
        },
    )
}

pub fn w0_series_with(ctx: &GkzContext, opts: SeriesOptions) -> Result<GradedSeriesBundle> {
    let r = ctx.rank();
    let one = ctx.one();
    let mut ratio = MultiSeries::zero(r, opts.order, one.clone());
    for n in exponents_below(r, opts.order) {
        if opts.restrict_origin_sign && ctx.exponents(&n)[0] > 0 {
            continue;
        }
        ratio.set(n.clone(), coefficient_ratio(&n, ctx)?);
    }
    Ok(bundle_from_ratio(ratio))
}

pub fn bundle_from_ratio(ratio: MultiSeries<ChowElement>) -> GradedSeriesBundle {
    let w0 = ratio.map(Q::one(), |c| c.scalar_part());
    let mut tilde_r = Vec::new();
    let mut fact = Q::one();
    for k in 0..=3usize {
        if k > 0 {
            fact *= qi(k as i64);
        }
        tilde_r.push(ratio.map(ratio.unit().clone(), |c| c.part(k).scale(&fact)));
    }
    GradedSeriesBundle { ratio, w0, tilde_r }
}

fn harmonic(m: i64, power: u32) -> Q {
    (1..=m).fold(Q::zero(), |acc, j| acc + num_traits::pow(qi(j), power as usize).recip())
}

/// `psi^(k)(1 + m)` for `k = 0, 1, 2`.
pub fn polygamma_at(k: usize, m: i64) -> Result<SymbolicConstant> {
    if m < 0 {
        return Err(Error::DomainShift(1 + m));
    }
    Ok(match k {
        0 => SymbolicConstant::gamma()
            .scale(&-Q::one())
            .add(&SymbolicConstant::rational(harmonic(m, 1))),
        1 => SymbolicConstant::pi2()
            .scale(&Q::new(1.into(), 6.into()))
            .sub(&SymbolicConstant::rational(harmonic(m, 2))),
        2 => SymbolicConstant::zeta3()
            .scale(&qi(-2))
            .add(&SymbolicConstant::rational(harmonic(m, 3) * qi(2))),
        _ => unreachable!("only psi, psi', psi''"),
    })
}

/// `Psi^(1), Psi^(2), Psi^(3)` at `n`.
pub fn psi_values(n: &[u32], ctx: &GkzContext) -> Result<[SymChow; 3]> {
    let m = ctx.exponents(n);
    let alg = ctx.algebra();
    let mut out: [SymChow; 3] = std::array::from_fn(|_| SymChow::zero(alg));
    // sign per (k, origin?) from the Taylor expansion of log Gamma
    let origin_sign = [-1i64, 1, -1];
    for k in 0..3 {
        let p0 = polygamma_at(k, -m[0])?;
        let e0 = ctx.jl[0].pow(k as u32 + 1).scale(&qi(origin_sign[k]));
        let mut acc = SymChow::constant_times(&p0, &e0);
        for i in 1..m.len() {
            let pi = polygamma_at(k, m[i])?;
            let ei = ctx.jl[i].pow(k as u32 + 1).neg();
            acc = acc.add(&SymChow::constant_times(&pi, &ei));
        }
        out[k] = acc;
    }
    Ok(out)
}

/// `exp(Psi1 + Psi2/2 + Psi3/6)`.
pub fn exp_psi(psi: &[SymChow; 3]) -> Result<SymChow> {
    let arg = psi[0]
        .add(&psi[1].scale(&Q::new(1.into(), 2.into())))
        .add(&psi[2].scale(&Q::new(1.into(), 6.into())));
    arg.exp_nilpotent()
}

/// `c(n + J)` with the transcendental constants of `c(J)` made explicit.
pub fn full_coefficient(n: &[u32], ctx: &GkzContext) -> Result<SymChow> {
    let e0 = exp_psi(&psi_values(&vec![0; ctx.rank()], ctx)?)?;
    e0.mul(&SymChow::from_element(&coefficient_ratio(n, ctx)?))
}

/// `c(n) exp(Psi(n))`, defined where the psi arguments stay positive.
pub fn full_coefficient_via_psi(n: &[u32], ctx: &GkzContext) -> Result<SymChow> {
    let psi = psi_values(n, ctx)?;
    let c = coefficient_ratio(n, ctx)?.scalar_part();
    Ok(exp_psi(&psi)?.scale(&c))
}

/// The leading and trailing theta-polynomials of `D_l` evaluated on `x^m`.
fn theta_product(part: &[i64], eig: &[i64]) -> Q {
    let mut p = Q::one();
    for (&u, &e) in part.iter().zip(eig) {
        for j in 0..u {
            p *= qi(e - j);
        }
    }
    p
}

/// `a^{l+} D_l` applied to `a_0^{-1} f(x)`, divided by `a_0^{-1}` and written as
/// `x^{n-} P_+(theta) f - (-1)^{l_0} x^{n+} P_-(theta) f` with `l = A n`.
pub fn apply_gkz_operator(l: &[i64], s: &MultiSeries<Q>, a: &MoriBasis) -> Result<MultiSeries<Q>> {
    let n = a
        .expand(l)
        .ok_or_else(|| Error::Invalid(format!("{l:?} is not in the lattice spanned by the basis")))?;
    let r = a.rank();
    let lp: Vec<i64> = l.iter().map(|&x| x.max(0)).collect();
    let lm: Vec<i64> = l.iter().map(|&x| (-x).max(0)).collect();
    let np: Vec<u32> = n.iter().map(|&x| x.max(0) as u32).collect();
    let nm: Vec<u32> = n.iter().map(|&x| (-x).max(0) as u32).collect();
    let sign = if l[0].rem_euclid(2) == 0 { Q::one() } else { -Q::one() };
    let dp: u32 = np.iter().sum();
    let dm: u32 = nm.iter().sum();
    let order = s.order() + dp.min(dm);
    let mut out = MultiSeries::zero(r, order, Q::one());
    for (m, c) in s.terms() {
        let mi: Vec<i64> = m.iter().map(|&x| x as i64).collect();
        let mut eig = a.relation(&mi);
        eig[0] -= 1;
        let plus = theta_product(&lp, &eig);
        let minus = theta_product(&lm, &eig);
        let e1: Vec<u32> = m.iter().zip(&nm).map(|(x, y)| x + y).collect();
        let e2: Vec<u32> = m.iter().zip(&np).map(|(x, y)| x + y).collect();
        let v1 = out.coeff(&e1) + c * plus;
        out.set(e1, v1);
        let v2 = out.coeff(&e2) - c * minus * &sign;
        out.set(e2, v2);
    }
    Ok(out)
}
