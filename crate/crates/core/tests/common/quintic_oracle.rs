//! Quintic periods in one variable with coefficients in Q[J]/(J^4),
//! integrated by int_X J^3 = 5, written out without the library.

use num_traits::Zero;

use super::{q, qr};
use gkz_lcsl::linalg::Q;


pub type Cl = [Q; 4];
pub type Ser = Vec<Cl>;

fn zero() -> Cl {
    std::array::from_fn(|_| Q::zero())
}

pub fn scalar(x: Q) -> Cl {
    let mut c = zero();
    c[0] = x;
    c
}

pub fn cl_mul(a: &Cl, b: &Cl) -> Cl {
    let mut c = zero();
    for i in 0..4 {
        for j in 0..4 - i {
            c[i + j] += &a[i] * &b[j];
        }
    }
    c
}

/// Inverse of a class with nonzero scalar part.
pub fn cl_inv(a: &Cl) -> Cl {
    let mut x = zero();
    x[0] = a[0].recip();
    for k in 1..4 {
        let s = (1..=k).fold(Q::zero(), |acc, i| acc + &a[i] * &x[k - i]);
        x[k] = -s / &a[0];
    }
    x
}

/// `c(n + J) / c(J)` for the quintic by expanding every factor.
pub fn ratio(n: i64) -> Cl {
    let mut num = scalar(q(1));
    for k in 1..=5 * n {
        num = cl_mul(&num, &[q(k), q(5), q(0), q(0)]);
    }
    let mut den = scalar(q(1));
    for k in 1..=n {
        for _ in 0..5 {
            den = cl_mul(&den, &[q(k), q(1), q(0), q(0)]);
        }
    }
    cl_mul(&num, &cl_inv(&den))
}

pub fn mul(a: &Ser, b: &Ser) -> Ser {
    let n = a.len();
    let mut c = vec![zero(); n];
    for i in 0..n {
        for j in 0..n - i {
            let t = cl_mul(&a[i], &b[j]);
            for k in 0..4 {
                c[i + j][k] += &t[k];
            }
        }
    }
    c
}

/// log of a series whose constant term is 1, from f log(f)' = f'.
pub fn log(f: &Ser) -> Ser {
    let n = f.len();
    let mut g = vec![zero(); n];
    for k in 1..n {
        // k g_k = k f_k - sum_{i=1}^{k-1} i g_i f_{k-i}
        let mut s = f[k].clone().map(|x| x * q(k as i64));
        for i in 1..k {
            let t = cl_mul(&g[i], &f[k - i]);
            for c in 0..4 {
                s[c] -= &t[c] * q(i as i64);
            }
        }
        g[k] = s.map(|x| x / q(k as i64));
    }
    g
}

pub fn scalar_series(s: &[Q]) -> Ser {
    s.iter().map(|x| scalar(x.clone())).collect()
}

pub fn part(s: &Ser, k: usize) -> Vec<Q> {
    s.iter().map(|c| c[k].clone()).collect()
}

pub fn smul(a: &[Q], b: &[Q]) -> Vec<Q> {
    part(&mul(&scalar_series(a), &scalar_series(b)), 0)
}

pub fn sexp(a: &[Q]) -> Vec<Q> {
    let n = a.len();
    let mut e = vec![Q::zero(); n];
    e[0] = q(1);
    // k e_k = sum_{i=1}^k i a_i e_{k-i}
    for k in 1..n {
        let s = (1..=k).fold(Q::zero(), |acc, i| acc + q(i as i64) * &a[i] * &e[k - i]);
        e[k] = s / q(k as i64);
    }
    e
}

pub fn compose(f: &[Q], x: &[Q]) -> Vec<Q> {
    let n = f.len();
    let mut out = vec![Q::zero(); n];
    let mut p = vec![Q::zero(); n];
    p[0] = q(1);
    for fk in f {
        for i in 0..n {
            out[i] += fk * &p[i];
        }
        p = smul(&p, x);
    }
    out
}

/// Mirror map inverse: solve x e^{g(x)} = q one coefficient at a time.
pub fn invert(g: &[Q]) -> Vec<Q> {
    let n = g.len();
    let mut x = vec![Q::zero(); n];
    x[1] = q(1);
    for k in 2..n {
        let lhs = smul(&x, &sexp(&compose(g, &x)));
        x[k] -= &lhs[k];
    }
    x
}

pub struct Quintic {
    pub g: Vec<Q>,
    pub x: Vec<Q>,
    pub n: Vec<Q>,
}

pub fn quintic(order: usize) -> Quintic {
    let w: Ser = (0..order as i64).map(ratio).collect();
    let w0 = part(&w, 0);
    let w1 = part(&w, 1);
    let mut w0inv = vec![Q::zero(); order];
    w0inv[0] = q(1);
    for k in 1..order {
        let s = (1..=k).fold(Q::zero(), |acc, i| acc + &w0[i] * &w0inv[k - i]);
        w0inv[k] = -s;
    }
    let g = smul(&w1, &w0inv);
    let x = invert(&g);
    let f_x: Vec<Q> = part(&log(&w), 3).into_iter().map(|c| c * q(5) * qr(-1, 2)).collect();
    let f_q = compose(&f_x, &x);
    // K = 5 + sum d^3 F_d q^d = 5 + sum_d N_d d^3 q^d / (1 - q^d)
    let mut n = vec![Q::zero(); order];
    for d in 1..order {
        let d3 = q((d * d * d) as i64);
        let mut c = &f_q[d] * &d3;
        for e in 1..d {
            if d % e == 0 {
                c -= &n[e] * q((e * e * e) as i64);
            }
        }
        n[d] = c / d3;
    }
    Quintic { g, x, n }
}
