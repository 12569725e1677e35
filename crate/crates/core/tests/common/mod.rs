#![allow(dead_code)]

pub mod quintic_oracle;

use gkz_lcsl::chow::{chow_ring_in_basis, hypersurface_ring, ChowRing, HypersurfaceRing};
use gkz_lcsl::groebner::{toric_ideal_gb, GroebnerBasis, TermOrder};
use gkz_lcsl::lattice::{mori_basis, relation_lattice, MoriBasis, RelationLattice, TauChoice};
use gkz_lcsl::linalg::Q;
use gkz_lcsl::polytope::{gauge_point_set, LatticePolytope, PointConfiguration};
use gkz_lcsl::triangulation::{find_maximal_weight, Triangulation, WeightVector};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn quintic_star() -> LatticePolytope {
    LatticePolytope::new(
        4,
        vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![-1, -1, -1, -1],
        ],
    )
    .unwrap()
}

pub fn p1p3_star() -> LatticePolytope {
    LatticePolytope::new(
        4,
        vec![
            vec![1, 0, 0, 0],
            vec![-1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![0, -1, -1, -1],
        ],
    )
    .unwrap()
}

pub fn p11222_star() -> LatticePolytope {
    LatticePolytope::new(
        4,
        vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![-1, -2, -2, -2],
        ],
    )
    .unwrap()
}

pub fn p112_star() -> LatticePolytope {
    LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -2]]).unwrap()
}

pub fn quintic() -> PointConfiguration {
    gauge_point_set(&quintic_star()).unwrap()
}

/// Square with opposite vertices adjacent in the index order.
pub fn square() -> PointConfiguration {
    PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap()
}

pub fn p1p3() -> PointConfiguration {
    gauge_point_set(&p1p3_star()).unwrap()
}

pub fn p11222() -> PointConfiguration {
    gauge_point_set(&p11222_star()).unwrap()
}

/// Gauge set of P(1,1,2): the cone over the long edge has volume 2.
pub fn p112() -> PointConfiguration {
    gauge_point_set(&p112_star()).unwrap()
}

pub fn shipped() -> Vec<(&'static str, PointConfiguration)> {
    vec![
        ("quintic", quintic()),
        ("square", square()),
        ("p1p3", p1p3()),
        ("p112", p112()),
    ]
}

/// A maximal triangulation and its weight; unimodular when one exists.
pub fn maximal(cfg: &PointConfiguration) -> (WeightVector, Triangulation) {
    let (found, _) = find_maximal_weight(cfg, true, 256, 7);
    let found = found.or_else(|| find_maximal_weight(cfg, false, 256, 7).0);
    found.expect("maximal triangulation")
}

pub struct Model {
    pub weight: WeightVector,
    pub t: Triangulation,
    pub lattice: RelationLattice,
    pub gb: GroebnerBasis,
    pub a: MoriBasis,
    pub ring: ChowRing,
    pub hx: HypersurfaceRing,
}

pub fn model(cfg: &PointConfiguration) -> Model {
    let (weight, t) = maximal(cfg);
    let lattice = relation_lattice(cfg);
    let gb = toric_ideal_gb(&lattice, &TermOrder::new(weight.clone())).unwrap();
    let a = mori_basis(&t, TauChoice::Auto).unwrap();
    let ring = chow_ring_in_basis(&t, &a).unwrap();
    let hx = hypersurface_ring(&ring);
    Model {
        weight,
        t,
        lattice,
        gb,
        a,
        ring,
        hx,
    }
}

/// Solve a square system by fraction-exact Gaussian elimination.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].clone().recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n].clone()).collect())
}

/// Integer determinant by cofactor expansion.
pub fn det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn harmonic(n: i64) -> Q {
    (1..=n).fold(Q::zero(), |acc, k| acc + qr(1, k))
}
