//! Chow rings of simplicial toric varieties from triangulations, integration,
//! adjunction Chern data and the toric part of the hypersurface ring.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::{ChowElement, GradedAlgebra, GradedQuotient};
use crate::lattice::{relation_lattice, MoriBasis};
use crate::linalg::{self, Matrix, Q};
use crate::poly::Poly;
use crate::triangulation::{is_maximal, stanley_reisner_generators, Triangulation};

/// `Q[D_0..D_p]/(SR + linear relations)`, presented on `r = p - d` variables
/// dual to a basis of relations.
pub struct ChowRing {
    dim: usize,
    var_names: Vec<String>,
    relations: Vec<Vec<i64>>,
    divisor_forms: Vec<Vec<Q>>,
    quotient: GradedQuotient,
    algebra: Arc<GradedAlgebra>,
}

/// Chow ring on variables dual to the relation lattice basis.
pub fn chow_ring(t: &Triangulation) -> Result<ChowRing> {
    let lat = relation_lattice(t.config());
    let names = (1..=lat.rank()).map(|c| format!("u{c}")).collect();
    build(t, lat.basis().to_vec(), names)
}

/// Chow ring on the classes `J_a` dual to a Mori basis, so that
/// `D_i = sum_a l^(a)_i J_a`.
pub fn chow_ring_in_basis(t: &Triangulation, a: &MoriBasis) -> Result<ChowRing> {
    let names = (1..=a.rank()).map(|c| format!("J{c}")).collect();
    build(t, a.vectors.clone(), names)
}

fn build(t: &Triangulation, relations: Vec<Vec<i64>>, var_names: Vec<String>) -> Result<ChowRing> {
    if !is_maximal(t) {
        return Err(Error::NotMaximal);
    }
    let d = t.config().rank();
    let n = t.config().len();
    let r = relations.len();
    let divisor_forms: Vec<Vec<Q>> = (0..n)
        .map(|k| relations.iter().map(|v| linalg::q(v[k])).collect())
        .collect();
    let dpoly = |k: usize| Poly::linear(&divisor_forms[k], Q::zero());
    let sr: Vec<Poly> = stanley_reisner_generators(t)
        .generators
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(Poly::one(r), |acc, (k, &e)| acc.mul(&dpoly(k).pow(e)))
        })
        .collect();
    let quotient = GradedQuotient::new(r, &sr, d as u32 + 1);
    if quotient.hilbert(d as u32 + 1) != 0 || quotient.hilbert(d as u32) != 1 {
        return Err(Error::Invalid("top graded piece is not one dimensional".into()));
    }
    let sigma = &t.simplices()[0];
    let vol = sigma
        .iter()
        .filter(|&&k| k != 0)
        .fold(Poly::one(r), |acc, &k| acc.mul(&dpoly(k)));
    let c = quotient.reduce_part(&vol, d as u32)[0].clone();
    let det = linalg::qz(&t.simplex_det(sigma));
    let top = (det * c).recip();
    let algebra = Arc::new(GradedAlgebra::from_quotient(&quotient, d as u32, &var_names, Some(top)));
    Ok(ChowRing {
        dim: d,
        var_names,
        relations,
        divisor_forms,
        quotient,
        algebra,
    })
}

impl ChowRing {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// The relation vectors whose dual classes are the ring variables.
    pub fn relations(&self) -> &[Vec<i64>] {
        &self.relations
    }

    pub fn element_from_poly(&self, p: &Poly) -> ChowElement {
        let mut coeffs = Vec::new();
        for k in 0..=self.dim as u32 {
            coeffs.extend(self.quotient.reduce_part(p, k));
        }
        ChowElement::new(self.algebra.clone(), coeffs)
    }

    pub fn variable(&self, c: usize) -> ChowElement {
        ChowElement::generator(&self.algebra, c)
    }

    /// Toric divisor `D_k`.
    pub fn divisor(&self, k: usize) -> ChowElement {
        self.element_from_poly(&Poly::linear(&self.divisor_forms[k], Q::zero()))
    }

    /// `[X] = D_1 + ... + D_p`.
    pub fn hypersurface_class(&self) -> ChowElement {
        (1..self.divisor_forms.len()).fold(ChowElement::zero(&self.algebra), |acc, k| acc.add(&self.divisor(k)))
    }

    /// The class `J_a` of a Mori basis, dual to `l^(a)`.
    pub fn j_class(&self, a: &MoriBasis, idx: usize) -> ChowElement {
        // l^(a) = sum_c K[a][c] v^(c) and v-variable X_c = sum_a K[a][c] J_a
        let lat = &a.lattice;
        let vq: Matrix = self
            .relations
            .iter()
            .map(|v| lat.coords_i64(v).expect("relation"))
            .collect();
        let k: Matrix = a
            .vectors
            .iter()
            .map(|l| {
                let mu = lat.coords_i64(l).expect("relation");
                let vt = linalg::transpose(&vq, vq.len());
                linalg::solve(&vt, &mu).expect("same lattice")
            })
            .collect();
        let kt = linalg::transpose(&k, k.len());
        let inv = linalg::inverse(&kt).expect("basis change");
        // J = (K^T)^{-1} X
        (0..self.relations.len()).fold(ChowElement::zero(&self.algebra), |acc, c| {
            acc.add(&self.variable(c).scale(&inv[idx][c]))
        })
    }

    pub fn hilbert_series(&self) -> Vec<usize> {
        self.algebra.hilbert_series()
    }

    /// Gram matrix of the intersection pairing on the monomial basis.
    pub fn pairing_matrix(&self) -> Matrix {
        let n = self.algebra.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut ei = vec![Q::zero(); n];
                        let mut ej = vec![Q::zero(); n];
                        ei[i] = Q::one();
                        ej[j] = Q::one();
                        ChowElement::new(self.algebra.clone(), ei)
                            .mul(&ChowElement::new(self.algebra.clone(), ej))
                            .integrate()
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn integrate_top(_r: &ChowRing, e: &ChowElement) -> Q {
    e.integrate()
}

/// `D_i = sum_a l^(a)_i J_a`.
pub fn divisor_in_j_basis(r: &ChowRing, i: usize, a: &MoriBasis) -> ChowElement {
    (0..a.rank()).fold(ChowElement::zero(r.algebra()), |acc, k| {
        acc.add(&r.j_class(a, k).scale(&linalg::q(a.entry(k, i))))
    })
}

/// `A*/Ann([X])` with lift-multiply-project multiplication.
pub struct HypersurfaceRing {
    ambient: Arc<GradedAlgebra>,
    algebra: Arc<GradedAlgebra>,
    class: ChowElement,
    ann_rows: Matrix,
    ann_pivots: Vec<usize>,
    kept: Vec<usize>,
}

pub fn hypersurface_ring(r: &ChowRing) -> HypersurfaceRing {
    let amb = r.algebra().clone();
    let n = amb.dim();
    let x = r.hypersurface_class();
    let unit = |i: usize| {
        let mut v = vec![Q::zero(); n];
        v[i] = Q::one();
        ChowElement::new(amb.clone(), v)
    };
    // columns: X * e_j
    let cols: Vec<Vec<Q>> = (0..n).map(|j| x.mul(&unit(j)).coeffs().to_vec()).collect();
    let m = linalg::transpose(&cols, n);
    let ann = linalg::nullspace(&m, n);
    let (rows, pivots) = if ann.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let (rr, p) = linalg::rref(&ann);
        (rr.into_iter().take(p.len()).collect::<Matrix>(), p)
    };
    let kept: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let project = |v: &[Q]| -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &c) in rows.iter().zip(&pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &f * b;
            }
        }
        kept.iter().map(|&i| v[i].clone()).collect()
    };
    let k = kept.len();
    let mut mult = vec![vec![vec![Q::zero(); k]; k]; k];
    for (a, &i) in kept.iter().enumerate() {
        for (b, &j) in kept.iter().enumerate() {
            mult[a][b] = project(unit(i).mul(&unit(j)).coeffs());
        }
    }
    let integral: Vec<Q> = kept.iter().map(|&i| x.mul(&unit(i)).integrate()).collect();
    let labels = kept.iter().map(|&i| amb.labels()[i].clone()).collect();
    let degrees = kept.iter().map(|&i| amb.degrees()[i]).collect();
    let generators = amb.generator_coords().iter().map(|g| project(g)).collect();
    let algebra = Arc::new(GradedAlgebra::new(
        labels,
        degrees,
        mult,
        integral,
        generators,
        amb.generator_names().to_vec(),
    ));
    HypersurfaceRing {
        ambient: amb,
        algebra,
        class: x,
        ann_rows: rows,
        ann_pivots: pivots,
        kept,
    }
}

impl HypersurfaceRing {
    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn ambient(&self) -> &Arc<GradedAlgebra> {
        &self.ambient
    }

    /// `[X]` in the ambient ring.
    pub fn class(&self) -> &ChowElement {
        &self.class
    }

    pub fn project(&self, e: &ChowElement) -> ChowElement {
        let mut v = e.coeffs().to_vec();
        for (row, &c) in self.ann_rows.iter().zip(&self.ann_pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &f * b;
            }
        }
        ChowElement::new(self.algebra.clone(), self.kept.iter().map(|&i| v[i].clone()).collect())
    }

    pub fn lift(&self, e: &ChowElement) -> ChowElement {
        let mut v = vec![Q::zero(); self.ambient.dim()];
        for (&i, c) in self.kept.iter().zip(e.coeffs()) {
            v[i] = c.clone();
        }
        ChowElement::new(self.ambient.clone(), v)
    }

    /// `int_X e = int [X] * lift(e)`.
    pub fn integrate(&self, e: &ChowElement) -> Q {
        self.class.mul(&self.lift(e)).integrate()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Total Chern class of the hypersurface and its low-degree parts.
#[derive(Clone, Debug)]
pub struct ChernData {
    /// `c(X)` in the ambient ring
    pub total: ChowElement,
    pub c1: ChowElement,
    pub c2: ChowElement,
    pub c3: ChowElement,
    pub euler: Q,
}

/// Adjunction: `c(X) = prod_i (1 + J.l_i) / (1 - J.l_0)`.
pub fn chern_data(r: &ChowRing, a: &MoriBasis) -> ChernData {
    let alg = r.algebra();
    let n = a.lattice.ambient();
    let one = ChowElement::one(alg);
    let num = (1..n).fold(one.clone(), |acc, i| acc.mul(&one.add(&divisor_in_j_basis(r, i, a))));
    let den = one.sub(&divisor_in_j_basis(r, 0, a));
    let total = num.mul(&den.inverse().expect("unit scalar part"));
    let x = r.hypersurface_class();
    let c3 = total.part(3);
    let euler = x.mul(&total.part(r.dim().saturating_sub(1))).integrate();
    ChernData {
        c1: total.part(1),
        c2: total.part(2),
        c3,
        total,
        euler,
    }
}

/// Euler characteristic of the hypersurface: top-degree part of `[X] c(X)`.
pub fn euler_characteristic(r: &ChowRing, data: &ChernData) -> Q {
    let d = r.dim();
    if d == 0 {
        return Q::zero();
    }
    r.hypersurface_class().mul(&data.total.part(d - 1)).integrate()
}
