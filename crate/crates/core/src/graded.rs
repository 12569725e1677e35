//! Graded quotients of polynomial rings by homogeneous ideals, computed degree
//! by degree with linear algebra, and finite-dimensional graded algebras.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::linalg::{self, Matrix, Q};
use crate::poly::{monomials_of_degree, Poly};

struct Piece {
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    rows: Matrix,
    pivots: Vec<usize>,
    standard: Vec<usize>,
}

/// `Q[x_1..x_n] / I` in degrees `0..=max_degree` for homogeneous `I`.
pub struct GradedQuotient {
    nvars: usize,
    pieces: Vec<Piece>,
}

impl GradedQuotient {
    pub fn new(nvars: usize, gens: &[Poly], max_degree: u32) -> Self {
        let gens: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
        let mut pieces = Vec::new();
        for k in 0..=max_degree {
            let monomials = monomials_of_degree(nvars, k);
            let index: HashMap<Vec<u32>, usize> =
                monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut span: Matrix = Vec::new();
            for g in &gens {
                let e = g.total_degree().unwrap_or(0);
                if e > k {
                    continue;
                }
                let g = g.part(e);
                for m in monomials_of_degree(nvars, k - e) {
                    let prod = g.mul(&Poly::monomial(m, Q::one()));
                    let mut row = vec![Q::zero(); monomials.len()];
                    for (exp, c) in prod.terms() {
                        row[index[exp]] = c.clone();
                    }
                    span.push(row);
                }
            }
            let (rows, pivots) = if span.is_empty() {
                (Vec::new(), Vec::new())
            } else {
                let (r, p) = linalg::rref(&span);
                (r.into_iter().take(p.len()).collect(), p)
            };
            let standard = (0..monomials.len()).filter(|i| !pivots.contains(i)).collect();
            pieces.push(Piece {
                monomials,
                index,
                rows,
                pivots,
                standard,
            });
        }
        Self { nvars, pieces }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> u32 {
        self.pieces.len() as u32 - 1
    }

    pub fn hilbert(&self, k: u32) -> usize {
        self.pieces[k as usize].standard.len()
    }

    pub fn hilbert_series(&self) -> Vec<usize> {
        (0..=self.max_degree()).map(|k| self.hilbert(k)).collect()
    }

    pub fn standard_monomials(&self, k: u32) -> Vec<Vec<u32>> {
        let p = &self.pieces[k as usize];
        p.standard.iter().map(|&i| p.monomials[i].clone()).collect()
    }

    /// Coordinates of the degree-`k` part of `f` on the standard monomials.
    pub fn reduce_part(&self, f: &Poly, k: u32) -> Vec<Q> {
        let p = &self.pieces[k as usize];
        let mut v = vec![Q::zero(); p.monomials.len()];
        for (e, c) in f.part(k).terms() {
            v[p.index[e]] += c;
        }
        for (row, &c) in p.rows.iter().zip(&p.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        p.standard.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for k in 0..=self.max_degree() {
            for (c, m) in self.reduce_part(f, k).into_iter().zip(self.standard_monomials(k)) {
                out.add_term(m, c);
            }
        }
        out
    }
}

/// A finite-dimensional graded commutative algebra with a linear functional on
/// its top piece.
pub struct GradedAlgebra {
    labels: Vec<String>,
    degrees: Vec<usize>,
    mult: Vec<Vec<Vec<Q>>>,
    integral: Vec<Q>,
    generators: Vec<Vec<Q>>,
    generator_names: Vec<String>,
}

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedAlgebra")
            .field("labels", &self.labels)
            .field("degrees", &self.degrees)
            .finish()
    }
}

impl GradedAlgebra {
    /// Basis element 0 must be the unit. `generators` are degree-1 elements
    /// used for display.
    pub fn new(
        labels: Vec<String>,
        degrees: Vec<usize>,
        mult: Vec<Vec<Vec<Q>>>,
        integral: Vec<Q>,
        generators: Vec<Vec<Q>>,
        generator_names: Vec<String>,
    ) -> Self {
        Self {
            labels,
            degrees,
            mult,
            integral,
            generators,
            generator_names,
        }
    }

    /// The algebra `Q[x]/I` truncated at `top`, with monomial labels.
    pub fn from_quotient(quot: &GradedQuotient, top: u32, names: &[String], integral_top: Option<Q>) -> Self {
        let mut monos: Vec<Vec<u32>> = Vec::new();
        let mut degrees = Vec::new();
        for k in 0..=top {
            for m in quot.standard_monomials(k) {
                monos.push(m);
                degrees.push(k as usize);
            }
        }
        let n = monos.len();
        let mut mult = vec![vec![vec![Q::zero(); n]; n]; n];
        for i in 0..n {
            for j in i..n {
                let k = degrees[i] + degrees[j];
                if k as u32 > top {
                    continue;
                }
                let e: Vec<u32> = monos[i].iter().zip(&monos[j]).map(|(a, b)| a + b).collect();
                let coords = quot.reduce_part(&Poly::monomial(e, Q::one()), k as u32);
                let offset = degrees.iter().position(|&d| d == k).unwrap_or(n);
                for (t, c) in coords.into_iter().enumerate() {
                    mult[i][j][offset + t] = c.clone();
                    mult[j][i][offset + t] = c;
                }
            }
        }
        let mut integral = vec![Q::zero(); n];
        if let Some(v) = integral_top {
            for (i, d) in degrees.iter().enumerate() {
                if *d as u32 == top {
                    integral[i] = v.clone();
                }
            }
        }
        let labels = monos
            .iter()
            .map(|m| crate::groebner::monomial_string(m, names))
            .collect();
        let generators = (0..quot.nvars())
            .map(|i| {
                let mut e = vec![0; quot.nvars()];
                e[i] = 1;
                let mut v = vec![Q::zero(); n];
                if top >= 1 {
                    let coords = quot.reduce_part(&Poly::monomial(e, Q::one()), 1);
                    let offset = degrees.iter().position(|&d| d == 1).unwrap_or(n);
                    for (t, c) in coords.into_iter().enumerate() {
                        v[offset + t] = c;
                    }
                }
                v
            })
            .collect();
        Self {
            labels,
            degrees,
            mult,
            integral,
            generators,
            generator_names: names.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn hilbert_series(&self) -> Vec<usize> {
        let mut h = vec![0; self.top_degree() + 1];
        for &d in &self.degrees {
            h[d] += 1;
        }
        h
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn mult_table(&self) -> &[Vec<Vec<Q>>] {
        &self.mult
    }

    pub fn integral_functional(&self) -> &[Q] {
        &self.integral
    }

    pub fn generator_coords(&self) -> &[Vec<Q>] {
        &self.generators
    }
}

/// An element of a `GradedAlgebra` with rational coefficients.
#[derive(Clone)]
pub struct ChowElement {
    alg: Arc<GradedAlgebra>,
    coeffs: Vec<Q>,
}

impl PartialEq for ChowElement {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg) && self.coeffs == o.coeffs
    }
}

impl fmt::Debug for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(&self.alg.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| {
                if l == "1" {
                    c.to_string()
                } else if c.is_one() {
                    l.clone()
                } else if *c == -Q::one() {
                    format!("-{l}")
                } else {
                    format!("{c}*{l}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + ").replace("+ -", "- "))
        }
    }
}

impl ChowElement {
    pub fn new(alg: Arc<GradedAlgebra>, coeffs: Vec<Q>) -> Self {
        assert_eq!(coeffs.len(), alg.dim());
        Self { alg, coeffs }
    }

    pub fn zero(alg: &Arc<GradedAlgebra>) -> Self {
        Self::new(alg.clone(), vec![Q::zero(); alg.dim()])
    }

    pub fn scalar(alg: &Arc<GradedAlgebra>, c: Q) -> Self {
        let mut e = Self::zero(alg);
        e.coeffs[0] = c;
        e
    }

    pub fn one(alg: &Arc<GradedAlgebra>) -> Self {
        Self::scalar(alg, Q::one())
    }

    /// The `i`-th degree-1 generator of the presentation.
    pub fn generator(alg: &Arc<GradedAlgebra>, i: usize) -> Self {
        Self::new(alg.clone(), alg.generators[i].clone())
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.alg
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scalar_part(&self) -> Q {
        self.coeffs[0].clone()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.alg.clone(),
            self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            self.alg.clone(),
            self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.alg.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add_scalar(&self, c: &Q) -> Self {
        let mut e = self.clone();
        e.coeffs[0] += c;
        e
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.alg.dim();
        let mut out = vec![Q::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, m) in self.alg.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &ab * m;
                    }
                }
            }
        }
        Self::new(self.alg.clone(), out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.alg), |acc, _| acc.mul(self))
    }

    /// Homogeneous component of degree `k`.
    pub fn part(&self, k: usize) -> Self {
        Self::new(
            self.alg.clone(),
            self.coeffs
                .iter()
                .zip(&self.alg.degrees)
                .map(|(c, &d)| if d == k { c.clone() } else { Q::zero() })
                .collect(),
        )
    }

    pub fn integrate(&self) -> Q {
        linalg::dot(&self.coeffs, &self.alg.integral)
    }

    /// Inverse when the scalar part is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        let s = self.scalar_part();
        if s.is_zero() {
            return None;
        }
        let nil = self.scale(&s.recip()).add_scalar(&-Q::one());
        let mut term = Self::one(&self.alg);
        let mut sum = Self::one(&self.alg);
        for _ in 0..self.alg.top_degree() {
            term = term.mul(&nil).neg();
            sum = sum.add(&term);
        }
        Some(sum.scale(&s.recip()))
    }
}
