//! Relation lattice, Gale transform and Mori bases.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Q};
use crate::polytope::PointConfiguration;
use crate::triangulation::{secondary_cone, Triangulation};

/// Z-basis of the integer relations among the homogenized points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationLattice {
    basis: Vec<Vec<i64>>,
    len: usize,
}

pub fn relation_lattice(config: &PointConfiguration) -> RelationLattice {
    let basis = linalg::integer_kernel(&config.point_matrix(), config.len())
        .into_iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("relation overflow")).collect())
        .collect();
    RelationLattice {
        basis,
        len: config.len(),
    }
}

impl RelationLattice {
    pub fn from_basis(len: usize, basis: Vec<Vec<i64>>) -> Self {
        Self { basis, len }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Number of configuration points, p+1.
    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    fn basis_t(&self) -> Matrix {
        (0..self.len)
            .map(|i| self.basis.iter().map(|b| linalg::q(b[i])).collect())
            .collect()
    }

    /// Coordinates `mu` with `l = sum_c mu_c b^(c)`, if `l` lies in the real span.
    pub fn coords(&self, l: &[Q]) -> Option<Vec<Q>> {
        if self.basis.is_empty() {
            return l.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        let mu = linalg::solve(&self.basis_t(), l)?;
        Some(mu)
    }

    pub fn coords_i64(&self, l: &[i64]) -> Option<Vec<Q>> {
        self.coords(&linalg::to_q_vec(l))
    }

    pub fn contains(&self, l: &[i64]) -> bool {
        self.coords_i64(l)
            .is_some_and(|mu| mu.iter().all(|x| x.is_integer()))
    }

    pub fn combine(&self, mu: &[Q]) -> Vec<Q> {
        (0..self.len)
            .map(|i| {
                self.basis
                    .iter()
                    .zip(mu)
                    .fold(Q::zero(), |acc, (b, m)| acc + m * BigInt::from(b[i]))
            })
            .collect()
    }

    /// Reduced (Gale) coordinates `z_c = w . b^(c)` of a weight.
    pub fn reduce_weight(&self, w: &[Q]) -> Vec<Q> {
        self.basis.iter().map(|b| linalg::dot_i64(w, b)).collect()
    }

    /// A weight with the given reduced coordinates.
    pub fn lift_weight(&self, z: &[Q]) -> Vec<Q> {
        if self.basis.is_empty() {
            return vec![Q::zero(); self.len];
        }
        let m = linalg::to_q_matrix(&self.basis);
        linalg::solve(&m, z).expect("relation basis has full row rank")
    }
}

/// The quotient map onto the cokernel of the point matrix, modulo torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleTransform {
    pub matrix: Vec<Vec<i64>>,
    pub torsion: Vec<BigInt>,
}

pub fn gale_transform(config: &PointConfiguration) -> GaleTransform {
    let l = relation_lattice(config);
    let a: Vec<Vec<BigInt>> = config
        .point_matrix()
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let torsion = linalg::smith_invariants(&a)
        .into_iter()
        .filter(|x| !x.is_one())
        .collect();
    GaleTransform {
        matrix: l.basis,
        torsion,
    }
}

impl GaleTransform {
    pub fn apply(&self, w: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|b| b.iter().zip(w).map(|(x, y)| x * y).sum())
            .collect()
    }

    pub fn column(&self, i: usize) -> Vec<i64> {
        self.matrix.iter().map(|b| b[i]).collect()
    }
}

pub fn dual_cone(c: &Cone) -> Cone {
    c.dual()
}

/// Z-basis of L dual to the rays of a simplicial regular cone in reduced coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct MoriBasis {
    /// l^(1..r) in Z^{p+1}
    pub vectors: Vec<Vec<i64>>,
    /// coordinates of each l^(a) in the relation lattice basis
    pub coords: Vec<Vec<i64>>,
    /// rays of tau in reduced coordinates; ray a is the class J_a
    pub rays: Vec<Vec<i64>>,
    #[serde(skip)]
    pub tau: Cone,
    #[serde(skip)]
    pub lattice: RelationLattice,
}

pub enum TauChoice {
    Auto,
    Cone(Cone),
}

fn ray_report(rays: &Matrix) -> Vec<Vec<String>> {
    rays.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

fn int_rows(m: &Matrix) -> Vec<Vec<i64>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_integer().to_i64().expect("integer entry"))
                .collect()
        })
        .collect()
}

/// Mori basis from a cone `tau` in reduced coordinates.
pub fn mori_basis_for_cone(lattice: &RelationLattice, tau: &Cone) -> Result<MoriBasis> {
    let r = lattice.rank();
    let (mut rays, lin) = tau.rays_and_lineality();
    rays.sort_by(|a, b| b.cmp(a));
    if !lin.is_empty() || rays.len() != r || linalg::rank(&rays) != r {
        return Err(Error::NotSimplicial(ray_report(&rays)));
    }
    if !linalg::det(&rays).abs().is_one() {
        return Err(Error::NotRegular(ray_report(&rays)));
    }
    let rt = linalg::transpose(&rays, r);
    let m = linalg::inverse(&rt).expect("regular cone");
    let coords = int_rows(&m);
    let vectors = m
        .iter()
        .map(|mu| {
            lattice
                .combine(mu)
                .iter()
                .map(|x| x.to_integer().to_i64().expect("integer relation"))
                .collect()
        })
        .collect();
    Ok(MoriBasis {
        vectors,
        coords,
        rays: int_rows(&rays),
        tau: tau.clone(),
        lattice: lattice.clone(),
    })
}

/// Mori basis of a triangulation. `Auto` uses the secondary cone of `t`.
pub fn mori_basis(t: &Triangulation, tau: TauChoice) -> Result<MoriBasis> {
    let lattice = relation_lattice(t.config());
    let tau = match tau {
        TauChoice::Auto => secondary_cone(t)?,
        TauChoice::Cone(c) => c,
    };
    mori_basis_for_cone(&lattice, &tau)
}

impl MoriBasis {
    /// Build from explicit relation vectors, which must form a Z-basis of L.
    pub fn from_vectors(lattice: &RelationLattice, vectors: Vec<Vec<i64>>) -> Result<Self> {
        let r = lattice.rank();
        let mut coords_q = Vec::new();
        for v in &vectors {
            let mu = lattice
                .coords_i64(v)
                .ok_or_else(|| Error::Invalid(format!("{v:?} is not a relation")))?;
            coords_q.push(mu);
        }
        if vectors.len() != r || !linalg::det(&coords_q).abs().is_one() {
            return Err(Error::Invalid("vectors do not form a Z-basis".into()));
        }
        // rays R with M R^T = I
        let inv = linalg::inverse(&coords_q).expect("unimodular");
        let rays = linalg::transpose(&inv, r);
        let tau = Cone::from_generators(r, rays.clone());
        Ok(MoriBasis {
            vectors,
            coords: int_rows(&coords_q),
            rays: int_rows(&rays),
            tau,
            lattice: lattice.clone(),
        })
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Entry `l^(a)_i`.
    pub fn entry(&self, a: usize, i: usize) -> i64 {
        self.vectors[a][i]
    }

    /// Relation `sum_a n_a l^(a)`.
    pub fn relation(&self, n: &[i64]) -> Vec<i64> {
        let len = self.lattice.ambient();
        (0..len)
            .map(|i| n.iter().zip(&self.vectors).map(|(k, v)| k * v[i]).sum())
            .collect()
    }

    /// Coordinates of a relation in this basis.
    pub fn expand(&self, l: &[i64]) -> Option<Vec<i64>> {
        let mu = self.lattice.coords_i64(l)?;
        let m: Matrix = self
            .coords
            .iter()
            .map(|r| r.iter().map(|&x| linalg::q(x)).collect())
            .collect();
        let mt = linalg::transpose(&m, self.rank());
        let n = linalg::solve(&mt, &mu)?;
        n.iter()
            .map(|x| x.is_integer().then(|| x.to_integer().to_i64().expect("small")))
            .collect()
    }
}

/// Whether `cone(A)` contains `K(A,I)` for every simplex `I` of `t`.
pub fn is_compatible(a: &MoriBasis, t: &Triangulation) -> bool {
    let r = a.rank();
    let lattice = &a.lattice;
    let gens: Matrix = a
        .coords
        .iter()
        .map(|c| c.iter().map(|&x| linalg::q(x)).collect())
        .collect();
    let cone_a = Cone::from_generators(r, gens);
    for simplex in t.simplices() {
        let ineqs: Matrix = (0..lattice.ambient())
            .filter(|i| !simplex.contains(i))
            .map(|i| lattice.basis().iter().map(|b| linalg::q(b[i])).collect())
            .collect();
        let k = Cone::from_inequalities(r, ineqs);
        if !cone_a.contains_cone(&k) {
            return false;
        }
    }
    true
}

/// Subdivide a pointed cone of dimension at most 3 into simplicial regular cones by
/// iterated stellar subdivision.
pub fn regular_subdivision(c: &Cone) -> Result<Vec<Cone>> {
    let dim = c.dim();
    let (rays, lin) = c.rays_and_lineality();
    if !lin.is_empty() || !c.is_full_dimensional() {
        return Err(Error::NotSimplicial(ray_report(&rays)));
    }
    if dim > 3 {
        if c.is_simplicial() && linalg::det(&rays).abs().is_one() {
            return Ok(vec![c.clone()]);
        }
        return Err(Error::NotRegular(ray_report(&rays)));
    }
    // simplicial pieces: pull from the first ray
    let mut pieces: Vec<Matrix> = Vec::new();
    if rays.len() == dim {
        pieces.push(rays.clone());
    } else {
        let apex = rays[0].clone();
        for f in c.facets() {
            if linalg::dot(&f, &apex).is_zero() {
                continue;
            }
            let face = c.face(&f);
            let fr = face.rays();
            // facets of a 3-dim cone are 2-dim with two rays
            let mut s = vec![apex.clone()];
            s.extend(fr);
            pieces.push(s);
        }
    }
    let mut out = Vec::new();
    while let Some(s) = pieces.pop() {
        let d = linalg::det(&s).abs();
        if d.is_one() {
            out.push(Cone::from_generators(dim, s));
            continue;
        }
        let p = shortest_parallelepiped_point(&s, &d);
        let st = linalg::transpose(&s, dim);
        let lam = linalg::solve(&st, &p).expect("full rank");
        for (i, l) in lam.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let mut t = s.clone();
            t[i] = p.clone();
            pieces.push(t);
        }
    }
    Ok(out)
}

fn shortest_parallelepiped_point(s: &Matrix, d: &Q) -> Vec<Q> {
    let dim = s.len();
    let den = d.to_integer().to_i64().expect("small determinant");
    let mut best: Option<(Q, Vec<Q>)> = None;
    let steps: Vec<i64> = (0..den).collect();
    let mut idx = vec![0usize; dim];
    loop {
        let lam: Vec<Q> = idx.iter().map(|&k| Q::new(steps[k].into(), den.into())).collect();
        if lam.iter().any(|x| !x.is_zero()) {
            let p: Vec<Q> = (0..dim)
                .map(|j| {
                    lam.iter()
                        .zip(s)
                        .fold(Q::zero(), |acc, (l, r)| acc + l * &r[j])
                })
                .collect();
            if p.iter().all(|x| x.is_integer()) {
                let size: Q = lam.iter().fold(Q::zero(), |a, b| a + b);
                if best.as_ref().map_or(true, |(b, _)| size < *b) {
                    best = Some((size, p));
                }
            }
        }
        let mut k = 0;
        loop {
            if k == dim {
                return best.expect("non-unimodular cone has a parallelepiped point").1;
            }
            idx[k] += 1;
            if idx[k] < steps.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
