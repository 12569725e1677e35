//! Polyhedral cones over the rationals with generator and inequality descriptions.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{self, Matrix, Q};

#[derive(Clone, Debug)]
pub struct Cone {
    dim: usize,
    generators: Option<Matrix>,
    inequalities: Option<Matrix>,
}

fn normalize(v: &[Q]) -> Option<Vec<Q>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    Some(linalg::primitive(v).iter().map(linalg::qz).collect())
}

fn dedup(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let set: BTreeSet<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| linalg::primitive(r))
        .collect();
    set.into_iter()
        .map(|r| r.iter().map(linalg::qz).collect())
        .collect()
}

/// Extreme rays and a lineality basis of `{x : a.x >= 0 for a in ineqs}`.
pub fn h_to_v(dim: usize, ineqs: &[Vec<Q>]) -> (Matrix, Matrix) {
    let ineqs = dedup(ineqs);
    let lin = linalg::nullspace(&ineqs, dim);
    let m = dim - lin.len();
    let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    if m > 0 {
        for sub in (0..ineqs.len()).combinations(m - 1) {
            let mut eqs: Matrix = sub.iter().map(|&i| ineqs[i].clone()).collect();
            eqs.extend(lin.iter().cloned());
            let ns = linalg::nullspace(&eqs, dim);
            if ns.len() != 1 {
                continue;
            }
            let x = &ns[0];
            let vals: Vec<Q> = ineqs.iter().map(|a| linalg::dot(a, x)).collect();
            let ray = if vals.iter().all(|v| !v.is_negative()) {
                x.clone()
            } else if vals.iter().all(|v| !v.is_positive()) {
                x.iter().map(|t| -t.clone()).collect()
            } else {
                continue;
            };
            rays.insert(linalg::primitive(&ray));
        }
    }
    let rays = rays
        .into_iter()
        .map(|r| r.iter().map(linalg::qz).collect())
        .collect();
    let lin = lin.iter().filter_map(|v| normalize(v)).collect();
    (rays, lin)
}

impl Cone {
    pub fn from_generators(dim: usize, gens: Matrix) -> Self {
        Self {
            dim,
            generators: Some(gens),
            inequalities: None,
        }
    }

    pub fn from_inequalities(dim: usize, ineqs: Matrix) -> Self {
        Self {
            dim,
            generators: None,
            inequalities: Some(ineqs),
        }
    }

    pub fn positive_orthant(dim: usize) -> Self {
        let id: Matrix = (0..dim)
            .map(|i| (0..dim).map(|j| linalg::q((i == j) as i64)).collect())
            .collect();
        Self {
            dim,
            generators: Some(id.clone()),
            inequalities: Some(id),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Generators (rays plus both signs of a lineality basis).
    pub fn generators(&self) -> Matrix {
        if let Some(g) = &self.generators {
            return g.clone();
        }
        let (rays, lin) = h_to_v(self.dim, self.inequalities.as_ref().expect("some description"));
        let mut g = rays;
        for v in lin {
            g.push(v.iter().map(|x| -x.clone()).collect());
            g.push(v);
        }
        g
    }

    /// Inequalities `a.x >= 0` cutting out the cone.
    pub fn inequalities(&self) -> Matrix {
        if let Some(h) = &self.inequalities {
            return h.clone();
        }
        self.dual().generators()
    }

    /// Irredundant inequalities: facet normals plus both signs of implicit equations.
    pub fn facets(&self) -> Matrix {
        let (rays, lin) = h_to_v(self.dim, &self.generators());
        let mut out = rays;
        for v in lin {
            out.push(v.iter().map(|x| -x.clone()).collect());
            out.push(v);
        }
        out
    }

    /// Extreme rays and lineality basis.
    pub fn rays_and_lineality(&self) -> (Matrix, Matrix) {
        h_to_v(self.dim, &self.inequalities())
    }

    pub fn rays(&self) -> Matrix {
        self.rays_and_lineality().0
    }

    pub fn dual(&self) -> Cone {
        Cone {
            dim: self.dim,
            generators: self.inequalities.clone(),
            inequalities: self.generators.clone(),
        }
    }

    pub fn with_both(&self) -> Cone {
        Cone {
            dim: self.dim,
            generators: Some(self.generators()),
            inequalities: Some(self.inequalities()),
        }
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.inequalities()
            .iter()
            .all(|a| !linalg::dot(a, x).is_negative())
    }

    pub fn contains_in_interior(&self, x: &[Q]) -> bool {
        self.is_full_dimensional()
            && self
                .facets()
                .iter()
                .all(|a| linalg::dot(a, x).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        let h = self.inequalities();
        other
            .generators()
            .iter()
            .all(|g| h.iter().all(|a| !linalg::dot(a, g).is_negative()))
    }

    pub fn equals(&self, other: &Cone) -> bool {
        self.contains_cone(other) && other.contains_cone(self)
    }

    pub fn dimension(&self) -> usize {
        linalg::rank(&self.generators())
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.dim
    }

    pub fn is_pointed(&self) -> bool {
        self.rays_and_lineality().1.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        let (rays, lin) = self.rays_and_lineality();
        lin.is_empty() && rays.len() == linalg::rank(&rays)
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        let mut h = self.inequalities();
        h.extend(other.inequalities());
        Cone::from_inequalities(self.dim, h)
    }

    /// A point in the relative interior: the sum of the extreme rays.
    pub fn relative_interior_point(&self) -> Vec<Q> {
        let rays = self.rays();
        let mut p = vec![Q::zero(); self.dim];
        for r in rays {
            for (a, b) in p.iter_mut().zip(r) {
                *a += b;
            }
        }
        p
    }

    /// The face cut out by `a.x = 0` for a valid inequality `a`.
    pub fn face(&self, a: &[Q]) -> Cone {
        let mut h = self.inequalities();
        h.push(a.iter().map(|x| -x.clone()).collect());
        Cone::from_inequalities(self.dim, h)
    }
}
