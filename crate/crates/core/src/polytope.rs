//! Lattice polytopes, polar duality and point enumeration.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

pub type LatticePoint = Vec<i64>;

/// Supporting inequality `normal . x + offset >= 0` with primitive integer data.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn eval(&self, x: &[i64]) -> i64 {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() + self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePolytope {
    rank: usize,
    vertices: Vec<LatticePoint>,
    #[serde(skip)]
    facets: Vec<Facet>,
}

/// Facets of the convex hull of a full-dimensional point set, by brute force over
/// `rank`-subsets.
pub fn hull_facets(rank: usize, points: &[LatticePoint]) -> Result<Vec<Facet>> {
    let mut out = BTreeSet::new();
    for sub in (0..points.len()).combinations(rank) {
        let rows: Vec<Vec<Q>> = sub
            .iter()
            .map(|&i| {
                let mut r = linalg::to_q_vec(&points[i]);
                r.push(Q::from_integer(1.into()));
                r
            })
            .collect();
        let ns = linalg::nullspace(&rows, rank + 1);
        if ns.len() != 1 {
            continue;
        }
        let mut h = linalg::primitive_i64(&ns[0]);
        let vals: Vec<i64> = points
            .iter()
            .map(|p| h[..rank].iter().zip(p).map(|(a, b)| a * b).sum::<i64>() + h[rank])
            .collect();
        let pos = vals.iter().any(|&v| v > 0);
        let neg = vals.iter().any(|&v| v < 0);
        if pos && neg {
            continue;
        }
        if neg {
            h.iter_mut().for_each(|x| *x = -*x);
        }
        out.insert(Facet {
            normal: h[..rank].to_vec(),
            offset: h[rank],
        });
    }
    if out.is_empty() {
        return Err(Error::NotFullDimensional);
    }
    let facets: Vec<Facet> = out.into_iter().collect();
    let normals: Vec<Vec<Q>> = facets.iter().map(|f| linalg::to_q_vec(&f.normal)).collect();
    if linalg::rank(&normals) < rank {
        return Err(Error::NotFullDimensional);
    }
    Ok(facets)
}

fn is_extremal(rank: usize, p: &[i64], facets: &[Facet]) -> bool {
    let incident: Vec<Vec<Q>> = facets
        .iter()
        .filter(|f| f.eval(p) == 0)
        .map(|f| linalg::to_q_vec(&f.normal))
        .collect();
    linalg::rank(&incident) == rank
}

impl LatticePolytope {
    /// Build from a vertex list; every listed point must be a vertex.
    pub fn new(rank: usize, vertices: Vec<LatticePoint>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != rank) {
            return Err(Error::Invalid(format!("point {v:?} has wrong length")));
        }
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::NonExtremalVertex(v.clone()));
            }
        }
        let facets = hull_facets(rank, &vertices)?;
        if let Some(v) = vertices.iter().find(|v| !is_extremal(rank, v, &facets)) {
            return Err(Error::NonExtremalVertex(v.clone()));
        }
        Ok(Self {
            rank,
            vertices,
            facets,
        })
    }

    /// Convex hull of arbitrary points; non-extremal points are dropped.
    pub fn from_points(rank: usize, points: Vec<LatticePoint>) -> Result<Self> {
        let pts: Vec<LatticePoint> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let facets = hull_facets(rank, &pts)?;
        let vertices = pts
            .into_iter()
            .filter(|p| is_extremal(rank, p, &facets))
            .collect();
        Ok(Self {
            rank,
            vertices,
            facets,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| f.eval(x) >= 0)
    }

    pub fn origin_is_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset > 0)
    }

    /// Sorted vertex set, for comparisons independent of input order.
    pub fn vertex_set(&self) -> BTreeSet<LatticePoint> {
        self.vertices.iter().cloned().collect()
    }
}

/// Rational vertices of `{x : <x,y> >= -1 for y in P}`.
pub fn polar_dual_vertices(p: &LatticePolytope) -> Result<Vec<Vec<Q>>> {
    if !p.origin_is_interior() {
        return Err(Error::OriginNotInterior);
    }
    Ok(p.facets
        .iter()
        .map(|f| {
            f.normal
                .iter()
                .map(|&a| Q::new(a.into(), f.offset.into()))
                .collect()
        })
        .collect())
}

pub fn polar_dual(p: &LatticePolytope) -> Result<LatticePolytope> {
    let verts = polar_dual_vertices(p)?;
    let mut out = Vec::new();
    for v in verts {
        if v.iter().any(|x| !x.is_integer()) {
            let s = v.iter().map(|x| x.to_string()).join(",");
            return Err(Error::NonIntegralDual(format!("({s})")));
        }
        out.push(
            v.iter()
                .map(|x| x.to_integer().to_i64().expect("coordinate overflow"))
                .collect(),
        );
    }
    out.sort();
    LatticePolytope::new(p.rank, out)
}

fn sort_origin_first(mut pts: Vec<LatticePoint>) -> Vec<LatticePoint> {
    pts.sort_by(|a, b| {
        let az = a.iter().all(|&x| x == 0);
        let bz = b.iter().all(|&x| x == 0);
        bz.cmp(&az).then_with(|| a.cmp(b))
    });
    pts
}

/// All lattice points, origin first (when present) and lexicographic otherwise.
pub fn lattice_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    let d = p.rank;
    let lo: Vec<i64> = (0..d)
        .map(|j| p.vertices.iter().map(|v| v[j]).min().unwrap_or(0))
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|j| p.vertices.iter().map(|v| v[j]).max().unwrap_or(0))
        .collect();
    let pts = (0..d)
        .map(|j| lo[j]..=hi[j])
        .multi_cartesian_product()
        .filter(|x| p.contains(x))
        .collect();
    sort_origin_first(pts)
}

pub fn interior_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    lattice_points(p)
        .into_iter()
        .filter(|x| p.facets.iter().all(|f| f.eval(x) > 0))
        .collect()
}

pub fn is_reflexive(p: &LatticePolytope) -> bool {
    if !p.origin_is_interior() {
        return false;
    }
    let int = interior_points(p);
    if int.len() != 1 || int[0].iter().any(|&x| x != 0) {
        return false;
    }
    polar_dual(p).is_ok()
}

/// Lattice points in the relative interior of some facet.
pub fn codim1_interior_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    lattice_points(p)
        .into_iter()
        .filter(|x| p.facets.iter().filter(|f| f.eval(x) == 0).count() == 1)
        .collect()
}

/// Ordered point set with the origin at index 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointConfiguration {
    rank: usize,
    points: Vec<LatticePoint>,
}

impl PointConfiguration {
    pub fn new(rank: usize, points: Vec<LatticePoint>) -> Result<Self> {
        if points.is_empty() || points[0].iter().any(|&x| x != 0) {
            return Err(Error::Invalid("configuration must start with the origin".into()));
        }
        if points.iter().any(|p| p.len() != rank) {
            return Err(Error::Invalid("point of wrong length".into()));
        }
        if points.iter().collect::<BTreeSet<_>>().len() != points.len() {
            return Err(Error::Invalid("configuration points must be distinct".into()));
        }
        let c = Self { rank, points };
        if linalg::rank(&linalg::to_q_matrix(&c.point_matrix())) != rank + 1 {
            return Err(Error::NotFullDimensional);
        }
        Ok(c)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn homogenized(&self, i: usize) -> Vec<i64> {
        let mut v = vec![1];
        v.extend(&self.points[i]);
        v
    }

    /// The (d+1) x (p+1) matrix whose columns are the homogenized points.
    pub fn point_matrix(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![1; self.points.len()]];
        for j in 0..self.rank {
            m.push(self.points.iter().map(|p| p[j]).collect());
        }
        m
    }
}

/// Lattice points of a reflexive polytope minus the facet-interior ones.
pub fn gauge_point_set(pstar: &LatticePolytope) -> Result<PointConfiguration> {
    let drop: BTreeSet<LatticePoint> = codim1_interior_points(pstar).into_iter().collect();
    let pts = lattice_points(pstar)
        .into_iter()
        .filter(|x| !drop.contains(x))
        .collect();
    PointConfiguration::new(pstar.rank, pts)
}

pub fn full_point_set(p: &LatticePolytope) -> Result<PointConfiguration> {
    PointConfiguration::new(p.rank, lattice_points(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    pub root: LatticePoint,
    pub witness: LatticePoint,
}

/// Roots `alpha` among the lattice points of `delta_star` that admit a witness `m`
/// among the lattice points of `delta` with `<m,alpha> = -1` while every other lattice
/// point pairs non-negatively.
pub fn root_system(delta: &LatticePolytope, delta_star: &LatticePolytope) -> Vec<RootDatum> {
    let ms = lattice_points(delta);
    let mut out = Vec::new();
    for alpha in lattice_points(delta_star) {
        if alpha.iter().all(|&x| x == 0) {
            continue;
        }
        let pair = |m: &LatticePoint| m.iter().zip(&alpha).map(|(a, b)| a * b).sum::<i64>();
        let minus: Vec<&LatticePoint> = ms.iter().filter(|m| pair(m) == -1).collect();
        if minus.len() == 1 && ms.iter().all(|m| pair(m) >= -1) {
            out.push(RootDatum {
                root: alpha.clone(),
                witness: minus[0].clone(),
            });
        }
    }
    out
}

/// Normalized volume `d! vol(P)`, read off the leading Ehrhart coefficient as the
/// d-th finite difference of the lattice point counts of the dilates `tP`, t = 0..d.
pub fn normalized_volume(p: &LatticePolytope) -> BigInt {
    let d = p.rank;
    let mut total = BigInt::zero();
    let mut binom = BigInt::one();
    for k in 0..=d {
        let count = if k == 0 {
            1
        } else {
            let dil: Vec<LatticePoint> = p
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * k as i64).collect())
                .collect();
            let tp = LatticePolytope::new(d, dil).expect("dilate of a polytope");
            lattice_points(&tp).len()
        };
        let term = &binom * BigInt::from(count);
        if (d - k) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * BigInt::from(d - k) / BigInt::from(k + 1);
    }
    total
}
