//! Regular triangulations from weights, primitive collections, Stanley-Reisner
//! generators and secondary cones.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::relation_lattice;
use crate::linalg::{self, Matrix, Q};
use crate::polytope::{self, LatticePolytope, PointConfiguration};

pub type WeightVector = Vec<Q>;

pub fn weight_from_ints(w: &[i64]) -> WeightVector {
    linalg::to_q_vec(w)
}

/// The canonical chart weight: 0 on the origin, 1 elsewhere.
pub fn default_weight(n: usize) -> WeightVector {
    (0..n).map(|i| linalg::q((i > 0) as i64)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    config: PointConfiguration,
    simplices: Vec<Vec<usize>>,
    #[serde(skip)]
    weight: Option<WeightVector>,
}

/// Squarefree or general monomial ideal by minimal exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MonomialIdeal {
    pub generators: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Minimalized and sorted.
    pub fn new(gens: Vec<Vec<u32>>) -> Self {
        let set: BTreeSet<Vec<u32>> = gens.into_iter().collect();
        let v: Vec<Vec<u32>> = set.into_iter().collect();
        let mut out: Vec<Vec<u32>> = v
            .iter()
            .filter(|g| !v.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        out.sort();
        Self { generators: out }
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    /// Supports of the generators, as index sets.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.generators
            .iter()
            .map(|g| (0..g.len()).filter(|&i| g[i] > 0).collect())
            .collect()
    }
}

pub fn monomial_radical(ideal: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal::new(
        ideal
            .generators
            .iter()
            .map(|g| g.iter().map(|&e| e.min(1)).collect())
            .collect(),
    )
}

fn hom_matrix(config: &PointConfiguration, idx: &[usize]) -> Matrix {
    idx.iter()
        .map(|&i| linalg::to_q_vec(&config.homogenized(i)))
        .collect()
}

pub fn regular_triangulation(config: &PointConfiguration, w: &[Q]) -> Result<Triangulation> {
    let n = config.len();
    if w.len() != n {
        return Err(Error::WeightLength {
            expected: n,
            got: w.len(),
        });
    }
    let d = config.rank();
    let hom: Matrix = (0..n).map(|i| linalg::to_q_vec(&config.homogenized(i))).collect();
    let mut simplices = Vec::new();
    for s in (0..n).combinations(d + 1) {
        let m: Matrix = s.iter().map(|&i| hom[i].clone()).collect();
        let rhs: Vec<Q> = s.iter().map(|&i| w[i].clone()).collect();
        if linalg::det(&m).is_zero() {
            continue;
        }
        let h = linalg::solve(&m, &rhs).expect("invertible");
        let slack: Vec<Q> = (0..n).map(|k| &w[k] - linalg::dot(&h, &hom[k])).collect();
        if slack.iter().any(|x| x.is_negative()) {
            continue;
        }
        let face: Vec<usize> = (0..n).filter(|&k| slack[k].is_zero()).collect();
        if face.len() > d + 1 {
            return Err(Error::DegenerateWeight(face));
        }
        simplices.push(s);
    }
    simplices.sort();
    Ok(Triangulation {
        config: config.clone(),
        simplices,
        weight: Some(w.to_vec()),
    })
}

impl Triangulation {
    /// Wrap explicit maximal simplices; each must be full dimensional.
    pub fn from_simplices(config: &PointConfiguration, simplices: Vec<Vec<usize>>) -> Result<Self> {
        let d = config.rank();
        let mut simplices: Vec<Vec<usize>> = simplices
            .into_iter()
            .map(|mut s| {
                s.sort();
                s
            })
            .collect();
        for s in &simplices {
            if s.len() != d + 1 || linalg::det(&hom_matrix(config, s)).is_zero() {
                return Err(Error::Invalid(format!("{s:?} is not a full simplex")));
            }
        }
        simplices.sort();
        Ok(Self {
            config: config.clone(),
            simplices,
            weight: None,
        })
    }

    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn weight(&self) -> Option<&WeightVector> {
        self.weight.as_ref()
    }

    pub fn is_face(&self, s: &[usize]) -> bool {
        self.simplices
            .iter()
            .any(|t| s.iter().all(|i| t.contains(i)))
    }

    pub fn simplex_det(&self, s: &[usize]) -> BigInt {
        linalg::det(&hom_matrix(&self.config, s)).to_integer().abs()
    }

    pub fn used_points(&self) -> BTreeSet<usize> {
        self.simplices.iter().flatten().copied().collect()
    }
}

pub fn is_maximal(t: &Triangulation) -> bool {
    t.simplices.iter().all(|s| s.contains(&0)) && t.used_points().len() == t.config.len()
}

pub fn is_unimodular(t: &Triangulation) -> bool {
    t.simplices.iter().all(|s| t.simplex_det(s).is_one())
}

pub fn normalized_volume(t: &Triangulation) -> BigInt {
    t.simplices.iter().map(|s| t.simplex_det(s)).sum()
}

/// Minimal non-faces of the simplicial complex of `t`, including unused points.
pub fn minimal_nonfaces(t: &Triangulation) -> Vec<Vec<usize>> {
    let n = t.config.len();
    let d = t.config.rank();
    let mut out = Vec::new();
    for k in 1..=d + 1 {
        for s in (0..n).combinations(k) {
            if t.is_face(&s) {
                continue;
            }
            let minimal = (0..k).all(|j| {
                let mut sub = s.clone();
                sub.remove(j);
                sub.is_empty() || t.is_face(&sub)
            });
            if minimal {
                out.push(s);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitiveCollection {
    pub indices: Vec<usize>,
    pub relation: Vec<i64>,
    /// left-hand multiplicities, one per index; all 1 in the unimodular case
    pub multiplicities: Vec<i64>,
}

/// Primitive collections with their relations, allowing multiplicities.
pub fn primitive_collections_weighted(t: &Triangulation) -> Result<Vec<PrimitiveCollection>> {
    if !is_maximal(t) {
        return Err(Error::NotMaximal);
    }
    let cfg = &t.config;
    let d = cfg.rank();
    let n = cfg.len();
    let mut out = Vec::new();
    for s in minimal_nonfaces(t) {
        let v: Vec<Q> = (0..d)
            .map(|j| s.iter().fold(Q::zero(), |a, &i| a + linalg::q(cfg.points()[i][j])))
            .collect();
        let mut coeffs: Option<Vec<(usize, Q)>> = None;
        for simplex in &t.simplices {
            let gens: Vec<usize> = simplex.iter().copied().filter(|&i| i != 0).collect();
            let m: Matrix = (0..d)
                .map(|j| gens.iter().map(|&i| linalg::q(cfg.points()[i][j])).collect())
                .collect();
            let Some(c) = linalg::solve(&m, &v) else {
                continue;
            };
            if c.iter().all(|x| !x.is_negative()) {
                coeffs = Some(
                    gens.iter()
                        .zip(c)
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(&i, x)| (i, x))
                        .collect(),
                );
                break;
            }
        }
        let coeffs = coeffs.expect("complete fan covers every vector");
        let mut l = vec![Q::zero(); n];
        for &i in &s {
            l[i] += Q::one();
        }
        for (i, c) in &coeffs {
            l[*i] -= c;
        }
        let rest = l[1..].iter().fold(Q::zero(), |a, b| a + b);
        l[0] = -rest;
        let ints = linalg::primitive(&l);
        let lam = s
            .iter()
            .map(|&i| ints[i].to_i64().expect("small"))
            .collect::<Vec<_>>();
        out.push(PrimitiveCollection {
            indices: s,
            relation: ints.iter().map(|x| x.to_i64().expect("small")).collect(),
            multiplicities: lam,
        });
    }
    Ok(out)
}

/// Primitive collections with their primitive relations; fails when some relation
/// needs left multiplicities other than 1.
pub fn primitive_collections(t: &Triangulation) -> Result<Vec<PrimitiveCollection>> {
    let pcs = primitive_collections_weighted(t)?;
    if let Some(p) = pcs.iter().find(|p| p.multiplicities.iter().any(|&m| m != 1)) {
        return Err(Error::NonUnimodularCone(p.indices.clone()));
    }
    Ok(pcs)
}

pub fn stanley_reisner_generators(t: &Triangulation) -> MonomialIdeal {
    let n = t.config.len();
    MonomialIdeal::new(
        minimal_nonfaces(t)
            .into_iter()
            .map(|s| (0..n).map(|i| s.contains(&i) as u32).collect())
            .collect(),
    )
}

/// Relations whose non-negativity on a weight characterises `t` as the induced
/// triangulation: wall circuits and the placement of unused points.
pub fn secondary_relations(t: &Triangulation) -> Vec<Vec<Q>> {
    let cfg = &t.config;
    let n = cfg.len();
    let d = cfg.rank();
    let hom: Matrix = (0..n).map(|i| linalg::to_q_vec(&cfg.homogenized(i))).collect();
    let mut rels = Vec::new();
    for (a, b) in t.simplices.iter().tuple_combinations() {
        let shared: Vec<usize> = a.iter().copied().filter(|i| b.contains(i)).collect();
        if shared.len() != d {
            continue;
        }
        let u = *a.iter().find(|i| !shared.contains(i)).expect("wall");
        let v = *b.iter().find(|i| !shared.contains(i)).expect("wall");
        let mut idx = shared.clone();
        idx.push(u);
        idx.push(v);
        let m: Matrix = (0..=d)
            .map(|j| idx.iter().map(|&i| hom[i][j].clone()).collect())
            .collect();
        let ns = linalg::nullspace(&m, idx.len());
        let c = &ns[0];
        let sign = if c[d].is_negative() { -Q::one() } else { Q::one() };
        let mut l = vec![Q::zero(); n];
        for (k, &i) in idx.iter().enumerate() {
            l[i] = &c[k] * &sign;
        }
        rels.push(l);
    }
    let used = t.used_points();
    for k in 0..n {
        if used.contains(&k) {
            continue;
        }
        for s in &t.simplices {
            let m: Matrix = (0..=d)
                .map(|j| s.iter().map(|&i| hom[i][j].clone()).collect())
                .collect();
            let mu = linalg::solve(&m, &hom[k]).expect("simplex spans");
            if mu.iter().all(|x| !x.is_negative()) {
                let mut l = vec![Q::zero(); n];
                l[k] = Q::one();
                for (&i, x) in s.iter().zip(&mu) {
                    l[i] -= x;
                }
                rels.push(l);
                break;
            }
        }
    }
    rels
}

/// The reduced secondary cone in Gale coordinates.
pub fn secondary_cone(t: &Triangulation) -> Result<Cone> {
    let lat = relation_lattice(&t.config);
    let r = lat.rank();
    let ineqs: Matrix = secondary_relations(t)
        .iter()
        .map(|l| lat.coords(l).expect("circuits are relations"))
        .collect();
    let c = Cone::from_inequalities(r, ineqs);
    if !c.is_full_dimensional() {
        return Err(Error::EmptyInterior);
    }
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PolytopeType {
    I,
    II,
    III,
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeReport {
    pub kind: PolytopeType,
    pub facet_interior_points: usize,
    /// weight realizing a maximal unimodular triangulation, when found
    pub weight: Option<Vec<String>>,
    pub attempts: usize,
    pub note: String,
}

fn random_weight(config: &PointConfiguration, rng: &mut ChaCha8Rng) -> WeightVector {
    let n = config.len();
    let norms: Vec<i64> = config
        .points()
        .iter()
        .map(|p| p.iter().map(|x| x * x).sum())
        .collect();
    let big = norms.iter().max().copied().unwrap_or(0) * 4 + 8;
    (0..n)
        .map(|i| {
            if i == 0 {
                linalg::q(-big)
            } else {
                linalg::q(8 * norms[i] + rng.gen_range(0..8))
            }
        })
        .collect()
}

/// Search for a weight inducing a maximal triangulation: the default chart weight
/// first, then seeded random convex weights.
pub fn find_maximal_weight(
    config: &PointConfiguration,
    unimodular: bool,
    budget: usize,
    seed: u64,
) -> (Option<(WeightVector, Triangulation)>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tries = 0;
    let mut w = default_weight(config.len());
    while tries < budget.max(1) {
        tries += 1;
        if let Ok(t) = regular_triangulation(config, &w) {
            if is_maximal(&t) && (!unimodular || is_unimodular(&t)) {
                return (Some((w, t)), tries);
            }
        }
        w = random_weight(config, &mut rng);
    }
    (None, tries)
}

/// Type I/II/III report for a reflexive polytope.
pub fn classify(pstar: &LatticePolytope, budget: usize, seed: u64) -> Result<TypeReport> {
    let cfg = polytope::full_point_set(pstar)?;
    let fi = polytope::codim1_interior_points(pstar).len();
    let (found, attempts) = find_maximal_weight(&cfg, true, budget, seed);
    Ok(match found {
        Some((w, _)) => TypeReport {
            kind: if fi == 0 { PolytopeType::I } else { PolytopeType::II },
            facet_interior_points: fi,
            weight: Some(w.iter().map(|x| x.to_string()).collect()),
            attempts,
            note: "maximal unimodular triangulation found".into(),
        },
        None => TypeReport {
            kind: PolytopeType::III,
            facet_interior_points: fi,
            weight: None,
            attempts,
            note: format!("no maximal unimodular triangulation found within {attempts} weights"),
        },
    })
}

/// Lcm of the denominators in a rational vector.
pub fn denominator_lcm(v: &[Q]) -> BigInt {
    v.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()))
}
