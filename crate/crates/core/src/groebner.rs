//! Binomial Buchberger engine for toric ideals: saturation, reduced Gröbner bases,
//! initial ideals, Gröbner cones and fan traversal.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::RelationLattice;
use crate::linalg::{self, Q};
use crate::triangulation::{default_weight, denominator_lcm, MonomialIdeal, WeightVector};

pub const DEFAULT_DEGREE_GUARD: u32 = 64;

/// A binomial `y^lead - y^trail` with `lead` the leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Binomial {
    pub lead: Vec<u32>,
    pub trail: Vec<u32>,
}

impl Binomial {
    /// `lead - trail` as a relation vector.
    pub fn relation(&self) -> Vec<i64> {
        self.lead
            .iter()
            .zip(&self.trail)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        format!("{} - {}", monomial_string(&self.lead, names), monomial_string(&self.trail, names))
    }
}

pub fn monomial_string(e: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{}", names[i], k) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn variable_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Weight order refined by total degree first and lex with `y0` largest last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub weight: WeightVector,
    /// Raise `NonGenericWeight` instead of relying on the lex tiebreak.
    pub pure_weight: bool,
}

impl TermOrder {
    pub fn new(weight: WeightVector) -> Self {
        Self {
            weight,
            pure_weight: false,
        }
    }

    pub fn pure(weight: WeightVector) -> Self {
        Self {
            weight,
            pure_weight: true,
        }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        Engine::new(&self.weight, false, u32::MAX).cmp(a, b)
    }
}

struct Engine {
    weight: Vec<BigInt>,
    elim: bool,
    guard: u32,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Engine {
    fn new(w: &[Q], elim: bool, guard: u32) -> Self {
        let l = denominator_lcm(w);
        let weight = w.iter().map(|x| (x * &l).to_integer()).collect();
        Self { weight, elim, guard }
    }

    fn wdot(&self, a: &[u32]) -> BigInt {
        self.weight
            .iter()
            .zip(a)
            .fold(BigInt::zero(), |acc, (w, &e)| acc + w * e)
    }

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let n = self.weight.len();
        if self.elim {
            match a[n].cmp(&b[n]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        let da: u32 = a[..n].iter().sum();
        let db: u32 = b[..n].iter().sum();
        da.cmp(&db)
            .then_with(|| self.wdot(&a[..n]).cmp(&self.wdot(&b[..n])))
            .then_with(|| {
                for i in 0..n {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }

    fn make(&self, u: Vec<u32>, v: Vec<u32>) -> Option<Binomial> {
        match self.cmp(&u, &v) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: u, trail: v }),
            Ordering::Less => Some(Binomial { lead: v, trail: u }),
        }
    }

    fn check(&self, b: &Binomial) -> Result<()> {
        let deg: u32 = b.lead.iter().sum();
        if deg > self.guard {
            return Err(Error::BudgetExceeded(format!(
                "binomial degree {deg} exceeds guard {}",
                self.guard
            )));
        }
        Ok(())
    }

    fn reduce_lead(&self, mut b: Binomial, g: &[Binomial]) -> Option<Binomial> {
        'outer: loop {
            for h in g {
                if divides(&h.lead, &b.lead) {
                    let u: Vec<u32> = b
                        .lead
                        .iter()
                        .zip(&h.lead)
                        .zip(&h.trail)
                        .map(|((&x, &l), &t)| x - l + t)
                        .collect();
                    b = self.make(u, b.trail)?;
                    continue 'outer;
                }
            }
            return Some(b);
        }
    }

    fn reduce_trail(&self, mut b: Binomial, g: &[Binomial]) -> Binomial {
        'outer: loop {
            for h in g {
                if divides(&h.lead, &b.trail) {
                    b.trail = b
                        .trail
                        .iter()
                        .zip(&h.lead)
                        .zip(&h.trail)
                        .map(|((&x, &l), &t)| x - l + t)
                        .collect();
                    continue 'outer;
                }
            }
            return b;
        }
    }

    fn spoly(&self, f: &Binomial, g: &Binomial) -> Option<Binomial> {
        let m: Vec<u32> = f.lead.iter().zip(&g.lead).map(|(&a, &b)| a.max(b)).collect();
        let u: Vec<u32> = (0..m.len()).map(|i| m[i] - g.lead[i] + g.trail[i]).collect();
        let v: Vec<u32> = (0..m.len()).map(|i| m[i] - f.lead[i] + f.trail[i]).collect();
        self.make(u, v)
    }

    fn buchberger(&self, gens: Vec<Binomial>) -> Result<Vec<Binomial>> {
        let mut g: Vec<Binomial> = Vec::new();
        for b in gens {
            if let Some(r) = self.reduce_lead(b, &g) {
                self.check(&r)?;
                g.push(r);
            }
        }
        let mut pairs: Vec<(usize, usize)> = (0..g.len())
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        while !pairs.is_empty() {
            let (k, _) = pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, &(i, j))| {
                    g[i].lead
                        .iter()
                        .zip(&g[j].lead)
                        .map(|(&a, &b)| a.max(b))
                        .sum::<u32>()
                })
                .expect("nonempty");
            let (i, j) = pairs.swap_remove(k);
            let coprime = g[i].lead.iter().zip(&g[j].lead).all(|(&a, &b)| a == 0 || b == 0);
            if coprime {
                continue;
            }
            let Some(s) = self.spoly(&g[i], &g[j]) else { continue };
            let Some(r) = self.reduce_lead(s, &g) else { continue };
            self.check(&r)?;
            let n = g.len();
            g.push(r);
            pairs.extend((0..n).map(|i| (i, n)));
        }
        Ok(self.interreduce(g))
    }

    fn interreduce(&self, g: Vec<Binomial>) -> Vec<Binomial> {
        let mut min: Vec<Binomial> = Vec::new();
        for (k, b) in g.iter().enumerate() {
            let redundant = g.iter().enumerate().any(|(j, h)| {
                j != k && divides(&h.lead, &b.lead) && (h.lead != b.lead || j < k)
            });
            if !redundant {
                min.push(b.clone());
            }
        }
        let mut out: Vec<Binomial> = min
            .iter()
            .map(|b| self.reduce_trail(b.clone(), &min))
            .collect();
        out.sort();
        out
    }
}

/// The reduced Gröbner basis of a toric ideal under a term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub elements: Vec<Binomial>,
    pub order: TermOrder,
    pub initial_ideal: MonomialIdeal,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.order.weight.len()
    }

    /// Canonical serialization: relation vectors (lead minus trail), sorted.
    pub fn relations(&self) -> Vec<Vec<i64>> {
        let mut r: Vec<Vec<i64>> = self.elements.iter().map(|b| b.relation()).collect();
        r.sort();
        r
    }

    /// Normal form of a monomial.
    pub fn normal_form(&self, m: &[u32]) -> Vec<u32> {
        let e = Engine::new(&self.order.weight, false, u32::MAX);
        e.reduce_trail(
            Binomial {
                lead: m.to_vec(),
                trail: m.to_vec(),
            },
            &self.elements,
        )
        .trail
    }
}

fn split(l: &[i64]) -> (Vec<u32>, Vec<u32>) {
    let pos = l.iter().map(|&x| x.max(0) as u32).collect();
    let neg = l.iter().map(|&x| (-x).max(0) as u32).collect();
    (pos, neg)
}

/// Gröbner basis with an explicit degree guard.
pub fn toric_ideal_gb_with_guard(lattice: &RelationLattice, order: &TermOrder, guard: u32) -> Result<GroebnerBasis> {
    let n = lattice.ambient();
    if order.weight.len() != n {
        return Err(Error::WeightLength {
            expected: n,
            got: order.weight.len(),
        });
    }
    let elim = Engine::new(&order.weight, true, guard);
    let mut gens: Vec<Binomial> = Vec::new();
    for b in lattice.basis() {
        let (mut u, mut v) = split(b);
        u.push(0);
        v.push(0);
        if let Some(x) = elim.make(u, v) {
            gens.push(x);
        }
    }
    if !gens.is_empty() {
        if let Some(x) = elim.make(vec![1; n + 1], vec![0; n + 1]) {
            gens.push(x);
        }
    }
    let full = elim.buchberger(gens)?;
    let fin = Engine::new(&order.weight, false, guard);
    let restricted: Vec<Binomial> = full
        .into_iter()
        .filter(|b| b.lead[n] == 0 && b.trail[n] == 0)
        .filter_map(|b| fin.make(b.lead[..n].to_vec(), b.trail[..n].to_vec()))
        .collect();
    let elements = fin.interreduce(restricted);
    if order.pure_weight {
        for b in &elements {
            if fin.wdot(&b.lead) == fin.wdot(&b.trail) {
                return Err(Error::NonGenericWeight(b.relation()));
            }
        }
    }
    let initial_ideal = MonomialIdeal::new(elements.iter().map(|b| b.lead.clone()).collect());
    Ok(GroebnerBasis {
        elements,
        order: order.clone(),
        initial_ideal,
    })
}

/// Reduced Gröbner basis of the toric ideal `I_A` of the lattice.
pub fn toric_ideal_gb(lattice: &RelationLattice, order: &TermOrder) -> Result<GroebnerBasis> {
    toric_ideal_gb_with_guard(lattice, order, DEFAULT_DEGREE_GUARD)
}

/// Re-run Buchberger on an existing basis under its own order.
pub fn rerun_buchberger(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    let e = Engine::new(&gb.order.weight, false, DEFAULT_DEGREE_GUARD);
    let elements = e.buchberger(gb.elements.clone())?;
    Ok(GroebnerBasis {
        initial_ideal: MonomialIdeal::new(elements.iter().map(|b| b.lead.clone()).collect()),
        elements,
        order: gb.order.clone(),
    })
}

pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    gb.initial_ideal.clone()
}

/// A Gröbner cone in weight space and in reduced (Gale) coordinates.
#[derive(Clone, Debug)]
pub struct GroebnerCone {
    pub full: Cone,
    pub reduced: Cone,
}

pub fn groebner_cone(gb: &GroebnerBasis, lattice: &RelationLattice) -> GroebnerCone {
    let n = lattice.ambient();
    let r = lattice.rank();
    let full: Vec<Vec<Q>> = gb.elements.iter().map(|b| linalg::to_q_vec(&b.relation())).collect();
    let reduced: Vec<Vec<Q>> = full
        .iter()
        .map(|l| lattice.coords(l).expect("element lies in L"))
        .collect();
    GroebnerCone {
        full: Cone::from_inequalities(n, full),
        reduced: Cone::from_inequalities(r, reduced),
    }
}

/// Reduced Gröbner basis at a point of reduced weight space.
pub fn gb_at_reduced(lattice: &RelationLattice, z: &[Q]) -> Result<GroebnerBasis> {
    toric_ideal_gb(lattice, &TermOrder::new(lattice.lift_weight(z)))
}

#[derive(Clone, Debug)]
pub struct GroebnerFan {
    pub cones: Vec<(GroebnerBasis, Cone)>,
    pub complete: bool,
    pub computations: usize,
}

const MAX_HALVINGS: usize = 40;

/// Maximal Gröbner cones reached by facet flipping from the canonical weight.
/// `budget` bounds the number of Gröbner basis computations; exceeding it
/// returns the partial fan with `complete` unset.
pub fn groebner_fan_traverse(lattice: &RelationLattice, budget: usize) -> Result<GroebnerFan> {
    let seed = lattice.reduce_weight(&default_weight(lattice.ambient()));
    groebner_fan_traverse_from(lattice, &seed, budget)
}

pub fn groebner_fan_traverse_from(lattice: &RelationLattice, seed: &[Q], budget: usize) -> Result<GroebnerFan> {
    let mut computations = 1;
    let first = gb_at_reduced(lattice, seed)?;
    let mut seen: BTreeSet<MonomialIdeal> = BTreeSet::new();
    let mut queue = vec![first];
    let mut cones = Vec::new();
    let mut complete = true;
    while let Some(gb) = queue.pop() {
        if !seen.insert(gb.initial_ideal.clone()) {
            continue;
        }
        let cone = groebner_cone(&gb, lattice).reduced.with_both();
        for a in cone.facets() {
            let face = cone.face(&a);
            if face.dimension() + 1 != cone.dim() {
                continue;
            }
            let fp = face.relative_interior_point();
            let mut eps = Q::one();
            let mut found = false;
            for _ in 0..MAX_HALVINGS {
                if computations >= budget {
                    complete = false;
                    break;
                }
                let z: Vec<Q> = fp.iter().zip(&a).map(|(x, y)| x - &eps * y).collect();
                computations += 1;
                let nb = gb_at_reduced(lattice, &z)?;
                let nc = groebner_cone(&nb, lattice).reduced;
                if nc.contains(&fp) && nb.initial_ideal != gb.initial_ideal {
                    if !seen.contains(&nb.initial_ideal) {
                        queue.push(nb);
                    }
                    found = true;
                    break;
                }
                eps /= BigInt::from(2);
            }
            if !found {
                complete = false;
            }
            if computations >= budget {
                complete = false;
            }
        }
        cones.push((gb, cone));
        if !complete && computations >= budget {
            break;
        }
    }
    cones.sort_by(|a, b| a.0.initial_ideal.cmp(&b.0.initial_ideal));
    Ok(GroebnerFan {
        cones,
        complete,
        computations,
    })
}

/// Whether `z` lies strictly inside the reduced Gröbner cone of `gb`.
pub fn weight_is_generic(gb: &GroebnerBasis, lattice: &RelationLattice, z: &[Q]) -> bool {
    gb.elements.iter().all(|b| {
        let mu = lattice.coords_i64(&b.relation()).expect("relation");
        linalg::dot(&mu, z).is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::weight_from_ints;

    fn lat(n: usize, basis: Vec<Vec<i64>>) -> RelationLattice {
        RelationLattice::from_basis(n, basis)
    }

    #[test]
    fn quintic_single_binomial() {
        let l = lat(6, vec![vec![-5, 1, 1, 1, 1, 1]]);
        let gb = toric_ideal_gb(&l, &TermOrder::new(default_weight(6))).unwrap();
        assert_eq!(
            gb.elements,
            vec![Binomial {
                lead: vec![0, 1, 1, 1, 1, 1],
                trail: vec![5, 0, 0, 0, 0, 0]
            }]
        );
    }

    #[test]
    fn twisted_cubic_three_binomials() {
        let l = lat(4, vec![vec![1, -2, 1, 0], vec![0, 1, -2, 1]]);
        let gb = toric_ideal_gb(&l, &TermOrder::new(weight_from_ints(&[0, 0, 0, 0]))).unwrap();
        assert_eq!(gb.elements.len(), 3);
    }

    #[test]
    fn pure_weight_tie_is_reported() {
        let l = lat(4, vec![vec![1, -1, -1, 1]]);
        let r = toric_ideal_gb(&l, &TermOrder::pure(weight_from_ints(&[0, 0, 0, 0])));
        assert!(matches!(r, Err(Error::NonGenericWeight(_))));
    }
}
