//! Indicial ideals of the leading GKZ operators in a Mori chart.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graded::GradedQuotient;
use crate::groebner::GroebnerBasis;
use crate::lattice::MoriBasis;
use crate::linalg::{self, Q};
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub struct IndicialIdeal {
    pub generators: Vec<Poly>,
    pub rank: usize,
    /// Built from the supports of the leading monomials only.
    pub radical: bool,
}

impl IndicialIdeal {
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn names(&self) -> Vec<String> {
        (1..=self.rank).map(|i| format!("rho{i}")).collect()
    }
}

/// `theta_i` as a linear form in `rho`, including the shift on the origin.
pub fn theta_form(a: &MoriBasis, i: usize) -> Poly {
    let coeffs: Vec<Q> = (0..a.rank()).map(|k| linalg::q(a.entry(k, i))).collect();
    let shift = if i == 0 { -linalg::q(1) } else { Q::zero() };
    Poly::linear(&coeffs, shift)
}

fn generator(lead: &[u32], a: &MoriBasis, radical: bool) -> Poly {
    let r = a.rank();
    let mut g = Poly::one(r);
    for (i, &u) in lead.iter().enumerate() {
        let u = if radical { u.min(1) } else { u };
        let th = theta_form(a, i);
        for j in 0..u {
            g = g.mul(&th.add(&Poly::constant(r, -Q::from(BigInt::from(j)))));
        }
    }
    g
}

/// Falling-factorial expansion of the leading term of each Gröbner basis operator.
pub fn indicial_ideal(gb: &GroebnerBasis, a: &MoriBasis) -> IndicialIdeal {
    IndicialIdeal {
        generators: gb.elements.iter().map(|b| generator(&b.lead, a, false)).collect(),
        rank: a.rank(),
        radical: false,
    }
}

/// Variant built from the radical of the initial ideal.
pub fn radical_indicial_ideal(gb: &GroebnerBasis, a: &MoriBasis) -> IndicialIdeal {
    IndicialIdeal {
        generators: gb.elements.iter().map(|b| generator(&b.lead, a, true)).collect(),
        rank: a.rank(),
        radical: true,
    }
}

fn degree_cap(ind: &IndicialIdeal) -> u32 {
    let d = ind
        .generators
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(0);
    ind.rank as u32 * d.saturating_sub(1) + 1
}

/// Graded quotient `Q[rho]/Ind` through the degree where a zero-dimensional
/// homogeneous ideal must vanish.
pub fn indicial_quotient(ind: &IndicialIdeal) -> Option<GradedQuotient> {
    if !ind.is_homogeneous() {
        return None;
    }
    Some(GradedQuotient::new(ind.rank, &ind.generators, degree_cap(ind)))
}

/// True iff the generators are homogeneous with finite-dimensional quotient.
pub fn indicial_variety_is_origin(ind: &IndicialIdeal) -> bool {
    if ind.generators.iter().any(|g| g.is_zero()) && ind.generators.len() == 1 {
        return false;
    }
    match indicial_quotient(ind) {
        None => false,
        Some(q) => q.hilbert(q.max_degree()) == 0,
    }
}

/// Hilbert function of `Q[rho]/Ind` up to its socle, when the variety is the origin.
pub fn indicial_hilbert_series(ind: &IndicialIdeal) -> Option<Vec<usize>> {
    let q = indicial_quotient(ind)?;
    let mut h = q.hilbert_series();
    while h.len() > 1 && *h.last().expect("nonempty") == 0 {
        h.pop();
    }
    Some(h)
}
