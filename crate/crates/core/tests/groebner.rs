mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use common::*;
use gkz_lcsl::error::Error;
use gkz_lcsl::groebner::*;
use gkz_lcsl::indicial::*;
use gkz_lcsl::lattice::{mori_basis, relation_lattice, MoriBasis, RelationLattice, TauChoice};
use gkz_lcsl::linalg::Q;
use gkz_lcsl::poly::Poly;
use gkz_lcsl::polytope::PointConfiguration;
use gkz_lcsl::triangulation::{
    is_maximal, is_unimodular, monomial_radical, regular_triangulation, secondary_cone, stanley_reisner_generators,
    weight_from_ints, MonomialIdeal,
};
use itertools::Itertools;
use proptest::prelude::*;

fn gb(cfg: &PointConfiguration, w: &[i64]) -> GroebnerBasis {
    toric_ideal_gb(&relation_lattice(cfg), &TermOrder::new(weight_from_ints(w))).unwrap()
}

fn mono(e: &[u32]) -> Vec<u32> {
    e.to_vec()
}

/// Total degree, then weight, then the exponent of y0, y1, ... in turn.
fn order_oracle(w: &[i64], a: &[u32], b: &[u32]) -> Ordering {
    let deg = |m: &[u32]| m.iter().sum::<u32>();
    let wt = |m: &[u32]| m.iter().zip(w).map(|(&e, &x)| e as i64 * x).sum::<i64>();
    deg(a).cmp(&deg(b)).then(wt(a).cmp(&wt(b))).then_with(|| a.cmp(b))
}

/// Every binomial y^{l+} - y^{l-} with l in a box of lattice coordinates has its
/// leading monomial in the ideal generated by the leads of `g`.
fn gb_oracle(lat: &RelationLattice, w: &[i64], g: &GroebnerBasis, bound: i64) {
    for b in &g.elements {
        assert!(lat.contains(&b.relation()));
        assert_eq!(order_oracle(w, &b.lead, &b.trail), Ordering::Greater);
        assert!(b.lead.iter().zip(&b.trail).all(|(&x, &y)| x == 0 || y == 0));
    }
    let leads = MonomialIdeal::new(g.elements.iter().map(|b| b.lead.clone()).collect());
    for c in (0..lat.rank()).map(|_| -bound..=bound).multi_cartesian_product() {
        let l: Vec<i64> = (0..lat.ambient())
            .map(|i| c.iter().zip(lat.basis()).map(|(k, v)| k * v[i]).sum())
            .collect();
        if l.iter().all(|&x| x == 0) {
            continue;
        }
        let pos: Vec<u32> = l.iter().map(|&x| x.max(0) as u32).collect();
        let neg: Vec<u32> = l.iter().map(|&x| (-x).max(0) as u32).collect();
        let lead = if order_oracle(w, &pos, &neg) == Ordering::Greater { pos } else { neg };
        assert!(leads.contains(&lead), "{l:?} escapes the basis");
    }
}

#[test]
fn quintic_basis() {
    let w = [0, 1, 1, 1, 1, 1];
    let g = gb(&quintic(), &w);
    assert_eq!(g.elements.len(), 1);
    assert_eq!(g.elements[0].lead, mono(&[0, 1, 1, 1, 1, 1]));
    assert_eq!(g.elements[0].trail, mono(&[5, 0, 0, 0, 0, 0]));
    assert_eq!(g.elements[0].display_with(&variable_names("y", 6)), "y1*y2*y3*y4*y5 - y0^5");
    assert_eq!(g.initial_ideal, MonomialIdeal::new(vec![mono(&[0, 1, 1, 1, 1, 1])]));
    gb_oracle(&relation_lattice(&quintic()), &w, &g, 4);
}

#[test]
fn square_basis() {
    let w = [0, 1, 1, 1, 1];
    let g = gb(&square(), &w);
    assert_eq!(g.relations(), vec![vec![-2, 0, 0, 1, 1], vec![-2, 1, 1, 0, 0]]);
    assert_eq!(
        initial_ideal(&g),
        MonomialIdeal::new(vec![mono(&[0, 1, 1, 0, 0]), mono(&[0, 0, 0, 1, 1])])
    );
    assert!(g.initial_ideal.is_squarefree());
    gb_oracle(&relation_lattice(&square()), &w, &g, 4);
}

#[test]
fn twisted_cubic_needs_all_of_the_lattice() {
    let cfg = PointConfiguration::new(1, vec![vec![0], vec![1], vec![2], vec![3]]).unwrap();
    let lat = relation_lattice(&cfg);
    let w = [0, 0, 0, 0];
    let g = toric_ideal_gb(&lat, &TermOrder::new(weight_from_ints(&w))).unwrap();
    assert_eq!(g.elements.len(), 3);
    assert!(g.elements.iter().all(|b| b.lead.iter().sum::<u32>() == 2));
    gb_oracle(&lat, &w, &g, 5);
    // a different basis of L gives the same ideal
    let skew = RelationLattice::from_basis(4, vec![vec![1, -2, 1, 0], vec![1, -1, -1, 1]]);
    let h = toric_ideal_gb(&skew, &TermOrder::new(weight_from_ints(&w))).unwrap();
    assert_eq!(h.relations(), g.relations());
}

#[test]
fn pure_weight_ties_are_reported() {
    let lat = relation_lattice(&quintic());
    let e = toric_ideal_gb(&lat, &TermOrder::pure(weight_from_ints(&[5, 5, 5, 5, 5, 5]))).unwrap_err();
    assert!(matches!(e, Error::NonGenericWeight(_)));
    assert!(toric_ideal_gb(&lat, &TermOrder::pure(weight_from_ints(&[0, 1, 1, 1, 1, 1]))).is_ok());
    let e = toric_ideal_gb(&lat, &TermOrder::new(weight_from_ints(&[0, 1]))).unwrap_err();
    assert_eq!(e, Error::WeightLength { expected: 6, got: 2 });
}

#[test]
fn radicals() {
    let i = MonomialIdeal::new(vec![mono(&[2, 1, 0])]);
    assert_eq!(monomial_radical(&i), MonomialIdeal::new(vec![mono(&[1, 1, 0])]));
    let j = MonomialIdeal::new(vec![mono(&[1, 1, 0]), mono(&[0, 0, 1])]);
    assert_eq!(monomial_radical(&j), j);
}

#[test]
fn weighted_projective_initial_ideal_is_not_radical() {
    let cfg = p112();
    let (w, t) = maximal(&cfg);
    assert!(is_maximal(&t) && !is_unimodular(&t));
    let g = toric_ideal_gb(&relation_lattice(&cfg), &TermOrder::new(w)).unwrap();
    let lt = initial_ideal(&g);
    let rad = monomial_radical(&lt);
    assert!(!lt.is_squarefree());
    assert_ne!(lt, rad);
    assert!(lt.generators.iter().all(|m| rad.contains(m)));
    assert!(rad.generators.iter().any(|m| !lt.contains(m)));
    assert_eq!(rad, stanley_reisner_generators(&t));
}

#[test]
fn maximal_unimodular_initial_ideals_are_stanley_reisner() {
    for cfg in [quintic(), square(), p1p3()] {
        let (w, t) = maximal(&cfg);
        assert!(is_unimodular(&t));
        let g = toric_ideal_gb(&relation_lattice(&cfg), &TermOrder::new(w)).unwrap();
        assert!(g.initial_ideal.is_squarefree());
        assert_eq!(g.initial_ideal, stanley_reisner_generators(&t));
    }
}

#[test]
fn groebner_cones() {
    let lat = relation_lattice(&quintic());
    let c = groebner_cone(&gb(&quintic(), &[0, 1, 1, 1, 1, 1]), &lat);
    assert!(c.reduced.equals(&gkz_lcsl::cone::Cone::positive_orthant(1)));
    assert!(c.full.contains(&weight_from_ints(&[0, 1, 1, 1, 1, 1])));
    assert!(!c.full.contains(&weight_from_ints(&[1, 0, 0, 0, 0, 0])));

    let lat = relation_lattice(&square());
    let c = groebner_cone(&gb(&square(), &[0, 1, 1, 1, 1]), &lat);
    assert!(c.reduced.equals(&gkz_lcsl::cone::Cone::positive_orthant(2)));
}

#[test]
fn groebner_cones_refine_secondary_cones() {
    for (name, cfg) in shipped().into_iter().chain([("p11222", p11222())]) {
        let (w, t) = maximal(&cfg);
        let lat = relation_lattice(&cfg);
        let g = toric_ideal_gb(&lat, &TermOrder::new(w)).unwrap();
        let sec = secondary_cone(&t).unwrap();
        assert!(sec.contains_cone(&groebner_cone(&g, &lat).reduced), "{name}");
    }
}

/// Distinct initial ideals met at generic points of an integer grid.
fn sampled_fan(cfg: &PointConfiguration, radius: i64) -> BTreeSet<MonomialIdeal> {
    let lat = relation_lattice(cfg);
    let mut out = BTreeSet::new();
    for z in (0..lat.rank()).map(|_| -radius..=radius).multi_cartesian_product() {
        let z: Vec<Q> = z.into_iter().map(q).collect();
        let g = gb_at_reduced(&lat, &z).unwrap();
        if weight_is_generic(&g, &lat, &z) {
            out.insert(g.initial_ideal);
        }
    }
    out
}

fn fan_ideals(f: &GroebnerFan) -> BTreeSet<MonomialIdeal> {
    f.cones.iter().map(|(g, _)| g.initial_ideal.clone()).collect()
}

#[test]
fn quintic_fan_has_both_orientations() {
    let lat = relation_lattice(&quintic());
    let f = groebner_fan_traverse(&lat, 64).unwrap();
    assert!(f.complete);
    assert_eq!(f.cones.len(), 2);
    let want = BTreeSet::from([
        MonomialIdeal::new(vec![mono(&[0, 1, 1, 1, 1, 1])]),
        MonomialIdeal::new(vec![mono(&[5, 0, 0, 0, 0, 0])]),
    ]);
    assert_eq!(fan_ideals(&f), want);
    assert_eq!(sampled_fan(&quintic(), 3), want);
}

#[test]
fn fans_match_grid_sampling() {
    for cfg in [square(), p112()] {
        let f = groebner_fan_traverse(&relation_lattice(&cfg), 256).unwrap();
        assert!(f.complete);
        assert_eq!(fan_ideals(&f), sampled_fan(&cfg, 4));
    }
    let f = groebner_fan_traverse(&relation_lattice(&square()), 256).unwrap();
    assert_eq!(f.cones.len(), 3);
}

#[test]
fn fan_is_seed_independent() {
    for cfg in [quintic(), square(), p1p3()] {
        let lat = relation_lattice(&cfg);
        let f = groebner_fan_traverse(&lat, 512).unwrap();
        assert!(f.complete);
        for (_, cone) in &f.cones {
            let seed = cone.relative_interior_point();
            let g = groebner_fan_traverse_from(&lat, &seed, 512).unwrap();
            assert_eq!(fan_ideals(&g), fan_ideals(&f));
        }
    }
}

#[test]
fn small_budget_leaves_the_fan_incomplete() {
    let f = groebner_fan_traverse(&relation_lattice(&square()), 2).unwrap();
    assert!(!f.complete);
    assert!(f.computations <= 2);
}

#[test]
fn reduced_bases_are_fixed_points() {
    for (_, cfg) in shipped() {
        let (w, _) = maximal(&cfg);
        let g = toric_ideal_gb(&relation_lattice(&cfg), &TermOrder::new(w)).unwrap();
        let h = rerun_buchberger(&g).unwrap();
        assert_eq!(h.relations(), g.relations());
        assert_eq!(h.initial_ideal, g.initial_ideal);
        for b in &g.elements {
            for c in &g.elements {
                if b != c {
                    assert!(!MonomialIdeal::new(vec![b.lead.clone()]).contains(&c.lead));
                    assert!(!MonomialIdeal::new(vec![b.lead.clone()]).contains(&c.trail));
                }
            }
        }
    }
}

#[test]
fn normal_forms_stay_monomials() {
    let g = gb(&square(), &[0, 1, 1, 1, 1]);
    assert_eq!(g.normal_form(&[0, 2, 2, 0, 0]), mono(&[4, 0, 0, 0, 0]));
    assert_eq!(g.normal_form(&[0, 1, 1, 1, 1]), mono(&[4, 0, 0, 0, 0]));
    assert_eq!(g.normal_form(&[0, 1, 0, 1, 0]), mono(&[0, 1, 0, 1, 0]));
}

fn quintic_mori() -> MoriBasis {
    let (_, t) = maximal(&quintic());
    mori_basis(&t, TauChoice::Auto).unwrap()
}

#[test]
fn quintic_indicial_ideal() {
    let a = quintic_mori();
    let ind = indicial_ideal(&gb(&quintic(), &[0, 1, 1, 1, 1, 1]), &a);
    // each y_i with i > 0 contributes theta_i = rho once
    let rho = Poly::var(1, 0);
    let oracle = (1..=5).fold(Poly::one(1), |acc, i| acc.mul(&theta_form(&a, i)));
    assert_eq!(oracle, rho.pow(5));
    assert_eq!(ind.generators, vec![rho.pow(5)]);
    assert!(ind.is_homogeneous());
    assert!(indicial_variety_is_origin(&ind));
    assert_eq!(indicial_hilbert_series(&ind), Some(vec![1, 1, 1, 1, 1]));
}

#[test]
fn square_indicial_ideal() {
    let (w, t) = maximal(&square());
    let a = mori_basis(&t, TauChoice::Auto).unwrap();
    let ind = indicial_ideal(&toric_ideal_gb(&relation_lattice(&square()), &TermOrder::new(w)).unwrap(), &a);
    let got: BTreeSet<Poly> = ind.generators.iter().cloned().collect();
    let want = BTreeSet::from([Poly::var(2, 0).pow(2), Poly::var(2, 1).pow(2)]);
    assert_eq!(got, want);
    assert!(indicial_variety_is_origin(&ind));
    assert_eq!(indicial_hilbert_series(&ind), Some(vec![1, 2, 1]));
}

#[test]
fn reversed_quintic_orientation_is_not_at_the_origin() {
    let a = quintic_mori();
    let g = gb(&quintic(), &[1, 0, 0, 0, 0, 0]);
    assert_eq!(g.elements[0].lead, mono(&[5, 0, 0, 0, 0, 0]));
    let t = regular_triangulation(&quintic(), &weight_from_ints(&[1, 0, 0, 0, 0, 0])).unwrap();
    assert!(!is_maximal(&t));
    let ind = indicial_ideal(&g, &a);
    assert!(!ind.is_homogeneous());
    assert!(!indicial_variety_is_origin(&ind));
    // theta_0 = -5 rho - 1; the falling factorial vanishes at rho = -1/5
    let root = [qr(-1, 5)];
    assert_eq!(ind.generators[0].eval(&root), q(0));
    assert_ne!(ind.generators[0].eval(&[q(0)]), q(0));
}

#[test]
fn radical_indicial_ideal_of_the_weighted_projective_plane() {
    let cfg = p112();
    let (w, t) = maximal(&cfg);
    let a = mori_basis(&t, TauChoice::Auto).unwrap();
    let g = toric_ideal_gb(&relation_lattice(&cfg), &TermOrder::new(w)).unwrap();
    let ind = indicial_ideal(&g, &a);
    let rad = radical_indicial_ideal(&g, &a);
    assert!(rad.radical && !ind.radical);
    assert_eq!(g.elements.len(), 1);
    let lead = &g.elements[0].lead;
    assert_eq!(lead.iter().max(), Some(&2));
    // the squared variable contributes theta(theta - 1), which also vanishes off the origin
    assert!(!ind.is_homogeneous());
    assert!(!indicial_variety_is_origin(&ind));
    let k = lead.iter().position(|&e| e == 2).unwrap();
    let c = a.entry(0, k);
    assert_eq!(ind.generators[0].eval(&[qr(1, c)]), q(0));
    let oracle = (0..lead.len())
        .filter(|&i| lead[i] > 0)
        .fold(Poly::one(1), |acc, i| acc.mul(&theta_form(&a, i)));
    assert_eq!(rad.generators, vec![oracle]);
    assert!(rad.is_homogeneous());
    assert!(indicial_variety_is_origin(&rad));
}

#[test]
fn indicial_dimension_is_the_volume() {
    for cfg in [quintic(), square(), p1p3(), p11222()] {
        let m = model(&cfg);
        let ind = indicial_ideal(&m.gb, &m.a);
        assert!(ind.is_homogeneous());
        let h = indicial_hilbert_series(&ind).unwrap();
        let vol = gkz_lcsl::triangulation::normalized_volume(&m.t);
        assert_eq!(num_bigint::BigInt::from(h.iter().sum::<usize>()), vol);
    }
}

fn config_strategy() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0usize..4).prop_flat_map(|k| {
        let n = shipped()[k].1.len();
        (Just(k), proptest::collection::vec(0i64..24, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn radical_of_initial_ideal_is_stanley_reisner((k, w) in config_strategy()) {
        let cfg = shipped()[k].1.clone();
        let w = weight_from_ints(&w);
        let t = regular_triangulation(&cfg, &w);
        prop_assume!(t.is_ok());
        let t = t.unwrap();
        let g = toric_ideal_gb(&relation_lattice(&cfg), &TermOrder::new(w)).unwrap();
        prop_assert_eq!(monomial_radical(&g.initial_ideal), stanley_reisner_generators(&t));
        if is_maximal(&t) && is_unimodular(&t) {
            prop_assert_eq!(&g.initial_ideal, &stanley_reisner_generators(&t));
        }
    }

    #[test]
    fn bases_are_fixed_points((k, w) in config_strategy()) {
        let cfg = shipped()[k].1.clone();
        let g = toric_ideal_gb(&relation_lattice(&cfg), &TermOrder::new(weight_from_ints(&w))).unwrap();
        prop_assert_eq!(rerun_buchberger(&g).unwrap().relations(), g.relations());
    }
}
