mod common;

use std::collections::BTreeSet;

use common::*;
use gkz_lcsl::cone::Cone;
use gkz_lcsl::lattice::relation_lattice;
use gkz_lcsl::linalg::Q;
use gkz_lcsl::polytope::{self, PointConfiguration};
use gkz_lcsl::triangulation::*;
use gkz_lcsl::Error;
use itertools::Itertools;
use proptest::prelude::*;

fn hom(cfg: &PointConfiguration, i: usize) -> Vec<Q> {
    cfg.homogenized(i).iter().map(|&x| q(x)).collect()
}

/// Simplices whose lifted affine hyperplane lies weakly below every lifted point.
fn lower_hull_oracle(cfg: &PointConfiguration, w: &[Q]) -> BTreeSet<Vec<usize>> {
    let d = cfg.rank();
    let n = cfg.len();
    (0..n)
        .combinations(d + 1)
        .filter(|s| {
            let m: Vec<Vec<Q>> = s.iter().map(|&i| hom(cfg, i)).collect();
            let rhs: Vec<Q> = s.iter().map(|&i| w[i].clone()).collect();
            match solve(&m, &rhs) {
                None => false,
                Some(h) => (0..n).all(|k| {
                    let val: Q = h.iter().zip(hom(cfg, k)).map(|(a, b)| a * b).sum();
                    val <= w[k]
                }),
            }
        })
        .collect()
}

fn weight(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

#[test]
fn quintic_pulling_triangulation() {
    let cfg = quintic();
    let w = weight(&[0, 1, 1, 1, 1, 1]);
    let t = regular_triangulation(&cfg, &w).unwrap();
    let got: BTreeSet<Vec<usize>> = t.simplices().iter().cloned().collect();
    assert_eq!(got, lower_hull_oracle(&cfg, &w));
    assert_eq!(got.len(), 5);
    assert!(got.iter().all(|s| s.contains(&0)));
    assert!(is_maximal(&t));
    assert!(is_unimodular(&t));
}

#[test]
fn rank_one_segment() {
    let cfg = PointConfiguration::new(1, vec![vec![0], vec![1], vec![-1]]).unwrap();
    let t = regular_triangulation(&cfg, &weight(&[0, 1, 1])).unwrap();
    assert_eq!(t.simplices(), &[vec![0, 1], vec![0, 2]]);
}

#[test]
fn equal_heights_are_a_wall() {
    let e = regular_triangulation(&square(), &weight(&[1, 1, 1, 1, 1]));
    assert_eq!(e.unwrap_err(), Error::DegenerateWeight(vec![0, 1, 2, 3, 4]));
    let e = regular_triangulation(&square(), &weight(&[0, 1, 1]));
    assert_eq!(e.unwrap_err(), Error::WeightLength { expected: 5, got: 3 });
}

#[test]
fn maximality_conditions() {
    let cfg = PointConfiguration::new(1, vec![vec![0], vec![1], vec![-1], vec![2]]).unwrap();
    let t = regular_triangulation(&cfg, &weight(&[0, 5, 1, 1])).unwrap();
    assert!(!t.used_points().contains(&1));
    assert!(!is_maximal(&t));

    let cfg = PointConfiguration::new(1, vec![vec![0], vec![1], vec![-1]]).unwrap();
    let t = regular_triangulation(&cfg, &weight(&[5, 0, 0])).unwrap();
    assert_eq!(t.simplices(), &[vec![1, 2]]);
    assert!(!is_maximal(&t));
}

#[test]
fn unimodularity() {
    let cfg = PointConfiguration::new(1, vec![vec![0], vec![2], vec![-1]]).unwrap();
    let t = Triangulation::from_simplices(&cfg, vec![vec![0, 1], vec![0, 2]]).unwrap();
    assert!(!is_unimodular(&t));
    let (_, t) = maximal(&p112());
    assert!(is_maximal(&t));
    assert!(!is_unimodular(&t));
    assert!(t.simplices().iter().any(|s| det(&s.iter().map(|&i| t.config().homogenized(i)).collect::<Vec<_>>()).abs() == 2));
}

/// Minimal vertex sets that are not faces of any simplex.
fn minimal_nonfaces_oracle(t: &Triangulation) -> BTreeSet<Vec<usize>> {
    let n = t.config().len();
    let is_face = |s: &[usize]| t.simplices().iter().any(|m| s.iter().all(|i| m.contains(i)));
    let mut out = BTreeSet::new();
    for k in 1..=n {
        for s in (0..n).combinations(k) {
            if !is_face(&s) && s.iter().all(|&i| is_face(&s.iter().copied().filter(|&j| j != i).collect::<Vec<_>>())) {
                out.insert(s);
            }
        }
    }
    out
}

fn in_kernel(cfg: &PointConfiguration, l: &[i64]) -> bool {
    (0..=cfg.rank()).all(|j| (0..cfg.len()).map(|i| l[i] * cfg.homogenized(i)[j]).sum::<i64>() == 0)
}

#[test]
fn primitive_collections_of_quintic_and_square() {
    let (_, t) = maximal(&quintic());
    let pc = primitive_collections(&t).unwrap();
    assert_eq!(pc.len(), 1);
    assert_eq!(pc[0].indices, vec![1, 2, 3, 4, 5]);
    assert_eq!(pc[0].relation, vec![-5, 1, 1, 1, 1, 1]);
    let oracle = minimal_nonfaces_oracle(&t);
    assert_eq!(oracle, BTreeSet::from([vec![1, 2, 3, 4, 5]]));

    let (_, t) = maximal(&square());
    let pc = primitive_collections(&t).unwrap();
    let got: BTreeSet<(Vec<usize>, Vec<i64>)> = pc.iter().map(|c| (c.indices.clone(), c.relation.clone())).collect();
    let want = BTreeSet::from([
        (vec![1, 2], vec![-2, 1, 1, 0, 0]),
        (vec![3, 4], vec![-2, 0, 0, 1, 1]),
    ]);
    assert_eq!(got, want);
    let cols: BTreeSet<Vec<usize>> = pc.iter().map(|c| c.indices.clone()).collect();
    assert_eq!(cols, minimal_nonfaces_oracle(&t));
}

#[test]
fn primitive_relations_on_shipped_unimodular_examples() {
    for cfg in [quintic(), square(), p1p3(), p11222()] {
        let (_, t) = maximal(&cfg);
        assert!(is_unimodular(&t));
        let pc = primitive_collections(&t).unwrap();
        let cols: BTreeSet<Vec<usize>> = pc.iter().map(|c| c.indices.clone()).collect();
        assert_eq!(cols, minimal_nonfaces_oracle(&t));
        for c in pc {
            assert!(!c.indices.contains(&0));
            assert!(in_kernel(&cfg, &c.relation));
            assert!(c.relation[0] <= 0);
            let pos: Vec<usize> = (0..cfg.len()).filter(|&i| c.relation[i] > 0).collect();
            assert_eq!(pos, c.indices);
            assert!(c.indices.iter().all(|&i| c.relation[i] == 1));
        }
    }
}

#[test]
fn weighted_primitive_relation_of_singular_cone() {
    let (_, t) = maximal(&p112());
    assert!(matches!(primitive_collections(&t), Err(Error::NonUnimodularCone(_))));
    let pc = primitive_collections_weighted(&t).unwrap();
    assert!(pc.iter().any(|c| c.multiplicities.iter().any(|&m| m > 1)));
    for c in &pc {
        assert!(in_kernel(&p112(), &c.relation));
    }
}

#[test]
fn stanley_reisner_ideals() {
    let (_, t) = maximal(&quintic());
    assert_eq!(stanley_reisner_generators(&t).generators, vec![vec![0, 1, 1, 1, 1, 1]]);
    let (_, t) = maximal(&square());
    let sr = stanley_reisner_generators(&t);
    assert_eq!(
        sr.generators.iter().cloned().collect::<BTreeSet<_>>(),
        BTreeSet::from([vec![0, 1, 1, 0, 0], vec![0, 0, 0, 1, 1]])
    );
    for cfg in [quintic(), square(), p1p3(), p11222(), p112()] {
        let (_, t) = maximal(&cfg);
        let sr = stanley_reisner_generators(&t);
        assert!(sr.is_squarefree());
        assert!(sr.generators.iter().all(|g| g[0] == 0));
        for (a, b) in sr.generators.iter().tuple_combinations() {
            assert!(!a.iter().zip(b).all(|(x, y)| x <= y));
            assert!(!b.iter().zip(a).all(|(x, y)| x <= y));
        }
    }
}

#[test]
fn secondary_cones() {
    let (_, t) = maximal(&quintic());
    let c = secondary_cone(&t).unwrap();
    assert_eq!(c.dim(), 1);
    assert!(c.contains_in_interior(&[q(1)]));
    assert!(!c.contains(&[q(-1)]));

    let (_, t) = maximal(&square());
    let c = secondary_cone(&t).unwrap();
    assert!(c.equals(&Cone::positive_orthant(2)));
}

#[test]
fn mother_configuration_twisted_triangulation_is_not_regular() {
    let cfg = PointConfiguration::new(
        2,
        vec![vec![0, 0], vec![4, 0], vec![0, 4], vec![2, 1], vec![1, 2], vec![1, 1]],
    )
    .unwrap();
    let twisted = vec![
        vec![0, 1, 3],
        vec![0, 2, 5],
        vec![0, 3, 5],
        vec![1, 2, 4],
        vec![1, 3, 4],
        vec![2, 4, 5],
        vec![3, 4, 5],
    ];
    let t = Triangulation::from_simplices(&cfg, twisted).unwrap();
    assert_eq!(secondary_cone(&t).unwrap_err(), Error::EmptyInterior);

    let w = weight(&[0, 0, 0, 1, 1, 1]);
    let t = regular_triangulation(&cfg, &w).unwrap();
    let c = secondary_cone(&t).unwrap();
    assert!(c.contains_in_interior(&relation_lattice(&cfg).reduce_weight(&w)));
}

#[test]
fn volume_additivity() {
    for cfg in [quintic(), square(), p1p3(), p11222(), p112()] {
        let (_, t) = maximal(&cfg);
        let p = polytope::LatticePolytope::from_points(cfg.rank(), cfg.points().to_vec()).unwrap();
        let sum: i64 = t
            .simplices()
            .iter()
            .map(|s| det(&s.iter().map(|&i| cfg.homogenized(i)).collect::<Vec<_>>()).abs())
            .sum();
        assert_eq!(num_bigint::BigInt::from(sum), polytope::normalized_volume(&p));
        if is_unimodular(&t) {
            assert_eq!(sum as usize, t.simplices().len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn secondary_cone_round_trip(which in 0usize..5, mix in prop::collection::vec(1i64..6, 8)) {
        let cfg = [quintic(), square(), p1p3(), p11222(), p112()][which].clone();
        let (_, t) = maximal(&cfg);
        let c = secondary_cone(&t).unwrap();
        let lat = relation_lattice(&cfg);
        let mut z = c.relative_interior_point();
        for (ray, k) in c.rays().iter().zip(&mix) {
            for (x, y) in z.iter_mut().zip(ray) {
                *x += y * q(*k);
            }
        }
        prop_assert!(c.contains_in_interior(&z));
        let w = lat.lift_weight(&z);
        let t2 = regular_triangulation(&cfg, &w).unwrap();
        prop_assert_eq!(t2.simplices(), t.simplices());
    }
}
