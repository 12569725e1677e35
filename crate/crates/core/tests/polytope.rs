mod common;

use std::collections::BTreeSet;

use common::*;
use gkz_lcsl::linalg::Q;
use gkz_lcsl::polytope::*;
use gkz_lcsl::Error;
use itertools::Itertools;
use proptest::prelude::*;

fn pair(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Vertices of `{x : <x,v> >= -1}` by intersecting every `d`-subset of hyperplanes.
fn dual_vertices_oracle(p: &LatticePolytope) -> BTreeSet<Vec<Q>> {
    let d = p.rank();
    let vs = p.vertices();
    let mut out = BTreeSet::new();
    for sub in (0..vs.len()).combinations(d) {
        let m: Vec<Vec<Q>> = sub.iter().map(|&i| vs[i].iter().map(|&x| q(x)).collect()).collect();
        let Some(x) = solve(&m, &vec![q(-1); d]) else { continue };
        let feasible = vs
            .iter()
            .all(|v| v.iter().zip(&x).map(|(a, b)| q(*a) * b).sum::<Q>() >= q(-1));
        if feasible {
            out.insert(x);
        }
    }
    out
}

fn box_scan(d: usize, lo: i64, hi: i64, normals: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    (0..d)
        .map(|_| lo..=hi)
        .multi_cartesian_product()
        .filter(|y| normals.iter().all(|v| pair(y, v) >= -1))
        .collect()
}

#[test]
fn square_duals_to_square() {
    let sq = LatticePolytope::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap();
    let d = polar_dual(&sq).unwrap();
    let got: BTreeSet<_> = d.vertices().iter().cloned().collect();
    let want: BTreeSet<Vec<i64>> = [[1, 1], [1, -1], [-1, 1], [-1, -1]].iter().map(|v| v.to_vec()).collect();
    assert_eq!(got, want);
}

#[test]
fn quintic_dual_matches_hyperplane_intersection() {
    let d = polar_dual(&quintic_star()).unwrap();
    let got: BTreeSet<Vec<Q>> = d.vertices().iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect();
    let want = dual_vertices_oracle(&quintic_star());
    assert_eq!(got, want);
    assert_eq!(want.len(), 5);
    assert!(want.contains(&vec![q(4), q(-1), q(-1), q(-1)]));
    assert!(want.contains(&vec![q(-1), q(-1), q(-1), q(-1)]));
}

#[test]
fn dual_is_involution_on_shipped_polytopes() {
    for p in [quintic_star(), p1p3_star(), p11222_star(), p112_star()] {
        let dd = polar_dual(&polar_dual(&p).unwrap()).unwrap();
        assert_eq!(dd.vertex_set(), p.vertex_set());
    }
}

#[test]
fn quintic_lattice_points_two_ways() {
    let star = quintic_star();
    let pts = lattice_points(&star);
    assert_eq!(pts.len(), 6);
    assert_eq!(pts[0], vec![0, 0, 0, 0]);

    let delta = polar_dual(&star).unwrap();
    let scanned = box_scan(4, -1, 4, star.vertices());
    let enumerated: BTreeSet<Vec<i64>> = lattice_points(&delta).into_iter().collect();
    assert_eq!(enumerated, scanned);
    assert_eq!(scanned.len(), 126);
}

#[test]
fn lattice_points_are_origin_then_lex() {
    let pts = lattice_points(&p1p3_star());
    assert_eq!(pts[0], vec![0, 0, 0, 0]);
    assert!(pts[1..].windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn reflexivity_examples() {
    assert!(is_reflexive(&quintic_star()));
    let seg = LatticePolytope::new(1, vec![vec![2], vec![-1]]).unwrap();
    assert!(!is_reflexive(&seg));
    let cube = LatticePolytope::new(
        3,
        (0..3).map(|_| [-1i64, 1]).multi_cartesian_product().collect(),
    )
    .unwrap();
    assert!(is_reflexive(&cube));
}

/// Points on exactly one facet hyperplane `<x,m> = -1`, strictly inside the others.
fn facet_interior_oracle(p: &LatticePolytope) -> BTreeSet<Vec<i64>> {
    let dual = polar_dual(p).unwrap();
    let normals = dual.vertices();
    lattice_points(p)
        .into_iter()
        .filter(|x| normals.iter().filter(|m| pair(x, m) == -1).count() == 1)
        .filter(|x| {
            // a point on one facet only may still be a vertex in dimension 1
            !p.vertices().contains(x)
        })
        .collect()
}

#[test]
fn codim_one_interior_points() {
    assert!(codim1_interior_points(&quintic_star()).is_empty());
    let delta = polar_dual(&quintic_star()).unwrap();
    let got: BTreeSet<_> = codim1_interior_points(&delta).into_iter().collect();
    let want = facet_interior_oracle(&delta);
    assert_eq!(got, want);
    assert!(!want.is_empty());

    let sq = LatticePolytope::new(2, vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]]).unwrap();
    let got: BTreeSet<_> = codim1_interior_points(&sq).into_iter().collect();
    let want: BTreeSet<Vec<i64>> = [[1, 0], [-1, 0], [0, 1], [0, -1]].iter().map(|v| v.to_vec()).collect();
    assert_eq!(got, want);
}

#[test]
fn gauge_point_sets() {
    assert_eq!(gauge_point_set(&quintic_star()).unwrap().len(), 6);
    let sq = LatticePolytope::new(2, vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]]).unwrap();
    assert_eq!(lattice_points(&sq).len(), 9);
    assert_eq!(gauge_point_set(&sq).unwrap().len(), 5);
    let full = full_point_set(&quintic_star()).unwrap();
    assert_eq!(full.points(), gauge_point_set(&quintic_star()).unwrap().points());
}

fn roots_oracle(delta: &LatticePolytope, star: &LatticePolytope) -> usize {
    let ms = lattice_points(delta);
    lattice_points(star)
        .into_iter()
        .filter(|a| a.iter().any(|&x| x != 0))
        .filter(|a| {
            ms.iter().any(|w| {
                pair(w, a) == -1 && ms.iter().filter(|m| *m != w).all(|m| pair(m, a) >= 0)
            })
        })
        .count()
}

#[test]
fn root_systems() {
    let star = quintic_star();
    let delta = polar_dual(&star).unwrap();
    // roots in the lattice of the big polytope, witnessed by the rays of P^4
    let roots = root_system(&star, &delta);
    assert_eq!(roots.len(), roots_oracle(&star, &delta));
    assert_eq!(roots.len(), 20);
    for r in &roots {
        assert_eq!(pair(&r.witness, &r.root), -1);
    }
    // the other orientation: the resolved mirror ambient space has no roots
    assert_eq!(root_system(&delta, &star).len(), roots_oracle(&delta, &star));
    assert!(root_system(&delta, &star).is_empty());

    let seg = LatticePolytope::new(1, vec![vec![1], vec![-1]]).unwrap();
    assert_eq!(root_system(&seg, &seg).len(), 2);
    assert_eq!(roots_oracle(&seg, &seg), 2);
}

#[test]
fn errors() {
    let off = LatticePolytope::new(1, vec![vec![0], vec![2]]).unwrap();
    assert_eq!(polar_dual(&off), Err(Error::OriginNotInterior));
    let dup = LatticePolytope::new(2, vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![-1, -1]]);
    assert_eq!(dup, Err(Error::NonExtremalVertex(vec![1, 0])));
}

fn apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|r| pair(r, v)).collect()
}

/// Unimodular matrix from a word in elementary shears.
fn unimodular(d: usize, word: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| (i == j) as i64).collect()).collect();
    for &(i, j, k) in word {
        let (i, j) = (i % d, j % d);
        if i == j {
            continue;
        }
        for c in 0..d {
            m[i][c] += k * m[j][c];
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn duality_is_lattice_invariant(
        which in 0usize..3,
        word in prop::collection::vec((0usize..4, 0usize..4, -1i64..=1), 0..4),
    ) {
        let p = [quintic_star(), p1p3_star(), p112_star()][which].clone();
        let g = unimodular(p.rank(), &word);
        let img = LatticePolytope::new(p.rank(), p.vertices().iter().map(|v| apply(&g, v)).collect()).unwrap();
        prop_assert!(is_reflexive(&img));
        let dual = polar_dual(&img).unwrap();
        prop_assert!(is_reflexive(&dual));
        prop_assert_eq!(polar_dual(&dual).unwrap().vertex_set(), img.vertex_set());
        prop_assert_eq!(lattice_points(&img).len(), lattice_points(&p).len());

        let normals = dual.vertices();
        for x in codim1_interior_points(&img) {
            prop_assert_eq!(normals.iter().filter(|m| pair(&x, m) == -1).count(), 1);
            prop_assert!(normals.iter().all(|m| pair(&x, m) >= -1));
        }
        let gauge = gauge_point_set(&img).unwrap();
        let all: BTreeSet<_> = lattice_points(&img).into_iter().collect();
        prop_assert!(gauge.points().iter().all(|x| all.contains(x)));
        prop_assert!(img.vertices().iter().all(|v| gauge.points().contains(v)));
        prop_assert_eq!(&gauge.points()[0], &vec![0i64; p.rank()]);
    }
}
