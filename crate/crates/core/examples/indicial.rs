//! Indicial ideals at a maximal weight and at the opposite weight of the quintic.

use gkz_lcsl::groebner::{toric_ideal_gb, TermOrder};
use gkz_lcsl::indicial::{indicial_hilbert_series, indicial_ideal, indicial_variety_is_origin};
use gkz_lcsl::lattice::{mori_basis, relation_lattice, TauChoice};
use gkz_lcsl::polytope::{gauge_point_set, LatticePolytope};
use gkz_lcsl::triangulation::{regular_triangulation, weight_from_ints};

fn main() -> gkz_lcsl::Result<()> {
    let star = LatticePolytope::new(
        4,
        vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, -1, -1, -1]],
    )?;
    let cfg = gauge_point_set(&star)?;
    let lattice = relation_lattice(&cfg);
    let maximal = [0, 1, 1, 1, 1, 1];
    let a = mori_basis(&regular_triangulation(&cfg, &weight_from_ints(&maximal))?, TauChoice::Auto)?;

    for w in [maximal, [1, 0, 0, 0, 0, 0]] {
        let ind = indicial_ideal(&toric_ideal_gb(&lattice, &TermOrder::new(weight_from_ints(&w)))?, &a);
        let gens: Vec<String> = ind.generators.iter().map(|g| g.display_with(&ind.names())).collect();
        println!("weight {w:?}");
        println!("  generators: {}", gens.join(", "));
        println!("  homogeneous {}, at the origin {}", ind.is_homogeneous(), indicial_variety_is_origin(&ind));
        println!("  hilbert series {:?}", indicial_hilbert_series(&ind));
    }
    Ok(())
}
