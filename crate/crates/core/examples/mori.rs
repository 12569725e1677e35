//! Relation lattice, Gale transform and a Mori basis for P^1 x P^3.

use gkz_lcsl::lattice::{gale_transform, is_compatible, mori_basis, relation_lattice, TauChoice};
use gkz_lcsl::polytope::{gauge_point_set, LatticePolytope};
use gkz_lcsl::triangulation::find_maximal_weight;

fn main() -> gkz_lcsl::Result<()> {
    let star = LatticePolytope::new(
        4,
        vec![
            vec![1, 0, 0, 0],
            vec![-1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![0, -1, -1, -1],
        ],
    )?;
    let cfg = gauge_point_set(&star)?;
    let lattice = relation_lattice(&cfg);
    println!("relation lattice basis: {:?}", lattice.basis());
    let gale = gale_transform(&cfg);
    for i in 0..cfg.len() {
        println!("gale column {i}: {:?}", gale.column(i));
    }
    let (found, _) = find_maximal_weight(&cfg, true, 256, 7);
    let (_, t) = found.expect("a maximal triangulation");
    let a = mori_basis(&t, TauChoice::Auto)?;
    println!("mori vectors: {:?}", a.vectors);
    println!("compatible with the triangulation: {}", is_compatible(&a, &t));
    Ok(())
}
