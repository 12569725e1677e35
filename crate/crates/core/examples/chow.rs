//! Chow ring, Chern classes and intersection numbers for P^1 x P^3.

use gkz_lcsl::chow::{chern_data, chow_ring_in_basis, hypersurface_ring};
use gkz_lcsl::lattice::{mori_basis, TauChoice};
use gkz_lcsl::mirror::triple_intersections;
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
    let (found, _) = find_maximal_weight(&cfg, true, 256, 7);
    let (_, t) = found.expect("a maximal triangulation");
    let a = mori_basis(&t, TauChoice::Auto)?;
    let ring = chow_ring_in_basis(&t, &a)?;
    println!("ambient hilbert series: {:?}", ring.hilbert_series());
    println!("[X] = {}", ring.hypersurface_class());

    let c = chern_data(&ring, &a);
    println!("c2 = {}", c.c2);
    println!("c3 = {}", c.c3);
    println!("euler = {}", c.euler);

    let hx = hypersurface_ring(&ring);
    println!("hypersurface hilbert series: {:?}", hx.algebra().hilbert_series());
    for ((i, j, k), v) in triple_intersections(&hx, a.rank()) {
        println!("int J{} J{} J{} = {v}", i + 1, j + 1, k + 1);
    }
    Ok(())
}
