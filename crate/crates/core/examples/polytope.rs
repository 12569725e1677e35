//! Polar dual, lattice points and the reflexivity test for the quintic simplex.

use gkz_lcsl::polytope::{gauge_point_set, interior_points, is_reflexive, lattice_points, polar_dual, LatticePolytope};

fn main() -> gkz_lcsl::Result<()> {
    let star = LatticePolytope::new(
        4,
        vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, -1, -1, -1]],
    )?;
    let dual = polar_dual(&star)?;
    println!("reflexive: {}", is_reflexive(&star));
    println!("dual vertices: {:?}", dual.vertices());
    println!("points of the dual: {}", lattice_points(&dual).len());
    println!("interior points of the dual: {:?}", interior_points(&dual));
    let cfg = gauge_point_set(&star)?;
    println!("gauge point set: {:?}", cfg.points());
    Ok(())
}
