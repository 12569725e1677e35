//! Regular triangulations from weights, and a search for a maximal one.

use gkz_lcsl::polytope::PointConfiguration;
use gkz_lcsl::triangulation::{
    find_maximal_weight, is_maximal, primitive_collections, regular_triangulation, weight_from_ints,
};

fn main() -> gkz_lcsl::Result<()> {
    // the square with vertices +-e1, +-e2 and the origin
    let cfg = PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]])?;

    let coarse = regular_triangulation(&cfg, &weight_from_ints(&[1, 0, 1, 0, 0]))?;
    println!("lifting the origin and -e1: {:?}, maximal {}", coarse.simplices(), is_maximal(&coarse));

    let (found, attempts) = find_maximal_weight(&cfg, true, 64, 1);
    let (w, t) = found.expect("the square has a unimodular triangulation");
    let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    println!("maximal after {attempts} attempts, weight {w:?}");
    println!("simplices: {:?}", t.simplices());
    for pc in primitive_collections(&t)? {
        println!("primitive collection {:?} with relation {:?}", pc.indices, pc.relation);
    }
    Ok(())
}
