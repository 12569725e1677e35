//! Mirror map of the quintic: the flat coordinate and its inverse x(q).

use gkz_lcsl::chow::{chow_ring_in_basis, hypersurface_ring};
use gkz_lcsl::gkz::{w0_series, GkzContext};
use gkz_lcsl::lattice::{mori_basis, TauChoice};
use gkz_lcsl::mirror::special_coordinates;
use gkz_lcsl::polytope::{gauge_point_set, LatticePolytope};
use gkz_lcsl::triangulation::{regular_triangulation, weight_from_ints};

fn main() -> gkz_lcsl::Result<()> {
    let star = LatticePolytope::new(
        4,
        vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, -1, -1, -1]],
    )?;
    let cfg = gauge_point_set(&star)?;
    let t = regular_triangulation(&cfg, &weight_from_ints(&[0, 1, 1, 1, 1, 1]))?;
    let a = mori_basis(&t, TauChoice::Auto)?;
    let ring = chow_ring_in_basis(&t, &a)?;
    let hx = hypersurface_ring(&ring);
    let order = 6;
    let b = w0_series(&GkzContext::hypersurface(&ring, &hx, &a), order)?;
    let mm = special_coordinates(&b, order);
    for k in 1..order {
        println!("g[{k}] = {}   x[{k}] = {}", mm.forward[0].coeff(&[k]), mm.inverse[0].coeff(&[k]));
    }
    Ok(())
}
