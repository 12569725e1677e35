//! Prepotential, Yukawa coupling and instanton numbers of the quintic.

use gkz_lcsl::chow::{chow_ring_in_basis, hypersurface_ring};
use gkz_lcsl::gkz::{w0_series, GkzContext};
use gkz_lcsl::lattice::{mori_basis, TauChoice};
use gkz_lcsl::mirror::{instanton_numbers, lines_number, prepotential, special_coordinates, yukawa_couplings};
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
    let ctx = GkzContext::hypersurface(&ring, &hx, &a);
    let order = 6;
    let b = w0_series(&ctx, order)?;
    let mm = special_coordinates(&b, order);

    let f = prepotential(&ring, &hx, &a, &b, &mm)?;
    println!("cubic term {} t^3, linear term {} t, constant {}", f.cubic_coefficient(0, 0, 0), f.linear_coefficient(0), f.constant);
    let k = yukawa_couplings(&f);
    for d in 0..order {
        println!("K[{d}] = {}", k.get(0, 0, 0).coeff(&[d]));
    }
    for (d, n) in instanton_numbers(&k, order)?.rows() {
        println!("N{d:?} = {n}");
    }
    println!("closed form in degree one: {}", lines_number(&[1], &ctx)?);
    Ok(())
}
