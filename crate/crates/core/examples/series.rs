//! Chow-ring valued hypergeometric series of the quintic and its constant terms.

use gkz_lcsl::chow::{chow_ring_in_basis, hypersurface_ring};
use gkz_lcsl::gkz::{coefficient_ratio, psi_values, w0_series, GkzContext};
use gkz_lcsl::lattice::{mori_basis, TauChoice};
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

    println!("c(1 + J) / c(J) = {}", coefficient_ratio(&[1], &ctx)?);
    let b = w0_series(&ctx, 6)?;
    for n in 0..6 {
        println!("w0[{n}] = {}", b.w0.coeff(&[n]));
    }
    for (k, p) in psi_values(&[0], &GkzContext::ambient(&ring, &a))?.iter().enumerate() {
        println!("psi{}(0) = {p}", k + 1);
    }
    Ok(())
}
