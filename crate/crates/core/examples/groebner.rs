//! Toric Groebner basis, Stanley-Reisner comparison and the Groebner fan.

use gkz_lcsl::groebner::{groebner_fan_traverse, toric_ideal_gb, variable_names, TermOrder};
use gkz_lcsl::lattice::relation_lattice;
use gkz_lcsl::polytope::{gauge_point_set, LatticePolytope};
use gkz_lcsl::triangulation::{find_maximal_weight, monomial_radical, stanley_reisner_generators};

fn main() -> gkz_lcsl::Result<()> {
    // P(1,1,2): the maximal triangulation is not unimodular
    let star = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -2]])?;
    let cfg = gauge_point_set(&star)?;
    let lattice = relation_lattice(&cfg);
    let names = variable_names("y", cfg.len());

    let (found, _) = find_maximal_weight(&cfg, false, 64, 1);
    let (w, t) = found.expect("a maximal triangulation");
    let gb = toric_ideal_gb(&lattice, &TermOrder::new(w))?;
    for b in &gb.elements {
        println!("{}", b.display_with(&names));
    }
    let rad = monomial_radical(&gb.initial_ideal);
    println!("initial ideal squarefree: {}", gb.initial_ideal.is_squarefree());
    println!("radical equals SR: {}", rad == stanley_reisner_generators(&t));

    let fan = groebner_fan_traverse(&lattice, 256)?;
    println!("fan: {} cones, complete {}", fan.cones.len(), fan.complete);
    for (g, _) in &fan.cones {
        let leads: Vec<String> = g.elements.iter().map(|b| b.display_with(&names)).collect();
        println!("  {}", leads.join(", "));
    }
    Ok(())
}
