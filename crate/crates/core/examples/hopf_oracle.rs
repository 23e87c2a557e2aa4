//! Free nilpotent presentations and dim M(L) through the Hopf formula,
//! side by side with the cohomological value.
//!
//! `cargo run --release --example hopf_oracle`

use liemult::hopf::{HallBasis, Presentation};
use liemult::multiplier::schur_multiplier_dim;
use liemult::{catalogue, LieAlgebra};

fn main() {
    let b = HallBasis::new(2, 4).unwrap();
    println!(
        "Hall basis on 2 generators up to degree 4: {:?}",
        b.degree_dims()
    );
    for i in 0..b.len() {
        println!("  {:>2}  {}", i + 1, b.render(i));
    }

    println!();
    println!(
        "{:<10} {:>2} {:>3} {:>4} {:>7} {:>5} {:>5} {:>5}",
        "name", "d", "F", "R", "R^F^2", "[R,F]", "hopf", "coh"
    );
    let mut algebras: Vec<(String, LieAlgebra)> = vec![("A(3)".into(), LieAlgebra::abelian(3))];
    for name in ["L_{3,2}", "L_{5,7}", "L_{6,10}", "37B", "157"] {
        algebras.push((name.into(), catalogue::get(name).unwrap()));
    }
    for (name, l) in algebras {
        let p = Presentation::new(&l).unwrap();
        println!(
            "{name:<10} {:>2} {:>3} {:>4} {:>7} {:>5} {:>5} {:>5}",
            p.generator_count(),
            p.free().dim(),
            p.relations().dim(),
            p.relations_in_derived().dim(),
            p.relation_commutators().dim(),
            p.multiplier_dim(),
            schur_multiplier_dim(&l).unwrap()
        );
    }
}
