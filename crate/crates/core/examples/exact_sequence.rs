//! The Ganea map L^2 ⊗ L^ab → M(L) for the class-two entries of the
//! catalogue, with the kernel, the cyclic subspace K and the exactness sum.
//!
//! `cargo run --release --example exact_sequence`

use liemult::catalogue;
use liemult::hopf::ganea_data;

fn main() {
    println!(
        "{:<16} {:>6} {:>6} {:>6} {:>6} {:>9} {:>4}",
        "name", "domain", "rank g", "ker g", "dim K", "K in ker", "sum"
    );
    for e in catalogue::list_entries() {
        let Ok(l) = e.algebra() else { continue };
        if l.nilpotency_class().unwrap() != 2 {
            continue;
        }
        let g = ganea_data(&l).unwrap();
        println!(
            "{:<16} {:>6} {:>6} {:>6} {:>6} {:>9} {:>4}",
            e.name(),
            g.dim_domain,
            g.rank_g,
            g.dim_ker_g(),
            g.dim_k(),
            g.k_in_kernel(),
            g.exactness_sum()
        );
    }
}
