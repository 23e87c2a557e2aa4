//! Build algebras from brackets, inspect their series, take quotients and
//! direct sums.
//!
//! `cargo run --example algebra_basics`

use liemult::algebra::integer_algebra;
use liemult::LieAlgebra;

fn describe(name: &str, l: &LieAlgebra) {
    let series = l.central_series().unwrap();
    println!(
        "{name:<14} n = {}  dim L^2 = {}  dim Z = {}  class {}  lower {:?}  upper {:?}",
        l.dim(),
        l.derived_subalgebra().dim(),
        l.center().dim(),
        series.class,
        series.lower_dims(),
        series.upper_dims(),
    );
}

fn main() {
    // filiform: [x1,x2]=x3, [x1,x3]=x4, [x1,x4]=x5, [x2,x3]=x5
    let filiform = integer_algebra(
        5,
        &[
            (1, 2, &[(1, 3)]),
            (1, 3, &[(1, 4)]),
            (1, 4, &[(1, 5)]),
            (2, 3, &[(1, 5)]),
        ],
    )
    .unwrap();
    describe("filiform", &filiform);
    describe("H(2)", &LieAlgebra::heisenberg(2));

    let q = filiform.quotient(&filiform.center()).unwrap();
    describe("filiform / Z", &q);

    let sum = LieAlgebra::heisenberg(1).direct_sum(&LieAlgebra::abelian(2));
    describe("H(1) + A(2)", &sum);
    println!(
        "generalized Heisenberg: {:?}",
        sum.is_generalized_heisenberg()
    );

    // [x1,x3]=x1 breaks Jacobi on H(1)
    let broken = LieAlgebra::heisenberg(1).with_bracket(1, 3, liemult::SparseVec::unit(0));
    match broken.check_jacobi() {
        Ok(()) => println!("unexpectedly valid"),
        Err(e) => println!("mutated H(1): {e}"),
    }
}
