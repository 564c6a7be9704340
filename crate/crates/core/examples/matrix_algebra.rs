//! Exact integer linear algebra: determinants, characteristic polynomials,
//! exterior powers and fixed lattices.
//!
//! cargo run --example matrix_algebra

use eulerclass::intmat::{
    charpoly_via_exterior_traces, det_one_minus, det_one_minus_via_exterior_traces, exterior_power, fixed_lattice,
};
use eulerclass::IntMatrix;

fn main() {
    // cyclic shift on Z^3: fixes (1,1,1), has order 3
    let shift = IntMatrix::from_i64([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
    let rot = IntMatrix::from_i64([[0, -1], [1, 0]]);

    for m in [&shift, &rot] {
        println!("m = {m}");
        println!("  det            {}", m.det());
        println!("  charpoly       {}", m.charpoly());
        assert_eq!(m.charpoly(), charpoly_via_exterior_traces(m));
        for i in 0..=m.dim() {
            let lambda = exterior_power(m, i).unwrap();
            println!("  tr Lambda^{i}     {}", lambda.trace());
        }
        let direct = det_one_minus(m);
        println!("  det(1 - m)     {direct}  (alternating trace sum {})", det_one_minus_via_exterior_traces(m));
        let fixed = fixed_lattice(m.dim(), std::slice::from_ref(m)).unwrap();
        println!("  fixed lattice  rank {} basis {:?}", fixed.rank(), fixed.basis());
        println!();
    }

    // Exact arithmetic keeps going where i64 would overflow.
    let big = IntMatrix::from_i64([[3, 1], [1, 0]]).pow(90);
    println!("[[3,1],[1,0]]^90 has det {} and trace {}", big.det(), big.trace());
}
