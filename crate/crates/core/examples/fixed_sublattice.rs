//! The crystallographic group Z^n x| G: its fixed sublattice, surjections onto Z
//! and infinite centralizers.
//!
//! cargo run --example fixed_sublattice

use eulerclass::catalog;
use eulerclass::{make_cryst, IntMatrix, DEFAULT_CAP};

fn main() {
    for name in ["p1", "pm", "cm", "p2", "p4m"] {
        let gamma = catalog::lookup(name).unwrap().cryst(DEFAULT_CAP).unwrap();
        let fixed = gamma.fixed_sublattice();
        println!(
            "{name:<4} |G| = {}  fixed rank {}  basis {:?}  maps onto Z: {}",
            gamma.point_group().order(),
            fixed.rank(),
            fixed.basis(),
            gamma.maps_onto_z()
        );
    }

    // Rank 3: -1 on the first coordinate, swap of the other two.
    let gens = [
        IntMatrix::from_i64([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        IntMatrix::from_i64([[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
    ];
    let gamma = make_cryst(3, &gens, DEFAULT_CAP).unwrap();
    println!("\nrank 3 example: fixed sublattice {:?}", gamma.fixed_sublattice().basis());
    for g in gamma.point_group().elements() {
        println!("  {g:<28} infinite centralizer: {}", gamma.centralizer_is_infinite(g).unwrap());
    }
}
