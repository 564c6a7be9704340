//! Closing generators into a finite matrix group and looking inside it.
//!
//! cargo run --example point_groups

use eulerclass::catalog::{m2, r90};
use eulerclass::fingroup::p_decompose;
use eulerclass::{closure, DEFAULT_CAP};

fn main() {
    // dihedral group of order 8 acting on Z^2
    let g = closure(2, &[r90(), m2()], DEFAULT_CAP).unwrap();
    println!("|G| = {}, cyclic: {}", g.order(), g.is_cyclic());
    for (x, o) in g.elements().iter().zip(g.element_orders()) {
        println!("  {x:<18} order {o}  det {}", x.det());
    }

    let sl = g.orientation_preserving();
    println!("orientation-preserving part has order {}", sl.order());

    let subgroups = g.all_subgroups();
    let orders: Vec<usize> = subgroups.iter().map(|h| h.order()).collect();
    println!("{} subgroups, orders {orders:?}", subgroups.len());
    let two_subgroups = g.p_subgroups(2).unwrap();
    println!("{} of them are 2-groups", two_subgroups.len());

    // a rotation of order 6 splits into commuting parts of order 2 and 3
    let r60 = eulerclass::catalog::r60();
    let d = p_decompose(&r60, 2, DEFAULT_CAP).unwrap();
    println!("r60 = {} * {}", d.p_part, d.p_prime_part);
    assert_eq!(d.p_part.mul(&d.p_prime_part).unwrap(), r60);

    // unbounded generators are reported, not looped on
    let shear = eulerclass::IntMatrix::from_i64([[1, 1], [0, 1]]);
    println!("closing a shear: {}", closure(2, &[shear], 500).unwrap_err());
}
