//! Deciding whether the Euler class has finite order, by checking det(1 - x)
//! over the p-regular elements. Both evaluation routes are shown.
//!
//! cargo run --example finiteness [name]

use eulerclass::catalog;
use eulerclass::euler::{euler_character, has_finite_order, has_finite_order_via_exterior_traces};
use eulerclass::{Characteristic, DEFAULT_CAP};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "p4m".to_string());
    let gamma = catalog::lookup(&name).unwrap_or_else(|e| panic!("{e}")).cryst(DEFAULT_CAP).unwrap();

    println!("{name}: det(1 - x) over the point group");
    let chi = euler_character(&gamma);
    for (x, value) in chi.values() {
        let order = gamma.point_group().index_of(x).map(|i| gamma.point_group().order_of(i)).unwrap();
        println!("  {x:<18} order {order}  det(1 - x) = {value}");
    }

    println!();
    for p in [0, 2, 3, 5, 7] {
        let ch = Characteristic::new(p).unwrap();
        let finite = has_finite_order(&gamma, ch);
        assert_eq!(finite, has_finite_order_via_exterior_traces(&gamma, ch));
        let regular = gamma.point_group().p_regular_elements(p).len();
        println!("  char {p}: {regular} p-regular elements, finite order: {finite}");
    }
}
