//! The order decision: which rule settles a group, the bounds it leaves when
//! no rule applies, and the notes attached to the verdict.
//!
//! cargo run --example exact_order

use eulerclass::euler::{fpf_group_shape_check, lower_bound, upper_bound_p_part};
use eulerclass::{exact_order, make_cryst, Characteristic, CrystGroup, IntMatrix, DEFAULT_CAP};

fn show(label: &str, gamma: &CrystGroup, p: u64) {
    let r = exact_order(gamma, Characteristic::new(p).unwrap());
    let rules: Vec<&str> = r.provenance.iter().map(|rule| rule.tag()).collect();
    print!("{label:<34} char {p}  {:<16} via {}", r.verdict.to_string(), rules.join(", "));
    if p > 0 {
        let lo = lower_bound(gamma, p).unwrap();
        let hi = upper_bound_p_part(gamma, p).unwrap();
        print!("  bounds [{lo}, {hi}]");
    }
    println!();
    for note in &r.notes {
        println!("{:<34}   note: {note}", "");
    }
}

fn main() {
    let rank2 = |gens: &[IntMatrix]| make_cryst(2, gens, DEFAULT_CAP).unwrap();
    let r90 = IntMatrix::from_i64([[0, -1], [1, 0]]);
    let swap = IntMatrix::from_i64([[0, 1], [1, 0]]);
    show("Z^2", &rank2(&[]), 0);
    show("rotation by 90 degrees", &rank2(std::slice::from_ref(&r90)), 2);
    show("rotation by 90 degrees", &rank2(std::slice::from_ref(&r90)), 3);
    show("square lattice with mirrors", &rank2(&[r90, swap]), 2);

    // The companion matrix of X^4 + X^3 + X^2 + X + 1 acts freely away from 0.
    let c5 = IntMatrix::from_i64([[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]);
    show("C5 on Z^4", &make_cryst(4, &[c5], DEFAULT_CAP).unwrap(), 5);

    // Quaternion group on Z^4 by left multiplication.
    let i = IntMatrix::from_i64([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]);
    let j = IntMatrix::from_i64([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]);
    let q8 = make_cryst(4, &[i, j], DEFAULT_CAP).unwrap();
    println!("Q8 passes the free-action shape check: {}", fpf_group_shape_check(q8.point_group(), 2).unwrap());
    show("Q8 on Z^4", &q8, 2);

    // Sign changes on two of three coordinates: no rule settles it.
    let s1 = IntMatrix::from_i64([[-1, 0, 0], [0, 1, 0], [0, 0, -1]]);
    let s2 = IntMatrix::from_i64([[1, 0, 0], [0, -1, 0], [0, 0, -1]]);
    let v4 = make_cryst(3, &[s1, s2], DEFAULT_CAP).unwrap();
    show("sign changes on Z^3", &v4, 2);
    show("sign changes on Z^3", &v4, 0);
}
