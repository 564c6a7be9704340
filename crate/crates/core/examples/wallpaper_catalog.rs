//! Computed verdicts for the symmorphic wallpaper groups next to the expected ones.
//!
//! cargo run --example wallpaper_catalog

use eulerclass::catalog;
use eulerclass::{exact_order, Characteristic, DEFAULT_CAP};

fn main() {
    let chars = [0, 2, 3, 5, 7];
    let mut header = format!("{:<6}{:>4}", "group", "|G|");
    for p in chars {
        header += &format!("  {:<12}", format!("char {p}"));
    }
    println!("{}", header.trim_end());

    let mut disagreements = 0;
    for entry in catalog::entries() {
        let gamma = entry.cryst(DEFAULT_CAP).unwrap();
        let mut row = format!("{:<6}{:>4}", entry.name, entry.point_group_order);
        for p in chars {
            let verdict = exact_order(&gamma, Characteristic::new(p).unwrap()).verdict;
            let mark = if verdict == entry.expected.at(p) { "" } else { "!" };
            disagreements += mark.len();
            row += &format!("  {:<12}", format!("{verdict}{mark}"));
        }
        println!("{}", row.trim_end());
    }
    println!("\n{disagreements} disagreements with the expected table");
}
