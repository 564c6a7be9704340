//! The 13 symmorphic wallpaper groups with their expected Euler-class orders.

use std::fmt;

use thiserror::Error;

use crate::crystal::{make_cryst, CrystError, CrystGroup};
use crate::euler::{Rule, Verdict};
use crate::groupfile::GroupFile;
use crate::intmat::IntMatrix;

/// Wallpaper types that do not split; listed in lookup errors.
pub const NON_SYMMORPHIC: [&str; 4] = ["pg", "pmg", "pgg", "p4g"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown wallpaper type '{name}'; valid symbols: {valid} (non-symmorphic {} are not modeled)", NON_SYMMORPHIC.join(", "))]
pub struct UnknownName {
    pub name: String,
    pub valid: String,
}

/// Expected verdicts at characteristic 0, 2, 3 and any prime `>= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub zero: Verdict,
    pub two: Verdict,
    pub three: Verdict,
    pub other_prime: Verdict,
}

impl Expected {
    fn all(v: Verdict) -> Self {
        Expected { zero: v, two: v, three: v, other_prime: v }
    }

    /// Finite of order `m` at `p` only, infinite elsewhere.
    fn only_at(p: u64, m: u64) -> Self {
        let mut e = Expected::all(Verdict::Infinite);
        match p {
            2 => e.two = Verdict::known(m),
            3 => e.three = Verdict::known(m),
            _ => unreachable!("wallpaper point groups are {{2,3}}-groups"),
        }
        e
    }

    pub fn at(&self, p: u64) -> Verdict {
        match p {
            0 => self.zero,
            2 => self.two,
            3 => self.three,
            _ => self.other_prime,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub rank: usize,
    pub generators: Vec<IntMatrix>,
    pub point_group_order: usize,
    pub expected: Expected,
    /// Rule expected to settle the entry at the characteristic where its class
    /// is finite and nontrivial, or the rule behind a uniform verdict.
    pub source: Rule,
}

impl CatalogEntry {
    pub fn cryst(&self, cap: usize) -> Result<CrystGroup, CrystError> {
        make_cryst(self.rank, &self.generators, cap)
    }

    pub fn group_file(&self) -> GroupFile {
        GroupFile { name: Some(self.name.to_string()), rank: self.rank, generators: self.generators.clone() }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

pub fn r90() -> IntMatrix {
    IntMatrix::from_i64([[0, -1], [1, 0]])
}
pub fn r120() -> IntMatrix {
    IntMatrix::from_i64([[0, -1], [1, -1]])
}
pub fn r60() -> IntMatrix {
    IntMatrix::from_i64([[1, -1], [1, 0]])
}
/// Reflection in the first axis.
pub fn m1() -> IntMatrix {
    IntMatrix::from_i64([[1, 0], [0, -1]])
}
/// Reflection swapping the basis vectors.
pub fn m2() -> IntMatrix {
    IntMatrix::from_i64([[0, 1], [1, 0]])
}
/// Reflection swapping the basis vectors up to sign.
pub fn m3() -> IntMatrix {
    IntMatrix::from_i64([[0, -1], [-1, 0]])
}

pub fn entries() -> Vec<CatalogEntry> {
    let minus_id = IntMatrix::identity(2).neg();
    let entry = |name, generators, point_group_order, expected, source| CatalogEntry {
        name,
        rank: 2,
        generators,
        point_group_order,
        expected,
        source,
    };
    let trivial = Expected::all(Verdict::Trivial);
    let infinite = Expected::all(Verdict::Infinite);
    vec![
        entry("p1", vec![], 1, trivial, Rule::FixedSublattice),
        entry("p2", vec![minus_id.clone()], 2, Expected::only_at(2, 2), Rule::FixedPointFree),
        entry("pm", vec![m1()], 2, trivial, Rule::FixedSublattice),
        entry("cm", vec![m2()], 2, trivial, Rule::FixedSublattice),
        entry("pmm", vec![m1(), minus_id.clone()], 4, Expected::only_at(2, 2), Rule::RankTwoKlein),
        entry("cmm", vec![m2(), m2().neg()], 4, Expected::only_at(2, 2), Rule::RankTwoKlein),
        entry("p4", vec![r90()], 4, Expected::only_at(2, 4), Rule::FixedPointFree),
        entry("p4m", vec![r90(), m2()], 8, Expected::only_at(2, 4), Rule::RankTwoP4m),
        entry("p3", vec![r120()], 3, Expected::only_at(3, 3), Rule::FixedPointFree),
        entry("p3m1", vec![r120(), m3()], 6, Expected::only_at(3, 3), Rule::RankTwoP3m),
        entry("p31m", vec![r120(), m2()], 6, Expected::only_at(3, 3), Rule::RankTwoP3m),
        entry("p6", vec![r60()], 6, infinite, Rule::FinitenessCriterion),
        entry("p6m", vec![r60(), m2()], 12, infinite, Rule::FinitenessCriterion),
    ]
}

pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

/// Case-insensitive lookup by crystallographic symbol.
pub fn lookup(name: &str) -> Result<CatalogEntry, UnknownName> {
    let wanted = name.to_ascii_lowercase();
    entries()
        .into_iter()
        .find(|e| e.name == wanted)
        .ok_or_else(|| UnknownName { name: name.to_string(), valid: names().join(", ") })
}
