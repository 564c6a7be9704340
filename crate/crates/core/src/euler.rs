//! Order of the Euler class `[k_Γ]` of a split crystallographic group over a
//! field of characteristic `p`.
//!
//! Finiteness reduces to the point group: `[k_Γ]` has finite order exactly
//! when `det(1 - x) = 0` for every `p`-regular `x ∈ G`. On top of that test
//! sit a lower bound from fixed-point-free `p`-subgroups, an upper bound on
//! the `p`-part from the Sylow subgroup, and a rule set that pins down the
//! exact order in the classified cases.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::crystal::CrystGroup;
use crate::fingroup::{is_power_of, is_prime, split_prime_power, GroupError, PointGroup};
use crate::intmat::{det_one_minus, det_one_minus_via_exterior_traces, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerError {
    #[error("characteristic must be 0 or a prime, got {0}")]
    InvalidCharacteristic(u64),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("shape check needs a {p}-group acting fixed-point-freely: {reason}")]
    ShapePrecondition { p: u64, reason: &'static str },
}

/// Characteristic of the coefficient field: zero or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self, EulerError> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(EulerError::InvalidCharacteristic(p))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The rule that decided a verdict. Tags are stable strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Some `p`-regular element acts without nonzero fixed vectors.
    FinitenessCriterion,
    /// Nonzero fixed sublattice, so `Γ ↠ Z` and the class vanishes.
    FixedSublattice,
    /// Fixed-point-free `p`-group: order `|G|`.
    FixedPointFree,
    PrimeOrder,
    RankTwoTrivial,
    RankTwoSlPGroup,
    RankTwoKlein,
    RankTwoP4m,
    RankTwoP3m,
    BoundsOnly,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::FinitenessCriterion => "thm-a",
            Rule::FixedSublattice => "sec-5.1",
            Rule::FixedPointFree => "sec-5.3.1",
            Rule::PrimeOrder => "sec-5.3.2",
            Rule::RankTwoTrivial => "sec-5.3.3-trivial",
            Rule::RankTwoSlPGroup => "sec-5.3.3-sl-pgroup",
            Rule::RankTwoKlein => "sec-5.3.3-klein",
            Rule::RankTwoP4m => "sec-5.3.3-p4m",
            Rule::RankTwoP3m => "sec-5.3.3-p3m",
            Rule::BoundsOnly => "bounds-only",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Trivial,
    Known(u64),
    Infinite,
    /// Finite order, not determined. `lower` divides the order; the `p`-part
    /// of the order divides `upper_p_part`.
    Bounded {
        lower: u64,
        upper_p_part: u64,
    },
}

impl Verdict {
    /// `Known(1)` collapses to `Trivial`.
    pub fn known(m: u64) -> Self {
        if m == 1 {
            Verdict::Trivial
        } else {
            Verdict::Known(m)
        }
    }

    pub fn is_finite(self) -> bool {
        !matches!(self, Verdict::Infinite)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Trivial => f.write_str("Trivial"),
            Verdict::Known(m) => write!(f, "Known({m})"),
            Verdict::Infinite => f.write_str("Infinite"),
            Verdict::Bounded { lower, upper_p_part } => write!(f, "Bounded({lower}, {upper_p_part})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderResult {
    pub verdict: Verdict,
    pub provenance: Vec<Rule>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl OrderResult {
    fn decided(verdict: Verdict, rule: Rule) -> Self {
        OrderResult { verdict, provenance: vec![rule], notes: Vec::new() }
    }

    pub fn last_rule(&self) -> Rule {
        *self.provenance.last().expect("provenance is never empty")
    }
}

/// `x ↦ det(1 - x)` on the point group, in point-group element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCharacter {
    values: Vec<(IntMatrix, BigInt)>,
}

impl EulerCharacter {
    pub fn values(&self) -> &[(IntMatrix, BigInt)] {
        &self.values
    }

    pub fn value(&self, x: &IntMatrix) -> Option<&BigInt> {
        self.values.iter().find(|(g, _)| g == x).map(|(_, v)| v)
    }
}

pub fn euler_character(gamma: &CrystGroup) -> EulerCharacter {
    let values = gamma.point_group().elements().iter().map(|x| (x.clone(), det_one_minus(x))).collect();
    EulerCharacter { values }
}

fn vanishes_on_p_regular(g: &PointGroup, p: u64, eval: fn(&IntMatrix) -> BigInt) -> bool {
    g.p_regular_elements(p).into_iter().all(|x| eval(x).is_zero())
}

/// Whether `[k_Γ]` has finite order: `det(1 - x)` vanishes on every
/// `p`-regular element of the point group.
pub fn has_finite_order(gamma: &CrystGroup, p: Characteristic) -> bool {
    vanishes_on_p_regular(gamma.point_group(), p.value(), det_one_minus)
}

/// The same test with `det(1 - x)` evaluated as `Σ (-1)^i tr Λ^i x`.
pub fn has_finite_order_via_exterior_traces(gamma: &CrystGroup, p: Characteristic) -> bool {
    vanishes_on_p_regular(gamma.point_group(), p.value(), det_one_minus_via_exterior_traces)
}

fn require_prime(p: u64) -> Result<(), EulerError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(p).into())
    }
}

fn acts_fixed_point_freely(g: &PointGroup) -> bool {
    g.elements().iter().skip(1).all(|x| !det_one_minus(x).is_zero())
}

/// Largest `|H|` over `p`-subgroups `H` whose nontrivial elements all act
/// without fixed vectors. Divides the order of `[k_Γ]` when that is finite.
pub fn lower_bound(gamma: &CrystGroup, p: u64) -> Result<u64, EulerError> {
    require_prime(p)?;
    let g = gamma.point_group();
    let fpf: Vec<bool> = g.elements().iter().enumerate().map(|(i, x)| i == 0 || !det_one_minus(x).is_zero()).collect();
    let orders = g.element_orders();
    let best = g
        .subgroups_where(
            |i| fpf[i] && is_power_of(orders[i], p),
            |h| is_power_of(h.len() as u64, p) && h.iter().all(|&i| fpf[i]),
        )
        .iter()
        .map(|h| h.order() as u64)
        .max()
        .unwrap_or(1);
    Ok(best)
}

/// Largest order of a `p`-subgroup of `G`. Every finite subgroup of a split
/// `Γ` embeds in `G`, so this bounds the `p`-part of the order of `[k_Γ]`.
pub fn upper_bound_p_part(gamma: &CrystGroup, p: u64) -> Result<u64, EulerError> {
    let subs = gamma.point_group().p_subgroups(p)?;
    Ok(subs.iter().map(|h| h.order() as u64).max().unwrap_or(1))
}

/// `δ / gcd(δ, dim)`: divides the order of the class of a module of
/// dimension `dim` when every projective has dimension divisible by `δ`.
pub fn order_divisor(delta: u64, dim: u64) -> u64 {
    assert!(delta > 0 && dim > 0, "order_divisor takes positive arguments");
    delta / delta.gcd(&dim)
}

/// Fixed-point-free `p`-groups are cyclic or generalized quaternion. Returns
/// whether `g` has one of those shapes.
pub fn fpf_group_shape_check(g: &PointGroup, p: u64) -> Result<bool, EulerError> {
    require_prime(p)?;
    if !g.is_p_group(p) {
        return Err(EulerError::ShapePrecondition { p, reason: "order is not a power of p" });
    }
    if !acts_fixed_point_freely(g) {
        return Err(EulerError::ShapePrecondition { p, reason: "a nontrivial element fixes a nonzero vector" });
    }
    if g.is_cyclic() {
        return Ok(true);
    }
    let n = g.order() as u64;
    let involutions = g.element_orders().iter().filter(|&&o| o == 2).count();
    let quaternion = p == 2 && n >= 8 && involutions == 1 && g.element_orders().contains(&(n / 2));
    Ok(quaternion)
}

/// Invariants of a rank-2 point group that separate the cases the rank-2
/// rules need, without testing conjugacy in `GL_2(Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub sl_order: usize,
    /// Multiset of (element order, determinant).
    pub classes: BTreeMap<(u64, i8), usize>,
}

impl Fingerprint {
    pub fn of(g: &PointGroup) -> Self {
        let mut classes = BTreeMap::new();
        for (x, &o) in g.elements().iter().zip(g.element_orders()) {
            let d = if x.det().is_one() { 1 } else { -1 };
            *classes.entry((o, d)).or_insert(0) += 1;
        }
        let sl_order = classes.iter().filter(|((_, d), _)| *d == 1).map(|(_, c)| c).sum();
        Fingerprint { order: g.order(), sl_order, classes }
    }

    fn count(&self, order: u64, det: i8) -> usize {
        self.classes.get(&(order, det)).copied().unwrap_or(0)
    }

    fn is_p4m(&self) -> bool {
        self.order == 8
            && self.sl_order == 4
            && self.count(1, 1) == 1
            && self.count(2, 1) == 1
            && self.count(4, 1) == 2
            && self.count(2, -1) == 4
    }

    fn is_p3m(&self) -> bool {
        self.order == 6 && self.sl_order == 3 && self.count(2, -1) == 3
    }
}

fn rank_two_rules(g: &PointGroup, p: u64) -> Option<OrderResult> {
    let sl = g.orientation_preserving();
    if sl.is_trivial() {
        return Some(OrderResult::decided(Verdict::Trivial, Rule::RankTwoTrivial));
    }
    if p == 0 {
        return None;
    }
    let size = g.order() as u64;
    if sl.is_p_group(p) && sl.order() == g.order() {
        return Some(OrderResult::decided(Verdict::known(size), Rule::RankTwoSlPGroup));
    }
    let minus_id = IntMatrix::identity(2).neg();
    let fp = Fingerprint::of(g);
    if p == 2 && size == 4 && g.contains(&minus_id) && !g.is_cyclic() && fp.count(2, -1) > 0 {
        return Some(OrderResult::decided(Verdict::known(2), Rule::RankTwoKlein));
    }
    if p == 2 && fp.is_p4m() {
        return Some(OrderResult::decided(Verdict::known(4), Rule::RankTwoP4m));
    }
    if p == 3 && fp.is_p3m() {
        return Some(OrderResult::decided(Verdict::known(3), Rule::RankTwoP3m));
    }
    None
}

/// Order of `[k_Γ]`, decided by the first rule that applies.
pub fn exact_order(gamma: &CrystGroup, p: Characteristic) -> OrderResult {
    if !has_finite_order(gamma, p) {
        return OrderResult::decided(Verdict::Infinite, Rule::FinitenessCriterion);
    }
    if gamma.maps_onto_z() || gamma.point_group().is_trivial() {
        return OrderResult::decided(Verdict::Trivial, Rule::FixedSublattice);
    }
    let g = gamma.point_group();
    let size = g.order() as u64;
    let q = p.value();
    if q > 0 && g.is_p_group(q) && acts_fixed_point_freely(g) {
        return OrderResult::decided(Verdict::known(size), Rule::FixedPointFree);
    }
    if is_prime(size) {
        let verdict = if size == q { Verdict::known(size) } else { Verdict::Infinite };
        return OrderResult::decided(verdict, Rule::PrimeOrder);
    }
    if gamma.rank() == 2 {
        if let Some(result) = rank_two_rules(g, q) {
            return result;
        }
    }
    if q == 0 {
        return OrderResult {
            verdict: Verdict::Bounded { lower: 1, upper_p_part: 1 },
            provenance: vec![Rule::BoundsOnly],
            notes: vec!["order finite, exact value outside the classified cases".into()],
        };
    }
    let lower = lower_bound(gamma, q).expect("q is prime");
    let upper = upper_bound_p_part(gamma, q).expect("q is prime");
    OrderResult {
        verdict: Verdict::Bounded { lower, upper_p_part: upper },
        provenance: vec![Rule::BoundsOnly],
        notes: vec!["p-part bound only".into()],
    }
}

/// The `p`-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    split_prime_power(n, p).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::make_cryst;
    use crate::fingroup::{closure, DEFAULT_CAP};

    fn r90() -> IntMatrix {
        IntMatrix::from_i64([[0, -1], [1, 0]])
    }
    fn r120() -> IntMatrix {
        IntMatrix::from_i64([[0, -1], [1, -1]])
    }
    fn r60() -> IntMatrix {
        IntMatrix::from_i64([[1, -1], [1, 0]])
    }
    fn m1() -> IntMatrix {
        IntMatrix::from_i64([[1, 0], [0, -1]])
    }
    fn m2() -> IntMatrix {
        IntMatrix::from_i64([[0, 1], [1, 0]])
    }
    fn minus_id() -> IntMatrix {
        IntMatrix::identity(2).neg()
    }
    fn cryst(gens: &[IntMatrix]) -> CrystGroup {
        make_cryst(gens.first().map_or(2, IntMatrix::dim), gens, DEFAULT_CAP).unwrap()
    }
    fn ch(p: u64) -> Characteristic {
        Characteristic::new(p).unwrap()
    }
    fn c5() -> IntMatrix {
        IntMatrix::from_i64([[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]])
    }

    #[test]
    fn characteristics() {
        assert!(Characteristic::new(0).is_ok());
        assert!(Characteristic::new(7).is_ok());
        assert_eq!(Characteristic::new(4), Err(EulerError::InvalidCharacteristic(4)));
        assert_eq!(Characteristic::new(1), Err(EulerError::InvalidCharacteristic(1)));
    }

    #[test]
    fn characters() {
        let chi = euler_character(&cryst(&[]));
        assert_eq!(chi.values(), &[(IntMatrix::identity(2), BigInt::zero())]);
        let chi = euler_character(&cryst(&[minus_id()]));
        assert_eq!(chi.value(&minus_id()), Some(&BigInt::from(4)));
        let chi = euler_character(&cryst(&[r120()]));
        assert_eq!(chi.value(&r120()), Some(&BigInt::from(3)));
        assert_eq!(chi.value(&r120().pow(2)), Some(&BigInt::from(3)));
        assert_eq!(chi.value(&IntMatrix::identity(2)), Some(&BigInt::zero()));
    }

    #[test]
    fn finiteness() {
        let p4m = cryst(&[r90(), m2()]);
        assert!(has_finite_order(&p4m, ch(2)));
        assert!(!has_finite_order(&p4m, ch(3)));
        for p in [0, 2, 3, 5] {
            assert!(has_finite_order(&cryst(&[]), ch(p)));
        }
    }

    #[test]
    fn bounds() {
        let p4m = cryst(&[r90(), m2()]);
        assert_eq!(lower_bound(&p4m, 2), Ok(4));
        assert_eq!(upper_bound_p_part(&p4m, 2), Ok(8));
        assert_eq!(upper_bound_p_part(&p4m, 3), Ok(1));
        assert_eq!(lower_bound(&cryst(&[r120()]), 3), Ok(3));
        assert_eq!(lower_bound(&cryst(&[m1()]), 2), Ok(1));
        assert_eq!(upper_bound_p_part(&cryst(&[r120(), m2()]), 3), Ok(3));
        assert!(lower_bound(&p4m, 0).is_err());
    }

    #[test]
    fn exact_orders() {
        let cases: Vec<(Vec<IntMatrix>, u64, Verdict, Rule)> = vec![
            (vec![r90(), m2()], 2, Verdict::Known(4), Rule::RankTwoP4m),
            (vec![r120(), IntMatrix::from_i64([[0, -1], [-1, 0]])], 3, Verdict::Known(3), Rule::RankTwoP3m),
            (vec![minus_id(), m1()], 2, Verdict::Known(2), Rule::RankTwoKlein),
            (vec![r90()], 2, Verdict::Known(4), Rule::FixedPointFree),
            (vec![m1()], 3, Verdict::Trivial, Rule::FixedSublattice),
            (vec![c5()], 5, Verdict::Known(5), Rule::FixedPointFree),
            (vec![c5()], 2, Verdict::Infinite, Rule::FinitenessCriterion),
        ];
        for (gens, p, verdict, rule) in cases {
            let r = exact_order(&cryst(&gens), ch(p));
            assert_eq!((r.verdict, r.last_rule()), (verdict, rule), "{gens:?} at {p}");
        }
        for p in [0, 2, 3, 5] {
            assert_eq!(exact_order(&cryst(&[r60(), m2()]), ch(p)).verdict, Verdict::Infinite);
            assert_eq!(exact_order(&cryst(&[m1()]), ch(p)).verdict, Verdict::Trivial);
        }
    }

    #[test]
    fn bounded_fallback() {
        // -Id with a 3-cycle: C6 on Z^3. The 3-cycle fixes (1,1,1), so only
        // p = 2 leaves a finite order, and -Id alone acts fixed-point-freely.
        let perm = IntMatrix::from_i64([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        let g = cryst(&[IntMatrix::identity(3).neg(), perm]);
        assert!(!has_finite_order(&g, ch(3)));
        let r = exact_order(&g, ch(2));
        assert_eq!(r.verdict, Verdict::Bounded { lower: 2, upper_p_part: 2 });
        // C2 x C2 acting diagonally by sign changes on Z^3, no common fixed vector.
        let a = IntMatrix::from_i64([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        let b = IntMatrix::from_i64([[1, 0, 0], [0, -1, 0], [0, 0, -1]]);
        let g = cryst(&[a, b]);
        let r = exact_order(&g, ch(2));
        assert_eq!(r.verdict, Verdict::Bounded { lower: 1, upper_p_part: 4 });
        assert_eq!(r.provenance, vec![Rule::BoundsOnly]);
        let r = exact_order(&g, ch(0));
        assert_eq!(r.verdict, Verdict::Bounded { lower: 1, upper_p_part: 1 });
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn shape_checks() {
        let c4 = closure(2, &[r90()], DEFAULT_CAP).unwrap();
        assert_eq!(fpf_group_shape_check(&c4, 2), Ok(true));
        let c3 = closure(2, &[r120()], DEFAULT_CAP).unwrap();
        assert_eq!(fpf_group_shape_check(&c3, 3), Ok(true));
        let d4 = closure(2, &[r90(), m2()], DEFAULT_CAP).unwrap();
        assert!(matches!(fpf_group_shape_check(&d4, 2), Err(EulerError::ShapePrecondition { .. })));
        assert!(matches!(fpf_group_shape_check(&c3, 2), Err(EulerError::ShapePrecondition { .. })));
    }

    #[test]
    fn quaternion_shape() {
        // Q8 in GL_4(Z): left multiplication by i and j on the basis 1, i, j, k.
        let i = IntMatrix::from_i64([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]);
        let j = IntMatrix::from_i64([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]);
        let q8 = closure(4, &[i, j], DEFAULT_CAP).unwrap();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_cyclic());
        assert_eq!(fpf_group_shape_check(&q8, 2), Ok(true));
        let g = CrystGroup::from_point_group(q8);
        assert_eq!(exact_order(&g, ch(2)).verdict, Verdict::Known(8));
    }

    #[test]
    fn divisors() {
        assert_eq!(order_divisor(8, 1), 8);
        assert_eq!(order_divisor(8, 2), 4);
        assert_eq!(order_divisor(9, 6), 3);
        assert_eq!(p_part(24, 2), 8);
    }

    #[test]
    fn rank_six() {
        // companion matrix of X^6 + ... + X + 1
        let mut rows = vec![vec![0i64; 6]; 6];
        for (i, row) in rows.iter_mut().enumerate() {
            if i > 0 {
                row[i - 1] = 1;
            }
            row[5] = -1;
        }
        let c7 = IntMatrix::from_rows(rows).unwrap();
        assert_eq!(crate::intmat::det_one_minus(&c7), BigInt::from(7));
        let gamma = cryst(&[c7]);
        assert_eq!(gamma.point_group().order(), 7);
        let r = exact_order(&gamma, ch(7));
        assert_eq!((r.verdict, r.last_rule()), (Verdict::Known(7), Rule::FixedPointFree));
        for p in [0, 2, 3, 5] {
            assert_eq!(exact_order(&gamma, ch(p)).verdict, Verdict::Infinite);
        }

        // C5 on the first four coordinates, identity on the last two
        let mut rows = vec![vec![0i64; 6]; 6];
        for (i, row) in c5().rows().iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                rows[i][j] = i64::try_from(x).unwrap();
            }
        }
        rows[4][4] = 1;
        rows[5][5] = 1;
        let gamma = cryst(&[IntMatrix::from_rows(rows).unwrap()]);
        assert_eq!(gamma.fixed_sublattice().rank(), 2);
        for p in [0, 2, 5] {
            assert_eq!(exact_order(&gamma, ch(p)).verdict, Verdict::Trivial);
        }
    }
}
