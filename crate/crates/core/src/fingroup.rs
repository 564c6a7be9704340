//! Finite subgroups of `GL_n(Z)`: closure from generators, element orders,
//! p-part decomposition and subgroup enumeration.

use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::intmat::IntMatrix;

/// Largest group a closure will build before giving up.
pub const DEFAULT_CAP: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group is not finite: more than {cap} elements generated")]
    NotFinite { cap: usize },
    #[error("generator {index} is not unimodular (determinant {det})")]
    NotUnimodular { index: usize, det: String },
    #[error("generator {index} has dimension {found}, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// True when `m` is `p^k` for some `k >= 0`.
pub fn is_power_of(m: u64, p: u64) -> bool {
    if p < 2 {
        return m == 1;
    }
    let mut m = m;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Splits `e` into `(p^a, m)` with `p ∤ m`.
pub fn split_prime_power(e: u64, p: u64) -> (u64, u64) {
    let mut pa = 1;
    let mut m = e;
    while m.is_multiple_of(p) {
        m /= p;
        pa *= p;
    }
    (pa, m)
}

/// Least `m >= 1` with `g^m = Id`.
pub fn element_order(g: &IntMatrix, cap: usize) -> Result<u64, GroupError> {
    let mut power = g.clone();
    for m in 1..=cap as u64 {
        if power.is_identity() {
            return Ok(m);
        }
        power = power.mul_same_dim(g);
    }
    Err(GroupError::NotFinite { cap })
}

/// A finite multiplicative group of unimodular integer matrices.
///
/// The identity is always element 0. Elements are stored in breadth-first
/// discovery order, with their orders alongside.
#[derive(Clone, Debug)]
pub struct PointGroup {
    n: usize,
    elements: Vec<IntMatrix>,
    orders: Vec<u64>,
    generators: Vec<usize>,
    lookup: HashMap<IntMatrix, usize>,
}

/// Breadth-first closure of `generators` inside `GL_n(Z)`.
pub fn closure(n: usize, generators: &[IntMatrix], cap: usize) -> Result<PointGroup, GroupError> {
    for (index, g) in generators.iter().enumerate() {
        if g.dim() != n {
            return Err(GroupError::DimensionMismatch { index, expected: n, found: g.dim() });
        }
        let det = g.det();
        if !det.abs().is_one() {
            return Err(GroupError::NotUnimodular { index, det: det.to_string() });
        }
    }
    let identity = IntMatrix::identity(n);
    let mut elements = vec![identity.clone()];
    let mut lookup = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = elements[x].mul_same_dim(g);
            if lookup.contains_key(&y) {
                continue;
            }
            if elements.len() == cap {
                return Err(GroupError::NotFinite { cap });
            }
            lookup.insert(y.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(y);
        }
    }
    let generator_indices = generators.iter().map(|g| lookup[g]).collect();
    let orders = elements.iter().map(|e| element_order(e, elements.len())).collect::<Result<_, _>>()?;
    Ok(PointGroup { n, elements, orders, generators: generator_indices, lookup })
}

impl PointGroup {
    pub fn trivial(n: usize) -> Self {
        closure(n, &[], 1).expect("trivial group")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &IntMatrix {
        &self.elements[i]
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order_of(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn generators(&self) -> impl Iterator<Item = &IntMatrix> {
        self.generators.iter().map(|&i| &self.elements[i])
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, g: &IntMatrix) -> Option<usize> {
        self.lookup.get(g).copied()
    }

    pub fn contains(&self, g: &IntMatrix) -> bool {
        self.lookup.contains_key(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.orders.contains(&n)
    }

    /// Elements of order prime to `p`; every element when `p = 0`.
    pub fn p_regular_elements(&self, p: u64) -> Vec<&IntMatrix> {
        self.elements.iter().zip(&self.orders).filter(|(_, &o)| p == 0 || o.gcd(&p) == 1).map(|(e, _)| e).collect()
    }

    /// The elements of determinant 1.
    pub fn orientation_preserving(&self) -> PointGroup {
        let idx: Vec<usize> = (0..self.order()).filter(|&i| self.elements[i].det().is_one()).collect();
        self.subgroup_from_indices(&idx, &idx)
    }

    fn subgroup_from_indices(&self, idx: &[usize], gens: &[usize]) -> PointGroup {
        let elements: Vec<IntMatrix> = idx.iter().map(|&i| self.elements[i].clone()).collect();
        let orders = idx.iter().map(|&i| self.orders[i]).collect();
        let lookup: HashMap<IntMatrix, usize> = elements.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
        let generators = gens.iter().map(|g| lookup[&self.elements[*g]]).collect();
        PointGroup { n: self.n, elements, orders, generators, lookup }
    }

    fn cayley_table(&self) -> Vec<Vec<u32>> {
        self.elements
            .iter()
            .map(|a| self.elements.iter().map(|b| self.lookup[&a.mul_same_dim(b)] as u32).collect())
            .collect()
    }

    /// Every subgroup, smallest first.
    pub fn all_subgroups(&self) -> Vec<PointGroup> {
        self.subgroups_where(|_| true, |_| true)
    }

    /// Subgroups of `p`-power order, including the trivial one.
    pub fn p_subgroups(&self, p: u64) -> Result<Vec<PointGroup>, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let orders = &self.orders;
        Ok(self.subgroups_where(|i| is_power_of(orders[i], p), |h| is_power_of(h.len() as u64, p)))
    }

    /// Subgroups built only from elements passing `element_ok`, keeping those
    /// whose element set passes `subgroup_ok`.
    ///
    /// Grows the lattice one generator at a time: every subgroup generated by
    /// `g_1..g_r` is reached through the chain `<g_1> ⊆ <g_1,g_2> ⊆ ...`, so
    /// the search is complete provided both filters are inherited by
    /// subgroups.
    pub fn subgroups_where<E, S>(&self, element_ok: E, subgroup_ok: S) -> Vec<PointGroup>
    where
        E: Fn(usize) -> bool,
        S: Fn(&[usize]) -> bool,
    {
        let table = self.cayley_table();
        let size = self.order();
        let candidates: Vec<usize> = (1..size).filter(|&i| element_ok(i)).collect();

        struct Found {
            elements: Vec<usize>,
            member: Vec<bool>,
            gens: Vec<usize>,
        }
        let close = |gens: &[usize]| -> Vec<bool> {
            let mut member = vec![false; size];
            member[0] = true;
            let mut stack = vec![0usize];
            while let Some(x) = stack.pop() {
                for &g in gens {
                    let y = table[x][g] as usize;
                    if !member[y] {
                        member[y] = true;
                        stack.push(y);
                    }
                }
            }
            member
        };

        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let trivial = close(&[]);
        seen.insert(trivial.clone());
        let mut found = vec![Found { elements: vec![0], member: trivial, gens: vec![] }];
        let mut cursor = 0;
        while cursor < found.len() {
            let mut tried: HashSet<Vec<bool>> = HashSet::new();
            for &g in &candidates {
                if found[cursor].member[g] {
                    continue;
                }
                let mut gens = found[cursor].gens.clone();
                gens.push(g);
                let member = close(&gens);
                if seen.contains(&member) || !tried.insert(member.clone()) {
                    continue;
                }
                let elements: Vec<usize> = (0..size).filter(|&i| member[i]).collect();
                if !subgroup_ok(&elements) {
                    continue;
                }
                seen.insert(member.clone());
                found.push(Found { elements, member, gens });
            }
            cursor += 1;
        }
        found.sort_by(|a, b| a.elements.len().cmp(&b.elements.len()).then_with(|| a.elements.cmp(&b.elements)));
        found.iter().map(|f| self.subgroup_from_indices(&f.elements, &f.gens)).collect()
    }
}

/// `g = g_p · g_p'` with commuting factors, `g_p` of p-power order and `g_p'`
/// of order prime to `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDecomposition {
    pub p_part: IntMatrix,
    pub p_prime_part: IntMatrix,
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let eg = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(eg.gcd, 1);
    eg.x.rem_euclid(m as i128) as u64
}

pub fn p_decompose(g: &IntMatrix, p: u64, cap: usize) -> Result<PDecomposition, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let e = element_order(g, cap)?;
    let (pa, m) = split_prime_power(e, p);
    let id = IntMatrix::identity(g.dim());
    let p_part = if pa == 1 { id.clone() } else { g.pow(m * inverse_mod(m, pa)) };
    let p_prime_part = if m == 1 { id } else { g.pow(pa * inverse_mod(pa, m)) };
    Ok(PDecomposition { p_part, p_prime_part })
}
