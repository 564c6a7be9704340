//! Exact integer linear algebra over `Z`.
//!
//! Everything here works on arbitrary-precision integers. Minors of exterior
//! powers and the stacked systems behind [`fixed_lattice`] overflow machine
//! words quickly, and the vanishing of `det(1 - x)` has to be decided exactly.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntMatError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix must have dimension at least 1")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("exterior power index {index} out of range 0..={dim}")]
    ExteriorIndex { index: usize, dim: usize },
}

/// Square matrix with arbitrary-precision integer entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        IntMatrix { n, entries: vec![BigInt::zero(); n * n] }
    }

    /// Builds a matrix from rows, rejecting empty or ragged input.
    pub fn from_rows<T, R>(rows: R) -> Result<Self, IntMatError>
    where
        T: Into<BigInt>,
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(Into::into).collect()).collect();
        let n = rows.len();
        if n == 0 {
            return Err(IntMatError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(IntMatError::Ragged { row, len: r.len(), expected: n });
            }
            entries.extend(r);
        }
        Ok(IntMatrix { n, entries })
    }

    /// Convenience for literals in tests and examples. Panics on ragged input.
    pub fn from_i64<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_rows(rows).expect("array literal is square")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, IntMatError> {
        if self.n != rhs.n {
            return Err(IntMatError::DimensionMismatch { left: self.n, right: rhs.n });
        }
        Ok(self.mul_same_dim(rhs))
    }

    pub(crate) fn mul_same_dim(&self, rhs: &IntMatrix) -> IntMatrix {
        let n = self.n;
        debug_assert_eq!(n, rhs.n);
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * &rhs.entries[k * n + j];
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> IntMatrix {
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same_dim(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_same_dim(&base);
            }
        }
        acc
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// `Id - self`.
    pub fn one_minus(&self) -> IntMatrix {
        let mut out = self.neg();
        for i in 0..self.n {
            out.entries[i * self.n + i] += 1;
        }
        out
    }

    pub fn det(&self) -> BigInt {
        bareiss_det(self.rows())
    }

    pub fn charpoly(&self) -> IntPoly {
        charpoly(self)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Compact single-line form, e.g. `[[0,-1],[1,0]]`. Used as the canonical
    /// serialization for sorting report tables.
    pub fn to_compact_string(&self) -> String {
        let rows = self.entries.chunks(self.n).map(|r| format!("[{}]", r.iter().join(","))).join(",");
        format!("[{rows}]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.to_compact_string())
    }
}

/// Fraction-free Gaussian elimination. Every division is exact.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

pub fn det(m: &IntMatrix) -> BigInt {
    m.det()
}

/// `det(Id - m)` by direct elimination.
pub fn det_one_minus(m: &IntMatrix) -> BigInt {
    m.one_minus().det()
}

/// `det(Id - m)` as the alternating sum of exterior-power traces,
/// `sum_i (-1)^i trace(Λ^i m)`. Shares no code with [`det_one_minus`] beyond
/// the minors themselves.
pub fn det_one_minus_via_exterior_traces(m: &IntMatrix) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=m.dim() {
        let t = exterior_trace(m, i);
        if i % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Polynomial with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(i == 0 && first) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("X")?,
                (1, false) => write!(f, "{mag}X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{mag}X^{i}")?,
            }
        }
        Ok(())
    }
}

/// `det(X·Id - m)` by the Berkowitz algorithm (division-free).
pub fn charpoly(m: &IntMatrix) -> IntPoly {
    // Berkowitz works from the trailing principal submatrix outwards; the
    // running vector holds coefficients highest degree first.
    let n = m.dim();
    let rows = m.rows();
    let mut vec = vec![BigInt::one(), -&rows[n - 1][n - 1]];
    for k in (0..n - 1).rev() {
        let size = n - k;
        let a = &rows[k][k];
        let r: Vec<&BigInt> = (k + 1..n).map(|j| &rows[k][j]).collect();
        let mut c: Vec<BigInt> = (k + 1..n).map(|i| rows[i][k].clone()).collect();
        // Toeplitz column: [1, -a, -R C, -R A C, ...]
        let mut diag = Vec::with_capacity(size + 1);
        diag.push(BigInt::one());
        diag.push(-a);
        for step in 0..size - 1 {
            let rc: BigInt = r.iter().zip(&c).map(|(x, y)| *x * y).sum();
            diag.push(-rc);
            if step + 1 < size - 1 {
                c = (k + 1..n).map(|i| (k + 1..n).zip(&c).map(|(j, y)| &rows[i][j] * y).sum()).collect();
            }
        }
        let next: Vec<BigInt> =
            (0..=size).map(|i| (0..vec.len()).filter(|&j| j <= i).map(|j| &diag[i - j] * &vec[j]).sum()).collect();
        vec = next;
    }
    vec.reverse();
    IntPoly::new(vec)
}

/// `det(X·Id - m)` assembled from signed exterior-power traces.
pub fn charpoly_via_exterior_traces(m: &IntMatrix) -> IntPoly {
    let n = m.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for i in 0..=n {
        let t = exterior_trace(m, i);
        coeffs[n - i] = if i % 2 == 0 { t } else { -t };
    }
    IntPoly::new(coeffs)
}

fn minor(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
    let sub = rows.iter().map(|&r| cols.iter().map(|&c| m.get(r, c).clone()).collect()).collect();
    bareiss_det(sub)
}

/// Trace of `Λ^i m`: the sum of principal `i×i` minors.
fn exterior_trace(m: &IntMatrix, i: usize) -> BigInt {
    (0..m.dim()).combinations(i).map(|s| minor(m, &s, &s)).sum()
}

/// Matrix of `Λ^i m` on the basis `e_S`, `S` ranging over `i`-subsets of
/// `0..n` in lexicographic order; the `(S, T)` entry is the minor on rows `S`
/// and columns `T`.
pub fn exterior_power(m: &IntMatrix, i: usize) -> Result<IntMatrix, IntMatError> {
    let n = m.dim();
    if i > n {
        return Err(IntMatError::ExteriorIndex { index: i, dim: n });
    }
    let subsets: Vec<Vec<usize>> = (0..n).combinations(i).collect();
    let size = subsets.len();
    let mut out = IntMatrix::zero(size);
    for (a, rs) in subsets.iter().enumerate() {
        for (b, cs) in subsets.iter().enumerate() {
            out.entries[a * size + b] = minor(m, rs, cs);
        }
    }
    Ok(out)
}

/// A sublattice of `Z^n` given by a basis in Hermite normal form (rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient_rank: usize,
    basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn full(n: usize) -> Self {
        Lattice { ambient_rank: n, basis: IntMatrix::identity(n).rows() }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}

/// The lattice `{v in Z^n : m·v = v for every m in ms}`.
pub fn fixed_lattice(n: usize, ms: &[IntMatrix]) -> Result<Lattice, IntMatError> {
    let mut system: Vec<Vec<BigInt>> = Vec::with_capacity(n * ms.len());
    for m in ms {
        if m.dim() != n {
            return Err(IntMatError::DimensionMismatch { left: n, right: m.dim() });
        }
        let d = m.one_minus();
        system.extend(d.rows());
    }
    let kernel = integer_kernel(&system, n);
    Ok(Lattice { ambient_rank: n, basis: hermite_rows(kernel) })
}

/// Z-basis of `{v : system·v = 0}` via unimodular column operations.
fn integer_kernel(system: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut w: Vec<Vec<BigInt>> = system.to_vec();
    let mut u = IntMatrix::identity(n).rows();
    let mut pivot_col = 0;
    for i in 0..w.len() {
        if pivot_col == n {
            break;
        }
        for j in pivot_col + 1..n {
            if w[i][j].is_zero() {
                continue;
            }
            let a = w[i][pivot_col].clone();
            let b = w[i][j].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (ag, bg) = (&a / &g, &b / &g);
            // [c_p, c_j] <- [x c_p + y c_j, -bg c_p + ag c_j], determinant 1
            let combine = |rows: &mut Vec<Vec<BigInt>>| {
                for row in rows.iter_mut() {
                    let p = row[pivot_col].clone();
                    let q = row[j].clone();
                    row[pivot_col] = &x * &p + &y * &q;
                    row[j] = &ag * &q - &bg * &p;
                }
            };
            combine(&mut w);
            combine(&mut u);
        }
        if !w[i][pivot_col].is_zero() {
            pivot_col += 1;
        }
    }
    (pivot_col..n).map(|c| u.iter().map(|row| row[c].clone()).collect()).collect()
}

/// Row Hermite normal form of a set of independent vectors: echelon, positive
/// pivots, entries above each pivot reduced into `[0, pivot)`.
fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let a = rows[r][c].clone();
            let b = rows[i][c].clone();
            let eg = a.extended_gcd(&b);
            let (ag, bg) = (&a / &eg.gcd, &b / &eg.gcd);
            let (top, bottom) = (rows[r].clone(), rows[i].clone());
            for k in 0..cols {
                rows[r][k] = &eg.x * &top[k] + &eg.y * &bottom[k];
                rows[i][k] = &ag * &bottom[k] - &bg * &top[k];
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for e in rows[r].iter_mut() {
                *e = -&*e;
            }
        }
        let pivot = rows[r][c].clone();
        for i in 0..r {
            let q = rows[i][c].div_floor(&pivot);
            if !q.is_zero() {
                let pr = rows[r].clone();
                for (e, p) in rows[i].iter_mut().zip(&pr) {
                    *e -= &q * p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Applies `m` to a column vector.
pub fn apply(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| m.get(i, j) * &v[j]).sum()).collect()
}
