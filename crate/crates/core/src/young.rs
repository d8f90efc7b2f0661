//! Young diagrams: the gamma order, conjugation, shapes of monomials,
//! hook-content dimensions and minimal shape sets of diagonal minors.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinat::{binomial, multidegrees, subsets};
use crate::error::{AlgebraError, Result};
use crate::poly::Monomial;

/// A Young diagram `(s_1 >= ... >= s_u)` with positive parts, rows listed
/// from the top.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the first row, i.e. the number of columns.
    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `sum_i max(0, s_i - j + 1)`: the number of boxes in columns `>= j`.
    pub fn gamma(&self, j: u32) -> u32 {
        assert!(j >= 1, "gamma is indexed from 1");
        self.parts.iter().map(|&s| (s + 1).saturating_sub(j)).sum()
    }

    /// `gamma_1, ..., gamma_{s_1}`; later values vanish.
    pub fn gamma_vector(&self) -> Vec<u32> {
        (1..=self.largest_part()).map(|j| self.gamma(j)).collect()
    }

    /// `self <= other` in the gamma order.
    pub fn leq(&self, other: &Partition) -> bool {
        let top = self.largest_part().max(other.largest_part());
        (1..=top).all(|j| self.gamma(j) <= other.gamma(j))
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest_part())
            .map(|j| self.parts.iter().filter(|&&s| s >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)`, both 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &s)| (0..s).map(move |j| (i as u32, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// The shape of a monomial `f = f_1 ... f_u` with squarefree `f_i` and
/// `f_{i+1} | f_i`: `s_i` counts the variables of exponent at least `i`.
pub fn shape_of_monomial(f: &Monomial) -> Result<Partition> {
    if f.is_one() {
        return Err(AlgebraError::ConstantMonomial);
    }
    Ok(shape_of_exponents(f.exponents().iter().map(|&e| e as u32)))
}

fn shape_of_exponents(exps: impl IntoIterator<Item = u32>) -> Partition {
    Partition::from_unsorted(exps.into_iter().collect()).conjugate()
}

/// Dimension of the Schur module of shape `lambda` on an `n`-dimensional
/// space, `prod_cells (n + content) / hook`. Zero when `lambda` has more
/// than `n` rows.
pub fn schur_dim(lambda: &Partition, n: u32) -> BigUint {
    if lambda.len() > n as usize {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in lambda.cells() {
        num *= BigInt::from(n as i64 + j as i64 - i as i64);
        let arm = lambda.parts()[i as usize] - j - 1;
        let leg = conj.parts()[j as usize] - i - 1;
        den *= BigInt::from(arm + leg + 1);
    }
    debug_assert!((&num % &den).is_zero());
    (num / den).to_biguint().expect("hook-content quotient is non-negative")
}

/// Dimension of the isotypic piece of shape `sigma` in the coordinate ring
/// of `m x n` matrices: `schur_dim(sigma', m) * schur_dim(sigma', n)`.
pub fn m_sigma_dim(sigma: &Partition, m: u32, n: u32) -> Result<BigUint> {
    let max = m.min(n);
    if sigma.largest_part() > max {
        return Err(AlgebraError::TooManyColumns { cols: sigma.largest_part(), max });
    }
    let conj = sigma.conjugate();
    Ok(schur_dim(&conj, m) * schur_dim(&conj, n))
}

/// All partitions of `k` with parts at most `max_part`, in descending
/// lexicographic order.
pub fn partitions_of(k: u32, max_part: u32) -> Vec<Partition> {
    fn rec(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 && max_part == 0 {
        return out;
    }
    rec(k, max_part, &mut Vec::new(), &mut out);
    out
}

/// An antichain of partitions in the gamma order, sorted in descending
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeSet {
    shapes: Vec<Partition>,
}

impl ShapeSet {
    /// The minimal elements of a collection of shapes.
    pub fn minimal_of(shapes: impl IntoIterator<Item = Partition>) -> Self {
        let all: BTreeSet<Partition> = shapes.into_iter().collect();
        let mut minimal: Vec<Partition> = all
            .iter()
            .filter(|s| !all.iter().any(|t| t != *s && t.leq(s)))
            .cloned()
            .collect();
        minimal.sort_by(|a, b| b.cmp(a));
        ShapeSet { shapes: minimal }
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    /// Whether some element is `<= tau`.
    pub fn dominated_by(&self, tau: &Partition) -> bool {
        self.shapes.iter().any(|s| s.leq(tau))
    }
}

/// Partitions of `k` with parts `<= max_part` lying above some element of `set`.
pub fn upset_diagrams(set: &ShapeSet, k: u32, max_part: u32) -> Vec<Partition> {
    partitions_of(k, max_part).into_iter().filter(|tau| set.dominated_by(tau)).collect()
}

/// Minimal shapes among the monomials generating the ideal of `r x r`
/// minors of `S^d` of a `k x k` diagonal matrix of indeterminates. That
/// matrix is diagonal with the degree-`d` monomials on the diagonal, so its
/// nonzero `r`-minors are the products of `r` distinct such monomials.
pub fn sigma_min_shapes(k: usize, d: usize, r: usize) -> Result<ShapeSet> {
    let diagonal = multidegrees(k, d);
    let max = binomial((k + d).saturating_sub(1) as u64, d as u64) as usize;
    if r == 0 || r > max {
        return Err(AlgebraError::OutOfRange { size: r, max });
    }
    let mut shapes = BTreeSet::new();
    for choice in subsets(diagonal.len(), r) {
        let mut exps = vec![0u32; k];
        for &idx in &choice {
            for (e, &a) in exps.iter_mut().zip(&diagonal[idx]) {
                *e += a as u32;
            }
        }
        shapes.insert(shape_of_exponents(exps));
    }
    Ok(ShapeSet::minimal_of(shapes))
}
