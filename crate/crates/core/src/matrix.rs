//! Dense matrices of polynomials and exact determinants.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::poly::{Polynomial, VarTable};

/// Rectangular grid of polynomials over one variable table, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    table: Arc<VarTable>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(
        table: &Arc<VarTable>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|p| p.table() != table) {
            return Err(AlgebraError::VarTableMismatch);
        }
        Ok(PolyMatrix { table: table.clone(), rows, cols, entries })
    }

    pub fn from_fn(
        table: &Arc<VarTable>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let entries = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j));
        PolyMatrix { table: table.clone(), rows, cols, entries: entries.collect() }
    }

    pub fn zeros(table: &Arc<VarTable>, rows: usize, cols: usize) -> Self {
        PolyMatrix::from_fn(table, rows, cols, |_, _| Polynomial::zero(table))
    }

    pub fn identity(table: &Arc<VarTable>, n: usize) -> Self {
        PolyMatrix::from_fn(table, n, n, |i, j| {
            if i == j {
                Polynomial::one(table)
            } else {
                Polynomial::zero(table)
            }
        })
    }

    /// Constant matrix from machine integers. Rows must have equal length.
    pub fn from_integers(table: &Arc<VarTable>, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged integer matrix");
        PolyMatrix::from_fn(table, r, c, |i, j| Polynomial::integer(table, rows[i][j]))
    }

    pub fn from_rationals(table: &Arc<VarTable>, rows: &[Vec<BigRational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rational matrix");
        PolyMatrix::from_fn(table, r, c, |i, j| Polynomial::constant(table, rows[i][j].clone()))
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(p.table() == &self.table, "entry over a different variable table");
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.table, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.table, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.table != other.table {
            return Err(AlgebraError::VarTableMismatch);
        }
        Ok(PolyMatrix::from_fn(&self.table, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.table);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    /// Whether every entry has degree at most zero.
    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|p| p.degree().unwrap_or(0) == 0)
    }

    /// The entries as rationals; fails on the first non-constant entry.
    pub fn to_rationals(&self) -> Result<Vec<Vec<BigRational>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|p| {
                        p.constant_value()
                            .ok_or_else(|| AlgebraError::NonConstantEntry(p.degree().unwrap_or(0)))
                    })
                    .collect()
            })
            .collect()
    }

    /// Common total degree of all nonzero entries, if they share one.
    pub fn entry_degree(&self) -> Option<u32> {
        let mut deg = None;
        for p in self.entries.iter().filter(|p| !p.is_zero()) {
            let d = p.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Exact determinant. Constant matrices go through fraction-free
/// elimination, anything symbolic through memoized Laplace expansion.
pub fn determinant(a: &PolyMatrix) -> Result<Polynomial> {
    a.require_square()?;
    if a.is_constant() {
        let det = bareiss_determinant(&a.to_rationals()?);
        Ok(Polynomial::constant(a.table(), det))
    } else {
        determinant_laplace(a)
    }
}

/// Laplace expansion along rows, memoized over the set of columns still
/// available. Needs no division, so it is exact over any coefficient ring.
pub fn determinant_laplace(a: &PolyMatrix) -> Result<Polynomial> {
    a.require_square()?;
    let n = a.rows();
    assert!(n <= 63, "laplace expansion limited to 63 columns");
    if n == 0 {
        return Ok(Polynomial::one(a.table()));
    }
    let full: u64 = (1u64 << n) - 1;
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    Ok(laplace_rec(a, full, &mut memo))
}

fn laplace_rec(a: &PolyMatrix, mask: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    let used = a.rows() - mask.count_ones() as usize;
    if mask.count_ones() == 1 {
        let j = mask.trailing_zeros() as usize;
        return a.get(used, j).clone();
    }
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(a.table());
    let mut sign_negative = false;
    for j in 0..a.cols() {
        if mask & (1 << j) == 0 {
            continue;
        }
        let entry = a.get(used, j);
        if !entry.is_zero() {
            let minor = laplace_rec(a, mask & !(1 << j), memo);
            if !minor.is_zero() {
                let term = entry * &minor;
                acc = if sign_negative { &acc - &term } else { &acc + &term };
            }
        }
        sign_negative = !sign_negative;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Scales each row by the lcm of its denominators. Returns the integer rows
/// and the product of the scale factors.
fn clear_row_denominators(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let ints = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            total *= &l;
            row.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    (ints, total)
}

/// Fraction-free (Bareiss) determinant of a square rational matrix.
pub fn bareiss_determinant(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return BigRational::one();
    }
    let (mut m, scale) = clear_row_denominators(rows);
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = if negate { -prev } else { prev };
    BigRational::new(det, scale)
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let (mut m, _) = clear_row_denominators(rows);
    let (nr, nc) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        for i in rank + 1..nr {
            for j in col + 1..nc {
                let v = (&m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn rational_inverse(rows: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::NotSquare { rows: n, cols: rows.first().map_or(0, Vec::len) });
    }
    let mut aug: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !aug[i][k].is_zero()).ok_or(AlgebraError::Singular)?;
        aug.swap(p, k);
        let inv = aug[k][k].recip();
        for v in aug[k].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n {
            if i != k && !aug[i][k].is_zero() {
                let f = aug[i][k].clone();
                for j in 0..2 * n {
                    let d = &f * &aug[k][j];
                    aug[i][j] -= d;
                }
            }
        }
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Product of rational matrices.
pub fn rational_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch in rational product");
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio, VarTable};

    fn empty() -> Arc<VarTable> {
        VarTable::new(Vec::<String>::new()).unwrap()
    }

    fn q(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn identity_determinant_is_one() {
        let t = empty();
        for n in 0..6 {
            let id = PolyMatrix::identity(&t, n);
            assert!(determinant(&id).unwrap().is_one());
            assert!(determinant_laplace(&id).unwrap().is_one());
        }
    }

    #[test]
    fn two_by_two_formula() {
        let t = VarTable::new(["a", "b", "c", "d"]).unwrap();
        let v = |i| Polynomial::var(&t, i);
        let m = PolyMatrix::new(&t, 2, 2, (0..4).map(v).collect()).unwrap();
        let det = determinant(&m).unwrap();
        assert_eq!(det, &(&v(0) * &v(3)) - &(&v(1) * &v(2)));
    }

    #[test]
    fn non_square_rejected() {
        let t = empty();
        let m = PolyMatrix::zeros(&t, 2, 3);
        assert_eq!(determinant(&m), Err(AlgebraError::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn bareiss_with_pivoting_and_fractions() {
        assert_eq!(bareiss_determinant(&q(&[&[0, 1], &[1, 0]])), rat(-1));
        assert_eq!(bareiss_determinant(&q(&[&[2, 4, 1], &[0, 0, 3], &[1, 1, 1]])), rat(6));
        let half = vec![vec![ratio(1, 2), rat(1)], vec![rat(3), ratio(2, 3)]];
        assert_eq!(bareiss_determinant(&half), ratio(1, 3) - rat(3));
        assert_eq!(bareiss_determinant(&q(&[&[1, 2], &[2, 4]])), rat(0));
    }

    #[test]
    fn rank_by_elimination() {
        assert_eq!(rational_rank(&q(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rational_rank(&q(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        assert_eq!(rational_rank(&q(&[&[0, 1], &[0, 2], &[0, 3]])), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let a = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = rational_inverse(&a).unwrap();
        let prod = rational_mul(&a, &inv);
        for (i, row) in prod.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { rat(1) } else { rat(0) });
            }
        }
        assert_eq!(rational_inverse(&q(&[&[1, 2], &[2, 4]])), Err(AlgebraError::Singular));
    }
}
