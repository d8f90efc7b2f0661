//! Matrices of symmetric, exterior and tensor powers in explicit bases,
//! together with the generic, diagonal and one-parameter test matrices
//! they are applied to.
//!
//! Symmetric powers use the monomial basis of `S^d`: for an `n x m` matrix
//! `A` the column indexed by a source multidegree `alpha` holds the
//! expansion of `prod_j (A e_j)^{alpha_j}` in the target monomials. Integer
//! matrices therefore stay integer, with multinomial coefficients appearing
//! in the entries.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::combinat::{binomial, multidegrees, subsets};
use crate::error::{AlgebraError, Result};
use crate::matrix::{determinant, rational_rank, PolyMatrix};
use crate::poly::{Monomial, Polynomial, VarTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerKind {
    Symmetric,
    Exterior,
}

/// Ordered basis of `S^d` or `/\^d` of a free module of rank `dim`.
///
/// Symmetric indices are multidegrees of total degree `d` in descending
/// lexicographic order; exterior indices are increasing `d`-tuples in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerBasis {
    kind: PowerKind,
    dim: usize,
    power: usize,
    indices: Vec<Vec<usize>>,
}

impl PowerBasis {
    pub fn symmetric(dim: usize, power: usize) -> Self {
        PowerBasis { kind: PowerKind::Symmetric, dim, power, indices: multidegrees(dim, power) }
    }

    pub fn exterior(dim: usize, power: usize) -> Self {
        PowerBasis { kind: PowerKind::Exterior, dim, power, indices: subsets(dim, power) }
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn indices(&self) -> &[Vec<usize>] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn position(&self, index: &[usize]) -> Option<usize> {
        self.indices.iter().position(|i| i == index)
    }
}

/// Exponents relating the maximal minors of a power of an `n`-row matrix to
/// powers of the maximal minors of the matrix itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerConstants {
    /// `C(n+d-1, d-1)`, the exponent for symmetric powers.
    pub s: u64,
    /// `C(n-1, d-1)`, the exponent for exterior powers.
    pub e: u64,
    /// `C(r+d-1, d)`, the rank of `S^d` of a rank-`r` map.
    pub symmetric_rank: u64,
}

impl PowerConstants {
    pub fn new(n: u64, d: u64, r: u64) -> Self {
        assert!(n >= 1 && d >= 1, "power constants need n, d >= 1");
        PowerConstants {
            s: binomial(n + d - 1, d - 1),
            e: binomial(n - 1, d - 1),
            symmetric_rank: binomial(r + d - 1, d),
        }
    }
}

/// `rows x cols` matrix of distinct indeterminates `tag11, tag12, ...`,
/// over a fresh table containing only those variables.
pub fn generic_matrix(rows: usize, cols: usize, tag: &str) -> PolyMatrix {
    let table = VarTable::with_families(&[(tag, rows, cols)]).expect("fresh names are distinct");
    generic_matrix_in(&table, tag, rows, cols).expect("variables were just created")
}

/// Several generic matrices sharing one variable table, families in order.
pub fn generic_matrices(families: &[(&str, usize, usize)]) -> Result<Vec<PolyMatrix>> {
    let table = VarTable::with_families(families)?;
    families.iter().map(|&(tag, r, c)| generic_matrix_in(&table, tag, r, c)).collect()
}

/// The generic matrix of family `tag` inside an existing table.
pub fn generic_matrix_in(
    table: &Arc<VarTable>,
    tag: &str,
    rows: usize,
    cols: usize,
) -> Result<PolyMatrix> {
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            entries.push(Polynomial::var_named(table, &crate::poly::entry_name(tag, i, j))?);
        }
    }
    PolyMatrix::new(table, rows, cols, entries)
}

/// `diag(Y1, ..., Yk)`.
pub fn diagonal_indeterminate_matrix(k: usize) -> PolyMatrix {
    let table = VarTable::new((1..=k).map(|i| format!("Y{i}"))).expect("distinct names");
    PolyMatrix::from_fn(&table, k, k, |i, j| {
        if i == j {
            Polynomial::var(&table, i)
        } else {
            Polynomial::zero(&table)
        }
    })
}

/// `n x m` matrix with `t^{a_i}` at `(i, i)` and zeros elsewhere, where
/// `n = exponents.len()`, in the single variable `t`.
pub fn dvr_diagonal(exponents: &[u32], m: usize) -> Result<PolyMatrix> {
    let n = exponents.len();
    if m < n {
        return Err(AlgebraError::DimensionMismatch(format!(
            "{n} diagonal exponents need at least {n} columns, got {m}"
        )));
    }
    let table = VarTable::new(["t"])?;
    Ok(PolyMatrix::from_fn(&table, n, m, |i, j| {
        if i == j {
            let mono = Monomial::from_exponents(vec![exponents[i] as u16]);
            Polynomial::monomial(&table, mono, num_traits::One::one())
        } else {
            Polynomial::zero(&table)
        }
    }))
}

/// Matrix of `S^d(A)` for `A : R^m -> R^n` given as an `n x m` matrix, of
/// size `C(n+d-1, d) x C(m+d-1, d)`.
pub fn symmetric_power_matrix(a: &PolyMatrix, d: usize) -> PolyMatrix {
    let table = a.table();
    let (n, m) = (a.rows(), a.cols());
    let rows = PowerBasis::symmetric(n, d);
    let cols = PowerBasis::symmetric(m, d);
    let row_pos: BTreeMap<&[usize], usize> =
        rows.indices().iter().enumerate().map(|(i, b)| (b.as_slice(), i)).collect();
    let mut out = PolyMatrix::zeros(table, rows.len(), cols.len());
    for (c, alpha) in cols.indices().iter().enumerate() {
        // Element of S^k(R^n) as multidegree -> coefficient.
        let mut vec: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
        vec.insert(vec![0; n], Polynomial::one(table));
        for (j, &times) in alpha.iter().enumerate() {
            for _ in 0..times {
                let mut next: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
                for (beta, coeff) in &vec {
                    for i in 0..n {
                        let entry = a.get(i, j);
                        if entry.is_zero() {
                            continue;
                        }
                        let mut gamma = beta.clone();
                        gamma[i] += 1;
                        let term = coeff * entry;
                        match next.get_mut(&gamma) {
                            Some(slot) => *slot = &*slot + &term,
                            None => {
                                next.insert(gamma, term);
                            }
                        }
                    }
                }
                vec = next;
            }
        }
        for (beta, coeff) in vec {
            if !coeff.is_zero() {
                out.set(row_pos[beta.as_slice()], c, coeff);
            }
        }
    }
    out
}

/// The `d`-th compound matrix: the `d x d` minor on rows `I` and columns
/// `J` sits at position `(I, J)`, subsets in lexicographic order.
pub fn exterior_power_matrix(a: &PolyMatrix, d: usize) -> Result<PolyMatrix> {
    let max = a.rows().min(a.cols());
    if d == 0 || d > max {
        return Err(AlgebraError::OutOfRange { size: d, max });
    }
    let rows = subsets(a.rows(), d);
    let cols = subsets(a.cols(), d);
    let mut entries = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            entries.push(determinant(&a.submatrix(r, c))?);
        }
    }
    PolyMatrix::new(a.table(), rows.len(), cols.len(), entries)
}

/// Kronecker product: entry `((i,k),(j,l))` is `A[i][j] * B[k][l]`, with
/// composite indices ordered row-major.
pub fn tensor_product_matrix(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    if a.table() != b.table() {
        return Err(AlgebraError::VarTableMismatch);
    }
    let (br, bc) = (b.rows(), b.cols());
    Ok(PolyMatrix::from_fn(a.table(), a.rows() * br, a.cols() * bc, |r, c| {
        let (x, y) = (a.get(r / br, c / bc), b.get(r % br, c % bc));
        if x.is_zero() || y.is_zero() {
            Polynomial::zero(a.table())
        } else {
            x * y
        }
    }))
}

/// Rank over the rationals of a matrix with constant entries.
pub fn numeric_rank(a: &PolyMatrix) -> Result<usize> {
    Ok(rational_rank(&a.to_rationals()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_shapes() {
        let x = generic_matrix(1, 1, "X");
        assert_eq!(x.get(0, 0).to_string(), "X11");
        let x = generic_matrix(2, 3, "X");
        assert_eq!(x.table().len(), 6);
        let mut vars: Vec<_> = x.entries().iter().map(|p| p.variables()[0]).collect();
        vars.dedup();
        assert_eq!(vars.len(), 6);
        let y = generic_matrix(3, 3, "Y");
        assert!(y.table().names().iter().all(|n| n.starts_with('Y')));
    }

    #[test]
    fn shared_table_for_two_families() {
        let ms = generic_matrices(&[("X", 2, 2), ("Y", 2, 3)]).unwrap();
        assert_eq!(ms[0].table().len(), 10);
        assert!(Arc::ptr_eq(ms[0].table(), ms[1].table()));
        assert_eq!(ms[1].get(1, 2).to_string(), "Y23");
    }

    #[test]
    fn diagonal_indeterminates() {
        let y = diagonal_indeterminate_matrix(3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(y.get(i, j).is_zero(), i != j);
            }
        }
        assert_eq!(y.get(2, 2).to_string(), "Y3");
        assert_eq!(diagonal_indeterminate_matrix(1).get(0, 0).to_string(), "Y1");
    }

    #[test]
    fn dvr_diagonal_shapes() {
        let one = dvr_diagonal(&[0], 1).unwrap();
        assert!(one.get(0, 0).is_one());
        let d = dvr_diagonal(&[1, 2], 3).unwrap();
        assert_eq!((d.rows(), d.cols()), (2, 3));
        assert_eq!(d.get(0, 0).to_string(), "t");
        assert_eq!(d.get(1, 1).to_string(), "t^2");
        assert!(d.get(0, 2).is_zero() && d.get(1, 2).is_zero());
        assert!(dvr_diagonal(&[1, 2], 1).is_err());
    }

    #[test]
    fn basis_sizes_and_orders() {
        let s = PowerBasis::symmetric(3, 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s.indices()[0], vec![2, 0, 0]);
        assert_eq!(s.indices()[5], vec![0, 0, 2]);
        let e = PowerBasis::exterior(4, 2);
        assert_eq!(e.len(), 6);
        assert_eq!(e.indices()[1], vec![0, 2]);
        for n in 1..6u64 {
            for d in 1..4u64 {
                assert_eq!(PowerBasis::symmetric(n as usize, d as usize).len() as u64, binomial(n + d - 1, d));
                assert_eq!(PowerBasis::exterior(n as usize, d as usize).len() as u64, binomial(n, d));
            }
        }
    }

    #[test]
    fn power_constant_identities() {
        for n in 1..8u64 {
            for d in 1..5u64 {
                let c = PowerConstants::new(n, d, n);
                assert_eq!(c.s * n, d * binomial(n + d - 1, d));
                assert_eq!(c.e * n, d * binomial(n, d));
            }
        }
        assert_eq!(PowerConstants::new(3, 3, 3).s, 10);
        assert_eq!(PowerConstants::new(2, 2, 1).symmetric_rank, 1);
    }

    #[test]
    fn symmetric_power_of_identity() {
        let t = VarTable::new(Vec::<String>::new()).unwrap();
        for n in 1..4 {
            for d in 1..4 {
                let s = symmetric_power_matrix(&PolyMatrix::identity(&t, n), d);
                assert_eq!(s, PolyMatrix::identity(&t, binomial((n + d - 1) as u64, d as u64) as usize));
            }
        }
    }

    #[test]
    fn symmetric_square_of_diagonal() {
        let y = diagonal_indeterminate_matrix(2);
        let s = symmetric_power_matrix(&y, 2);
        let t = y.table();
        let (y1, y2) = (Polynomial::var(t, 0), Polynomial::var(t, 1));
        let expected = [&y1 * &y1, &y1 * &y2, &y2 * &y2];
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    assert_eq!(s.get(i, j), &expected[i]);
                } else {
                    assert!(s.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn symmetric_square_of_generic_two_by_two() {
        // A = [[a, b], [c, d]]; A e1 = a f1 + c f2, A e2 = b f1 + d f2.
        let table = VarTable::new(["a", "b", "c", "d"]).unwrap();
        let v: Vec<_> = (0..4).map(|i| Polynomial::var(&table, i)).collect();
        let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
        let m = PolyMatrix::new(&table, 2, 2, v.clone()).unwrap();
        let s = symmetric_power_matrix(&m, 2);
        // Brute force: expand (x1 f1 + x2 f2)(y1 f1 + y2 f2) by hand.
        let col = |x1: &Polynomial, x2: &Polynomial, y1: &Polynomial, y2: &Polynomial| {
            [x1 * y1, &(x1 * y2) + &(x2 * y1), x2 * y2]
        };
        let cols = [col(a, c, a, c), col(a, c, b, d), col(b, d, b, d)];
        for (j, column) in cols.iter().enumerate() {
            for (i, e) in column.iter().enumerate() {
                assert_eq!(s.get(i, j), e, "entry ({i},{j})");
            }
        }
        // Middle column, first entry: a*b; second: a*d + b*c.
        assert_eq!(s.get(1, 1), &(&(a * d) + &(b * c)));
    }

    #[test]
    fn exterior_power_cases() {
        let x = generic_matrix(2, 3, "X");
        assert_eq!(exterior_power_matrix(&x, 1).unwrap(), x);
        let t = VarTable::new(Vec::<String>::new()).unwrap();
        let id = PolyMatrix::identity(&t, 4);
        assert_eq!(exterior_power_matrix(&id, 2).unwrap(), PolyMatrix::identity(&t, 6));

        let y = diagonal_indeterminate_matrix(3);
        let e = exterior_power_matrix(&y, 2).unwrap();
        let tt = y.table();
        let v = |i| Polynomial::var(tt, i);
        let diag = [&v(0) * &v(1), &v(0) * &v(2), &v(1) * &v(2)];
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    assert_eq!(e.get(i, j), &diag[i]);
                } else {
                    assert!(e.get(i, j).is_zero());
                }
            }
        }
        assert_eq!(
            exterior_power_matrix(&x, 3).unwrap_err(),
            AlgebraError::OutOfRange { size: 3, max: 2 }
        );
    }

    #[test]
    fn tensor_product_cases() {
        let x = generic_matrix(2, 3, "X");
        let one = PolyMatrix::identity(x.table(), 1);
        assert_eq!(tensor_product_matrix(&x, &one).unwrap(), x);

        let table = VarTable::new(["a", "b", "c", "d"]).unwrap();
        let v = |i| Polynomial::var(&table, i);
        let z = || Polynomial::zero(&table);
        let da = PolyMatrix::new(&table, 2, 2, vec![v(0), z(), z(), v(1)]).unwrap();
        let db = PolyMatrix::new(&table, 2, 2, vec![v(2), z(), z(), v(3)]).unwrap();
        let k = tensor_product_matrix(&da, &db).unwrap();
        let diag = [&v(0) * &v(2), &v(0) * &v(3), &v(1) * &v(2), &v(1) * &v(3)];
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    assert_eq!(k.get(i, j), &diag[i]);
                } else {
                    assert!(k.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn numeric_rank_cases() {
        let t = VarTable::new(["x"]).unwrap();
        assert_eq!(numeric_rank(&PolyMatrix::zeros(&t, 3, 2)).unwrap(), 0);
        assert_eq!(numeric_rank(&PolyMatrix::identity(&t, 4)).unwrap(), 4);
        let u = PolyMatrix::from_integers(&t, &[vec![1, 2], vec![0, 1], vec![3, -1]]);
        let v = PolyMatrix::from_integers(&t, &[vec![1, 0, 2, 1], vec![-1, 1, 0, 3]]);
        assert_eq!(numeric_rank(&u.checked_mul(&v).unwrap()).unwrap(), 2);
        let sym = PolyMatrix::from_fn(&t, 1, 1, |_, _| Polynomial::var(&t, 0));
        assert_eq!(numeric_rank(&sym), Err(AlgebraError::NonConstantEntry(1)));
    }
}
