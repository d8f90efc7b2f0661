//! Generator sets of determinantal ideals and the linear algebra that
//! compares them degree by degree.
//!
//! No ideal is ever compared globally: every question is reduced to a
//! graded component, which is a finite-dimensional row space (see
//! [`crate::span`]).

use std::collections::HashSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinat::subsets;
use crate::echelon::SparseRow;
use crate::error::{AlgebraError, Result};
use crate::field::{distinct_primes, random_prime, Field, PrimeField, Rationals};
use crate::matrix::{bareiss_determinant, determinant, rational_inverse, PolyMatrix};
use crate::poly::{Monomial, Polynomial, VarTable};
use crate::span::{GradedSpan, MonomialBasis};
use crate::young::{partitions_of, Partition};
use num_rational::BigRational;
use num_traits::Zero;

/// Finite generating set of an ideal. Generators are nonzero, canonical and
/// pairwise distinct; an empty set is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGens {
    table: Arc<VarTable>,
    generators: Vec<Polynomial>,
}

impl IdealGens {
    /// Drops zeros and repeated generators, keeping first occurrences.
    pub fn new(table: &Arc<VarTable>, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut generators = Vec::new();
        for g in gens {
            if g.table() != table {
                return Err(AlgebraError::VarTableMismatch);
            }
            if !g.is_zero() && seen.insert(g.clone()) {
                generators.push(g);
            }
        }
        Ok(IdealGens { table: table.clone(), generators })
    }

    /// The unit ideal.
    pub fn unit(table: &Arc<VarTable>) -> Self {
        IdealGens { table: table.clone(), generators: vec![Polynomial::one(table)] }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// An empty generating set is the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.homogeneous_degree().is_some())
    }

    /// The common degree of all generators, if there is one.
    pub fn uniform_degree(&self) -> Option<u32> {
        let first = self.generators.first()?.homogeneous_degree()?;
        self.generators
            .iter()
            .all(|g| g.homogeneous_degree() == Some(first))
            .then_some(first)
    }
}

/// All `t x t` minors in lexicographic order of (row subset, column subset),
/// zeros and repetitions dropped.
pub fn minors(a: &PolyMatrix, t: usize) -> Result<IdealGens> {
    let max = a.rows().min(a.cols());
    if t == 0 || t > max {
        return Err(AlgebraError::OutOfRange { size: t, max });
    }
    let row_sets = subsets(a.rows(), t);
    let col_sets = subsets(a.cols(), t);
    let blocks: Vec<Vec<Polynomial>> = row_sets
        .par_iter()
        .map(|r| {
            col_sets
                .iter()
                .map(|c| determinant(&a.submatrix(r, c)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    IdealGens::new(a.table(), blocks.into_iter().flatten())
}

/// Minors of size `min(rows, cols)`.
pub fn maximal_minors(a: &PolyMatrix) -> Result<IdealGens> {
    minors(a, a.rows().min(a.cols()))
}

/// Pairwise products of generators.
pub fn ideal_product(a: &IdealGens, b: &IdealGens) -> Result<IdealGens> {
    if a.table != b.table {
        return Err(AlgebraError::VarTableMismatch);
    }
    let products: Vec<Polynomial> = a
        .generators
        .par_iter()
        .flat_map_iter(|f| b.generators.iter().map(move |g| f * g))
        .collect();
    IdealGens::new(&a.table, products)
}

/// `a^k`; the zeroth power is the unit ideal.
pub fn ideal_power(a: &IdealGens, k: u32) -> Result<IdealGens> {
    let mut acc = IdealGens::unit(&a.table);
    for _ in 0..k {
        acc = ideal_product(&acc, a)?;
    }
    Ok(acc)
}

fn check_parts(a: &PolyMatrix, sigma: &Partition) -> Result<()> {
    let max = a.rows().min(a.cols());
    if sigma.largest_part() as usize > max {
        return Err(AlgebraError::OutOfRange { size: sigma.largest_part() as usize, max });
    }
    Ok(())
}

/// `I^sigma(A) = prod_i I_{s_i}(A)`.
pub fn i_sigma_upper(a: &PolyMatrix, sigma: &Partition) -> Result<IdealGens> {
    check_parts(a, sigma)?;
    let mut acc = IdealGens::unit(a.table());
    for &s in sigma.parts() {
        acc = ideal_product(&acc, &minors(a, s as usize)?)?;
    }
    Ok(acc)
}

/// Sparse rows of `m * g` for every generator `g` of degree `<= k` and every
/// monomial `m` of degree `k - deg g`. Generators of higher degree
/// contribute nothing to degree `k`.
fn component_rows<F: Field>(
    gens: &IdealGens,
    basis: &MonomialBasis,
    field: &F,
) -> Result<Vec<SparseRow<F::Elem>>> {
    if !gens.is_homogeneous() {
        return Err(AlgebraError::Inhomogeneous);
    }
    let k = basis.degree();
    let nvars = gens.table.len();
    let per_gen: Vec<Vec<SparseRow<F::Elem>>> = gens
        .generators
        .par_iter()
        .map(|g| {
            let d = g.homogeneous_degree().expect("checked homogeneous");
            if d > k {
                return Ok(Vec::new());
            }
            Monomial::all_of_degree(nvars, k - d)
                .iter()
                .map(|m| basis.sparse_row(field, g, Some(m)))
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(per_gen.into_iter().flatten().collect())
}

/// The degree-`k` component of the ideal over `field`, in reduced echelon form.
pub fn graded_component<F: Field>(gens: &IdealGens, k: u32, field: F) -> Result<GradedSpan<F>> {
    let basis = MonomialBasis::new(&gens.table, k);
    graded_component_in(gens, &basis, field)
}

/// Like [`graded_component`] over a shared monomial basis.
pub fn graded_component_in<F: Field>(
    gens: &IdealGens,
    basis: &Arc<MonomialBasis>,
    field: F,
) -> Result<GradedSpan<F>> {
    if basis.table() != &gens.table {
        return Err(AlgebraError::VarTableMismatch);
    }
    let rows = component_rows(gens, basis, &field)?;
    Ok(GradedSpan::from_rows(basis, field, rows))
}

/// Dimension of the degree-`k` component over `F_prime`.
pub fn modular_rank(gens: &IdealGens, k: u32, prime: u64) -> Result<usize> {
    let field = PrimeField::new(prime)?;
    Ok(graded_component(gens, k, field)?.rank())
}

/// Outcome of the multi-prime rank protocol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedRank {
    pub rank: usize,
    pub primes: Vec<u64>,
    pub modular_ranks: Vec<usize>,
    /// Set when the modular ranks disagreed and the exact rank was computed.
    pub escalated: bool,
}

/// Rank of a degree-`k` component via `prime_count` distinct random primes
/// in `(2^30, 2^31)` drawn from `seed`. Agreement is accepted; any
/// disagreement falls back to exact arithmetic. A prime dividing a
/// denominator is replaced by a fresh draw.
pub fn certified_rank(
    gens: &IdealGens,
    k: u32,
    seed: u64,
    prime_count: usize,
) -> Result<CertifiedRank> {
    assert!(prime_count >= 1, "need at least one prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = MonomialBasis::new(&gens.table, k);
    let mut primes = distinct_primes(&mut rng, prime_count);
    let mut modular_ranks = Vec::with_capacity(prime_count);
    let mut i = 0;
    while i < primes.len() {
        let field = PrimeField::new(primes[i])?;
        match graded_component_in(gens, &basis, field) {
            Ok(span) => {
                modular_ranks.push(span.rank());
                i += 1;
            }
            Err(AlgebraError::BadPrime(_)) => loop {
                let p = random_prime(&mut rng);
                if !primes.contains(&p) {
                    primes[i] = p;
                    break;
                }
            },
            Err(e) => return Err(e),
        }
    }
    if modular_ranks.windows(2).all(|w| w[0] == w[1]) {
        return Ok(CertifiedRank { rank: modular_ranks[0], primes, modular_ranks, escalated: false });
    }
    let exact = graded_component_in(gens, &basis, Rationals)?.rank();
    Ok(CertifiedRank { rank: exact, primes, modular_ranks, escalated: true })
}

/// Degree-`k` component of `I^(sigma)(A) = sum_{tau >= sigma} I^tau(A)`,
/// summing over diagrams `tau` with `|tau| <= k` and parts bounded by the
/// matrix size.
pub fn i_sigma_paren_component<F: Field>(
    a: &PolyMatrix,
    sigma: &Partition,
    k: u32,
    field: F,
) -> Result<GradedSpan<F>> {
    check_parts(a, sigma)?;
    let max_part = a.rows().min(a.cols()) as u32;
    let basis = MonomialBasis::new(a.table(), k);
    let mut span = GradedSpan::zero(&basis, field.clone());
    for size in sigma.size()..=k {
        for tau in partitions_of(size, max_part) {
            if sigma.leq(&tau) {
                let gens = i_sigma_upper(a, &tau)?;
                span = span.sum(&graded_component_in(&gens, &basis, field.clone())?)?;
            }
        }
    }
    Ok(span)
}

/// Product of the determinants of the upper-left `s_i x s_i` submatrices.
pub fn doubly_initial_tableau(a: &PolyMatrix, sigma: &Partition) -> Result<Polynomial> {
    check_parts(a, sigma)?;
    let mut acc = Polynomial::one(a.table());
    for &s in sigma.parts() {
        let idx: Vec<usize> = (0..s as usize).collect();
        acc = &acc * &determinant(&a.submatrix(&idx, &idx))?;
    }
    Ok(acc)
}

/// Image of `p` under the substitution sending the entry grid `x` (a matrix
/// of distinct indeterminates) to `A x B^{-1}`. Other variables are fixed.
pub fn apply_gl_substitution(
    p: &Polynomial,
    x: &PolyMatrix,
    a: &[Vec<BigRational>],
    b: &[Vec<BigRational>],
) -> Result<Polynomial> {
    let (m, n) = (x.rows(), x.cols());
    if a.len() != m || a.iter().any(|r| r.len() != m) {
        return Err(AlgebraError::DimensionMismatch(format!("left factor must be {m}x{m}")));
    }
    if b.len() != n || b.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::DimensionMismatch(format!("right factor must be {n}x{n}")));
    }
    if bareiss_determinant(a).is_zero() {
        return Err(AlgebraError::Singular);
    }
    let b_inv = rational_inverse(b)?;
    let table = x.table();
    let mut var_of = vec![0usize; m * n];
    for i in 0..m {
        for j in 0..n {
            let e = x.get(i, j);
            let vars = e.variables();
            if vars.len() != 1 || *e != Polynomial::var(table, vars[0]) {
                return Err(AlgebraError::NotGeneric);
            }
            var_of[i * n + j] = vars[0];
        }
    }
    // (A X B^{-1})_{ij} = sum_{k,l} A_ik X_kl Binv_lj.
    let mut images: Vec<Option<Polynomial>> =
        (0..table.len()).map(|v| Some(Polynomial::var(table, v))).collect();
    let x_binv: Vec<Vec<Polynomial>> = (0..m)
        .map(|k| {
            (0..n)
                .map(|j| {
                    (0..n).fold(Polynomial::zero(table), |acc, l| {
                        &acc + &Polynomial::var(table, var_of[k * n + l]).scale(&b_inv[l][j])
                    })
                })
                .collect()
        })
        .collect();
    for i in 0..m {
        for j in 0..n {
            let img = (0..m).fold(Polynomial::zero(table), |acc, k| &acc + &x_binv[k][j].scale(&a[i][k]));
            images[var_of[i * n + j]] = Some(img);
        }
    }
    p.substitute(&images)
}

/// Smallest `t`-adic valuation among generators that are polynomials in one
/// variable `t`: the valuation of the ideal after specializing to the local
/// ring at `t = 0`.
pub fn min_valuation(gens: &IdealGens) -> Result<u32> {
    if gens.is_zero() {
        return Err(AlgebraError::ZeroIdeal);
    }
    let mut var: Option<usize> = None;
    for g in &gens.generators {
        for v in g.variables() {
            match var {
                None => var = Some(v),
                Some(w) if w != v => {
                    return Err(AlgebraError::NotUnivariate(gens.table.name(w).to_string()))
                }
                _ => {}
            }
        }
    }
    Ok(gens
        .generators
        .iter()
        .filter_map(|g| g.terms().next().map(|(m, _)| m.degree()))
        .min()
        .expect("nonzero generators"))
}
