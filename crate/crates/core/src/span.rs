//! Graded components of homogeneous ideals as row spaces.
//!
//! A [`GradedSpan`] is a subspace of the degree-`k` part of a polynomial
//! ring, stored as a reduced row-echelon matrix whose columns are the
//! degree-`k` monomials in descending graded-lex order. Pivots are therefore
//! leading monomials.

use std::collections::HashMap;
use std::sync::Arc;

use crate::echelon::{Echelon, SparseRow};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, PrimeField};
use crate::poly::{ModPolynomial, Monomial, Polynomial, VarTable};

/// All monomials of one degree over a variable table, with reverse lookup.
#[derive(Debug)]
pub struct MonomialBasis {
    table: Arc<VarTable>,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(table: &Arc<VarTable>, degree: u32) -> Arc<Self> {
        let monomials = Monomial::all_of_degree(table.len(), degree);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Arc::new(MonomialBasis { table: table.clone(), degree, monomials, index })
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn same_ambient(&self, other: &MonomialBasis) -> bool {
        self.degree == other.degree && self.table == other.table
    }

    /// Column vector of `p * multiplier`; `p * multiplier` must have this degree.
    pub fn sparse_row<F: Field>(
        &self,
        field: &F,
        p: &Polynomial,
        multiplier: Option<&Monomial>,
    ) -> Result<SparseRow<F::Elem>> {
        if p.table() != &self.table {
            return Err(AlgebraError::VarTableMismatch);
        }
        let mut row = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let shifted;
            let m = match multiplier {
                Some(mult) => {
                    shifted = m.mul(mult);
                    &shifted
                }
                None => m,
            };
            let col = self.position(m).ok_or(AlgebraError::DegreeMismatch {
                expected: self.degree,
                found: m.degree(),
            })?;
            let v = field.from_rational(c)?;
            if !field.is_zero(&v) {
                row.push((col, v));
            }
        }
        Ok(row)
    }
}

/// Subspace of the degree-`k` component of a polynomial ring over a field.
#[derive(Debug, Clone)]
pub struct GradedSpan<F: Field> {
    basis: Arc<MonomialBasis>,
    echelon: Echelon<F>,
}

impl<F: Field> GradedSpan<F> {
    pub fn zero(basis: &Arc<MonomialBasis>, field: F) -> Self {
        GradedSpan { basis: basis.clone(), echelon: Echelon::new(field) }
    }

    /// Span of homogeneous polynomials of the basis degree. Zero polynomials
    /// are skipped.
    pub fn from_polynomials<'a>(
        basis: &Arc<MonomialBasis>,
        field: F,
        polys: impl IntoIterator<Item = &'a Polynomial>,
    ) -> Result<Self> {
        let mut span = GradedSpan::zero(basis, field);
        span.extend(polys)?;
        Ok(span)
    }

    /// Builds from precomputed sparse rows; columns index `basis`.
    pub fn from_rows(
        basis: &Arc<MonomialBasis>,
        field: F,
        rows: impl IntoIterator<Item = SparseRow<F::Elem>>,
    ) -> Self {
        let mut echelon = Echelon::new(field);
        for r in rows {
            echelon.insert(r);
        }
        echelon.reduce_fully();
        GradedSpan { basis: basis.clone(), echelon }
    }

    /// Adds polynomials to the span, keeping it reduced.
    pub fn extend<'a>(&mut self, polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<()> {
        for p in polys {
            self.check_degree(p.homogeneous_degree(), p.is_zero())?;
            let row = self.basis.sparse_row(self.echelon.field(), p, None)?;
            self.echelon.insert(row);
        }
        self.echelon.reduce_fully();
        Ok(())
    }

    fn check_degree(&self, deg: Option<u32>, is_zero: bool) -> Result<()> {
        if is_zero {
            return Ok(());
        }
        match deg {
            Some(d) if d == self.basis.degree => Ok(()),
            Some(d) => Err(AlgebraError::DegreeMismatch { expected: self.basis.degree, found: d }),
            None => Err(AlgebraError::Inhomogeneous),
        }
    }

    pub fn basis(&self) -> &Arc<MonomialBasis> {
        &self.basis
    }

    pub fn degree(&self) -> u32 {
        self.basis.degree
    }

    pub fn field(&self) -> &F {
        self.echelon.field()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &Echelon<F> {
        &self.echelon
    }

    /// Leading monomials of the reduced basis rows, in column order.
    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.echelon.pivots().map(|c| self.basis.monomial(c)).collect()
    }

    /// Whether `p` reduces to zero against the echelon basis.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        self.check_degree(p.homogeneous_degree(), p.is_zero())?;
        let row = self.basis.sparse_row(self.echelon.field(), p, None)?;
        Ok(self.echelon.remainder(row).is_empty())
    }

    fn check_ambient(&self, other: &GradedSpan<F>) -> Result<()> {
        if !self.basis.same_ambient(&other.basis)
            || !self.echelon.field().same_field(other.echelon.field())
        {
            return Err(AlgebraError::AmbientMismatch);
        }
        Ok(())
    }

    fn rows_cloned(&self) -> impl Iterator<Item = SparseRow<F::Elem>> + '_ {
        self.echelon.rows().map(|(_, r)| r.clone())
    }

    pub fn sum(&self, other: &GradedSpan<F>) -> Result<GradedSpan<F>> {
        self.check_ambient(other)?;
        let mut echelon = self.echelon.clone();
        for r in other.rows_cloned() {
            echelon.insert(r);
        }
        echelon.reduce_fully();
        Ok(GradedSpan { basis: self.basis.clone(), echelon })
    }

    /// Intersection of row spaces (Zassenhaus): reduce `[a | a]` stacked on
    /// `[b | 0]`; rows with vanishing left half span the intersection in
    /// their right half.
    pub fn intersect(&self, other: &GradedSpan<F>) -> Result<GradedSpan<F>> {
        self.check_ambient(other)?;
        let width = self.basis.len();
        let field = self.echelon.field().clone();
        let mut z = Echelon::new(field.clone());
        for r in self.rows_cloned() {
            let doubled: SparseRow<F::Elem> =
                r.iter().cloned().chain(r.iter().map(|(c, v)| (c + width, v.clone()))).collect();
            z.insert(doubled);
        }
        for r in other.rows_cloned() {
            z.insert(r);
        }
        let rows: Vec<SparseRow<F::Elem>> = z
            .rows()
            .filter(|(pivot, _)| *pivot >= width)
            .map(|(_, r)| r.iter().map(|(c, v)| (c - width, v.clone())).collect())
            .collect();
        Ok(GradedSpan::from_rows(&self.basis, field, rows))
    }

    /// Equality of subspaces, decided on the reduced echelon forms.
    pub fn equals(&self, other: &GradedSpan<F>) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.rank() == other.rank()
            && self.echelon.rows().zip(other.echelon.rows()).all(|(a, b)| a == b))
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains_span(&self, other: &GradedSpan<F>) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.rows_cloned().all(|r| self.echelon.remainder(r).is_empty()))
    }

    fn row_to_terms(&self, row: &SparseRow<F::Elem>) -> Vec<(Monomial, F::Elem)> {
        row.iter().map(|(c, v)| (self.basis.monomial(*c).clone(), v.clone())).collect()
    }
}

impl GradedSpan<crate::field::Rationals> {
    /// The reduced basis rows as polynomials.
    pub fn row_polynomials(&self) -> Vec<Polynomial> {
        self.echelon
            .rows()
            .map(|(_, r)| Polynomial::from_terms(self.basis.table(), self.row_to_terms(r)))
            .collect()
    }
}

impl GradedSpan<PrimeField> {
    /// Membership of a polynomial already reduced modulo the span's prime.
    pub fn contains_mod(&self, p: &ModPolynomial) -> Result<bool> {
        if !p.field().same_field(self.field()) {
            return Err(AlgebraError::AmbientMismatch);
        }
        if p.table() != self.basis.table() {
            return Err(AlgebraError::VarTableMismatch);
        }
        self.check_degree(p.homogeneous_degree(), p.is_zero())?;
        let mut row = Vec::new();
        for (m, c) in p.terms() {
            let col = self.basis.position(m).ok_or(AlgebraError::DegreeMismatch {
                expected: self.basis.degree,
                found: m.degree(),
            })?;
            row.push((col, *c));
        }
        Ok(self.echelon.remainder(row).is_empty())
    }
}

/// Convenience for exact spans.
pub type ExactSpan = GradedSpan<crate::field::Rationals>;
/// Convenience for spans over a prime field.
pub type ModularSpan = GradedSpan<PrimeField>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::poly::rat;

    fn xy() -> (Arc<VarTable>, Polynomial, Polynomial) {
        let t = VarTable::new(["x", "y"]).unwrap();
        (t.clone(), Polynomial::var(&t, 0), Polynomial::var(&t, 1))
    }

    #[test]
    fn membership_and_degree_checks() {
        let (t, x, y) = xy();
        let b = MonomialBasis::new(&t, 2);
        let span = GradedSpan::from_polynomials(&b, Rationals, [&(&x * &x), &(&x * &y)]).unwrap();
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&Polynomial::zero(&t)).unwrap());
        assert!(!span.contains(&(&y * &y)).unwrap());
        assert!(span.contains(&(&(&x * &x).scale(&rat(3)) - &(&x * &y))).unwrap());
        assert_eq!(
            span.contains(&x),
            Err(AlgebraError::DegreeMismatch { expected: 2, found: 1 })
        );
        assert_eq!(span.contains(&(&x + &(&x * &y))), Err(AlgebraError::Inhomogeneous));
    }

    #[test]
    fn sum_intersection_equality() {
        let (t, x, y) = xy();
        let b = MonomialBasis::new(&t, 2);
        let (xx, xy_, yy) = (&x * &x, &x * &y, &y * &y);
        let a = GradedSpan::from_polynomials(&b, Rationals, [&xx, &xy_]).unwrap();
        let c = GradedSpan::from_polynomials(&b, Rationals, [&(&xy_ + &yy), &xx]).unwrap();
        let zero = GradedSpan::zero(&b, Rationals);
        assert!(a.sum(&zero).unwrap().equals(&a).unwrap());
        assert!(a.intersect(&a).unwrap().equals(&a).unwrap());
        let meet = a.intersect(&c).unwrap();
        assert_eq!(meet.rank(), 1);
        assert!(meet.contains(&xx).unwrap());
        assert_eq!(a.sum(&c).unwrap().rank(), 3);
        assert!(!a.equals(&c).unwrap());
        let other = GradedSpan::zero(&MonomialBasis::new(&t, 3), Rationals);
        assert_eq!(a.sum(&other).unwrap_err(), AlgebraError::AmbientMismatch);
    }

    #[test]
    fn equality_is_basis_independent() {
        let (t, x, y) = xy();
        let b = MonomialBasis::new(&t, 1);
        let a = GradedSpan::from_polynomials(&b, Rationals, [&(&x + &y), &(&x - &y)]).unwrap();
        let c = GradedSpan::from_polynomials(&b, Rationals, [&x, &y]).unwrap();
        assert!(a.equals(&c).unwrap());
        assert_eq!(c.row_polynomials(), vec![x.clone(), y.clone()]);
    }

    #[test]
    fn modular_membership() {
        let (t, x, y) = xy();
        let b = MonomialBasis::new(&t, 1);
        let f = PrimeField::new(7).unwrap();
        let span = GradedSpan::from_polynomials(&b, f, [&(&x + &y.scale(&rat(7)))]).unwrap();
        assert!(span.contains(&x).unwrap());
        let xm = x.reduce_mod_prime(&f).unwrap();
        assert!(span.contains_mod(&xm).unwrap());
        let other = x.reduce_mod_prime(&PrimeField::new(5).unwrap()).unwrap();
        assert_eq!(span.contains_mod(&other), Err(AlgebraError::AmbientMismatch));
    }
}
