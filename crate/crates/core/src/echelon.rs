//! Sparse row reduction over an arbitrary [`Field`].
//!
//! Rows are sparse vectors sorted by column. The pivot of a row is its first
//! nonzero column and is normalized to one. After [`Echelon::reduce_fully`]
//! the rows are in reduced row-echelon form: every pivot column is zero in
//! all other rows.

use std::collections::BTreeMap;

use crate::field::Field;

pub type SparseRow<E> = Vec<(usize, E)>;

#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    rows: BTreeMap<usize, SparseRow<F::Elem>>,
    reduced: bool,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon { field, rows: BTreeMap::new(), reduced: true }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Rows keyed by pivot column, in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseRow<F::Elem>)> {
        self.rows.iter().map(|(&p, r)| (p, r))
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Adds a row to the span. Returns whether the rank grew. Entries may be
    /// unsorted and contain repeated columns or zeros.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, F::Elem)>) -> bool {
        let f = &self.field;
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (c, v) in row {
            accumulate(f, &mut acc, c, v);
        }
        self.eliminate_semi(&mut acc);
        let Some((&pivot, lead)) = acc.iter().next() else {
            return false;
        };
        let inv = f.inv(lead);
        let normalized: SparseRow<F::Elem> =
            acc.into_iter().map(|(c, v)| (c, f.mul(&v, &inv))).collect();
        self.rows.insert(pivot, normalized);
        self.reduced = false;
        true
    }

    /// Repeatedly clears the smallest column of `acc` that is a pivot. Works
    /// for semi-echelon rows because pivot rows only have entries at or to
    /// the right of their pivot.
    fn eliminate_semi(&self, acc: &mut BTreeMap<usize, F::Elem>) {
        let f = &self.field;
        let mut cursor = 0;
        loop {
            let hit = acc
                .range(cursor..)
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(&c, v)| (c, v.clone()));
            let Some((col, coeff)) = hit else {
                break;
            };
            for (c, v) in &self.rows[&col] {
                accumulate(f, acc, *c, f.neg(&f.mul(&coeff, v)));
            }
            debug_assert!(!acc.contains_key(&col));
            cursor = col + 1;
        }
    }

    /// Brings the rows into reduced row-echelon form.
    pub fn reduce_fully(&mut self) {
        if self.reduced {
            return;
        }
        let f = self.field.clone();
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for p in pivots {
            let row = self.rows.remove(&p).expect("pivot present");
            let mut acc: BTreeMap<usize, F::Elem> = row.into_iter().collect();
            let hits: Vec<(usize, F::Elem)> = acc
                .iter()
                .filter(|(c, _)| **c > p && self.rows.contains_key(c))
                .map(|(&c, v)| (c, v.clone()))
                .collect();
            // Rows with larger pivots are already reduced, so subtracting
            // them never reintroduces a pivot column.
            for (col, coeff) in hits {
                for (c, v) in &self.rows[&col] {
                    accumulate(&f, &mut acc, *c, f.neg(&f.mul(&coeff, v)));
                }
            }
            self.rows.insert(p, acc.into_iter().collect());
        }
        self.reduced = true;
    }

    /// Reduces a vector against a reduced basis; the result is zero iff the
    /// vector lies in the span.
    pub fn remainder(&self, row: impl IntoIterator<Item = (usize, F::Elem)>) -> SparseRow<F::Elem> {
        assert!(self.reduced, "remainder needs reduced row-echelon form");
        let f = &self.field;
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (c, v) in row {
            accumulate(f, &mut acc, c, v);
        }
        let hits: Vec<(usize, F::Elem)> = acc
            .iter()
            .filter(|(c, _)| self.rows.contains_key(c))
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        for (col, coeff) in hits {
            for (c, v) in &self.rows[&col] {
                accumulate(f, &mut acc, *c, f.neg(&f.mul(&coeff, v)));
            }
        }
        acc.into_iter().collect()
    }
}

fn accumulate<F: Field>(f: &F, acc: &mut BTreeMap<usize, F::Elem>, col: usize, v: F::Elem) {
    use std::collections::btree_map::Entry;
    if f.is_zero(&v) {
        return;
    }
    match acc.entry(col) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            let s = f.add(e.get(), &v);
            if f.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::{rat, ratio};

    fn dense(e: &Echelon<Rationals>, width: usize) -> Vec<Vec<num_rational::BigRational>> {
        e.rows()
            .map(|(_, r)| {
                let mut d = vec![rat(0); width];
                for (c, v) in r {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    }

    #[test]
    fn reduced_form_of_small_matrix() {
        let mut e = Echelon::new(Rationals);
        assert!(e.insert(vec![(0, rat(1)), (1, rat(2)), (2, rat(3))]));
        assert!(e.insert(vec![(0, rat(2)), (1, rat(4)), (2, rat(7))]));
        assert!(!e.insert(vec![(0, rat(3)), (1, rat(6)), (2, rat(10))]));
        assert!(e.insert(vec![(1, rat(1))]));
        e.reduce_fully();
        assert_eq!(e.rank(), 3);
        let d = dense(&e, 3);
        assert_eq!(d[0], vec![rat(1), rat(0), rat(0)]);
        assert_eq!(d[1], vec![rat(0), rat(1), rat(0)]);
        assert_eq!(d[2], vec![rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn pivots_strictly_increase_and_columns_clear() {
        let mut e = Echelon::new(Rationals);
        e.insert(vec![(1, rat(2)), (3, rat(1)), (4, rat(5))]);
        e.insert(vec![(3, rat(1)), (4, ratio(1, 2))]);
        e.insert(vec![(1, rat(1)), (2, rat(1))]);
        e.reduce_fully();
        let pivots: Vec<_> = e.pivots().collect();
        assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (p, _) in e.rows() {
            for (q, row) in e.rows() {
                let v = row.iter().find(|(c, _)| *c == p).map(|(_, v)| v.clone());
                if p == q {
                    assert_eq!(v, Some(rat(1)));
                } else {
                    assert_eq!(v, None);
                }
            }
        }
    }

    #[test]
    fn remainder_detects_membership() {
        let mut e = Echelon::new(Rationals);
        e.insert(vec![(0, rat(1)), (2, rat(1))]);
        e.insert(vec![(1, rat(1)), (2, rat(-1))]);
        e.reduce_fully();
        assert!(e.remainder(vec![(0, rat(2)), (1, rat(3)), (2, rat(-1))]).is_empty());
        assert!(!e.remainder(vec![(2, rat(1))]).is_empty());
        assert!(e.remainder(Vec::new()).is_empty());
    }

    #[test]
    fn modular_rank_can_drop() {
        // Rows independent over QQ but dependent mod 3.
        let rows = [vec![(0, 1u64), (1, 1)], vec![(0, 1), (1, 4)]];
        let mut modular = Echelon::new(PrimeField::new(3).unwrap());
        let mut exact = Echelon::new(Rationals);
        for r in &rows {
            modular.insert(r.iter().map(|&(c, v)| (c, v % 3)));
            exact.insert(r.iter().map(|&(c, v)| (c, rat(v as i64))));
        }
        assert_eq!(modular.rank(), 1);
        assert_eq!(exact.rank(), 2);
    }
}
