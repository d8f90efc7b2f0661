//! Sparse multivariate polynomials with arbitrary-precision rational
//! coefficients over a fixed, shared table of indeterminates.
//!
//! Monomials compare graded-lexicographically with respect to the order in
//! which variables appear in their [`VarTable`]; this is the only monomial
//! order used anywhere in the crate.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::field::{Field, PrimeField};

/// Ordered list of indeterminates. Positions are the variable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarTable { names, index }))
    }

    /// Table holding one `rows x cols` block of variables per family, row-major,
    /// families in the given order.
    pub fn with_families(families: &[(&str, usize, usize)]) -> Result<Arc<Self>> {
        let names = families.iter().flat_map(|&(tag, rows, cols)| {
            (0..rows).flat_map(move |i| (0..cols).map(move |j| entry_name(tag, i, j)))
        });
        VarTable::new(names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// Name of entry `(i, j)` (0-based) of the matrix family `tag`: `X12` for
/// single-digit 1-based indices, `X[10,2]` otherwise.
pub fn entry_name(tag: &str, i: usize, j: usize) -> String {
    if i < 9 && j < 9 {
        format!("{tag}{}{}", i + 1, j + 1)
    } else {
        format!("{tag}[{},{}]", i + 1, j + 1)
    }
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector with cached total degree.
///
/// The derived ordering compares the degree first and then the exponents
/// lexicographically, which is exactly graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    degree: u32,
    exponents: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exponents: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exponents[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u16>) -> Self {
        let degree = exponents.iter().map(|&e| e as u32).sum();
        Monomial { degree, exponents }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exponents.len(), other.exponents.len());
        let exponents = self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exponents }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// Variables with nonzero exponent, as `(index, exponent)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.exponents.iter().copied().enumerate().filter(|&(_, e)| e > 0)
    }

    /// All monomials of total degree `degree` in `nvars` variables, in
    /// descending graded-lex order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn rec(pos: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if pos + 1 == cur.len() {
                cur[pos] = left as u16;
                out.push(Monomial::from_exponents(cur.clone()));
                cur[pos] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e as u16;
                rec(pos + 1, left - e, cur, out);
            }
            cur[pos] = 0;
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, degree, &mut vec![0; nvars], &mut out);
        out
    }

    pub fn display(&self, table: &VarTable) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.support()
            .map(|(i, e)| {
                if e == 1 {
                    table.name(i).to_string()
                } else {
                    format!("{}^{}", table.name(i), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Sparse polynomial in canonical form: no zero coefficients are stored, so
/// equal polynomials have equal term maps.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        Polynomial { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Polynomial::constant(table, BigRational::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: BigRational) -> Self {
        let mut p = Polynomial::zero(table);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(table.len()), c);
        }
        p
    }

    pub fn integer(table: &Arc<VarTable>, c: i64) -> Self {
        Polynomial::constant(table, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(table: &Arc<VarTable>, i: usize) -> Self {
        Polynomial::monomial(table, Monomial::var(table.len(), i), BigRational::one())
    }

    pub fn var_named(table: &Arc<VarTable>, name: &str) -> Result<Self> {
        let i = table
            .position(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(table, i))
    }

    pub fn monomial(table: &Arc<VarTable>, m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero(table);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms(
        table: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Polynomial::zero(table);
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), table.len());
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// The common total degree of all terms, if there is one. The zero
    /// polynomial has no degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.keys().next()?.degree();
        self.terms.keys().all(|m| m.degree() == first).then_some(first)
    }

    /// The value of a polynomial of degree at most zero.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Indices of the variables occurring in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.table.len()];
        for m in self.terms.keys() {
            for (i, _) in m.support() {
                seen[i] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }

    fn check_table(&self, other: &Polynomial) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(AlgebraError::VarTableMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial { table: self.table.clone(), terms: acc })
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { table: self.table.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
        Polynomial { table: self.table.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.table);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces every occurring variable `x_i` by `images[i]`. All provided
    /// images must share one variable table, which becomes the table of the
    /// result.
    pub fn substitute(&self, images: &[Option<Polynomial>]) -> Result<Polynomial> {
        let target = images.iter().flatten().next().map(|p| p.table.clone());
        if let Some(t) = &target {
            if images.iter().flatten().any(|p| !same_table(&p.table, t)) {
                return Err(AlgebraError::VarTableMismatch);
            }
        }
        for i in self.variables() {
            if images.get(i).is_none_or(Option::is_none) {
                return Err(AlgebraError::MissingAssignment(self.table.name(i).to_string()));
            }
        }
        let target = target.unwrap_or_else(|| self.table.clone());
        // Cached powers of each image, index e-1 holds image^e.
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); self.table.len()];
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, e) in m.support() {
                let image = images[i].as_ref().expect("checked above");
                let cache = &mut powers[i];
                while cache.len() < e as usize {
                    let next = match cache.last() {
                        Some(last) => last * image,
                        None => image.clone(),
                    };
                    cache.push(next);
                }
                term = &term * &cache[e as usize - 1];
            }
            for (mm, cc) in term.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Coefficient-wise reduction into `F_p`.
    pub fn reduce_mod_prime(&self, field: &PrimeField) -> Result<ModPolynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let r = field.from_rational(c)?;
            if r != 0 {
                terms.insert(m.clone(), r);
            }
        }
        Ok(ModPolynomial { table: self.table.clone(), field: *field, terms })
    }

    /// Multiplies by the least common denominator, giving integer coefficients.
    pub fn clear_denominators(&self) -> Polynomial {
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        self.scale(&BigRational::from_integer(lcm))
    }
}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.len().hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.table))?;
            } else {
                write!(f, "{abs}*{}", m.display(&self.table))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live over different variable tables.
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial operands over different variable tables")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { table: self.table.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Polynomial with coefficients in a prime field, canonical like [`Polynomial`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPolynomial {
    table: Arc<VarTable>,
    field: PrimeField,
    terms: BTreeMap<Monomial, u64>,
}

impl ModPolynomial {
    pub fn zero(table: &Arc<VarTable>, field: PrimeField) -> Self {
        ModPolynomial { table: table.clone(), field, terms: BTreeMap::new() }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &u64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.keys().next()?.degree();
        self.terms.keys().all(|m| m.degree() == first).then_some(first)
    }

    fn check(&self, other: &ModPolynomial) -> Result<()> {
        if !same_table(&self.table, &other.table) {
            return Err(AlgebraError::VarTableMismatch);
        }
        if !self.field.same_field(&other.field) {
            return Err(AlgebraError::AmbientMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &ModPolynomial) -> Result<ModPolynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let slot = out.terms.entry(m.clone()).or_insert(0);
            *slot = self.field.add(slot, c);
        }
        out.terms.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn checked_mul(&self, other: &ModPolynomial) -> Result<ModPolynomial> {
        self.check(other)?;
        let mut terms: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let slot = terms.entry(ma.mul(mb)).or_insert(0);
                *slot = self.field.add(slot, &self.field.mul(ca, cb));
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(ModPolynomial { table: self.table.clone(), field: self.field, terms })
    }
}

/// Rational from a machine integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `num/den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Arc<VarTable>, Polynomial, Polynomial) {
        let t = VarTable::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&t, 0);
        let y = Polynomial::var(&t, 1);
        (t, x, y)
    }

    #[test]
    fn additive_identity_and_inverse() {
        let (t, x, y) = xy();
        let p = &(&x * &y) + &Polynomial::integer(&t, 3);
        assert_eq!(&p + &Polynomial::zero(&t), p);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn sum_cancels_terms() {
        let (_, x, y) = xy();
        let s = &(&x + &y) + &(&x - &y);
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s, x.scale(&rat(2)));
    }

    #[test]
    fn square_of_binomial() {
        let (t, x, y) = xy();
        let sq = (&x + &y).pow(2);
        let xy2 = (&x * &y).scale(&rat(2));
        let expected = &(&(&x * &x) + &xy2) + &(&y * &y);
        assert_eq!(sq, expected);
        assert_eq!(&sq * &Polynomial::one(&t), sq);
        assert_eq!(sq.homogeneous_degree(), Some(2));
    }

    #[test]
    fn mismatched_tables_are_rejected() {
        let (_, x, _) = xy();
        let other = VarTable::new(["x", "z"]).unwrap();
        let z = Polynomial::var(&other, 1);
        assert_eq!(x.checked_add(&z), Err(AlgebraError::VarTableMismatch));
        assert_eq!(x.checked_mul(&z), Err(AlgebraError::VarTableMismatch));
    }

    #[test]
    fn equal_tables_built_separately_are_compatible() {
        let a = VarTable::new(["x"]).unwrap();
        let b = VarTable::new(["x"]).unwrap();
        assert!(Polynomial::var(&a, 0).checked_add(&Polynomial::var(&b, 0)).is_ok());
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(matches!(VarTable::new(["x", "x"]), Err(AlgebraError::DuplicateVariable(_))));
    }

    #[test]
    fn homogeneous_degree_requires_uniform_terms() {
        let (t, x, y) = xy();
        assert_eq!((&x + &y).homogeneous_degree(), Some(1));
        assert_eq!((&x + &Polynomial::one(&t)).homogeneous_degree(), None);
        assert_eq!(Polynomial::zero(&t).homogeneous_degree(), None);
    }

    #[test]
    fn grlex_order() {
        // x^2 > xy > y^2 > x > y > 1
        let ms = Monomial::all_of_degree(2, 2);
        let exps: Vec<_> = ms.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(exps, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert!(Monomial::var(2, 0) > Monomial::var(2, 1));
        assert!(Monomial::from_exponents(vec![0, 2]) > Monomial::var(2, 0));
    }

    #[test]
    fn monomial_count_of_degree() {
        assert_eq!(Monomial::all_of_degree(9, 9).len(), 24310);
        assert_eq!(Monomial::all_of_degree(3, 0).len(), 1);
        assert_eq!(Monomial::all_of_degree(1, 4).len(), 1);
    }

    #[test]
    fn reduce_mod_prime_cases() {
        let (t, x, _) = xy();
        let seven = PrimeField::new(7).unwrap();
        let five = PrimeField::new(5).unwrap();
        assert!(Polynomial::zero(&t).reduce_mod_prime(&seven).unwrap().is_zero());
        assert!(x.scale(&rat(7)).reduce_mod_prime(&seven).unwrap().is_zero());
        let half_x = x.scale(&ratio(1, 2)).reduce_mod_prime(&five).unwrap();
        let terms: Vec<_> = half_x.terms().map(|(m, c)| (m.clone(), *c)).collect();
        assert_eq!(terms, vec![(Monomial::var(2, 0), 3)]);
        assert_eq!(
            x.scale(&ratio(1, 5)).reduce_mod_prime(&five),
            Err(AlgebraError::BadPrime(5))
        );
    }

    #[test]
    fn substitution_cases() {
        let (t, x, y) = xy();
        let p = &(&x * &x) + &y;
        let id = vec![Some(x.clone()), Some(y.clone())];
        assert_eq!(p.substitute(&id).unwrap(), p);

        let sq = (&x * &x).substitute(&[Some(&x + &y), None]).unwrap();
        assert_eq!(sq, (&x + &y).pow(2));

        let err = p.substitute(&[Some(x.clone()), None]).unwrap_err();
        assert_eq!(err, AlgebraError::MissingAssignment("y".into()));

        let cubic = &(&x * &x) * &y + (&y * &y) * x.clone();
        let lin = vec![Some(&x.scale(&rat(2)) - &y), Some(&x + &y.scale(&ratio(1, 3)))];
        assert_eq!(cubic.substitute(&lin).unwrap().homogeneous_degree(), Some(3));
        let _ = t;
    }

    #[test]
    fn clearing_denominators() {
        let (_, x, y) = xy();
        let p = &x.scale(&ratio(1, 2)) + &y.scale(&ratio(2, 3));
        let q = p.clear_denominators();
        assert_eq!(q, &x.scale(&rat(3)) + &y.scale(&rat(4)));
    }

    #[test]
    fn display_is_readable() {
        let (_, x, y) = xy();
        let p = &(&x * &x).scale(&rat(2)) - &y;
        assert_eq!(p.to_string(), "2*x^2 - y");
    }
}
