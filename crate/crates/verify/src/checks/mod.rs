//! Check bodies, grouped by the part of the library they exercise.

pub mod determinants;
pub mod example;
pub mod shapes;
pub mod spans;
pub mod valuations;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use detideal::matrix::PolyMatrix;
use detideal::poly::VarTable;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::backend::Backend;
use crate::error::{Result, VerifyError};

/// Everything a check body sees.
pub struct Ctx<'a> {
    pub name: &'static str,
    pub params: &'a BTreeMap<String, i64>,
    pub backend: Backend,
    pub seed: u64,
}

impl Ctx<'_> {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// The parameter if given, checked against `range`.
    pub fn get(&self, key: &str, range: RangeInclusive<i64>) -> Result<Option<usize>> {
        match self.params.get(key) {
            None => Ok(None),
            Some(&v) if range.contains(&v) => Ok(Some(v as usize)),
            Some(&v) => Err(self.invalid(format!(
                "{key} = {v} is outside {}..={}",
                range.start(),
                range.end()
            ))),
        }
    }

    pub fn invalid(&self, reason: impl Into<String>) -> VerifyError {
        VerifyError::InvalidParams { check: self.name.to_string(), reason: reason.into() }
    }

    /// Fixed parameters replace the matching slots of every default
    /// instance; duplicates are dropped and order is kept.
    pub fn instances<const N: usize>(
        &self,
        keys: [&str; N],
        ranges: [RangeInclusive<i64>; N],
        defaults: &[[usize; N]],
    ) -> Result<Vec<[usize; N]>> {
        let mut fixed = [None; N];
        for i in 0..N {
            fixed[i] = self.get(keys[i], ranges[i].clone())?;
        }
        let mut out: Vec<[usize; N]> = Vec::new();
        for d in defaults {
            let mut inst = *d;
            for i in 0..N {
                if let Some(v) = fixed[i] {
                    inst[i] = v;
                }
            }
            if !out.contains(&inst) {
                out.push(inst);
            }
        }
        Ok(out)
    }
}

pub fn empty_table() -> std::sync::Arc<VarTable> {
    VarTable::new(Vec::<String>::new()).expect("empty table")
}

pub fn random_integer_rows(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

pub fn random_integer_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> PolyMatrix {
    PolyMatrix::from_integers(&empty_table(), &random_integer_rows(rng, rows, cols, bound))
}

/// Random matrix with entries `a/b`, `|a| <= 3`, `1 <= b <= 3`.
pub fn random_rational_rows(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let num: i64 = rng.gen_range(-3..=3);
                    let den: i64 = rng.gen_range(1..=3);
                    BigRational::new(num.into(), den.into())
                })
                .collect()
        })
        .collect()
}
