//! Determinant identities and the rank law on random integer matrices.

use detideal::combinat::{binomial, subsets};
use detideal::matrix::{bareiss_determinant, rational_rank, PolyMatrix};
use detideal::multilinear::{
    exterior_power_matrix, numeric_rank, symmetric_power_matrix, tensor_product_matrix,
    PowerConstants,
};
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::{random_integer_matrix, Ctx};
use crate::error::Result;
use crate::report::{Outcome, Source};

const INSTANCES: usize = 20;
const ENTRY_BOUND: i64 = 3;

/// Beyond this many `(R+1)`-minors the vanishing side of the rank law is
/// read off the exact rank instead of evaluating each minor.
const MINOR_ENUMERATION_LIMIT: u64 = 400;

fn det(a: &PolyMatrix) -> Result<BigRational> {
    Ok(bareiss_determinant(&a.to_rationals()?))
}

pub fn det_sym(ctx: &Ctx) -> Result<Outcome> {
    let defaults: Vec<[usize; 2]> = [2, 3].iter().flat_map(|&d| [2, 3, 4].map(|n| [n, d])).collect();
    let combos = ctx.instances(["n", "d"], [1..=5, 1..=4], &defaults)?;
    let mut rng = ctx.rng();
    let mut out = Outcome::new();
    for i in 0..INSTANCES {
        let [n, d] = combos[i % combos.len()];
        let a = random_integer_matrix(&mut rng, n, n, ENTRY_BOUND);
        let s = PowerConstants::new(n as u64, d as u64, n as u64).s;
        let expected = det(&a)?.pow(s as i32);
        let actual = det(&symmetric_power_matrix(&a, d))?;
        out.pair(format!("#{i} n={n} d={d} s={s}"), Source::Identity, expected, actual);
    }
    Ok(out)
}

pub fn det_ext(ctx: &Ctx) -> Result<Outcome> {
    let defaults: Vec<[usize; 2]> =
        (2..=5).flat_map(|n| (1..=3.min(n)).map(move |d| [n, d])).collect();
    let combos: Vec<_> = ctx
        .instances(["n", "d"], [1..=5, 1..=3], &defaults)?
        .into_iter()
        .filter(|[n, d]| d <= n)
        .collect();
    if combos.is_empty() {
        return Err(ctx.invalid("need d <= n"));
    }
    let mut rng = ctx.rng();
    let mut out = Outcome::new();
    for i in 0..INSTANCES {
        let [n, d] = combos[i % combos.len()];
        let a = random_integer_matrix(&mut rng, n, n, ENTRY_BOUND);
        let e = PowerConstants::new(n as u64, d as u64, n as u64).e;
        let expected = det(&a)?.pow(e as i32);
        let actual = det(&exterior_power_matrix(&a, d)?)?;
        out.pair(format!("#{i} n={n} d={d} e={e}"), Source::Identity, expected, actual);
    }
    Ok(out)
}

pub fn det_tensor(ctx: &Ctx) -> Result<Outcome> {
    let defaults: Vec<[usize; 2]> = (1..=3).flat_map(|n| (1..=3).map(move |q| [n, q])).collect();
    let combos = ctx.instances(["n", "q"], [1..=3, 1..=3], &defaults)?;
    let mut rng = ctx.rng();
    let mut out = Outcome::new();
    for i in 0..INSTANCES {
        let [n, q] = combos[i % combos.len()];
        let a = random_integer_matrix(&mut rng, n, n, ENTRY_BOUND);
        let b = random_integer_matrix(&mut rng, q, q, ENTRY_BOUND);
        let expected = det(&a)?.pow(q as i32) * det(&b)?.pow(n as i32);
        let actual = det(&tensor_product_matrix(&a, &b)?)?;
        out.pair(format!("#{i} n={n} q={q}"), Source::Identity, expected, actual);
    }
    Ok(out)
}

/// Indices of a maximal independent set of rows, chosen greedily.
fn independent_rows(rows: &[Vec<BigRational>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut picked: Vec<Vec<BigRational>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        picked.push(r.clone());
        if rational_rank(&picked) == picked.len() {
            chosen.push(i);
        } else {
            picked.pop();
        }
    }
    chosen
}

fn transpose(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let cols = rows.first().map_or(0, Vec::len);
    (0..cols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

fn minor(rows: &[Vec<BigRational>], r: &[usize], c: &[usize]) -> BigRational {
    let sub: Vec<Vec<BigRational>> =
        r.iter().map(|&i| c.iter().map(|&j| rows[i][j].clone()).collect()).collect();
    bareiss_determinant(&sub)
}

pub fn rank_law(ctx: &Ctx) -> Result<Outcome> {
    let mut defaults = Vec::new();
    for d in 1..=3 {
        for n in 2..=4 {
            for m in 2..=4 {
                for r in 1..n.min(m) {
                    defaults.push([n, m, r, d]);
                }
            }
        }
    }
    let combos: Vec<_> = ctx
        .instances(["n", "m", "r", "d"], [1..=4, 1..=4, 1..=3, 1..=3], &defaults)?
        .into_iter()
        .filter(|[n, m, r, _]| r < n.min(m))
        .collect();
    if combos.is_empty() {
        return Err(ctx.invalid("need r < min(n, m)"));
    }
    let mut rng = ctx.rng();
    let mut out = Outcome::new();
    for (i, &[n, m, r, d]) in combos.iter().enumerate() {
        let a = loop {
            let left = random_integer_matrix(&mut rng, n, r, ENTRY_BOUND);
            let right = random_integer_matrix(&mut rng, r, m, ENTRY_BOUND);
            let a = left.checked_mul(&right)?;
            if numeric_rank(&a)? == r {
                break a;
            }
        };
        let big_r = binomial((r + d - 1) as u64, d as u64) as usize;
        let sd = symmetric_power_matrix(&a, d);
        let rows = sd.to_rationals()?;
        let tag = format!("#{i} n={n} m={m} r={r} d={d}");
        out.pair(format!("{tag} rank"), Source::Identity, big_r, numeric_rank(&sd)?);

        // A square submatrix on independent rows and columns of a rank-R
        // matrix is invertible, so this exhibits a nonzero R-minor.
        let rs = independent_rows(&rows);
        let cs = independent_rows(&transpose(&rows));
        let nonzero = rs.len() == big_r && cs.len() == big_r && !minor(&rows, &rs, &cs).is_zero();
        out.pair(format!("{tag} I_{big_r} nonzero"), Source::Identity, true, nonzero);

        let t = big_r + 1;
        let vanishes = if t > sd.rows().min(sd.cols()) {
            true
        } else {
            let count = binomial(sd.rows() as u64, t as u64) * binomial(sd.cols() as u64, t as u64);
            if count <= MINOR_ENUMERATION_LIMIT {
                let col_sets = subsets(sd.cols(), t);
                subsets(sd.rows(), t)
                    .iter()
                    .all(|rset| col_sets.iter().all(|cset| minor(&rows, rset, cset).is_zero()))
            } else {
                rational_rank(&rows) < t
            }
        };
        out.pair(format!("{tag} I_{t} zero"), Source::Identity, true, vanishes);
    }
    Ok(out)
}
