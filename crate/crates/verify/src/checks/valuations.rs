//! Valuations of maximal minors of powers of diagonal `t`-power matrices,
//! the one-variable stand-in for a discrete valuation ring.

use detideal::ideal::{maximal_minors, min_valuation};
use detideal::matrix::PolyMatrix;
use detideal::multilinear::{
    dvr_diagonal, exterior_power_matrix, symmetric_power_matrix, tensor_product_matrix,
    PowerConstants,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::Ctx;
use crate::error::Result;
use crate::report::{Outcome, Source};

const INSTANCES: usize = 20;
const MAX_EXPONENT: u32 = 4;

fn exponents(rng: &mut ChaCha8Rng, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..=MAX_EXPONENT)).collect()
}

fn show(a: &[u32]) -> String {
    a.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn valuation(a: &PolyMatrix) -> Result<u32> {
    Ok(min_valuation(&maximal_minors(a)?)?)
}

pub fn dvr_sym(ctx: &Ctx) -> Result<Outcome> {
    let defaults = [[1, 2, 2], [2, 2, 2], [2, 3, 2], [2, 2, 3], [3, 3, 2], [2, 3, 3], [3, 4, 2]];
    let combos: Vec<_> = ctx
        .instances(["n", "m", "d"], [1..=3, 1..=4, 1..=3], &defaults)?
        .into_iter()
        .filter(|[n, m, _]| n <= m)
        .collect();
    if combos.is_empty() {
        return Err(ctx.invalid("need n <= m"));
    }
    let mut rng = ctx.rng();
    let mut out = Outcome::new();
    for i in 0..INSTANCES {
        let [n, m, d] = combos[i % combos.len()];
        let a = exponents(&mut rng, n);
        let s = PowerConstants::new(n as u64, d as u64, n as u64).s as u32;
        let expected = s * a.iter().sum::<u32>();
        let actual = valuation(&symmetric_power_matrix(&dvr_diagonal(&a, m)?, d))?;
        out.pair(format!("#{i} a=[{}] m={m} d={d}", show(&a)), Source::Identity, expected, actual);
    }
    Ok(out)
}

pub fn dvr_ext(ctx: &Ctx) -> Result<Outcome> {
    let defaults = [[2, 2, 1], [2, 3, 2], [3, 3, 2], [3, 4, 2], [3, 4, 3], [4, 4, 2], [4, 5, 3]];
    let combos: Vec<_> = ctx
        .instances(["n", "m", "d"], [1..=4, 1..=5, 1..=4], &defaults)?
        .into_iter()
        .filter(|[n, m, d]| n <= m && d <= n)
        .collect();
    if combos.is_empty() {
        return Err(ctx.invalid("need d <= n <= m"));
    }
    let mut rng = ctx.rng();
    let mut out = Outcome::new();
    for i in 0..INSTANCES {
        let [n, m, d] = combos[i % combos.len()];
        let a = exponents(&mut rng, n);
        let e = PowerConstants::new(n as u64, d as u64, n as u64).e as u32;
        let expected = e * a.iter().sum::<u32>();
        let actual = valuation(&exterior_power_matrix(&dvr_diagonal(&a, m)?, d)?)?;
        out.pair(format!("#{i} a=[{}] m={m} d={d}", show(&a)), Source::Identity, expected, actual);
    }
    Ok(out)
}

pub fn dvr_tensor(ctx: &Ctx) -> Result<Outcome> {
    let defaults = [[1, 2, 2, 2], [2, 2, 2, 2], [2, 3, 2, 2], [2, 2, 2, 3], [1, 1, 3, 3], [2, 3, 1, 2], [2, 3, 2, 3]];
    let combos: Vec<_> = ctx
        .instances(["n", "m", "q", "p"], [1..=3, 1..=3, 1..=3, 1..=3], &defaults)?
        .into_iter()
        .filter(|[n, m, q, p]| n <= m && q <= p)
        .collect();
    if combos.is_empty() {
        return Err(ctx.invalid("need n <= m and q <= p"));
    }
    let mut rng = ctx.rng();
    let mut out = Outcome::new();
    for i in 0..INSTANCES {
        let [n, m, q, p] = combos[i % combos.len()];
        let a = exponents(&mut rng, n);
        let b = exponents(&mut rng, q);
        let expected = q as u32 * a.iter().sum::<u32>() + n as u32 * b.iter().sum::<u32>();
        let prod = tensor_product_matrix(&dvr_diagonal(&a, m)?, &dvr_diagonal(&b, p)?)?;
        let actual = valuation(&prod)?;
        let label = format!("#{i} a=[{}] b=[{}] m={m} p={p}", show(&a), show(&b));
        out.pair(label, Source::Identity, expected, actual);
    }
    Ok(out)
}
