//! Span comparisons of ideals in a single degree.

use detideal::combinat::binomial;
use detideal::field::{Field, Rationals};
use detideal::ideal::{
    apply_gl_substitution, graded_component, i_sigma_paren_component, i_sigma_upper,
    ideal_power, ideal_product, maximal_minors, minors, IdealGens,
};
use detideal::matrix::{bareiss_determinant, PolyMatrix};
use detideal::multilinear::{
    exterior_power_matrix, generic_matrices, generic_matrix, symmetric_power_matrix,
    tensor_product_matrix, PowerConstants,
};
use detideal::young::Partition;
use num_traits::Zero;

use super::{random_rational_rows, Ctx};
use crate::backend::{certify, SpanComputation};
use crate::error::Result;
use crate::report::{Outcome, Source};

/// Ranks of the degree-`k` parts of two ideals and of their sum.
struct CompareComponents {
    a: IdealGens,
    b: IdealGens,
    k: u32,
}

impl SpanComputation for CompareComponents {
    type Output = [usize; 3];
    fn run<F: Field>(&self, field: F) -> detideal::Result<[usize; 3]> {
        let sa = graded_component(&self.a, self.k, field.clone())?;
        let sb = graded_component(&self.b, self.k, field)?;
        Ok([sa.rank(), sb.rank(), sa.sum(&sb)?.rank()])
    }
}

fn record_equality(ctx: &Ctx, out: &mut Outcome, label: String, cmp: CompareComponents) -> Result<()> {
    let c = certify(&cmp, ctx.backend, ctx.seed)?;
    out.add_primes(&c.primes);
    let [ra, rb, rs] = c.value;
    let equal = ra == rb && rb == rs;
    out.pair(format!("{label} equal"), Source::Published, true, equal);
    Ok(())
}

pub fn thm1_sym(ctx: &Ctx) -> Result<Outcome> {
    let defaults = [[2, 2, 2], [2, 3, 2], [2, 3, 3], [3, 3, 2]];
    let combos: Vec<_> = ctx
        .instances(["n", "m", "d"], [1..=3, 1..=4, 1..=3], &defaults)?
        .into_iter()
        .filter(|[n, m, _]| n <= m)
        .collect();
    if combos.is_empty() {
        return Err(ctx.invalid("need n <= m"));
    }
    let mut out = Outcome::new();
    for [n, m, d] in combos {
        let x = generic_matrix(n, m, "X");
        let s = PowerConstants::new(n as u64, d as u64, n as u64).s as u32;
        let k = n as u32 * s;
        let cmp = CompareComponents {
            a: maximal_minors(&symmetric_power_matrix(&x, d))?,
            b: ideal_power(&maximal_minors(&x)?, s)?,
            k,
        };
        record_equality(ctx, &mut out, format!("n={n} m={m} d={d} s={s} degree {k}"), cmp)?;
    }
    Ok(out)
}

pub fn thm1_ext(ctx: &Ctx) -> Result<Outcome> {
    let defaults = [[2, 3, 2], [3, 4, 2]];
    let combos: Vec<_> = ctx
        .instances(["n", "m", "d"], [1..=3, 1..=4, 1..=3], &defaults)?
        .into_iter()
        .filter(|[n, m, d]| n <= m && d <= n)
        .collect();
    if combos.is_empty() {
        return Err(ctx.invalid("need d <= n <= m"));
    }
    let mut out = Outcome::new();
    for [n, m, d] in combos {
        let x = generic_matrix(n, m, "X");
        let e = PowerConstants::new(n as u64, d as u64, n as u64).e as u32;
        let k = n as u32 * e;
        let cmp = CompareComponents {
            a: maximal_minors(&exterior_power_matrix(&x, d)?)?,
            b: ideal_power(&maximal_minors(&x)?, e)?,
            k,
        };
        record_equality(ctx, &mut out, format!("n={n} m={m} d={d} e={e} degree {k}"), cmp)?;
    }
    Ok(out)
}

pub fn thm1_tensor(ctx: &Ctx) -> Result<Outcome> {
    let defaults = [[2, 2, 2, 2], [2, 3, 2, 3]];
    let combos: Vec<_> = ctx
        .instances(["n", "m", "q", "p"], [1..=2, 1..=3, 1..=2, 1..=3], &defaults)?
        .into_iter()
        .filter(|[n, m, q, p]| n <= m && q <= p)
        .collect();
    if combos.is_empty() {
        return Err(ctx.invalid("need n <= m and q <= p"));
    }
    let mut out = Outcome::new();
    for [n, m, q, p] in combos {
        let mats = generic_matrices(&[("X", n, m), ("Y", q, p)])?;
        let (x, y) = (&mats[0], &mats[1]);
        let k = 2 * (n * q) as u32;
        let ix = ideal_power(&maximal_minors(x)?, q as u32)?;
        let iy = ideal_power(&maximal_minors(y)?, n as u32)?;
        let cmp = CompareComponents {
            a: maximal_minors(&tensor_product_matrix(x, y)?)?,
            b: ideal_product(&ix, &iy)?,
            k,
        };
        record_equality(ctx, &mut out, format!("n={n} m={m} q={q} p={p} degree {k}"), cmp)?;
    }
    Ok(out)
}

struct SigmaComponents {
    x: PolyMatrix,
    sigma: Partition,
}

impl SpanComputation for SigmaComponents {
    type Output = [usize; 3];
    fn run<F: Field>(&self, field: F) -> detideal::Result<[usize; 3]> {
        let k = self.sigma.size();
        let paren = i_sigma_paren_component(&self.x, &self.sigma, k, field.clone())?;
        let upper = graded_component(&i_sigma_upper(&self.x, &self.sigma)?, k, field)?;
        Ok([paren.rank(), upper.rank(), paren.sum(&upper)?.rank()])
    }
}

pub fn eq_sigma(ctx: &Ctx) -> Result<Outcome> {
    let x = generic_matrix(3, 3, "X");
    let mut out = Outcome::new();
    for parts in [vec![2, 1], vec![2, 2], vec![3, 1]] {
        let sigma = Partition::new(parts)?;
        let c = certify(&SigmaComponents { x: x.clone(), sigma: sigma.clone() }, ctx.backend, ctx.seed)?;
        out.add_primes(&c.primes);
        let [rp, ru, rs] = c.value;
        out.pair(format!("sigma={sigma} degree {}", sigma.size()), Source::Published, true, rp == ru && ru == rs);
    }
    Ok(out)
}

const GL_PAIRS: usize = 5;

pub fn gl_stability(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.get("n", 1..=3)?.unwrap_or(2);
    let m = ctx.get("m", 1..=3)?.unwrap_or(3);
    let d = ctx.get("d", 1..=3)?.unwrap_or(2);
    let rows = binomial((n + d - 1) as u64, d as u64) as usize;
    let cols = binomial((m + d - 1) as u64, d as u64) as usize;
    let t = ctx.get("t", 1..=rows.min(cols) as i64)?.unwrap_or(rows.min(cols));
    let k = (t * d) as u32;

    let x = generic_matrix(n, m, "X");
    let gens = minors(&symmetric_power_matrix(&x, d), t)?;
    let span = graded_component(&gens, k, Rationals)?;
    let basis = span.row_polynomials();
    let mut rng = ctx.rng();
    let mut out = Outcome::new();
    for i in 0..GL_PAIRS {
        let a = loop {
            let a = random_rational_rows(&mut rng, n);
            if !bareiss_determinant(&a).is_zero() {
                break a;
            }
        };
        let b = loop {
            let b = random_rational_rows(&mut rng, m);
            if !bareiss_determinant(&b).is_zero() {
                break b;
            }
        };
        let mut stable = true;
        for row in &basis {
            if !span.contains(&apply_gl_substitution(row, &x, &a, &b)?)? {
                stable = false;
                break;
            }
        }
        let label = format!("pair #{i}: {} basis images of degree {k} in span (t={t})", basis.len());
        out.pair(label, Source::Published, true, stable);
    }
    Ok(out)
}
