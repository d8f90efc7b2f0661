//! Young-diagram checks: minimal shapes, their up-sets and representation
//! dimensions.

use detideal::young::{
    m_sigma_dim, partitions_of, schur_dim, sigma_min_shapes, upset_diagrams, Partition,
};
use num_bigint::BigUint;

use super::Ctx;
use crate::error::{Result, VerifyError};
use crate::report::{Outcome, Source};

fn shape(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid literal partition")
}

fn show_set(shapes: &[Partition]) -> String {
    let mut v: Vec<String> = shapes.iter().map(ToString::to_string).collect();
    v.sort();
    format!("{{{}}}", v.join(" "))
}

/// The two minimal shapes of the 3x3 minors of `S^3` of a diagonal 3x3 matrix.
pub fn example_sigma() -> Vec<Partition> {
    vec![shape(&[3, 1, 1, 1, 1, 1, 1]), shape(&[2, 2, 2, 1, 1, 1])]
}

/// The members of the decomposition of `I_3(S^3(X))` for a generic 3x3 `X`.
pub fn example_members() -> Vec<Partition> {
    vec![
        shape(&[3, 1, 1, 1, 1, 1, 1]),
        shape(&[2, 2, 2, 1, 1, 1]),
        shape(&[3, 2, 2, 1, 1]),
        shape(&[3, 3, 3]),
    ]
}

pub fn sigma_shapes(ctx: &Ctx) -> Result<Outcome> {
    let k = ctx.get("k", 1..=4)?.unwrap_or(3);
    let d = ctx.get("d", 1..=4)?.unwrap_or(3);
    let r = ctx.get("r", 1..=4)?.unwrap_or(3);
    let (expected, source) = if (k, d, r) == (3, 3, 3) {
        (example_sigma(), Source::Published)
    } else if d == 1 && r == k {
        // The only maximal minor of a square diagonal matrix is Y1...Yk.
        (vec![shape(&[k as u32])], Source::Identity)
    } else {
        return Err(VerifyError::NoReference {
            check: ctx.name.to_string(),
            reason: format!("k={k} d={d} r={r}; known cases are k=d=r=3 and d=1, r=k"),
        });
    };
    let actual = sigma_min_shapes(k, d, r)?;
    let mut out = Outcome::new();
    out.pair(format!("minimal shapes k={k} d={d} r={r}"), source, show_set(&expected), show_set(actual.shapes()));
    Ok(out)
}

pub fn upset_enum(_ctx: &Ctx) -> Result<Outcome> {
    let sigma = sigma_min_shapes(3, 3, 3)?;
    let up = upset_diagrams(&sigma, 9, 3);
    let mut out = Outcome::new();
    out.pair("diagrams of size 9 above the minimal shapes", Source::Published, 9, up.len());
    out.pair("contains (3,3,3)", Source::Published, true, up.contains(&shape(&[3, 3, 3])));
    for parts in [&[3, 2, 2, 1, 1][..], &[2, 2, 2, 2, 1]] {
        let p = shape(parts);
        out.pair(format!("contains {p}"), Source::Oracle, true, up.contains(&p));
    }
    Ok(out)
}

/// Semistandard tableaux of `shape` with entries in `1..=n`, enumerated cell
/// by cell in row-major order.
pub fn count_tableaux(shape: &Partition, n: u32) -> u64 {
    let parts = shape.parts();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = parts.iter().map(|&len| vec![0; len as usize]).collect();

    fn fill(cells: &[(usize, usize)], grid: &mut [Vec<u32>], n: u32) -> u64 {
        let Some((&(i, j), rest)) = cells.split_first() else {
            return 1;
        };
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(grid[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(grid[i - 1][j] + 1);
        }
        let mut total = 0;
        for v in lo..=n {
            grid[i][j] = v;
            total += fill(rest, grid, n);
        }
        total
    }
    fill(&cells, &mut grid, n)
}

pub fn hook_dims(ctx: &Ctx) -> Result<Outcome> {
    let m = ctx.get("m", 1..=4)?.unwrap_or(3) as u32;
    let n = ctx.get("n", 1..=4)?.unwrap_or(3) as u32;
    let mut out = Outcome::new();

    let mut total = BigUint::from(0u32);
    // Shapes wider than min(m, n) index no representation here.
    for sigma in example_members().into_iter().filter(|s| s.largest_part() <= m.min(n)) {
        let conj = sigma.conjugate();
        let oracle = count_tableaux(&conj, m) * count_tableaux(&conj, n);
        let dim = m_sigma_dim(&sigma, m, n)?;
        out.pair(format!("dim M_{sigma} (m={m}, n={n})"), Source::Oracle, oracle, &dim);
        total += dim;
    }
    if (m, n) == (3, 3) {
        out.pair("sum over the four members", Source::Published, 5610, total);
    }

    let mut cases = 0u32;
    let mut agree = 0u32;
    for size in 0..=6 {
        for lambda in partitions_of(size, size) {
            for dim in 1..=4 {
                cases += 1;
                if schur_dim(&lambda, dim) == BigUint::from(count_tableaux(&lambda, dim)) {
                    agree += 1;
                }
            }
        }
    }
    out.pair("hook-content vs tableau count, |lambda| <= 6, n <= 4", Source::Oracle, cases, agree);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_counts() {
        assert_eq!(count_tableaux(&shape(&[1]), 3), 3);
        assert_eq!(count_tableaux(&shape(&[2, 1]), 3), 8);
        assert_eq!(count_tableaux(&shape(&[7, 1, 1]), 3), 28);
        assert_eq!(count_tableaux(&shape(&[1, 1, 1, 1]), 3), 0);
        assert_eq!(count_tableaux(&Partition::empty(), 2), 1);
    }
}
