//! The 3x3 minors of `S^3(X)` for a generic 3x3 matrix `X`, which live in
//! degree 9 of a polynomial ring in nine variables.

use std::sync::OnceLock;

use detideal::field::Field;
use detideal::ideal::{doubly_initial_tableau, graded_component, ideal_product, minors, IdealGens};
use detideal::matrix::PolyMatrix;
use detideal::multilinear::{generic_matrix, symmetric_power_matrix};
use detideal::poly::Polynomial;
use detideal::young::{sigma_min_shapes, upset_diagrams, Partition};

use super::shapes::{example_members, example_sigma};
use super::Ctx;
use crate::backend::{certify, SpanComputation};
use crate::error::Result;
use crate::report::{Outcome, Source};

const DEGREE: u32 = 9;

struct Example {
    x: PolyMatrix,
    minors: IdealGens,
}

/// Built once per process; every check here starts from the same minors.
fn example() -> Result<&'static Example> {
    static CELL: OnceLock<Example> = OnceLock::new();
    if let Some(e) = CELL.get() {
        return Ok(e);
    }
    let x = generic_matrix(3, 3, "X");
    let minors = minors(&symmetric_power_matrix(&x, 3), 3)?;
    Ok(CELL.get_or_init(|| Example { x, minors }))
}

struct Rank<'a> {
    gens: &'a IdealGens,
}

impl SpanComputation for Rank<'_> {
    type Output = usize;
    fn run<F: Field>(&self, field: F) -> detideal::Result<usize> {
        Ok(graded_component(self.gens, DEGREE, field)?.rank())
    }
}

pub fn example_5610(ctx: &Ctx) -> Result<Outcome> {
    let ex = example()?;
    let c = certify(&Rank { gens: &ex.minors }, ctx.backend, ctx.seed)?;
    let mut out = Outcome::new();
    out.add_primes(&c.primes);
    out.pair("dim of degree 9 part of I_3(S^3(X))", Source::Published, 5610, c.value);
    Ok(out)
}

struct Decomposition<'a> {
    minors: &'a IdealGens,
    tableaux: Vec<Polynomial>,
    members: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct DecompositionResult {
    rank: usize,
    contained: Vec<bool>,
    rank_with_members: usize,
}

impl SpanComputation for Decomposition<'_> {
    type Output = DecompositionResult;
    fn run<F: Field>(&self, field: F) -> detideal::Result<DecompositionResult> {
        let span = graded_component(self.minors, DEGREE, field)?;
        let contained = self.tableaux.iter().map(|t| span.contains(t)).collect::<detideal::Result<_>>()?;
        let mut grown = span.clone();
        grown.extend(&self.members)?;
        Ok(DecompositionResult { rank: span.rank(), contained, rank_with_members: grown.rank() })
    }
}

pub fn example_decomposition(ctx: &Ctx) -> Result<Outcome> {
    let ex = example()?;
    let diagrams = upset_diagrams(&sigma_min_shapes(3, 3, 3)?, DEGREE, 3);
    let members = example_members();
    let tableau = |s: &Partition| doubly_initial_tableau(&ex.x, s);
    let job = Decomposition {
        minors: &ex.minors,
        tableaux: diagrams.iter().map(tableau).collect::<detideal::Result<_>>()?,
        members: members.iter().map(tableau).collect::<detideal::Result<_>>()?,
    };
    let c = certify(&job, ctx.backend, ctx.seed)?;
    let mut out = Outcome::new();
    out.add_primes(&c.primes);
    for (sigma, inside) in diagrams.iter().zip(&c.value.contained) {
        let expected = members.contains(sigma);
        out.pair(format!("tableau {sigma} in span"), Source::Published, expected, inside);
    }
    out.pair("rank after adding member tableaux", Source::Identity, c.value.rank, c.value.rank_with_members);
    Ok(out)
}

/// Generators of `I^sigma(X)` with the parts equal to 1 left out. For a
/// generic matrix `I_1(X)` is generated by all variables, so those factors
/// are supplied by the monomial multipliers when a graded part is built.
fn i_sigma_nonlinear(x: &PolyMatrix, sigma: &Partition) -> Result<IdealGens> {
    let mut acc = IdealGens::unit(x.table());
    for &s in sigma.parts().iter().filter(|&&s| s > 1) {
        acc = ideal_product(&acc, &minors(x, s as usize)?)?;
    }
    Ok(acc)
}

struct Inclusions<'a> {
    minors: &'a IdealGens,
    sigma_ideals: Vec<IdealGens>,
    tableaux: Vec<Polynomial>,
}

impl SpanComputation for Inclusions<'_> {
    type Output = (bool, Vec<bool>);
    fn run<F: Field>(&self, field: F) -> detideal::Result<(bool, Vec<bool>)> {
        let span = graded_component(self.minors, DEGREE, field.clone())?;
        let mut upper = detideal::GradedSpan::zero(span.basis(), field.clone());
        for g in &self.sigma_ideals {
            upper = upper.sum(&graded_component(g, DEGREE, field.clone())?)?;
        }
        let lower = self.tableaux.iter().map(|t| span.contains(t)).collect::<detideal::Result<_>>()?;
        Ok((upper.contains_span(&span)?, lower))
    }
}

pub fn thm2_inclusions(ctx: &Ctx) -> Result<Outcome> {
    let ex = example()?;
    let sigma = example_sigma();
    let job = Inclusions {
        minors: &ex.minors,
        sigma_ideals: sigma.iter().map(|s| i_sigma_nonlinear(&ex.x, s)).collect::<Result<_>>()?,
        tableaux: sigma.iter().map(|s| doubly_initial_tableau(&ex.x, s)).collect::<detideal::Result<_>>()?,
    };
    let c = certify(&job, ctx.backend, ctx.seed)?;
    let mut out = Outcome::new();
    out.add_primes(&c.primes);
    let names: Vec<String> = sigma.iter().map(ToString::to_string).collect();
    out.pair(
        format!("I_3(S^3(X)) inside I^{} + I^{} in degree 9", names[0], names[1]),
        Source::Published,
        true,
        c.value.0,
    );
    for (name, inside) in names.iter().zip(&c.value.1) {
        out.pair(format!("tableau {name} in I_3(S^3(X))"), Source::Published, true, inside);
    }
    Ok(out)
}
