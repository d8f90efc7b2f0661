//! The named checks and their dispatcher.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::backend::Backend;
use crate::checks::{self, Ctx};
use crate::error::{Result, VerifyError};
use crate::report::{Outcome, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FieldChoice {
    Exact,
    Modular,
}

/// A request to run one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    /// `None` selects the check's default backend.
    pub field: Option<FieldChoice>,
    pub seed: u64,
    pub primes: usize,
}

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_PRIMES: usize = 2;

impl CheckSpec {
    pub fn new(name: &str) -> Self {
        CheckSpec {
            name: name.to_string(),
            params: BTreeMap::new(),
            field: None,
            seed: DEFAULT_SEED,
            primes: DEFAULT_PRIMES,
        }
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn field(mut self, field: FieldChoice) -> Self {
        self.field = Some(field);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

pub struct CheckInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [&'static str],
    /// Default backend for checks that build spans; `None` means the check
    /// is purely numeric or combinatorial and takes no field choice.
    pub default_field: Option<FieldChoice>,
    run: fn(&Ctx) -> Result<Outcome>,
}

pub static CATALOG: &[CheckInfo] = &[
    CheckInfo {
        name: "det-sym",
        summary: "det S^d(A) = det(A)^s on 20 random integer matrices",
        params: &["n", "d"],
        default_field: None,
        run: checks::determinants::det_sym,
    },
    CheckInfo {
        name: "det-ext",
        summary: "det of the d-th compound of A = det(A)^e on 20 random integer matrices",
        params: &["n", "d"],
        default_field: None,
        run: checks::determinants::det_ext,
    },
    CheckInfo {
        name: "det-tensor",
        summary: "det(A (x) B) = det(A)^q det(B)^n on 20 random integer pairs",
        params: &["n", "q"],
        default_field: None,
        run: checks::determinants::det_tensor,
    },
    CheckInfo {
        name: "rank-law",
        summary: "a rank-r matrix has S^d of rank C(r+d-1, d), and I_t(S^d) vanishes exactly above it",
        params: &["n", "m", "r", "d"],
        default_field: None,
        run: checks::determinants::rank_law,
    },
    CheckInfo {
        name: "dvr-sym",
        summary: "valuation of the maximal minors of S^d of a diagonal t-power matrix",
        params: &["n", "m", "d"],
        default_field: None,
        run: checks::valuations::dvr_sym,
    },
    CheckInfo {
        name: "dvr-ext",
        summary: "valuation of the maximal minors of the d-th compound of a diagonal t-power matrix",
        params: &["n", "m", "d"],
        default_field: None,
        run: checks::valuations::dvr_ext,
    },
    CheckInfo {
        name: "dvr-tensor",
        summary: "valuation of the maximal minors of a tensor product of diagonal t-power matrices",
        params: &["n", "m", "q", "p"],
        default_field: None,
        run: checks::valuations::dvr_tensor,
    },
    CheckInfo {
        name: "thm1-sym",
        summary: "I(S^d(X)) and I(X)^s agree in the generating degree",
        params: &["n", "m", "d"],
        default_field: Some(FieldChoice::Exact),
        run: checks::spans::thm1_sym,
    },
    CheckInfo {
        name: "thm1-ext",
        summary: "I of the d-th compound of X and I(X)^e agree in the generating degree",
        params: &["n", "m", "d"],
        default_field: Some(FieldChoice::Exact),
        run: checks::spans::thm1_ext,
    },
    CheckInfo {
        name: "thm1-tensor",
        summary: "I(X (x) Y) and I(X)^q I(Y)^n agree in the generating degree",
        params: &["n", "m", "q", "p"],
        default_field: Some(FieldChoice::Exact),
        run: checks::spans::thm1_tensor,
    },
    CheckInfo {
        name: "eq-sigma",
        summary: "the sum of I^tau over tau >= sigma equals I^sigma on a generic 3x3 matrix",
        params: &[],
        default_field: Some(FieldChoice::Exact),
        run: checks::spans::eq_sigma,
    },
    CheckInfo {
        name: "sigma-shapes",
        summary: "minimal shapes of the r-minors of S^d of a diagonal k x k matrix",
        params: &["k", "d", "r"],
        default_field: None,
        run: checks::shapes::sigma_shapes,
    },
    CheckInfo {
        name: "upset-enum",
        summary: "degree-9 diagrams above the minimal shapes for k = d = r = 3",
        params: &[],
        default_field: None,
        run: checks::shapes::upset_enum,
    },
    CheckInfo {
        name: "hook-dims",
        summary: "hook-content dimensions against tableau counts and the 5610 total",
        params: &["m", "n"],
        default_field: None,
        run: checks::shapes::hook_dims,
    },
    CheckInfo {
        name: "example-5610",
        summary: "dimension of the degree-9 part of I_3(S^3(X)) for a generic 3x3 matrix",
        params: &[],
        default_field: Some(FieldChoice::Modular),
        run: checks::example::example_5610,
    },
    CheckInfo {
        name: "example-decomposition",
        summary: "which doubly initial tableaux lie in the degree-9 part of I_3(S^3(X))",
        params: &[],
        default_field: Some(FieldChoice::Modular),
        run: checks::example::example_decomposition,
    },
    CheckInfo {
        name: "thm2-inclusions",
        summary: "I_3(S^3(X)) lies between the tableau ideals and the sum of I^sigma over minimal shapes",
        params: &[],
        default_field: Some(FieldChoice::Modular),
        run: checks::example::thm2_inclusions,
    },
    CheckInfo {
        name: "gl-stability",
        summary: "the generating-degree span of I_t(S^d(X)) is stable under X -> A X B^-1",
        params: &["n", "m", "d", "t"],
        default_field: None,
        run: checks::spans::gl_stability,
    },
];

pub fn lookup(name: &str) -> Option<&'static CheckInfo> {
    CATALOG.iter().find(|c| c.name == name)
}

fn validate(info: &CheckInfo, spec: &CheckSpec) -> Result<Backend> {
    if let Some(bad) = spec.params.keys().find(|k| !info.params.contains(&k.as_str())) {
        return Err(VerifyError::UnknownParam { check: info.name.to_string(), param: bad.clone() });
    }
    let choice = match (info.default_field, spec.field) {
        (None, Some(_)) => return Err(VerifyError::FieldNotSupported(info.name.to_string())),
        (None, None) => FieldChoice::Exact,
        (Some(default), requested) => requested.unwrap_or(default),
    };
    Ok(match choice {
        FieldChoice::Exact => Backend::Exact,
        FieldChoice::Modular => Backend::Modular { primes: spec.primes.max(1) },
    })
}

pub fn run_check(spec: &CheckSpec) -> Result<Report> {
    let info = lookup(&spec.name).ok_or_else(|| VerifyError::UnknownCheck(spec.name.clone()))?;
    let backend = validate(info, spec)?;
    let ctx = Ctx { name: info.name, params: &spec.params, backend, seed: spec.seed };
    let start = Instant::now();
    let outcome = (info.run)(&ctx)?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    Ok(Report::assemble(info.name, spec.params.clone(), outcome, runtime_ms, spec.seed))
}

/// Runs several checks on the worker pool; results follow request order.
pub fn run_many(specs: &[CheckSpec]) -> Vec<Result<Report>> {
    specs.par_iter().map(run_check).collect()
}

/// Default requests for every catalog entry, with a shared seed.
pub fn full_catalog(seed: u64, field: Option<FieldChoice>, primes: usize) -> Vec<CheckSpec> {
    CATALOG
        .iter()
        .map(|c| CheckSpec {
            name: c.name.to_string(),
            params: BTreeMap::new(),
            field: c.default_field.and(field),
            seed,
            primes,
        })
        .collect()
}
