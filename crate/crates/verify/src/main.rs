use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::Parser;
use detideal_verify::catalog::{full_catalog, CheckSpec, DEFAULT_PRIMES, DEFAULT_SEED};
use detideal_verify::{emit_report, run_many, FieldChoice, Format, CATALOG};

/// Run named checks on determinantal ideals of matrix powers.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    /// Check name, `all` for the whole catalog, or `list`.
    check: String,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    q: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    t: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Arithmetic for span checks; each check has its own default.
    #[arg(long, value_enum)]
    field: Option<FieldChoice>,
    /// Number of primes for the modular backend.
    #[arg(long, default_value_t = DEFAULT_PRIMES)]
    primes: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl Cli {
    fn params(&self) -> BTreeMap<String, i64> {
        [
            ("m", self.m),
            ("n", self.n),
            ("p", self.p),
            ("q", self.q),
            ("d", self.d),
            ("r", self.r),
            ("t", self.t),
            ("k", self.k),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.check == "list" {
        for c in CATALOG {
            let params = if c.params.is_empty() { "-".to_string() } else { c.params.join(",") };
            println!("{:<22} [{params}] {}", c.name, c.summary);
        }
        return ExitCode::SUCCESS;
    }
    let specs = if cli.check == "all" {
        if !cli.params().is_empty() {
            eprintln!("error: `all` runs every check with its default parameters");
            return ExitCode::FAILURE;
        }
        full_catalog(cli.seed, cli.field, cli.primes)
    } else {
        vec![CheckSpec {
            name: cli.check.clone(),
            params: cli.params(),
            field: cli.field,
            seed: cli.seed,
            primes: cli.primes,
        }]
    };
    let mut ok = true;
    for (spec, result) in specs.iter().zip(run_many(&specs)) {
        match result {
            Ok(report) => {
                ok &= report.pass;
                let text = emit_report(&report, cli.format);
                if cli.format == Format::Text {
                    print!("{text}");
                } else {
                    println!("{text}");
                }
            }
            Err(e) => {
                ok = false;
                eprintln!("error in {}: {e}", spec.name);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
