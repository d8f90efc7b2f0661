//! Check results and their JSON and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A value stated in the literature this library reproduces.
    Published,
    /// Computed by an independent method inside the check.
    Oracle,
    /// Follows from a closed-form identity or a definition.
    Identity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub label: String,
    pub provenance: Source,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Actual {
    pub label: String,
    pub value: String,
}

/// What a check body produces before timing and bookkeeping.
#[derive(Debug, Default, Clone)]
pub struct Outcome {
    pub expected: Vec<Expected>,
    pub actual: Vec<Actual>,
    pub primes: Vec<u64>,
}

impl Outcome {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one expected/actual pair under a shared label.
    pub fn pair(
        &mut self,
        label: impl Into<String>,
        provenance: Source,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        let label = label.into();
        self.expected.push(Expected { label: label.clone(), provenance, value: expected.to_string() });
        self.actual.push(Actual { label, value: actual.to_string() });
    }

    pub fn add_primes(&mut self, primes: &[u64]) {
        for &p in primes {
            if !self.primes.contains(&p) {
                self.primes.push(p);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub expected: Vec<Expected>,
    pub actual: Vec<Actual>,
    pub pass: bool,
    pub runtime_ms: u64,
    pub primes: Vec<u64>,
    pub seed: u64,
}

impl Report {
    pub fn assemble(
        name: &str,
        params: BTreeMap<String, i64>,
        outcome: Outcome,
        runtime_ms: u64,
        seed: u64,
    ) -> Self {
        let pass = pairs_match(&outcome.expected, &outcome.actual);
        Report {
            name: name.to_string(),
            params,
            expected: outcome.expected,
            actual: outcome.actual,
            pass,
            runtime_ms,
            primes: outcome.primes,
            seed,
        }
    }

    /// The report with wall time zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Report {
        Report { runtime_ms: 0, ..self.clone() }
    }
}

/// True iff both lists carry the same labels and every value matches.
/// A check with nothing to compare does not pass.
fn pairs_match(expected: &[Expected], actual: &[Actual]) -> bool {
    !expected.is_empty()
        && expected.len() == actual.len()
        && expected.iter().all(|e| actual.iter().any(|a| a.label == e.label && a.value == e.value))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(r).expect("reports serialize"),
        Format::Text => render_text(r),
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let params = if r.params.is_empty() {
        "-".to_string()
    } else {
        r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    };
    let primes = if r.primes.is_empty() {
        "-".to_string()
    } else {
        r.primes.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(out, "{} {}", if r.pass { "PASS" } else { "FAIL" }, r.name);
    let _ = writeln!(out, "  params   {params}");
    let _ = writeln!(out, "  seed     {}", r.seed);
    let _ = writeln!(out, "  primes   {primes}");
    let _ = writeln!(out, "  runtime  {} ms", r.runtime_ms);
    let width = r.expected.iter().map(|e| e.label.len()).max().unwrap_or(0);
    for e in &r.expected {
        let got = r.actual.iter().find(|a| a.label == e.label).map_or("<missing>", |a| &a.value);
        let mark = if got == e.value { "ok" } else { "MISMATCH" };
        let src = serde_json::to_value(e.provenance).expect("enum serializes");
        let _ = writeln!(
            out,
            "  {:<width$}  expected {}  actual {}  [{}] {mark}",
            e.label,
            e.value,
            got,
            src.as_str().unwrap_or("?"),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(pass_value: &str) -> Report {
        let mut o = Outcome::new();
        o.pair("rank", Source::Published, 5610, pass_value);
        Report::assemble("example", BTreeMap::new(), o, 7, 3)
    }

    #[test]
    fn json_key_order_and_values() {
        let r = sample("5610");
        let json = emit_report(&r, Format::Json);
        let keys = ["\"name\"", "\"params\"", "\"expected\"", "\"actual\"", "\"pass\"", "\"runtime_ms\"", "\"primes\"", "\"seed\""];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(json.contains("\"params\":{}"));
        assert!(json.contains("\"pass\":true"));
        assert!(json.contains("\"provenance\":\"published\""));
    }

    #[test]
    fn mismatch_fails() {
        assert!(!sample("5609").pass);
        assert!(emit_report(&sample("5609"), Format::Text).contains("MISMATCH"));
    }

    #[test]
    fn empty_outcome_fails() {
        let r = Report::assemble("x", BTreeMap::new(), Outcome::new(), 0, 0);
        assert!(!r.pass);
    }
}
