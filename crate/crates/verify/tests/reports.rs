use detideal_verify::catalog::full_catalog;
use detideal_verify::report::Source;
use detideal_verify::{emit_report, run_check, run_many, CheckSpec, FieldChoice, Format};

#[test]
fn seeded_checks_are_deterministic() {
    for name in ["det-sym", "det-ext", "det-tensor", "rank-law", "dvr-sym", "dvr-ext", "dvr-tensor", "gl-stability"] {
        let a = run_check(&CheckSpec::new(name).seed(42)).unwrap();
        let b = run_check(&CheckSpec::new(name).seed(42)).unwrap();
        assert_eq!(a.without_timing(), b.without_timing(), "{name}");
        let ja = emit_report(&a.without_timing(), Format::Json);
        let jb = emit_report(&b.without_timing(), Format::Json);
        assert_eq!(ja, jb);
    }
}

#[test]
fn other_seeds_pass() {
    for seed in [2, 3, 17] {
        for name in ["det-sym", "det-ext", "det-tensor", "rank-law", "dvr-sym", "dvr-ext", "dvr-tensor"] {
            let r = run_check(&CheckSpec::new(name).seed(seed)).unwrap();
            assert!(r.pass, "{name} with seed {seed}");
        }
    }
}

#[test]
fn documented_examples() {
    let r = run_check(&CheckSpec::new("det-sym").param("n", 3).param("d", 2).seed(1)).unwrap();
    assert!(r.pass);
    assert!(r.expected.iter().all(|e| e.label.contains("s=4")));

    let r = run_check(&CheckSpec::new("sigma-shapes").param("k", 3).param("d", 3).param("r", 3)).unwrap();
    assert!(r.pass);
    assert_eq!(r.expected[0].provenance, Source::Published);

    let r = run_check(&CheckSpec::new("sigma-shapes").param("k", 4).param("d", 1).param("r", 4)).unwrap();
    assert!(r.pass);
    assert_eq!(r.actual[0].value, "{(4)}");
}

#[test]
fn exact_backend_agrees_on_the_example() {
    let r = run_check(&CheckSpec::new("example-5610").field(FieldChoice::Exact)).unwrap();
    assert!(r.pass);
    assert!(r.primes.is_empty());
    let r = run_check(&CheckSpec::new("example-decomposition").field(FieldChoice::Exact)).unwrap();
    assert!(r.pass);
}

#[test]
fn modular_backend_on_small_spans() {
    for name in ["thm1-sym", "thm1-ext", "thm1-tensor", "eq-sigma"] {
        let r = run_check(&CheckSpec::new(name).field(FieldChoice::Modular)).unwrap();
        assert!(r.pass, "{name}");
        assert_eq!(r.primes.len(), 2);
    }
}

#[test]
fn non_default_parameters() {
    let r = run_check(&CheckSpec::new("hook-dims").param("m", 2).param("n", 4)).unwrap();
    assert!(r.pass);
    assert!(r.expected.iter().all(|e| !e.label.starts_with("sum")));
    let r = run_check(&CheckSpec::new("gl-stability").param("t", 2)).unwrap();
    assert!(r.pass);
    let r = run_check(&CheckSpec::new("thm1-sym").param("n", 2).param("m", 4).param("d", 2)).unwrap();
    assert!(r.pass);
    assert_eq!(r.expected.len(), 1);
}

#[test]
fn batch_preserves_request_order() {
    let specs = full_catalog(5, None, 2);
    let light: Vec<CheckSpec> =
        specs.into_iter().filter(|s| !s.name.starts_with("example") && s.name != "thm2-inclusions").collect();
    let reports = run_many(&light);
    for (spec, r) in light.iter().zip(&reports) {
        let r = r.as_ref().unwrap();
        assert_eq!(r.name, spec.name);
        assert!(r.pass, "{}", r.name);
    }
}
