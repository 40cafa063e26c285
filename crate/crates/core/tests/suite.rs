use orbitforge::suite::{run_criterion, SuiteConfig, CRITERIA};

fn assert_criterion(id: u8) {
    let report = run_criterion(id, &SuiteConfig::default()).unwrap();
    let failures: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
    assert!(report.passed, "criterion {id} ({}): {} of {} checks failed: {failures:#?}", report.title, report.failed, report.total);
}

#[test]
fn annihilator_sweep() {
    assert_criterion(1);
}

#[test]
fn trace_identities() {
    assert_criterion(2);
}

#[test]
fn generating_function_identities() {
    assert_criterion(3);
}

#[test]
fn cayley_hamilton() {
    assert_criterion(4);
}

#[test]
fn root_coherence() {
    assert_criterion(5);
}

#[test]
fn representations() {
    assert_criterion(6);
}

#[test]
fn projectors_and_connes() {
    assert_criterion(7);
}

#[test]
fn real_forms() {
    assert_criterion(8);
}

#[test]
fn lemmas() {
    assert_criterion(9);
}

#[test]
fn unknown_criterion_is_rejected() {
    assert!(run_criterion(10, &SuiteConfig::default()).is_err());
    assert_eq!(CRITERIA.len(), 9);
}

#[test]
fn reports_are_deterministic() {
    let cfg = SuiteConfig { seed: 7 };
    assert_eq!(run_criterion(3, &cfg).unwrap(), run_criterion(3, &cfg).unwrap());
}

#[test]
fn sweep_covers_every_cell() {
    // 14 shapes for n = 2, 3, 4, three samples, three values of t, two variants.
    let report = run_criterion(1, &SuiteConfig::default()).unwrap();
    assert_eq!(report.total, 14 * 3 * 3 * 2);
    let mut keys: Vec<_> = report.checks.iter().map(|c| c.label.clone()).collect();
    keys.dedup();
    assert_eq!(keys.len(), report.total);
}
