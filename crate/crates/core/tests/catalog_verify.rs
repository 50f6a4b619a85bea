use iepg::catalog::{verify_catalog, Scope};

fn run(scope: Scope) {
    let report = verify_catalog(scope, 7).unwrap();
    for r in report.failures() {
        eprintln!("{} {}", r.id, r.detail);
    }
    assert!(report.all_passed(), "{}/{} rows passed", report.passed(), report.total());
}

#[test]
fn order_four_rows_pass() {
    run(Scope::Order4);
}

#[test]
fn order_five_rows_pass() {
    run(Scope::Order5);
}

#[test]
fn minor_rows_pass() {
    run(Scope::Minors);
}

#[test]
fn rows_pass_for_other_seeds() {
    for seed in 100..120 {
        for scope in [Scope::Order4, Scope::Order5, Scope::Minors] {
            let report = verify_catalog(scope, seed).unwrap();
            let bad: Vec<_> = report.failures().map(|r| format!("{} {}", r.id, r.detail)).collect();
            assert!(bad.is_empty(), "seed {seed}: {bad:?}");
        }
    }
}
