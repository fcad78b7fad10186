use std::collections::BTreeSet;
use std::sync::OnceLock;

use qdissect::verify::{
    registry, run_check_id, run_checks, select, Context, Status, VerifyConfig, VerifyError,
    VerifyReport,
};

fn small() -> &'static Context {
    static C: OnceLock<Context> = OnceLock::new();
    C.get_or_init(|| {
        Context::build(VerifyConfig {
            order: Some(120),
            oracle_ceiling: 150,
            ..VerifyConfig::default()
        })
        .unwrap()
    })
}

fn default_ctx() -> &'static Context {
    static C: OnceLock<Context> = OnceLock::new();
    C.get_or_init(|| Context::build(VerifyConfig::default()).unwrap())
}

fn run(selector: &str, ctx: &Context) -> Vec<VerifyReport> {
    run_checks(&select(selector).unwrap(), ctx, 4).unwrap()
}

fn strip_time(mut r: Vec<VerifyReport>) -> Vec<VerifyReport> {
    r.iter_mut().for_each(|x| x.elapsed_ms = 0);
    r
}

#[test]
fn ids_are_unique_and_labelled() {
    let all = registry();
    let ids: BTreeSet<_> = all.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids.len(), all.len());
    assert!(all.iter().all(|c| !c.paper_label.is_empty()));
    assert!(ids.contains("thm-1.2-a0") && ids.contains("conj-6.2") && ids.contains("wr1"));
}

#[test]
fn selectors() {
    assert_eq!(select("thm-1.2").unwrap().len(), 6);
    assert_eq!(select("wr-all").unwrap().len(), 10);
    assert!(matches!(select("empty-window"), Err(VerifyError::Unknown(_))));
    assert_eq!(select("all").unwrap().len(), registry().len());
}

#[test]
fn runs_are_deterministic() {
    let a = strip_time(run("certificates", small()));
    let b = strip_time(run("certificates", small()));
    assert_eq!(a, b);
    let single = strip_time(run_checks(&select("certificates").unwrap(), small(), 1).unwrap());
    assert_eq!(a, single);
}

#[test]
fn reports_round_trip_through_json() {
    let r = run("rank-dissection", small());
    let text = serde_json::to_string(&r).unwrap();
    let back: Vec<VerifyReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["status"], "pass");
}

#[test]
fn failures_carry_a_witness() {
    for r in run("all", small()) {
        if r.status == Status::Fail {
            assert!(r.first_failure.is_some() || r.note.is_some(), "{}", r.id);
        }
    }
}

#[test]
fn single_checks() {
    let r = run_check_id("wr1", small()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.order, 120);
    for r in run("thm-1.2", small()) {
        assert_eq!(r.status, Status::Pass, "{}", r.id);
        assert_eq!(r.paper_label, "Theorem 1.2");
    }
    assert!(matches!(run_check_id("empty-window", small()), Err(VerifyError::Unknown(_))));
}

#[test]
fn order_beyond_the_tables_is_rejected() {
    let ctx = Context::build(VerifyConfig {
        order: Some(100),
        oracle_ceiling: 50,
        ..VerifyConfig::default()
    })
    .unwrap();
    let e = run_check_id("thm-1.2-a0", &ctx).unwrap_err();
    assert!(matches!(e, VerifyError::OracleRange { have: 50, .. }));
    assert!(e.to_string().contains("50"));
    // theta-only checks ignore the ceiling
    assert_eq!(run_check_id("wr2", &ctx).unwrap().status, Status::Pass);
}

#[test]
fn emended_set_is_frozen() {
    // [DERIVED] at the default orders
    let want: BTreeSet<&str> = [
        "cert-cor-2.2-r1-2",
        "cert-cor-2.3-r7-3",
        "cert-cor-2.5-r6-1",
        "lemma-6.3-quot-a4",
        "prop-6.6-1",
        "prop-6.6-3",
        "q-theta-form-3-3",
        "q-theta-form-4-3",
        "q-theta-form-5-3",
    ]
    .into_iter()
    .collect();
    let mut got = BTreeSet::new();
    for sel in ["certificates", "positivity", "q-tables"] {
        for r in run(sel, default_ctx()) {
            assert_ne!(r.status, Status::Fail, "{}", r.id);
            if r.status == Status::EmendedPass {
                assert!(r.note.is_some(), "{}", r.id);
                got.insert(r.id);
            }
        }
    }
    let got: BTreeSet<&str> = got.iter().map(String::as_str).collect();
    assert_eq!(got, want);
}

#[test]
fn conjecture_scans() {
    let r = run_check_id("conj-6.2", default_ctx()).unwrap();
    assert!(r.note.as_deref().unwrap().contains("[2]"), "{:?}", r.note);
    for r in run("conj-6.5", default_ctx()) {
        let note = r.note.as_deref().unwrap_or("");
        assert!(note.contains("every printed threshold matches"), "{}: {note}", r.id);
    }
}

#[test]
fn raising_the_order_keeps_passes() {
    let hi = strip_time(run("crank-dissection", default_ctx()));
    let lo = strip_time(run("crank-dissection", small()));
    for (a, b) in lo.iter().zip(&hi) {
        assert_eq!(a.id, b.id);
        if b.status == Status::Pass {
            assert_eq!(a.status, Status::Pass, "{}", a.id);
        }
        assert!(a.order <= b.order);
    }
}
