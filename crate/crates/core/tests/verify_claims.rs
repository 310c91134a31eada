use renner_core::putcha::Parity;
use renner_core::verify::{run_all, run_claim, ClaimParams, Status, CLAIM_IDS};
use renner_core::EnumerationLimits;

fn at(n: usize) -> ClaimParams {
    ClaimParams {
        n: Some(n),
        ..ClaimParams::default()
    }
}

#[test]
fn small_claims_pass() {
    for claim in [
        "comparator-agreement",
        "gj-transversal",
        "counting",
        "degree-iff",
        "dcm-degree-one",
        "lattice-distributive",
        "nilpotent-criterion",
        "nil-maximal",
        "components-dims",
    ] {
        let r = run_claim(claim, &at(3)).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        assert_eq!(r.exit_code(), 0);
        assert!(!r.checks.is_empty());
        assert!(r.witnesses.is_empty());
    }
}

#[test]
fn rook_interval_with_explicit_parameters() {
    let p = ClaimParams {
        m: Some(2),
        parity: Some(Parity::Odd),
        ..ClaimParams::default()
    };
    let r = run_claim("rook-interval", &p).unwrap();
    assert_eq!(r.status, Status::Pass, "{r}");
    assert_eq!(r.params.get("parity").map(String::as_str), Some("odd"));
}

#[test]
fn final_theorem_targets() {
    let p = ClaimParams {
        poset: Some("weak-lr".into()),
        ..at(3)
    };
    assert_eq!(run_claim("eulerian", &p).unwrap().status, Status::Pass);
    let p = ClaimParams {
        poset: Some("weak-lr".into()),
        ..at(4)
    };
    let r = run_claim("eulerian", &p).unwrap();
    assert_eq!(r.exit_code(), 1);
    assert!(r.witnesses[0].contains("{1243, 1342, 2341}"), "{r}");
    let p = ClaimParams {
        poset: Some("weak-left".into()),
        ..at(3)
    };
    let r = run_claim("el-shellable", &p).unwrap();
    assert_eq!(r.status, Status::Fail, "{r}");
    let tiny = ClaimParams {
        budget: 1,
        poset: Some("weak-lr".into()),
        ..at(3)
    };
    assert_eq!(
        run_claim("el-shellable", &tiny).unwrap().status,
        Status::SkippedBudget
    );
}

#[test]
fn skips_and_errors() {
    let p = ClaimParams {
        limits: EnumerationLimits {
            max_symmetric: 2,
            ..EnumerationLimits::default()
        },
        ..at(4)
    };
    assert_eq!(run_claim("counting", &p).unwrap().exit_code(), 3);
    assert!(run_claim("bogus", &at(3)).is_err());
    let p = ClaimParams {
        poset: Some("nonsense".into()),
        ..at(3)
    };
    assert!(run_claim("eulerian", &p).is_err());
}

#[test]
fn verify_all_is_capped_and_complete() {
    let reports = run_all(Some(3), 10_000).unwrap();
    let claims: Vec<&str> = reports.iter().map(|r| r.claim.as_str()).collect();
    assert_eq!(claims, CLAIM_IDS);
    for r in &reports {
        let json = serde_json::to_value(r).unwrap();
        assert_eq!(json["claim"], r.claim.as_str());
        assert!(matches!(
            r.status,
            Status::Pass | Status::Fail | Status::SkippedBudget
        ));
    }
    let eulerian = reports.iter().find(|r| r.claim == "eulerian").unwrap();
    assert_eq!(eulerian.status, Status::Fail);
    let counting = reports.iter().find(|r| r.claim == "counting").unwrap();
    assert_eq!(counting.status, Status::Pass);
}
