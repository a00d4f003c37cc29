use std::collections::HashSet;
use std::time::Duration;

use serde_json::json;
use steiner_core::graph6;
use steiner_core::report::suite_document;
use steiner_core::steiner::sdiam;
use steiner_core::verify::{run_all, run_claim, ClaimId, Computed, Status, COVERAGE};
use steiner_core::ExtendedNat;

#[test]
fn every_claim_is_covered_and_named() {
    let covered: HashSet<ClaimId> = COVERAGE.iter().map(|&(_, id)| id).collect();
    for &id in ClaimId::ALL {
        assert!(covered.contains(&id), "{id} has no coverage entry");
        assert!(!id.statement().is_empty());
        assert_eq!(id.as_str().parse::<ClaimId>().unwrap(), id);
    }
    assert_eq!("thm-4.2".parse::<ClaimId>().unwrap(), ClaimId::THM_4_2);
    assert!("THM_9_9".parse::<ClaimId>().is_err());
}

#[test]
fn reruns_are_byte_identical() {
    let doc = || {
        let suite = run_all(7).unwrap();
        suite_document(json!({"n_max": 7}), &suite, Duration::ZERO).unwrap().to_json().unwrap()
    };
    assert_eq!(doc(), doc());
}

#[test]
fn whole_suite_passes_at_seven() {
    let suite = run_all(7).unwrap();
    assert!(suite.passed(), "{:?}", suite.summary);
    assert_eq!(suite.claims.len(), ClaimId::ALL.len());
    assert_eq!(suite.summary.discrepancy_documented, 1);
    assert_eq!(suite.summary.warnings.len(), 1);
    let thm = suite.claims.iter().find(|c| c.claim == ClaimId::THM_4_2).unwrap();
    assert_eq!(thm.status, Status::DiscrepancyDocumented);
    let case = thm.cases.iter().find(|c| c.discrepancy).unwrap();
    assert_eq!(case.computed, Computed::Value(ExtendedNat::Finite(8)));
    assert!(!case.evidence.is_empty());
}

#[test]
fn individual_claims_at_larger_orders() {
    assert!(run_claim(ClaimId::OBS_2_1_CYCLE, 30).is_err(), "30 exceeds the order cap");
    for (id, n_max) in [(ClaimId::LEM_2_4, 8), (ClaimId::THM_3_1, 8), (ClaimId::LEM_3_1, 9), (ClaimId::PROP_5_2, 9)] {
        let r = run_claim(id, n_max).unwrap();
        assert_eq!(r.status, Status::Pass, "{id}: {:?}", r.failures().collect::<Vec<_>>());
        assert!(!r.verified_on.is_empty());
    }
}

/// `(n, ell, d)`, computed value and evidence of one extremal case.
type ExtremalCase = ((u64, u64, u64), ExtendedNat, Vec<String>);

fn values(id: ClaimId, n_max: usize) -> Vec<ExtremalCase> {
    run_claim(id, n_max)
        .unwrap()
        .cases
        .into_iter()
        .filter_map(|c| {
            let get = |k: &str| c.params.0.iter().find(|p| p.0 == k).map(|p| p.1);
            match c.computed {
                Computed::Value(v) => Some(((get("n")?, get("ell")?, get("d")?), v, c.evidence)),
                Computed::Checked { .. } => None,
            }
        })
        .collect()
}

#[test]
fn order_nine_values() {
    let v = values(ClaimId::THM_4_3, 9);
    let at = |key| v.iter().find(|(k, _, _)| *k == key).map(|(_, val, _)| *val);
    assert_eq!(at((9, 3, 5)), Some(ExtendedNat::Finite(10)));
    assert_eq!(at((9, 2, 5)), Some(ExtendedNat::Infinity));
}

#[test]
fn eight_three_four_is_nine() {
    // the registry closed form gives n+2 = 10 here; an explicit 9-edge witness exists
    let v = values(ClaimId::THM_4_3, 8);
    let (_, value, evidence) = v.iter().find(|(k, _, _)| *k == (8, 3, 4)).unwrap();
    assert_eq!(*value, ExtendedNat::Finite(9));
    let g = graph6::decode(&evidence[0]).unwrap();
    assert_eq!((g.order(), g.edge_count(), g.max_degree()), (8, 9, 3));
    assert!(g.is_connected());
    assert_eq!(sdiam(&g, 3).unwrap(), ExtendedNat::Finite(4));
    let h = graph6::decode("Gk??xW").unwrap();
    assert_eq!((h.edge_count(), h.max_degree()), (9, 3));
    assert_eq!(sdiam(&h, 3).unwrap(), ExtendedNat::Finite(4));
}
