// Runs in its own process so the environment change cannot leak into other tests.

use steiner_core::enumerate::{count, order_cap, EnumFilter, Shard, CAP_ENV, MAX_ENUM_ORDER};
use steiner_core::extremal::{compute_e, ExtremalQuery};
use steiner_core::verify::{run_claim, ClaimId};

#[test]
fn environment_lowers_the_cap() {
    std::env::remove_var(CAP_ENV);
    assert_eq!(order_cap(), MAX_ENUM_ORDER);
    std::env::set_var(CAP_ENV, "6");
    assert_eq!(order_cap(), 6);
    assert_eq!(count(&EnumFilter::connected(6), Shard::WHOLE).unwrap(), 112);
    assert!(count(&EnumFilter::connected(7), Shard::WHOLE).unwrap_err().is_cap());
    assert!(compute_e(&ExtremalQuery::new(7, 3, 4)).unwrap_err().is_cap());
    assert!(run_claim(ClaimId::LEM_2_4, 7).unwrap_err().is_cap());
    // the variable can only lower the cap
    std::env::set_var(CAP_ENV, "40");
    assert_eq!(order_cap(), MAX_ENUM_ORDER);
    std::env::set_var(CAP_ENV, "junk");
    assert_eq!(order_cap(), MAX_ENUM_ORDER);
    std::env::remove_var(CAP_ENV);
}
