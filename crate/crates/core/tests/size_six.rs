//! Exhaustive checks on the 95 algebras with six elements, beyond the
//! default enumeration cap.

use hilbert_depth::enumerate::enumerate_hilbert_with_cap;
use hilbert_depth::{chain_from_counterexample, subalgebra_from_chain, verify_main_theorem};

#[test]
fn depth_bound_matches_identity_on_size_six() {
    let algebras = enumerate_hilbert_with_cap(6, 6).unwrap();
    assert_eq!(algebras.len(), 95);
    for a in &algebras {
        let report = verify_main_theorem(a, 5).unwrap();
        assert!(report.all_agree(), "{a:?}");
        for row in &report.rows {
            let Some(cx) = &row.counterexample else {
                continue;
            };
            let chain = chain_from_counterexample(a, cx, row.n).unwrap();
            assert_eq!(chain.len(), row.n + 1);
            let sub = subalgebra_from_chain(a, &chain).unwrap();
            assert_eq!(sub.elements.len(), row.n + 1);
        }
    }
}
