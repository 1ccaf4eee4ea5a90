use std::collections::BTreeSet;

use primegraph::tables::{e8_adjacent, e8_primes, gk_e8, table1, verify_tables};

#[test]
fn full_verification_passes() {
    let report = verify_tables(20_000_000);
    assert!(report.passed(), "{report}");
    assert_eq!(report.checks.len(), 6);
}

#[test]
fn criterion_is_symmetric_for_larger_fields() {
    for q in [16u64, 32, 64] {
        let pi = e8_primes(q).unwrap();
        for &r in &pi {
            for &s in &pi {
                if r < s {
                    assert_eq!(e8_adjacent(r, s, q).unwrap(), e8_adjacent(s, r, q).unwrap(), "{r} {s} {q}");
                }
            }
        }
    }
}

#[test]
fn e8_graph_components_match_table_rows() {
    // The E8 rows describe the connected components for every q; compare
    // with the graph from the criterion at powers of 2.
    let rows = table1().unwrap();
    for q in [2u64, 4, 8, 16] {
        let row = rows.iter().find(|r| r.group == "E8(q)" && r.restriction.admits(q)).unwrap();
        let mut listed: Vec<BTreeSet<u64>> = row.evaluate(Some(q)).unwrap();
        let mut computed = gk_e8(q).unwrap().components().as_sets();
        listed.sort();
        computed.sort();
        assert_eq!(listed, computed, "q = {q}");
    }
}
