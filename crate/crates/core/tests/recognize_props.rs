use num_bigint::BigUint;
use primegraph::census::enumerate_simple;
use primegraph::corpus::small_corpus;
use primegraph::graph::{gk_from_spectrum, LabeledGraph};
use primegraph::group::spectrum;
use primegraph::recognize::{analyze, c2_witness_holds, candidate_socles, necessary_conditions, Status, TAG_TWO_ADJACENT_TO_ALL_ODD};
use proptest::prelude::*;

const PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

fn arb_graph() -> impl Strategy<Value = LabeledGraph> {
    proptest::sample::subsequence(PRIMES.to_vec(), 1..=8).prop_flat_map(|vs| {
        let n = vs.len();
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((vs[i], vs[j]));
                    }
                    k += 1;
                }
            }
            LabeledGraph::new(vs.clone(), edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdicts_are_consistent(g in arb_graph()) {
        let v = analyze(&g);
        prop_assert_eq!(&v, &analyze(&g));
        prop_assert!(!v.reasons.is_empty());
        prop_assert!(BigUint::from(v.almost_simple_count) <= v.f_bound_value);
        prop_assert_eq!(&v.candidate_socles, &enumerate_simple(g.vertices()));
        prop_assert_eq!(candidate_socles(&g), v.candidate_socles.clone());
        let check = necessary_conditions(&g);
        prop_assert_eq!(v.status == Status::Unrecognizable, !check.passed);
        if let Some(t) = v.independence_number {
            prop_assert_eq!(t < 3, v.reasons.iter().any(|r| r.tag == "no-three-coclique"));
        }
    }
}

#[test]
fn c2_witness_holds_on_corpus() {
    let mut checked = 0;
    for g in small_corpus() {
        let gamma = gk_from_spectrum(&spectrum(&g, 30_000).unwrap());
        let check = necessary_conditions(&gamma);
        if check.reasons.iter().any(|r| r.tag == TAG_TWO_ADJACENT_TO_ALL_ODD) {
            assert!(c2_witness_holds(&g, 30_000).unwrap(), "{:?}", g.name());
            checked += 1;
        }
    }
    assert!(checked >= 3, "{checked}");
}
