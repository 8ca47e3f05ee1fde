//! Invariants under random relabeling of the catalog examples.

use proptest::prelude::*;
use ybe::characterize::{analyze, classify_cycle_set};
use ybe::cycleset::are_isomorphic;
use ybe::io::catalog_entry;
use ybe::{CycleSet, Perm};

fn relabeled(id: &'static str) -> impl Strategy<Value = (CycleSet, CycleSet)> {
    let x = catalog_entry(id).unwrap().cycle_set;
    let n = x.size();
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |images| {
            let f = Perm::from_images(images).unwrap();
            (x.clone(), x.relabel(&f).unwrap())
        })
}

fn any_example() -> impl Strategy<Value = (CycleSet, CycleSet)> {
    prop_oneof![
        relabeled("P4"),
        relabeled("E12a"),
        relabeled("E12b"),
        relabeled("E16")
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn analysis_is_invariant((x, y) in any_example()) {
        let (a, b) = (analyze(&x).unwrap(), analyze(&y).unwrap());
        prop_assert_eq!(a.group_order, b.group_order);
        prop_assert_eq!(a.ideal_sizes, b.ideal_sizes);
        prop_assert_eq!(a.simple_oracle, b.simple_oracle);
        prop_assert_eq!(b.theorem.equivalent, Some(true));
        prop_assert_eq!(classify_cycle_set(&y).unwrap().branch, classify_cycle_set(&x).unwrap().branch);
    }

    #[test]
    fn relabeled_copies_are_isomorphic((x, y) in any_example()) {
        let f = are_isomorphic(&x, &y).expect("relabeled copy");
        prop_assert!(x.is_homomorphism(&y, &f));
    }
}
