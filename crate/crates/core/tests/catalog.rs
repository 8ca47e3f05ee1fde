//! Every catalog entry, recomputed from its table.

use ybe::characterize::{analyze, check_preid, classify_cycle_set, is_prime, Branch};
use ybe::cycleset::are_isomorphic;
use ybe::gbrace::check_prelcar;
use ybe::io::{catalog, parse_cycle_set, render_cycle_set};
use ybe::{gbrace, CycleSet};

#[test]
fn expected_facts_hold() {
    for e in catalog() {
        let a = analyze(&e.cycle_set).unwrap();
        assert_eq!(a.group_order, e.expected.group_order, "{}", e.id);
        assert_eq!(a.ideal_sizes, e.expected.ideal_sizes, "{}", e.id);
        assert_eq!(a.simple_oracle, e.expected.simple, "{}", e.id);
        assert_eq!(a.irretractable, e.expected.irretractable, "{}", e.id);
        let g = gbrace(&e.cycle_set).unwrap();
        assert_eq!(
            g.brace.is_simple_brace().unwrap(),
            e.expected.brace_simple,
            "{}",
            e.id
        );
    }
}

#[test]
fn reconstructed_brace_matches_base() {
    for e in catalog()
        .into_iter()
        .filter(|e| !is_prime(e.cycle_set.size()))
    {
        let g = gbrace(&e.cycle_set).unwrap();
        let out = check_prelcar(&g.brace, &g.base()).unwrap();
        assert!(out.isomorphic, "{}: {:?}", e.id, out.reason);
        // The base as a sub-cycle-set is a copy of the input.
        let y = g.brace.sub_cycle_set(&g.base()).unwrap();
        assert!(are_isomorphic(&y, &e.cycle_set).is_some(), "{}", e.id);
    }
}

#[test]
fn classification_branches() {
    for e in catalog() {
        let c = classify_cycle_set(&e.cycle_set).unwrap();
        let expected = if e.id.starts_with("C_2") {
            Branch::SizeTwo
        } else if e.id.starts_with("C_") {
            Branch::PrimeCyclic
        } else {
            Branch::BraceCriterion
        };
        assert_eq!(c.branch, expected, "{}", e.id);
        assert!(c.simple && c.oracle_agrees);
    }
}

#[test]
fn minimal_ideal_on_non_prime_entries() {
    for e in catalog()
        .into_iter()
        .filter(|e| !is_prime(e.cycle_set.size()))
    {
        let p = check_preid(&e.cycle_set).unwrap();
        assert!(p.holds(), "{}: {p:?}", e.id);
        assert!(p.sigma_span_agrees, "{}", e.id);
        assert_eq!(p.quotient_order * p.minimal_size, p.group_order, "{}", e.id);
    }
}

#[test]
fn render_parse_round_trip() {
    for e in catalog() {
        let text = render_cycle_set(&e.cycle_set);
        assert_eq!(parse_cycle_set(&text).unwrap(), e.cycle_set, "{}", e.id);
    }
}

#[test]
fn prime_entries_match_cyclic_model() {
    for p in [2, 3, 5, 7] {
        let e = ybe::io::catalog_entry(&format!("C_{p}")).unwrap();
        assert_eq!(e.cycle_set, CycleSet::cyclic(p).unwrap());
        assert_eq!(e.cycle_set.multipermutation_level().unwrap(), Some(1));
    }
}
