use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use swisscheese::{
    count_kind, enumerate_closed, parse_debruijn, sample, unrank_closed, Characteristic, Family,
    Kind, SamplerConfig, SizeModel, Term, TermClass,
};

fn kind(family: Family, model: SizeModel, class: TermClass) -> Kind {
    Kind::new(family, model, class)
}

#[test]
fn unrank_follows_enumeration_order() {
    for k in Kind::all() {
        let upto = if k.model == SizeModel::Natural { 9 } else { 6 };
        for n in 0..=upto {
            for (r, term) in enumerate_closed(k, n).enumerate() {
                assert_eq!(unrank_closed(k, n, &BigUint::from(r)).unwrap(), term, "{k} n={n} r={r}");
            }
        }
    }
}

#[test]
fn unrank_past_the_end_fails() {
    let k = kind(Family::Linear, SizeModel::Natural, TermClass::All);
    assert!(unrank_closed(k, 8, &BigUint::from(16u8)).is_err());
    assert!(unrank_closed(k, 3, &BigUint::from(0u8)).is_err());
}

#[test]
fn print_parse_round_trip() {
    for k in Kind::all() {
        let upto = if k.model == SizeModel::Natural { 9 } else { 6 };
        for n in 0..=upto {
            for term in enumerate_closed(k, n) {
                assert_eq!(parse_debruijn(&term.to_string()).unwrap(), term);
            }
        }
    }
}

#[test]
fn enumerated_terms_have_their_kind() {
    for k in Kind::all() {
        let upto = if k.model == SizeModel::Natural { 9 } else { 6 };
        for n in 0..=upto {
            let terms: Vec<Term> = enumerate_closed(k, n).collect();
            let distinct: BTreeSet<&Term> = terms.iter().collect();
            assert_eq!(distinct.len(), terms.len());
            assert_eq!(BigUint::from(terms.len()), count_kind(k, n, &Characteristic::empty()));
            for t in &terms {
                assert!(t.is_closed() && k.admits(t) && t.size(k.model) == n, "{k} {t}");
            }
        }
    }
}

#[test]
fn large_ranks_decode() {
    let k = kind(Family::Affine, SizeModel::Natural, TermClass::All);
    let total = count_kind(k, 40, &Characteristic::empty());
    let last = unrank_closed(k, 40, &(&total - 1u8)).unwrap();
    let first = unrank_closed(k, 40, &BigUint::from(0u8)).unwrap();
    assert_ne!(first, last);
    for t in [first, last] {
        assert!(t.is_closed() && t.is_affine() && t.size(SizeModel::Natural) == 40);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn samples_belong_to_their_kind(seed in any::<u64>(), n in 2usize..30, which in 0usize..12) {
        let k = Kind::all().nth(which).unwrap();
        let n = if k.model == SizeModel::Natural { n } else { n.min(16) };
        let config = SamplerConfig { seed, kind: k, n };
        match sample(config, 3) {
            Ok(terms) => {
                prop_assert_eq!(terms.len(), 3);
                for t in terms {
                    prop_assert!(t.is_closed() && k.admits(&t) && t.size(k.model) == n);
                    prop_assert_eq!(parse_debruijn(&t.to_string()).unwrap(), t);
                }
            }
            Err(_) => prop_assert_eq!(count_kind(k, n, &Characteristic::empty()), BigUint::from(0u8)),
        }
    }

    #[test]
    fn rank_of_enumerated_term(n in 0usize..10, pick in any::<prop::sample::Index>()) {
        let k = kind(Family::Affine, SizeModel::Natural, TermClass::Normal);
        let terms: Vec<Term> = enumerate_closed(k, n).collect();
        prop_assume!(!terms.is_empty());
        let r = pick.index(terms.len());
        prop_assert_eq!(&unrank_closed(k, n, &BigUint::from(r)).unwrap(), &terms[r]);
    }
}
