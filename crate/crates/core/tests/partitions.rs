mod common;

use std::collections::BTreeSet;

use common::p;
use ocvar::partitions::{down_set, enumerate_lambda, lambda_up_to, minimal_elements};
use ocvar::{Error, Partition};
use proptest::prelude::*;

#[test]
fn preceq_matches_union_enumeration() {
    let all = common::lambda_partitions(7);
    for lambda in &all {
        for mu in &all {
            assert_eq!(lambda.preceq(mu).unwrap(), common::preceq(lambda, mu), "{lambda} ⪯ {mu}");
        }
    }
}

#[test]
fn unlhd_matches_definition() {
    let all = common::lambda_partitions(8);
    for lambda in &all {
        for nu in &all {
            assert_eq!(lambda.unlhd(nu).unwrap(), common::unlhd(lambda, nu), "{lambda} ⊴ {nu}");
        }
    }
}

#[test]
fn down_sets_match_oracle() {
    for lambda in common::lambda_partitions(7) {
        assert_eq!(down_set(&lambda).unwrap(), common::down_set(&lambda), "down-set of {lambda}");
    }
}

#[test]
fn enumeration_is_complete_and_ordered() {
    for n in 2..=9 {
        let mut expected: Vec<Partition> = common::integer_partitions(n)
            .into_iter()
            .filter(|c| c.len() >= 2)
            .map(|c| Partition::new(c).unwrap())
            .collect();
        let mut got: Vec<Partition> = (2..=n).flat_map(|m| enumerate_lambda(n, m).unwrap()).collect();
        for m in 2..=n {
            let block = enumerate_lambda(n, m).unwrap();
            assert!(block.windows(2).all(|w| w[0] > w[1]), "Λ_{n},{m} is not decreasing");
            assert!(block.iter().all(|l| l.parts() == m && l.total() == n));
        }
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
    }
    assert_eq!(lambda_up_to(7).len(), common::lambda_partitions(7).len());
}

#[test]
fn minimal_elements_examples() {
    let set = |v: &[&[u32]]| v.iter().map(|c| p(c)).collect::<BTreeSet<_>>();
    let input = [p(&[2, 1]), p(&[2, 2]), p(&[3, 1])];
    assert_eq!(minimal_elements(&input).unwrap(), set(&[&[2, 1]]));
    let pair = [p(&[2, 2]), p(&[3, 1])];
    assert_eq!(minimal_elements(&pair).unwrap(), set(&[&[2, 2], &[3, 1]]));
    assert!(minimal_elements(&[] as &[Partition]).unwrap().is_empty());
    assert!(matches!(minimal_elements(&[p(&[4])]), Err(Error::NotInLambda(_))));
}

fn lambda_strategy(max_total: u32) -> impl Strategy<Value = Partition> {
    let all = common::lambda_partitions(max_total);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn preceq_is_a_partial_order(a in lambda_strategy(8), b in lambda_strategy(8), c in lambda_strategy(8)) {
        prop_assert!(a.preceq(&a).unwrap());
        if a.preceq(&b).unwrap() && b.preceq(&a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if a.preceq(&b).unwrap() && b.preceq(&c).unwrap() {
            prop_assert!(a.preceq(&c).unwrap());
        }
    }

    #[test]
    fn unlhd_implies_preceq(a in lambda_strategy(8), b in lambda_strategy(8)) {
        if a.unlhd(&b).unwrap() {
            prop_assert!(a.preceq(&b).unwrap());
        }
    }

    #[test]
    fn extension_then_union_stays_above(lambda in lambda_strategy(6), k in 0u32..3, i in 1usize..9, j in 1usize..9) {
        let extended = lambda.extend(k);
        prop_assert!(lambda.preceq(&extended).unwrap());
        if let Ok(merged) = extended.union_components(i, j) {
            prop_assert!(lambda.preceq(&merged).unwrap());
            prop_assert_eq!(merged.total(), extended.total());
            prop_assert_eq!(merged.parts() + 1, extended.parts());
        }
    }

    #[test]
    fn down_set_contains_self(lambda in lambda_strategy(7)) {
        let set = down_set(&lambda).unwrap();
        prop_assert!(set.contains(&lambda));
        for mu in &set {
            prop_assert!(mu.preceq(&lambda).unwrap());
        }
    }

    #[test]
    fn minimal_elements_form_an_antichain(picks in prop::collection::vec(lambda_strategy(7), 0..8)) {
        let minimal = minimal_elements(&picks).unwrap();
        for a in &minimal {
            prop_assert!(picks.contains(a));
            for b in &minimal {
                prop_assert!(a == b || !a.preceq(b).unwrap());
            }
        }
        for x in &picks {
            prop_assert!(minimal.iter().any(|m| m.preceq(x).unwrap()));
        }
    }

    #[test]
    fn stats_formula(lambda in lambda_strategy(9)) {
        let st = lambda.stats().unwrap();
        let c = lambda.components();
        prop_assert_eq!(st.q as usize, c.iter().filter(|&&x| x == 1).count());
        prop_assert_eq!(st.r, c.iter().filter(|&&x| x > 1).sum::<u32>());
        prop_assert_eq!(st.delta, u32::from(lambda != p(&[2, 1])));
        prop_assert_eq!(st.s, (st.r as i64 - st.q as i64 - st.delta as i64).max(0) as u32);
        // one extra unit component lowers s by one until it bottoms out
        prop_assert_eq!(lambda.extend(1).s().unwrap(), st.s.saturating_sub(1));
    }

    #[test]
    fn text_round_trip(lambda in lambda_strategy(9)) {
        prop_assert_eq!(lambda.to_list().parse::<Partition>().unwrap(), lambda.clone());
        prop_assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
    }
}
