use proptest::prelude::*;
use sumdist::rainbow::{pick_avoiding, prune_lists, staircase_selections, ListFamily};

fn family() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5).prop_flat_map(|t| {
        prop::collection::vec(prop::collection::btree_set(1i64..=15, t..=8.max(t)), t)
            .prop_map(|ls| ls.into_iter().map(|l| l.into_iter().collect()).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn staircase_meets_the_bound(lists in family()) {
        let f = ListFamily::new(lists.clone());
        let sels = staircase_selections(&prune_lists(&f).unwrap());
        let reachable = sumdist_oracle::rainbow_sums(&lists);
        prop_assert!(sels.len() as i64 >= f.guaranteed_sums());
        for pair in sels.windows(2) {
            prop_assert!(pair[0].sum < pair[1].sum);
        }
        for s in &sels {
            prop_assert_eq!(s.values.iter().sum::<i64>(), s.sum);
            for (i, x) in s.values.iter().enumerate() {
                prop_assert!(lists[i].contains(x));
                prop_assert!(!s.values[..i].contains(x));
            }
            prop_assert!(reachable.contains(&s.sum));
        }
    }

    #[test]
    fn avoiding_succeeds_below_the_bound(lists in family(), drop in 0usize..40) {
        let f = ListFamily::new(lists.clone());
        let reachable: Vec<i64> = sumdist_oracle::rainbow_sums(&lists).into_iter().collect();
        let budget = (f.guaranteed_sums() - 1).max(0) as usize;
        let forbidden = reachable.iter().copied().skip(drop % reachable.len()).take(budget).collect();
        let pick = pick_avoiding(&f, &forbidden).unwrap();
        prop_assert!(!forbidden.contains(&pick.sum));
    }
}
