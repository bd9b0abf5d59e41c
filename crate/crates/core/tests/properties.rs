use borderstat::counting::Counter;
use borderstat::fw::{c_recursive, fw_word, FwCache};
use borderstat::word::{border_lengths, has_period, period_lengths, PeriodSet, Word};
use num_integer::Integer;
use proptest::prelude::*;

fn word_strategy() -> impl Strategy<Value = Word> {
    (2u32..=3, 1usize..=14).prop_flat_map(|(l, n)| {
        prop::collection::vec(0..l, n).prop_map(move |v| Word::new(v, l).unwrap())
    })
}

fn period_set_strategy(max_n: u32) -> impl Strategy<Value = PeriodSet> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(1..=n, 0..5).prop_map(move |ps| PeriodSet::new(n, ps).unwrap())
    })
}

proptest! {
    #[test]
    fn periods_are_dual_to_borders(w in word_strategy()) {
        let n = w.len() as u32;
        let borders = border_lengths(&w);
        let periods = period_lengths(&w).unwrap();
        let mut from_borders: Vec<u32> = borders.borders().iter().map(|r| n - r).collect();
        from_borders.sort_unstable();
        prop_assert_eq!(periods.periods(), &from_borders[..]);
        for p in 1..=n {
            prop_assert_eq!(periods.contains(p), has_period(w.letters(), p as usize));
        }
    }

    // If w has period p < n and u is its prefix of length n - p, then for
    // q > p: w has period q iff u has period q - p.
    #[test]
    fn larger_periods_transfer_to_the_border(w in word_strategy()) {
        let n = w.len() as u32;
        let periods = period_lengths(&w).unwrap();
        for &p in periods.nontrivial() {
            let u = Word::new(w.letters()[..(n - p) as usize].to_vec(), w.alphabet()).unwrap();
            let u_periods = period_lengths(&u).unwrap();
            for q in p + 1..=n {
                prop_assert_eq!(periods.contains(q), u_periods.contains(q - p), "p={} q={}", p, q);
            }
        }
    }

    #[test]
    fn fw_word_has_the_requested_periods(set in period_set_strategy(40)) {
        let w = fw_word(&set);
        for &p in set.periods() {
            prop_assert!(has_period(w.classes(), p as usize));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn recursion_matches_union_find(set in period_set_strategy(60)) {
        prop_assert_eq!(c_recursive(&set), fw_word(&set).class_count());
    }
}

#[test]
fn recursion_matches_union_find_exhaustively() {
    let cache = FwCache::new();
    for n in 1..=12u32 {
        for mask in 0u32..(1 << (n - 1)) {
            let set = PeriodSet::new(n, (1..n).filter(|p| mask >> (p - 1) & 1 == 1)).unwrap();
            assert_eq!(cache.c(&set), fw_word(&set).class_count(), "{set}");
        }
    }
}

/// `c({p, q}, p + q - d) = d`, and `c({p, q}, p + q - d - 1) > d` whenever
/// `p` does not divide `q`. When `p | q` the shorter length is `q - 1`, the
/// only constraint left is period `p = d`, and the class count is exactly `d`.
#[test]
fn periodicity_lemma_bound_is_sharp() {
    for p in 2..=12u32 {
        for q in p + 1..=12 {
            let d = p.gcd(&q);
            let at = PeriodSet::new(p + q - d, [p, q]).unwrap();
            assert_eq!(c_recursive(&at), d, "p={p} q={q}");
            assert_eq!(fw_word(&at).class_count(), d);

            let len = p + q - d - 1;
            let below = PeriodSet::new(len, [p, q].into_iter().filter(|&x| x <= len)).unwrap();
            if q % p == 0 {
                assert_eq!(c_recursive(&below), d, "p={p} q={q}");
            } else {
                assert!(c_recursive(&below) > d, "p={p} q={q}");
                assert!(fw_word(&below).class_count() > d);
            }
        }
    }
}

#[test]
fn distributions_sum_to_all_words() {
    for l in [2u32, 3, 5] {
        let counter = Counter::new(l).unwrap();
        for n in 1..=40 {
            let d = counter.exact_distribution(n).unwrap();
            assert_eq!(
                d.counts.iter().sum::<num_bigint::BigUint>(),
                d.total,
                "l={l} n={n}"
            );
            for (r, c) in d.counts.iter().enumerate() {
                assert!(c <= &counter.power(n - r as u32), "l={l} n={n} r={r}");
            }
        }
    }
}

#[test]
fn specialised_recurrences_match_general_route() {
    for l in [2u32, 3] {
        let counter = Counter::new(l).unwrap();
        for n in 1..=64u32 {
            assert_eq!(
                counter.f_count(&PeriodSet::trivial(n)),
                counter.unbordered_count(n),
                "l={l} n={n}"
            );
            if n >= 2 {
                let set = PeriodSet::new(n, [n - 1]).unwrap();
                assert_eq!(
                    counter.f_count(&set),
                    counter.border_one_count(n),
                    "l={l} n={n}"
                );
            }
        }
    }
}

#[test]
fn divisor_sum_and_subtraction_routes_agree() {
    let counter = Counter::new(2).unwrap();
    let mut checked = 0;
    for n in 1..=24u32 {
        for m in 1..=n {
            let set = PeriodSet::new(n, [m]).unwrap();
            if let Some(by_mobius) = counter.f_count_by_mobius(&set) {
                assert_eq!(by_mobius, counter.f_count_by_recurrence(&set), "{set}");
                checked += 1;
            }
        }
    }
    assert!(checked > 150);
}
