mod support;

use gridperm_core::{contains, pattern_of, window, Permutation};
use proptest::prelude::*;
use support::{all_perms, brute_find_pattern, p};

fn perm_strategy(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

#[test]
fn worked_examples() {
    assert!(contains(&p("391867452"), &p("51342")));
    assert_eq!(pattern_of(&[9, 1, 6, 7, 2]).unwrap(), p("51342"));
    assert_eq!(window(&p("136854792"), 5..=9, 1..=5).unwrap(), p("321"));
}

#[test]
fn containment_is_a_partial_order_up_to_length_four() {
    let perms: Vec<Permutation> = (0..=4).flat_map(all_perms).collect();
    for a in &perms {
        assert!(a.contains(a));
        for b in &perms {
            if a.contains(b) && b.contains(a) {
                assert_eq!(a, b);
            }
            if !a.contains(b) {
                continue;
            }
            for c in &perms {
                if b.contains(c) {
                    assert!(a.contains(c), "{a} ≥ {b} ≥ {c}");
                }
            }
        }
    }
}

#[test]
fn antisymmetry_at_length_five() {
    // equal lengths plus containment forces equality
    let perms = all_perms(5);
    for a in &perms {
        for b in &perms {
            assert_eq!(a.contains(b), a == b);
        }
    }
}

#[test]
fn windows_compose_exhaustively_up_to_length_four() {
    for n in 0..=4 {
        for pi in all_perms(n) {
            check_window_composition(&pi);
        }
    }
}

fn intervals(n: usize) -> Vec<(usize, usize)> {
    (1..=n + 1).flat_map(|a| (a..=n + 1).map(move |b| (a, b))).collect()
}

fn check_window_composition(pi: &Permutation) {
    let ivs = intervals(pi.len());
    for &x1 in &ivs {
        for &y1 in &ivs {
            for &x2 in &ivs {
                for &y2 in &ivs {
                    let (twice, once) = compose(pi, x1, y1, x2, y2);
                    assert_eq!(twice, once, "{pi} {x1:?}x{y1:?} then {x2:?}x{y2:?}");
                }
            }
        }
    }
}

/// Returns `window(window(π, X1, Y1), X2', Y2')` and `window(π, X1 ∩ X2, Y1 ∩ Y2)`, where
/// X2' and Y2' are the positions and values of the inner window coming from X2 and Y2.
fn compose(
    pi: &Permutation,
    (x1a, x1b): (usize, usize),
    (y1a, y1b): (usize, usize),
    (x2a, x2b): (usize, usize),
    (y2a, y2b): (usize, usize),
) -> (Permutation, Permutation) {
    let inner = window(pi, x1a..x1b, y1a..y1b).unwrap();
    let kept: Vec<usize> = (x1a..x1b).filter(|&i| (y1a..y1b).contains(&pi.value_at(i))).collect();
    let mut kept_values: Vec<usize> = kept.iter().map(|&i| pi.value_at(i)).collect();
    kept_values.sort_unstable();
    let relative = |lo: usize, hi: usize, items: &[usize]| {
        let a = items.iter().take_while(|&&i| i < lo).count() + 1;
        let b = items.iter().take_while(|&&i| i < hi).count() + 1;
        a..b.max(a)
    };
    let twice = window(&inner, relative(x2a, x2b, &kept), relative(y2a, y2b, &kept_values)).unwrap();
    let meet = |a: usize, b: usize, c: usize, d: usize| a.max(c)..b.min(d).max(a.max(c));
    let once = window(pi, meet(x1a, x1b, x2a, x2b), meet(y1a, y1b, y2a, y2b)).unwrap();
    (twice, once)
}

#[test]
fn window_examples_against_filter() {
    let pi = p("136854792");
    let filtered: Vec<usize> = (1..=2).map(|i| pi.value_at(i)).filter(|v| (6..=9).contains(v)).collect();
    assert!(filtered.is_empty());
    assert_eq!(window(&pi, 1..=2, 6..=9).unwrap(), Permutation::empty());
    assert_eq!(window(&pi, .., ..).unwrap(), pi);
}

proptest! {
    #[test]
    fn find_pattern_matches_brute_force(pi in perm_strategy(8), sigma in perm_strategy(4)) {
        let found = pi.find_pattern(&sigma);
        prop_assert_eq!(&found, &brute_find_pattern(&pi, &sigma));
        if let Some(idx) = found {
            prop_assert!(pi.is_occurrence(&sigma, &idx));
        }
    }

    #[test]
    fn every_sub_pattern_is_found(pi in perm_strategy(8), mask in any::<u8>()) {
        let idx: Vec<usize> = (1..=pi.len()).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let sigma = pi.restrict(&idx);
        prop_assert!(pi.contains(&sigma));
    }

    #[test]
    fn pattern_of_is_idempotent(values in proptest::collection::btree_set(-50i64..50, 0..10), seed in any::<u64>()) {
        let mut v: Vec<i64> = values.into_iter().collect();
        // scramble deterministically
        let len = v.len().max(1);
        v.rotate_left(seed as usize % len);
        if seed & 1 == 1 { v.reverse(); }
        let once = pattern_of(&v).unwrap();
        prop_assert_eq!(once.len(), v.len());
        prop_assert_eq!(pattern_of(once.entries()).unwrap(), once);
    }

    #[test]
    fn windows_compose_at_length_six(pi in perm_strategy(6), ends in proptest::array::uniform8(0usize..7)) {
        let n = pi.len();
        let iv = |a: usize, b: usize| {
            let (a, b) = (1 + a % (n + 1), 1 + b % (n + 1));
            (a.min(b), a.max(b))
        };
        let (twice, once) = compose(&pi, iv(ends[0], ends[1]), iv(ends[2], ends[3]), iv(ends[4], ends[5]), iv(ends[6], ends[7]));
        prop_assert_eq!(twice, once);
    }
}
