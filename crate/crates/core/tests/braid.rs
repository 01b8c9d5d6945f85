use std::cmp::Ordering;

use braidrank::braid::{compare_letters, letter_key};
use braidrank::{parse_word, BraidWord, OccurrenceString, Permutation};
use proptest::prelude::*;

fn words(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_strands).prop_flat_map(move |n| {
        let g = n as i32 - 1;
        let len = if n == 1 { 0..=0 } else { 0..=max_len };
        prop::collection::vec((1..=g.max(1), any::<bool>()), len).prop_map(move |v| {
            let letters = v.into_iter().map(|(i, s)| if s { i } else { -i }).collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

/// Components of the closure by following strands, independent of `Permutation`.
fn closure_components(w: &BraidWord) -> usize {
    let n = w.strands();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            for &l in w.letters() {
                let g = l.unsigned_abs() as usize - 1;
                if p == g {
                    p = g + 1;
                } else if p == g + 1 {
                    p = g;
                }
            }
        }
    }
    count
}

#[test]
fn parsing_forms() {
    let w: BraidWord = "B4:1,-2,3".parse().unwrap();
    assert_eq!((w.strands(), w.letters()), (4, &[1, -2, 3][..]));
    assert_eq!("1 -2  3".parse::<BraidWord>().unwrap(), w);
    assert_eq!(parse_word("1, -2, 3", 5).unwrap().strands(), 5);
    assert_eq!("B1:".parse::<BraidWord>().unwrap(), BraidWord::empty(1));
    for bad in ["B3:1,3", "B3:0", "B3:x", "B:1", "B3 1,2", "B0:"] {
        assert!(bad.parse::<BraidWord>().is_err(), "{bad}");
    }
}

#[test]
fn letter_order() {
    let mut letters = vec![-2, 3, 1, -1, 2, -3];
    letters.sort_by_key(|&l| letter_key(l));
    assert_eq!(letters, vec![1, -1, 2, -2, 3, -3]);
    assert_eq!(compare_letters(&[1, 2], &[1, 2, 1]), Ordering::Less);
}

#[test]
fn markov_moves_by_hand() {
    let w: BraidWord = "B3:1,-2,1".parse().unwrap();
    assert_eq!(w.cyclic_rotate(1).letters(), &[-2, 1, 1]);
    assert_eq!(w.cyclic_rotate(-1).letters(), &[1, 1, -2]);
    let s = w.stabilize(false);
    assert_eq!((s.strands(), s.letters()), (4, &[1, -2, 1, -3][..]));
    assert_eq!(s.destabilize().unwrap(), w);
    assert_eq!("B3:1,-2,1".parse::<BraidWord>().unwrap().destabilize().unwrap().letters(), &[1, 1]);
    assert!("B3:2,1,2".parse::<BraidWord>().unwrap().destabilize().is_none());
    assert_eq!("B3:1,2,-2,-1,2".parse::<BraidWord>().unwrap().free_reduce().letters(), &[2]);
}

#[test]
fn occurrence_strings() {
    let w: BraidWord = "B5:1,-2,2,4,1".parse().unwrap();
    assert_eq!(w.occurrence_string(), OccurrenceString(vec![2, 2, 0, 1]));
    assert!(w.occurrence_string().has_zero());
    let all = OccurrenceString::compositions(8, 4, 2);
    assert_eq!(all, vec![OccurrenceString(vec![2, 2, 2, 2])]);
    assert_eq!("(2,2,2,2)".parse::<OccurrenceString>().unwrap(), all[0]);
    // C(9, 3) compositions of 10 into 4 positive parts
    assert_eq!(OccurrenceString::compositions(10, 4, 1).len(), 84);
    // weak compositions: C(13, 3)
    assert_eq!(OccurrenceString::compositions(10, 4, 0).len(), 286);
}

#[test]
fn permutation_of_word() {
    let p = Permutation::of_word(4, &[1, 2, 3]);
    assert_eq!(p.cycle_count(), 1);
    assert_eq!(Permutation::identity(3).cycle_count(), 3);
    assert_eq!(Permutation::of_word(3, &[1, 1]).cycle_count(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn parity_of_knot_closures(w in words(8, 18)) {
        if w.is_knot() {
            prop_assert_eq!((w.len() as i64 - w.strands() as i64).rem_euclid(2), 1);
        }
    }

    #[test]
    fn components_match_strand_tracing(w in words(8, 18)) {
        prop_assert_eq!(w.component_count(), closure_components(&w));
        prop_assert_eq!(w.permutation().cycle_count(), w.component_count());
    }

    #[test]
    fn display_round_trip(w in words(9, 20)) {
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<BraidWord>(&json).unwrap(), w);
    }

    #[test]
    fn canonical_form_laws(w in words(6, 12), k in -20isize..20) {
        let c = w.canonical_form();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonical_form(), c.clone());
        prop_assert_eq!(w.cyclic_rotate(k).canonical_form(), c.clone());
        prop_assert_eq!(w.flip().canonical_form(), c.clone());
        prop_assert_eq!(w.is_canonical(), w == c);
        prop_assert_ne!(compare_letters(c.letters(), w.letters()), Ordering::Greater);
        let occ = c.occurrence_string();
        prop_assert!(occ == w.occurrence_string() || occ == w.occurrence_string().reversed());
        prop_assert_eq!(c.component_count(), w.component_count());
        prop_assert_eq!(c.exponent_sum(), w.exponent_sum());
    }

    #[test]
    fn moves_preserve_components(w in words(7, 14), pos in any::<bool>(), k in -9isize..9) {
        let s = w.stabilize(pos);
        prop_assert_eq!(s.component_count(), w.component_count());
        prop_assert_eq!(s.destabilize().unwrap(), w.clone());
        prop_assert_eq!(w.cyclic_rotate(k).component_count(), w.component_count());
        prop_assert_eq!(w.free_reduce().component_count(), w.component_count());
        prop_assert_eq!(w.mirror().mirror(), w.clone());
        prop_assert_eq!(w.flip().flip(), w.clone());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!(w.free_reduce().len() <= w.len());
    }

    #[test]
    fn compositions_are_exact(total in 0usize..12, parts in 1usize..6, min in 0usize..3) {
        let all = OccurrenceString::compositions(total, parts, min);
        for o in &all {
            prop_assert_eq!(o.total(), total);
            prop_assert_eq!(o.counts().len(), parts);
            prop_assert!(o.counts().iter().all(|&x| x >= min));
        }
        prop_assert!(all.windows(2).all(|p| p[0] < p[1]));
    }
}
