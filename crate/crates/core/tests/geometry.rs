use halftwist::geometry::*;
use proptest::prelude::*;

fn letter(n: usize) -> impl Strategy<Value = i32> {
    (1..n as i32, any::<bool>()).prop_map(|(j, pos)| if pos { j } else { -j })
}

/// `(n, word, straight index)`.
fn arc_input(max_len: usize) -> impl Strategy<Value = (usize, Vec<i32>, usize)> {
    (3usize..=7)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(letter(n), 0..=max_len), 1..n))
}

fn arc(n: usize, w: &[i32], i: usize) -> ArcCode {
    ArcCode::straight(i, n).unwrap().apply_word(w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn generator_action_satisfies_the_braid_relations((n, w, i) in arc_input(14), j in 1usize..6) {
        let a = arc(n, &w, i);
        let j = (j % (n - 1)) as i32 + 1;
        if j + 1 < n as i32 {
            prop_assert_eq!(a.apply_word(&[j, j + 1, j]).unwrap(), a.apply_word(&[j + 1, j, j + 1]).unwrap());
        }
        for k in 1..n as i32 {
            if (k - j).abs() >= 2 {
                prop_assert_eq!(a.apply_word(&[j, k]).unwrap(), a.apply_word(&[k, j]).unwrap());
            }
        }
        prop_assert_eq!(a.apply_word(&[j, -j]).unwrap(), a.clone());
    }

    #[test]
    fn straightening_word_recovers_the_arc((n, w, i) in arc_input(14)) {
        let a = arc(n, &w, i);
        let (word, index) = a.straightening_word().unwrap();
        prop_assert_eq!(arc(n, &word, index), a);
    }

    #[test]
    fn images_of_disjoint_straight_arcs_stay_disjoint((n, w, _) in arc_input(14)) {
        let arcs: Vec<ArcCode> = (1..n).step_by(2).map(|k| arc(n, &w, k)).collect();
        let layout = Layout::new(&arcs);
        for x in 0..arcs.len() {
            for y in x + 1..arcs.len() {
                prop_assert_eq!(layout.crossings_between(x, y), 0);
            }
            // no arc crosses itself
            let chords = layout.chords(x);
            for (p, &(h1, l1, r1)) in chords.iter().enumerate() {
                for &(h2, l2, r2) in &chords[p + 1..] {
                    let interleave = (l1 < l2 && l2 < r1 && r1 < r2) || (l2 < l1 && l1 < r2 && r2 < r1);
                    prop_assert!(!(h1 == h2 && interleave));
                }
            }
        }
        prop_assert!(TupleDiagram::new(arcs).is_ok());
    }

    #[test]
    fn embedding_reads_back_and_counts_crossings_exactly(
        (n, w1, i) in arc_input(8),
        seed in prop::collection::vec((any::<bool>(), 0usize..100), 0..=8),
        j in 1usize..6,
        g in prop::collection::vec((any::<bool>(), 0usize..100), 0..=6),
    ) {
        let to_word = |v: &[(bool, usize)]| -> Vec<i32> {
            v.iter().map(|&(pos, x)| { let l = (x % (n - 1)) as i32 + 1; if pos { l } else { -l } }).collect()
        };
        let c1 = arc(n, &w1, i);
        let c2 = arc(n, &to_word(&seed), (j % (n - 1)) + 1);
        let drawn = embed(&[c1.clone(), c2.clone()]);
        for (d, c) in drawn.iter().zip([&c1, &c2]) {
            let again = ArcDiagram::new(n, d.vertices().to_vec()).unwrap();
            prop_assert_eq!(&again.code().unwrap(), c);
        }
        if c1 != c2 {
            let k = code_crossing_number(&c1, &c2).unwrap();
            prop_assert_eq!(polyline_crossings(&drawn[0], &drawn[1]), k);
            let g = to_word(&g);
            let moved = code_crossing_number(&c1.apply_word(&g).unwrap(), &c2.apply_word(&g).unwrap()).unwrap();
            prop_assert_eq!(moved, k);
        }
    }

    #[test]
    fn realized_words_match_the_code_action((n, w, i) in arc_input(10)) {
        let d = realize_word(i, n, &w, DEFAULT_SEGMENT_BUDGET).unwrap();
        prop_assert_eq!(d.code().unwrap(), arc(n, &w, i));
        let text = d.to_string();
        prop_assert_eq!(text.parse::<ArcDiagram>().unwrap(), d);
    }
}

#[test]
fn crossing_number_of_equal_arcs_is_rejected() {
    let e = ArcCode::straight(2, 5).unwrap();
    assert!(code_crossing_number(&e, &e).is_err());
}

#[test]
fn segment_budget_is_enforced() {
    let w = [2, 2, -1, -1, 3, 3];
    let needed = 3
        * (ArcCode::straight(2, 4)
            .unwrap()
            .apply_word(&w)
            .unwrap()
            .complexity()
            + 1);
    assert!(needed > 3);
    assert!(realize_word(2, 4, &w, needed).is_ok());
    assert!(matches!(
        realize_word(2, 4, &w, needed - 1),
        Err(halftwist::error::Error::BudgetExceeded(_))
    ));
}
