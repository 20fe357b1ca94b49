use halftwist::braid::{full_twist, BraidWord};
use halftwist::word_problem::{Backend, Solver};
use proptest::prelude::*;

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (3usize..=max_n).prop_flat_map(move |n| {
        letters(n, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(
        (1..n as i32, any::<bool>()).prop_map(|(j, p)| if p { j } else { -j }),
        0..=max_len,
    )
}

fn pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (3usize..=max_n).prop_flat_map(move |n| {
        (letters(n, max_len), letters(n, max_len))
            .prop_map(move |(a, b)| (BraidWord::new(n, a).unwrap(), BraidWord::new(n, b).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn words_are_freely_reduced_and_round_trip(w in word(7, 20)) {
        prop_assert!(w.letters().windows(2).all(|p| p[0] != -p[1]));
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn inverse_and_identity(w in word(7, 20)) {
        let solver = Solver::default();
        prop_assert!(w.compose(&w.invert()).unwrap().is_empty());
        prop_assert!(solver.equal(&w, &w).unwrap());
        prop_assert!(solver.is_central(&BraidWord::identity(w.n())).unwrap());
    }

    #[test]
    fn invariants_are_homomorphisms((u, v) in pair(7, 15)) {
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(uv.exponent_sum(), u.exponent_sum() + v.exponent_sum());
        prop_assert_eq!(uv.permutation(), u.permutation().compose(&v.permutation()));
    }

    #[test]
    fn backends_agree_on_rewrites(w in word(6, 20), at in 0usize..40, i in 1i32..5) {
        let n = w.n() as i32;
        let i = (i - 1) % (n - 2) + 1;
        let at = at % (w.len() + 1);
        let relator = [i, i + 1, i, -(i + 1), -i, -(i + 1)];
        let v = BraidWord::new(w.n(), w.letters()[..at].iter().chain(&relator).chain(&w.letters()[at..]).copied()).unwrap();
        let both = Solver::with_backend(Backend::Both);
        prop_assert!(both.equal(&w, &v).unwrap());
        let bump = [i, i, i + 1, i + 1, -i, -i, -(i + 1), -(i + 1)];
        let x = BraidWord::new(w.n(), w.letters()[..at].iter().chain(&bump).chain(&w.letters()[at..]).copied()).unwrap();
        prop_assert!(!both.equal(&w, &x).unwrap());
    }

    #[test]
    fn the_full_twist_is_central(w in word(6, 12)) {
        let z = full_twist(w.n());
        prop_assert!(Solver::default().commutes(&z, &w).unwrap());
    }

    #[test]
    fn conjugation_preserves_the_braid_relation(g in word(6, 8), i in 1i32..4) {
        let n = g.n() as i32;
        let i = (i - 1) % (n - 2) + 1;
        let a = g.conjugate(&BraidWord::generator(g.n(), i).unwrap()).unwrap();
        let b = g.conjugate(&BraidWord::generator(g.n(), i + 1).unwrap()).unwrap();
        let solver = Solver::default();
        prop_assert!(solver.braid_related(&a, &b).unwrap());
        prop_assert!(!solver.commutes(&a, &b).unwrap());
    }
}

#[test]
fn mismatched_strands_are_errors() {
    let u = BraidWord::identity(3);
    let v = BraidWord::identity(4);
    assert!(matches!(
        Solver::default().equal(&u, &v),
        Err(halftwist::error::Error::StrandMismatch { .. })
    ));
}

#[test]
fn tiny_budgets_fall_back_to_the_linear_backend() {
    let w = full_twist(6).pow(3);
    let solver = Solver {
        budget: 10,
        ..Solver::default()
    };
    assert!(solver.equal(&w, &w).unwrap());
    let bump = BraidWord::new(6, [1, 1, 2, 2, -1, -1, -2, -2]).unwrap();
    assert!(!solver.equal(&w, &w.compose(&bump).unwrap()).unwrap());
}
