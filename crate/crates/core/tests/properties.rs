use proptest::prelude::*;

use shpl_core::enumerate::{shifted_tableaux, skew_shifted_tableaux, skew_standard_fillings};
use shpl_core::insertion::{inverse_mixed_insertion, mixed_delete, mread_letters};
use shpl_core::jdt::{rectify_with, skew_mread_with_filling, CornerSchedule};
use shpl_core::rewriting::shifted_knuth_neighbors;
use shpl_core::ssdt::{
    is_hook_word, longest_hook_subword_length, satisfies_full_condition,
    satisfies_pairwise_condition,
};
use shpl_core::symfunc::SparsePolynomial;
use shpl_core::*;

fn word(max_len: usize, max_letter: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=max_letter, 0..=max_len).prop_map(Word::from)
}

fn strict_partition(max_size: usize) -> impl Strategy<Value = StrictPartition> {
    let shapes = StrictPartition::all_up_to_size(max_size);
    prop::sample::select(shapes)
}

fn polynomial() -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 2), -3i64..4), 0..5).prop_map(|terms| {
        let mut p = SparsePolynomial::zero(2);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mixed_insertion_inverts(w in word(10, 5)) {
        let res = mixed_insertion(&w);
        let letters: Vec<u32> = inverse_mixed_insertion(&res.p, &res.q)
            .unwrap()
            .into_iter()
            .map(PrimedLetter::value)
            .collect();
        prop_assert_eq!(Word::from(letters), w);
    }

    #[test]
    fn insertion_tableaux_are_valid(w in word(10, 5)) {
        let res = mixed_insertion(&w);
        prop_assert!(ShiftedTableau::new(res.p.rows().to_vec()).is_ok());
        prop_assert!(StandardShiftedTableau::new(res.q.rows().to_vec()).is_ok());
        prop_assert_eq!(res.p.shape(), res.q.shape());
        prop_assert_eq!(res.p.content(), w.content());
    }

    #[test]
    fn recording_tableaux_agree(w in word(12, 6)) {
        prop_assert_eq!(mixed_insertion(&w).q, sk_insertion(&w).q);
    }

    #[test]
    fn mread_recovers_tableau(w in word(10, 5)) {
        let p = p_mix(&w);
        let m = mread(&p);
        let res = mixed_insertion(&m);
        prop_assert_eq!(&res.p, &p);
        prop_assert_eq!(res.q, special_recording_tableau(&p.shape()));
    }

    #[test]
    fn relations_preserve_insertion_tableau(w in word(8, 4)) {
        let p = p_mix(&w);
        for v in shifted_knuth_neighbors(&w) {
            prop_assert_eq!(&p_mix(&v), &p);
        }
    }

    #[test]
    fn phi_psi_roundtrip(w in word(10, 5)) {
        let r = sk_insertion(&w).p;
        let t = phi(&r);
        prop_assert_eq!(&t, &p_mix(&w));
        prop_assert_eq!(psi(&t), r.clone());
        prop_assert_eq!(read(&r), mread(&t));
    }

    #[test]
    fn decomposition_rows_are_maximal_hooks(w in word(10, 5)) {
        let r = sk_insertion(&w).p;
        prop_assert!(satisfies_full_condition(r.rows()));
        prop_assert!(satisfies_pairwise_condition(r.rows()));
    }

    #[test]
    fn first_row_is_longest_hook(w in word(10, 5)) {
        let p = p_mix(&w);
        let first = p.shape().parts().first().copied().unwrap_or(0);
        prop_assert_eq!(longest_hook_subword_length(&w), first);
        prop_assert_eq!(is_hook_word(&w), !w.is_empty() && p.rows().len() == 1);
    }

    #[test]
    fn standardization_commutes(w in word(9, 4)) {
        let s = stan_word(&w);
        let mixed = mixed_insertion(&w);
        let stan_mixed = mixed_insertion(&s);
        prop_assert_eq!(stan_mixed.p, stan_tableau(&mixed.p));
        prop_assert_eq!(stan_mixed.q, mixed.q);
        let sk = sk_insertion(&w);
        let stan_sk = sk_insertion(&s);
        prop_assert_eq!(stan_sk.p, stan_ssdt(&sk.p));
        prop_assert_eq!(stan_sk.q, sk.q);
    }

    #[test]
    fn deleting_a_corner_undoes_the_last_insertion(w in word(9, 5), x in 1u32..6) {
        let p = p_mix(&w);
        let mut longer = w.letters().to_vec();
        longer.push(x);
        let res = mixed_insertion(&Word::from(longer));
        let cell = res.q.cell_of(w.len() + 1).unwrap();
        let (back, y) = mixed_delete(&res.p, cell).unwrap();
        prop_assert_eq!(back, p);
        prop_assert_eq!(y, PrimedLetter::unprimed(x));
    }

    #[test]
    fn rsk_recording_rectifies(w in word(9, 4)) {
        let q = rsk_insertion(&w).q;
        prop_assert_eq!(jdt::rsk_to_mixed_recording(&q).unwrap(), mixed_insertion(&w).q);
    }

    #[test]
    fn delta_drops_the_first_letter(w in word(10, 5).prop_filter("nonempty", |w| !w.is_empty())) {
        let tail = Word::from(w.letters()[1..].to_vec());
        prop_assert_eq!(delta(&sk_insertion(&w).q).unwrap(), sk_insertion(&tail).q);
        prop_assert_eq!(delta(&mixed_insertion(&w).q).unwrap(), mixed_insertion(&tail).q);
    }

    #[test]
    fn rectification_ignores_corner_order(
        outer in strict_partition(7),
        inner in strict_partition(4),
        pick in any::<prop::sample::Index>(),
    ) {
        let fillings = skew_standard_fillings(&outer, &inner);
        prop_assume!(!fillings.is_empty());
        let t = pick.get(&fillings);
        prop_assert_eq!(
            rectify_with(t, CornerSchedule::TopFirst),
            rectify_with(t, CornerSchedule::BottomFirst)
        );
    }

    #[test]
    fn skew_reading_word_ignores_inner_filling(
        outer in strict_partition(6),
        inner in strict_partition(3),
        pick in any::<prop::sample::Index>(),
        fill in any::<prop::sample::Index>(),
    ) {
        prop_assume!(outer.contains(&inner));
        let skews = skew_shifted_tableaux(&outer, &inner, 3);
        prop_assume!(!skews.is_empty());
        let t = pick.get(&skews);
        let fillings = shifted_tableaux(&inner, 3);
        let f = fill.get(&fillings);
        prop_assert_eq!(skew_mread_with_filling(t, f).unwrap(), skew_mread(t));
    }

    #[test]
    fn mread_letters_of_positive_tableau_are_unprimed(w in word(8, 4)) {
        let p = p_mix(&w);
        prop_assert!(mread_letters(&p).iter().all(|x| !x.is_primed() && !x.is_negative()));
    }

    #[test]
    fn polynomial_ring_laws(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }
}
