//! Exhaustive checks over small ranges.

use std::collections::{BTreeMap, BTreeSet};

use shpl_core::enumerate::{shifted_tableaux, words, words_up_to};
use shpl_core::rewriting::{shifted_knuth_neighbors, RelationSet};
use shpl_core::ssdt::{decomposition_tableaux, is_hook_word, longest_hook_subword_length, p_sk};
use shpl_core::symfunc::lr::count_shifted_classes;
use shpl_core::symfunc::operators::{apply_p_operator, skew_q_by_operators, ShapeCombination};
use shpl_core::symfunc::{
    g_coeff_plactic, g_coeff_rectify, g_expand, lr_coeff, lr_expand, schur_p_poly, schur_q_poly,
    schur_s_poly, skew_schur_q_poly, LrMethod, SparsePolynomial,
};
use shpl_core::*;

fn by_content(ws: &[Word]) -> BTreeMap<Vec<usize>, Vec<Word>> {
    let mut out: BTreeMap<Vec<usize>, Vec<Word>> = BTreeMap::new();
    for w in ws {
        let mut c = w.content();
        while c.last() == Some(&0) {
            c.pop();
        }
        out.entry(c).or_default().push(w.clone());
    }
    out
}

#[test]
fn relation_classes_are_insertion_classes() {
    let all = words_up_to(5, 3);
    for (_, group) in by_content(&all) {
        let mut seen = BTreeSet::new();
        for w in &group {
            if !seen.insert(w.clone()) {
                continue;
            }
            let closure = RelationSet::shifted().closure(w);
            let p = p_mix(w);
            let same_p: BTreeSet<Word> = group.iter().filter(|v| p_mix(v) == p).cloned().collect();
            assert_eq!(closure, same_p, "class of {w}");
            seen.extend(closure);
        }
    }
}

#[test]
fn relations_are_plactic_and_avoid_hook_words() {
    for w in words(4, 4) {
        for v in shifted_knuth_neighbors(&w) {
            assert!(!is_hook_word(&w) && !is_hook_word(&v), "{w} ~ {v}");
            assert_eq!(p_rsk(&w), p_rsk(&v), "{w} ~ {v}");
        }
    }
}

#[test]
fn equivalence_is_a_congruence() {
    let short = words_up_to(3, 3);
    let classes: BTreeMap<ShiftedTableau, Vec<Word>> =
        short.iter().fold(BTreeMap::new(), |mut acc, w| {
            acc.entry(p_mix(w)).or_default().push(w.clone());
            acc
        });
    for us in classes.values().filter(|c| c.len() > 1) {
        for vs in classes.values() {
            let products: BTreeSet<ShiftedTableau> = us
                .iter()
                .flat_map(|u| vs.iter().map(move |v| p_mix(&u.concat(v))))
                .collect();
            assert_eq!(products.len(), 1);
        }
    }
}

#[test]
fn recording_tableaux_agree_exhaustively() {
    for w in words_up_to(6, 4) {
        assert_eq!(mixed_insertion(&w).q, sk_insertion(&w).q, "{w}");
    }
}

#[test]
fn phi_is_a_bijection() {
    for shape in StrictPartition::all_up_to_size(6) {
        let rs = decomposition_tableaux(&shape, 3);
        let ts = shifted_tableaux(&shape, 3);
        assert_eq!(rs.len(), ts.len(), "{shape}");
        let images: BTreeSet<ShiftedTableau> = rs
            .iter()
            .map(|r| {
                let t = phi(r);
                assert_eq!(&psi(&t), r);
                assert_eq!(read(r), mread(&t));
                t
            })
            .collect();
        assert_eq!(images, ts.into_iter().collect());
    }
}

#[test]
fn hook_words_have_one_row() {
    for w in words_up_to(6, 4) {
        assert_eq!(is_hook_word(&w), p_mix(&w).rows().len() == 1, "{w}");
    }
}

#[test]
fn longest_hook_matches_brute_force() {
    for w in words_up_to(7, 3) {
        let letters = w.letters();
        let brute = (0u32..1 << letters.len())
            .filter_map(|mask| {
                let sub: Vec<u32> = (0..letters.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| letters[i])
                    .collect();
                is_hook_word(&Word::from(sub)).then_some(mask.count_ones() as usize)
            })
            .max()
            .unwrap_or(0);
        assert_eq!(longest_hook_subword_length(&w), brute, "{w}");
    }
}

#[test]
fn lower_rows_insert_to_lower_shape() {
    for w in words_up_to(6, 4) {
        let r = p_sk(&w);
        let rows = r.rows();
        let parts = r.shape().parts().to_vec();
        for i in 0..rows.len() {
            let tail = rows[i..]
                .iter()
                .rev()
                .fold(Word::empty(), |acc, row| acc.concat(row));
            assert_eq!(p_mix(&tail).shape().parts(), &parts[i..], "{w} row {i}");
        }
    }
}

#[test]
fn standardization_lemmas() {
    let all = words_up_to(5, 3);
    for w in &all {
        let s = stan_word(w);
        assert_eq!(is_hook_word(w), is_hook_word(&s), "{w}");
        assert_eq!(p_mix(&s), stan_tableau(&p_mix(w)), "{w}");
        assert_eq!(p_sk(&s), stan_ssdt(&p_sk(w)), "{w}");
        assert_eq!(
            read(&stan_ssdt(&p_sk(w))),
            stan_word(&read(&p_sk(w))),
            "{w}"
        );
        assert_eq!(sk_insertion(&s).q, sk_insertion(w).q, "{w}");
        assert_eq!(mixed_insertion(&s).q, mixed_insertion(w).q, "{w}");
    }
    for (_, group) in by_content(&all) {
        for u in &group {
            for v in &group {
                assert_eq!(
                    p_mix(u) == p_mix(v),
                    p_mix(&stan_word(u)) == p_mix(&stan_word(v))
                );
            }
        }
    }
}

#[test]
fn delta_drops_first_letter_exhaustively() {
    for w in words_up_to(5, 3).into_iter().filter(|w| !w.is_empty()) {
        let tail = Word::from(w.letters()[1..].to_vec());
        assert_eq!(
            delta(&sk_insertion(&w).q).unwrap(),
            sk_insertion(&tail).q,
            "{w}"
        );
    }
}

#[test]
fn rsk_recording_rectifies_exhaustively() {
    for w in words_up_to(6, 3) {
        let q = rsk_insertion(&w).q;
        assert_eq!(
            jdt::rsk_to_mixed_recording(&q).unwrap(),
            mixed_insertion(&w).q,
            "{w}"
        );
    }
}

#[test]
fn lr_methods_agree() {
    for lambda in StrictPartition::all_up_to_size(6) {
        for mu in StrictPartition::all_up_to_size(lambda.size()) {
            for nu in StrictPartition::all_of_size(lambda.size() - mu.size()) {
                let b: Vec<u64> = LrMethod::ALL
                    .iter()
                    .map(|&m| lr_coeff(m, &lambda, &mu, &nu))
                    .collect();
                assert!(b.iter().all(|&x| x == b[0]), "{lambda} {mu} {nu}: {b:?}");
                assert_eq!(
                    b[0],
                    lr_coeff(LrMethod::Rectify, &lambda, &nu, &mu),
                    "{lambda} {mu} {nu}"
                );
            }
        }
    }
}

fn sum(terms: impl Iterator<Item = (SparsePolynomial, u64)>, nvars: usize) -> SparsePolynomial {
    terms.fold(SparsePolynomial::zero(nvars), |acc, (p, c)| {
        &acc + &p.scale(c as i64)
    })
}

#[test]
fn products_expand_by_lr_coefficients() {
    for mu in StrictPartition::all_up_to_size(4) {
        for nu in StrictPartition::all_up_to_size(4 - mu.size()) {
            let lhs = &schur_p_poly(&mu, 3) * &schur_p_poly(&nu, 3);
            let expansion = lr_expand(LrMethod::Rectify, &mu, &nu);
            let rhs = sum(expansion.iter().map(|(l, &b)| (schur_p_poly(l, 3), b)), 3);
            assert_eq!(lhs, rhs, "{mu} * {nu}");
        }
    }
}

#[test]
fn p_expands_in_schur_basis() {
    for lambda in StrictPartition::all_up_to_size(6) {
        let rhs = sum(
            g_expand(&lambda)
                .iter()
                .map(|(mu, &g)| (schur_s_poly(mu, 3), g)),
            3,
        );
        assert_eq!(schur_p_poly(&lambda, 3), rhs, "{lambda}");
    }
}

#[test]
fn g_methods_agree_for_every_plactic_representative() {
    for lambda in StrictPartition::all_up_to_size(5) {
        for mu in shpl_core::Partition::all_of_size(lambda.size()) {
            let g = g_coeff_rectify(&lambda, &mu);
            assert_eq!(g_coeff_plactic(&lambda, &mu), g, "{lambda} {mu}");
            // any plactic class of shape μ gives the same count
            for t in shpl_core::enumerate::standard_young_tableaux(&mu) {
                let word: Vec<u32> = t.rows().iter().rev().flatten().copied().collect();
                let class = shpl_core::rewriting::plactic_class_of(&Word::from(word));
                assert_eq!(count_shifted_classes(&lambda, &class.words), g);
            }
        }
    }
}

#[test]
fn skew_q_decomposes_into_q_functions() {
    for h in StrictPartition::all_up_to_size(5) {
        for g in StrictPartition::all_up_to_size(h.size())
            .into_iter()
            .filter(|g| h.contains(g))
        {
            let lhs = skew_q_by_operators(&h, &g, 3).unwrap();
            assert_eq!(lhs, skew_schur_q_poly(&h, &g, 3), "{h}/{g}");
            let rhs = sum(
                StrictPartition::all_of_size(h.size() - g.size())
                    .iter()
                    .map(|l| (schur_q_poly(l, 3), lr_coeff(LrMethod::Rectify, &h, &g, l))),
                3,
            );
            assert_eq!(lhs, rhs, "{h}/{g}");
        }
    }
}

#[test]
fn operator_products_expand_by_lr_coefficients() {
    let n = 6;
    for mu in StrictPartition::all_up_to_size(3) {
        for nu in StrictPartition::all_up_to_size(3) {
            for g in StrictPartition::all_up_to_size(n - mu.size() - nu.size()) {
                let start = ShapeCombination::from([(g.clone(), 1)]);
                let lhs = apply_p_operator(&mu, n, &apply_p_operator(&nu, n, &start));
                let mut rhs = ShapeCombination::new();
                for (l, b) in lr_expand(LrMethod::Rectify, &mu, &nu) {
                    for (shape, c) in apply_p_operator(&l, n, &start) {
                        *rhs.entry(shape).or_insert(0) += c * b as i64;
                    }
                }
                rhs.retain(|_, c| *c != 0);
                assert_eq!(lhs, rhs, "{mu} {nu} on {g}");
            }
        }
    }
}
