//! Shifted Littlewood-Richardson coefficients `b^λ_{μν}`, the coefficients
//! `g^λ_μ` of `P_λ` in the Schur basis, and the Pieri rule.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::enumerate::{
    shifted_tableaux_with_content, skew_standard_fillings, standard_shifted_tableaux,
    standard_young_tableaux,
};
use crate::error::{Error, Result};
use crate::insertion::{mread, p_mix, special_recording_tableau};
use crate::jdt::{rsk_to_mixed_recording, shifted_jdt_rectify};
use crate::letter::{PrimedLetter, Word};
use crate::partition::{Partition, StrictPartition};
use crate::rewriting::plactic_class_of;
use crate::tableau::{connected_components, is_border_strip, skew_cells, ShiftedTableau};

use super::operators::apply_word;

/// Coefficients of an expansion in a basis indexed by shapes.
pub type CoeffExpansion<K = StrictPartition> = BTreeMap<K, u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LrMethod {
    /// Pairs of shifted plactic classes whose product is a fixed class.
    Plactic,
    /// Standard skew fillings rectifying to a fixed tableau.
    Rectify,
    /// Tableaux whose reading word, as box-adding operators, grows `μ`
    /// into `λ`.
    BoxAdd,
}

impl LrMethod {
    pub const ALL: [LrMethod; 3] = [LrMethod::Plactic, LrMethod::Rectify, LrMethod::BoxAdd];

    pub fn name(self) -> &'static str {
        match self {
            LrMethod::Plactic => "plactic",
            LrMethod::Rectify => "rectify",
            LrMethod::BoxAdd => "boxadd",
        }
    }
}

impl fmt::Display for LrMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LrMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LrMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method `{s}`")))
    }
}

/// The fixed tableau of shape `λ` used by the class-counting rule: the
/// special recording tableau read as a tableau over `1..=|λ|`.
pub fn canonical_tableau(shape: &StrictPartition) -> ShiftedTableau {
    ShiftedTableau::from_standard(&special_recording_tableau(shape))
}

/// Shifted tableaux of `shape` holding each of `letters` (increasing)
/// exactly once.
fn distinct_letter_tableaux(shape: &StrictPartition, letters: &[u32]) -> Vec<ShiftedTableau> {
    let mut out = Vec::new();
    for t in standard_shifted_tableaux(shape) {
        let off_diagonal: Vec<(usize, usize)> = t
            .rows()
            .iter()
            .enumerate()
            .flat_map(|(i, row)| (1..row.len()).map(move |k| (i, k)))
            .collect();
        for primes in 0u32..1 << off_diagonal.len() {
            let mut rows: Vec<Vec<PrimedLetter>> = t
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&v| PrimedLetter::unprimed(letters[v - 1]))
                        .collect()
                })
                .collect();
            for (bit, &(i, k)) in off_diagonal.iter().enumerate() {
                if primes >> bit & 1 == 1 {
                    rows[i][k] = rows[i][k].with_prime();
                }
            }
            out.push(
                ShiftedTableau::new(rows).expect("distinct letters keep rows and columns strict"),
            );
        }
    }
    out
}

/// For every shape `λ`, the number of pairs `(U, V)` of shapes `μ, ν` over
/// complementary letter sets with `P_mix(mread U · mread V)` equal to the
/// canonical tableau of `λ`.
pub fn lr_expand_plactic(mu: &StrictPartition, nu: &StrictPartition) -> CoeffExpansion {
    let n = mu.size() + nu.size();
    let k = mu.size();
    let mut counts = CoeffExpansion::new();
    let mut canonical: BTreeMap<StrictPartition, ShiftedTableau> = BTreeMap::new();
    for subset in 0u32..1 << n {
        if subset.count_ones() as usize != k {
            continue;
        }
        let (left, right): (Vec<u32>, Vec<u32>) =
            (1..=n as u32).partition(|&x| subset >> (x - 1) & 1 == 1);
        let us: Vec<Word> = distinct_letter_tableaux(mu, &left)
            .iter()
            .map(mread)
            .collect();
        let vs: Vec<Word> = distinct_letter_tableaux(nu, &right)
            .iter()
            .map(mread)
            .collect();
        for u in &us {
            for v in &vs {
                let p = p_mix(&u.concat(v));
                let shape = p.shape();
                let target = canonical
                    .entry(shape.clone())
                    .or_insert_with(|| canonical_tableau(&shape));
                if p == *target {
                    *counts.entry(shape).or_insert(0) += 1;
                }
            }
        }
    }
    counts
}

pub fn lr_coeff_plactic(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> u64 {
    if lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    lr_expand_plactic(mu, nu).get(lambda).copied().unwrap_or(0)
}

/// Standard fillings of `λ / μ` that rectify to the special recording
/// tableau of shape `ν`.
pub fn lr_coeff_stembridge(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let target = special_recording_tableau(nu);
    skew_standard_fillings(lambda, mu)
        .iter()
        .filter(|t| shifted_jdt_rectify(t) == target)
        .count() as u64
}

/// Number of boxes of `λ / μ` on each diagonal `1..=λ_1`.
pub fn diagonal_content(lambda: &StrictPartition, mu: &StrictPartition) -> Vec<usize> {
    let mut content = vec![0; lambda.parts().first().copied().unwrap_or(0)];
    for c in skew_cells(lambda, mu) {
        content[c.diagonal() - 1] += 1;
    }
    content
}

/// Tableaux `T` of shape `ν` with `u^{mread T}(μ) = λ`. Only tableaux whose
/// content matches the diagonals of `λ / μ` can qualify.
pub fn boxadd_witnesses(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> Vec<ShiftedTableau> {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return Vec::new();
    }
    shifted_tableaux_with_content(nu, &diagonal_content(lambda, mu))
        .into_iter()
        .filter(|t| apply_word(&mread(t), mu).as_ref() == Some(lambda))
        .collect()
}

pub fn lr_coeff_boxadd(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> u64 {
    boxadd_witnesses(lambda, mu, nu).len() as u64
}

pub fn lr_coeff(
    method: LrMethod,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> u64 {
    match method {
        LrMethod::Plactic => lr_coeff_plactic(lambda, mu, nu),
        LrMethod::Rectify => lr_coeff_stembridge(lambda, mu, nu),
        LrMethod::BoxAdd => lr_coeff_boxadd(lambda, mu, nu),
    }
}

/// `P_μ P_ν = Σ_λ b^λ_{μν} P_λ`, nonzero terms only.
pub fn lr_expand(method: LrMethod, mu: &StrictPartition, nu: &StrictPartition) -> CoeffExpansion {
    if method == LrMethod::Plactic {
        return lr_expand_plactic(mu, nu);
    }
    StrictPartition::all_of_size(mu.size() + nu.size())
        .into_iter()
        .filter_map(|l| {
            let b = lr_coeff(method, &l, mu, nu);
            (b > 0).then_some((l, b))
        })
        .collect()
}

/// The reading word of the Young tableau of shape `μ` whose rows hold
/// consecutive integers, read bottom row first.
pub fn superstandard_reading_word(shape: &Partition) -> Word {
    let mut start = 1u32;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &len in shape.parts() {
        rows.push((start..start + len as u32).collect());
        start += len as u32;
    }
    Word::from(rows.into_iter().rev().flatten().collect::<Vec<_>>())
}

/// Number of distinct mixed insertion tableaux of shape `λ` among `words`.
pub fn count_shifted_classes(lambda: &StrictPartition, words: &[Word]) -> u64 {
    words
        .iter()
        .map(p_mix)
        .filter(|p| p.shape() == *lambda)
        .collect::<BTreeSet<_>>()
        .len() as u64
}

/// Shifted plactic classes of shape `λ` inside the plactic class of the
/// superstandard reading word of shape `μ`.
pub fn g_coeff_plactic(lambda: &StrictPartition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let class = plactic_class_of(&superstandard_reading_word(mu));
    count_shifted_classes(lambda, &class.words)
}

/// Standard Young tableaux of shape `μ` whose shifted embedding
/// rectifies to the special recording tableau of shape `λ`.
pub fn g_coeff_rectify(lambda: &StrictPartition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let target = special_recording_tableau(lambda);
    standard_young_tableaux(mu)
        .iter()
        .filter(|q| rsk_to_mixed_recording(q).expect("standard") == target)
        .count() as u64
}

/// `P_λ = Σ_μ g^λ_μ s_μ`, nonzero terms only.
pub fn g_expand(lambda: &StrictPartition) -> CoeffExpansion<Partition> {
    Partition::all_of_size(lambda.size())
        .into_iter()
        .filter_map(|mu| {
            let g = g_coeff_rectify(lambda, &mu);
            (g > 0).then_some((mu, g))
        })
        .collect()
}

/// `P_μ P_(k) = Σ 2^{c(λ/μ) - 1} P_λ` over the `λ` for which `λ / μ` is a
/// border strip of size `k` with `c(λ/μ)` connected components.
pub fn pieri_expand(mu: &StrictPartition, k: usize) -> CoeffExpansion {
    StrictPartition::all_of_size(mu.size() + k)
        .into_iter()
        .filter(|l| l.contains(mu) && is_border_strip(l, mu))
        .map(|l| {
            let c = connected_components(&l, mu);
            (l, 1u64 << (c - 1))
        })
        .collect()
}
