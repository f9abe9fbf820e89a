//! Diagonal box-adding operators on shifted shapes, the relations they
//! satisfy, and the operator form of the Cauchy identity.

use std::collections::{BTreeMap, HashMap};

use crate::enumerate::shifted_tableaux;
use crate::error::{Error, Result};
use crate::insertion::mread;
use crate::letter::Word;
use crate::partition::StrictPartition;
use crate::rewriting::RelationSet;

use super::poly::SparsePolynomial;
use super::schur::schur_q_poly;

/// Default size bound of the shape universe.
pub const DEFAULT_SHAPE_BOUND: usize = 12;

/// A strict partition as the set of its parts: bit `k` is set when `k`
/// is a part.
type Mask = u64;

fn mask_of(shape: &StrictPartition) -> Mask {
    shape.parts().iter().fold(0, |m, &p| m | 1 << p)
}

fn shape_of(mask: Mask) -> StrictPartition {
    let parts = (1..64).rev().filter(|&k| mask >> k & 1 == 1).collect();
    StrictPartition::new(parts).expect("distinct parts")
}

fn mask_size(mask: Mask) -> usize {
    (1..64).filter(|&k| mask >> k & 1 == 1).sum()
}

/// The row ending on diagonal `j - 1` grows by one box, or a new row of
/// length 1 starts when `j = 1`.
fn add_box_mask(mask: Mask, j: usize) -> Option<Mask> {
    if j == 0 || j >= 63 || mask >> j & 1 == 1 {
        return None;
    }
    if j == 1 {
        return Some(mask | 2);
    }
    (mask >> (j - 1) & 1 == 1).then(|| mask & !(1 << (j - 1)) | 1 << j)
}

/// `u_j(λ)`: `λ` with one more box on diagonal `j` (numbered from 1 at
/// the main diagonal), or `None` when that is not a shifted shape.
pub fn add_box_on_diagonal(shape: &StrictPartition, j: usize) -> Option<StrictPartition> {
    add_box_mask(mask_of(shape), j).map(shape_of)
}

fn apply_word_mask(word: &[u32], mut mask: Mask) -> Option<Mask> {
    for &j in word.iter().rev() {
        mask = add_box_mask(mask, j as usize)?;
    }
    Some(mask)
}

/// `u^w(λ) = u_{w_1} ... u_{w_n}(λ)`; the last letter acts first.
pub fn apply_word(word: &Word, shape: &StrictPartition) -> Option<StrictPartition> {
    apply_word_mask(word.letters(), mask_of(shape)).map(shape_of)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Image {
    Zero,
    Shape(StrictPartition),
    Overflow,
}

/// A partial map on the shifted shapes of size at most `bound`: each shape
/// goes to a shape or to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeOperator {
    bound: usize,
    images: BTreeMap<StrictPartition, Image>,
}

impl ShapeOperator {
    pub fn from_rule(
        bound: usize,
        rule: impl Fn(&StrictPartition) -> Option<StrictPartition>,
    ) -> Self {
        let images = StrictPartition::all_up_to_size(bound)
            .into_iter()
            .map(|s| {
                let image = match rule(&s) {
                    None => Image::Zero,
                    Some(t) if t.size() > bound => Image::Overflow,
                    Some(t) => Image::Shape(t),
                };
                (s, image)
            })
            .collect();
        ShapeOperator { bound, images }
    }

    pub fn identity(bound: usize) -> Self {
        Self::from_rule(bound, |s| Some(s.clone()))
    }

    /// The diagonal box-adding operator `u_j`.
    pub fn box_add(j: usize, bound: usize) -> Self {
        Self::from_rule(bound, |s| add_box_on_diagonal(s, j))
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn budget(&self, shape: &StrictPartition) -> Error {
        Error::Budget {
            what: format!("shape operator applied to {shape}"),
            limit: self.bound,
        }
    }

    /// Fails with [`Error::Budget`] when `shape` or its image is larger
    /// than the bound.
    pub fn apply(&self, shape: &StrictPartition) -> Result<Option<StrictPartition>> {
        match self.images.get(shape) {
            None | Some(Image::Overflow) => Err(self.budget(shape)),
            Some(Image::Zero) => Ok(None),
            Some(Image::Shape(t)) => Ok(Some(t.clone())),
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ShapeOperator) -> ShapeOperator {
        let bound = self.bound.min(first.bound);
        let images = first
            .images
            .iter()
            .filter(|(s, _)| s.size() <= bound)
            .map(|(s, image)| {
                let image = match image {
                    Image::Shape(t) => match self.images.get(t) {
                        Some(Image::Shape(u)) if u.size() <= bound => Image::Shape(u.clone()),
                        Some(Image::Zero) => Image::Zero,
                        _ => Image::Overflow,
                    },
                    Image::Overflow => Image::Overflow,
                    Image::Zero => Image::Zero,
                };
                (s.clone(), image)
            })
            .collect();
        ShapeOperator { bound, images }
    }

    /// The product `ops[0] ∘ ops[1] ∘ ...`, so the last operator acts first.
    pub fn product(ops: &[&ShapeOperator], bound: usize) -> ShapeOperator {
        ops.iter()
            .rev()
            .fold(ShapeOperator::identity(bound), |acc, op| op.compose(&acc))
    }

    /// Whether the two operators agree on every shape of size at most
    /// `max_size`.
    pub fn agrees_below(&self, other: &ShapeOperator, max_size: usize) -> Result<bool> {
        for (s, image) in self.images.iter().filter(|(s, _)| s.size() <= max_size) {
            let theirs = other.images.get(s);
            if *image == Image::Overflow || theirs.is_none_or(|i| *i == Image::Overflow) {
                return Err(self.budget(s));
            }
            if Some(image) != theirs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_below(&self, max_size: usize) -> Result<bool> {
        let zero = ShapeOperator::from_rule(self.bound, |_| None);
        self.agrees_below(&zero, max_size)
    }
}

/// `u_1, ..., u_n` on shapes of size at most `bound`.
pub fn box_adders(n: usize, bound: usize) -> Vec<ShapeOperator> {
    (1..=n).map(|j| ShapeOperator::box_add(j, bound)).collect()
}

fn words_agree(lhs: &[u32], rhs: &[u32], max_size: usize) -> bool {
    StrictPartition::all_up_to_size(max_size)
        .iter()
        .map(mask_of)
        .all(|m| apply_word_mask(lhs, m) == apply_word_mask(rhs, m))
}

/// A relation among box-adding operators that failed, as the two words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub lhs: Word,
    pub rhs: Word,
}

/// Checks the nil-Temperley-Lieb relations of type B on every shape of
/// size at most `max_size`, returning the failures.
pub fn nil_tl_b_failures(max_size: usize) -> Vec<RelationFailure> {
    // words of length 3 on such shapes never touch a diagonal past this
    let n = max_size as u32 + 4;
    let mut cases: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) >= 2 {
                cases.push((vec![i, j], vec![j, i]));
            }
        }
        cases.push((vec![i, i], vec![]));
        if i >= 2 && i < n {
            cases.push((vec![i, i + 1, i], vec![]));
        }
        if i < n {
            cases.push((vec![i + 1, i, i + 1], vec![]));
        }
    }
    let shapes: Vec<Mask> = StrictPartition::all_up_to_size(max_size)
        .iter()
        .map(mask_of)
        .collect();
    cases
        .into_iter()
        .filter(|(lhs, rhs)| {
            shapes.iter().any(|&m| {
                let left = apply_word_mask(lhs, m);
                // an empty right side stands for the zero operator
                let right = if rhs.is_empty() {
                    None
                } else {
                    apply_word_mask(rhs, m)
                };
                left != right
            })
        })
        .map(|(lhs, rhs)| RelationFailure {
            lhs: Word::from(lhs),
            rhs: Word::from(rhs),
        })
        .collect()
}

pub fn nil_tl_b_check(max_size: usize) -> bool {
    nil_tl_b_failures(max_size).is_empty()
}

/// Checks every instance of the shifted plactic relations as an identity
/// of box-adding operators on shapes of size at most `max_size`.
pub fn shifted_plactic_relation_failures(max_size: usize) -> Vec<RelationFailure> {
    let n = max_size as u32 + 4;
    let mut out = Vec::new();
    for rule in RelationSet::shifted().rules() {
        for (lhs, rhs) in rule.instances(n) {
            if !words_agree(lhs.letters(), rhs.letters(), max_size) {
                out.push(RelationFailure { lhs, rhs });
            }
        }
    }
    out
}

type State = HashMap<(Mask, Vec<u32>), i64>;

fn check_bound(mask: Mask, bound: usize) -> Result<()> {
    if mask_size(mask) > bound {
        return Err(Error::Budget {
            what: format!("shape {} in operator expansion", shape_of(mask)),
            limit: bound,
        });
    }
    Ok(())
}

/// Applies `1 + x op`, or `Σ_k x^k op^k` when `geometric`, to every term,
/// dropping terms of total degree above `max_degree`.
fn apply_series(
    state: &State,
    var: usize,
    step: &dyn Fn(Mask) -> Result<Option<Mask>>,
    geometric: bool,
    max_degree: u32,
) -> Result<State> {
    let mut out = state.clone();
    let mut frontier = state.clone();
    loop {
        let mut next: State = HashMap::new();
        for ((m, e), c) in &frontier {
            if e.iter().sum::<u32>() >= max_degree {
                continue;
            }
            if let Some(m2) = step(*m)? {
                let mut e2 = e.clone();
                e2[var] += 1;
                *next.entry((m2, e2)).or_insert(0) += c;
            }
        }
        next.retain(|_, c| *c != 0);
        for (k, c) in &next {
            *out.entry(k.clone()).or_insert(0) += c;
        }
        if !geometric || next.is_empty() {
            break;
        }
        frontier = next;
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// `Π_i B(x_i)` applied to `start`, truncated at x-degree `max_degree`,
/// with `B(x) = Π_{j=n..1}(1 + x u_j) Π_{j=1..n}(1 - x u_j)^{-1}` for the
/// given partial maps `u_1..u_n`.
fn cauchy_product(
    ops: &[&dyn Fn(Mask) -> Result<Option<Mask>>],
    start: Mask,
    nvars: usize,
    max_degree: u32,
) -> Result<State> {
    let mut state: State = HashMap::from([((start, vec![0; nvars]), 1)]);
    for var in 0..nvars {
        // rightmost factors act first
        for op in ops.iter().rev() {
            state = apply_series(&state, var, *op, true, max_degree)?;
        }
        for op in ops.iter() {
            state = apply_series(&state, var, *op, false, max_degree)?;
        }
    }
    Ok(state)
}

type Step<'a> = Box<dyn Fn(Mask) -> Result<Option<Mask>> + 'a>;

fn box_adder_steps(n: usize, bound: usize) -> Vec<Step<'static>> {
    (1..=n)
        .map(|j| {
            Box::new(move |m: Mask| match add_box_mask(m, j) {
                Some(m2) => check_bound(m2, bound).map(|_| Some(m2)),
                None => Ok(None),
            }) as Step
        })
        .collect()
}

/// `G_{h/g}(x_1..x_m)`: the `h` coefficient of `Π_i B(x_i) g` for the
/// partial maps `ops = [u_1, ..., u_n]`, truncated at x-degree
/// `max_degree`.
pub fn generalized_g(
    h: &StrictPartition,
    g: &StrictPartition,
    ops: &[ShapeOperator],
    nvars: usize,
    max_degree: u32,
) -> Result<SparsePolynomial> {
    let steps: Vec<Step<'_>> = ops
        .iter()
        .map(|op| Box::new(move |m: Mask| Ok(op.apply(&shape_of(m))?.map(|t| mask_of(&t)))) as Step)
        .collect();
    let refs: Vec<&dyn Fn(Mask) -> Result<Option<Mask>>> =
        steps.iter().map(|b| b.as_ref()).collect();
    let state = cauchy_product(&refs, mask_of(g), nvars, max_degree)?;
    let target = mask_of(h);
    let mut p = SparsePolynomial::zero(nvars);
    for ((m, e), c) in state {
        if m == target {
            p.add_term(e, c);
        }
    }
    Ok(p)
}

/// The skew Schur `Q` polynomial of `h / g` computed as `G_{h/g}` with
/// box-adding operators.
pub fn skew_q_by_operators(
    h: &StrictPartition,
    g: &StrictPartition,
    nvars: usize,
) -> Result<SparsePolynomial> {
    if !h.contains(g) {
        return Ok(SparsePolynomial::zero(nvars));
    }
    let n = h.parts().first().copied().unwrap_or(0);
    let ops = box_adders(n, h.size().max(DEFAULT_SHAPE_BOUND));
    generalized_g(h, g, &ops, nvars, (h.size() - g.size()) as u32)
}

/// Mixed reading words of the shifted tableaux of `shape` over `1..=n`:
/// the monomials of `P_λ(u_1..u_n)`.
pub fn p_monomials(shape: &StrictPartition, n: usize) -> Vec<Word> {
    shifted_tableaux(shape, n as u32)
        .iter()
        .map(mread)
        .collect()
}

/// A linear combination of shapes.
pub type ShapeCombination = BTreeMap<StrictPartition, i64>;

/// `P_λ(u)` applied to a combination of shapes, with `u_1..u_n` the
/// box-adding operators.
pub fn apply_p_operator(
    shape: &StrictPartition,
    n: usize,
    input: &ShapeCombination,
) -> ShapeCombination {
    let monomials = p_monomials(shape, n);
    let mut out = ShapeCombination::new();
    for (g, &c) in input {
        let m = mask_of(g);
        for w in &monomials {
            if let Some(h) = apply_word_mask(w.letters(), m) {
                *out.entry(shape_of(h)).or_insert(0) += c;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Whether `P_λ(u) P_μ(u) = P_μ(u) P_λ(u)` on every shape `g` with
/// `|g| + |λ| + |μ| <= max_size`, using box-adders `u_1..u_{max_size}`.
pub fn p_operators_commute(a: &StrictPartition, b: &StrictPartition, max_size: usize) -> bool {
    let n = max_size;
    let room = max_size.saturating_sub(a.size() + b.size());
    StrictPartition::all_up_to_size(room).into_iter().all(|g| {
        let start = ShapeCombination::from([(g, 1)]);
        let ab = apply_p_operator(a, n, &apply_p_operator(b, n, &start));
        let ba = apply_p_operator(b, n, &apply_p_operator(a, n, &start));
        ab == ba
    })
}

/// A coefficient on which the two sides of the operator Cauchy identity
/// differ: starting shape, final shape, exponent vector and the two values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyMismatch {
    pub start: StrictPartition,
    pub end: StrictPartition,
    pub exponents: Vec<u32>,
    pub lhs: i64,
    pub rhs: i64,
}

/// Compares `Σ_λ Q_λ(x) P_λ(u) g` with `Π_i B(x_i) g` coefficientwise up
/// to x-degree `max_degree`, for box-adders `u_1..u_n` and every start
/// shape in `starts`. Fails with [`Error::Budget`] when a shape would
/// exceed `bound`.
pub fn cauchy_mismatches(
    n_ops: usize,
    nvars: usize,
    max_degree: u32,
    starts: &[StrictPartition],
    bound: usize,
) -> Result<Vec<CauchyMismatch>> {
    let steps = box_adder_steps(n_ops, bound);
    let refs: Vec<&dyn Fn(Mask) -> Result<Option<Mask>>> =
        steps.iter().map(|b| b.as_ref()).collect();
    let shapes = StrictPartition::all_up_to_size(max_degree as usize);
    let q: Vec<(Vec<Word>, SparsePolynomial)> = shapes
        .iter()
        .map(|l| (p_monomials(l, n_ops), schur_q_poly(l, nvars)))
        .collect();
    let mut out = Vec::new();
    for g in starts {
        let m = mask_of(g);
        let rhs = cauchy_product(&refs, m, nvars, max_degree)?;
        let mut lhs: State = HashMap::new();
        for (monomials, poly) in &q {
            for w in monomials {
                let Some(h) = apply_word_mask(w.letters(), m) else {
                    continue;
                };
                check_bound(h, bound)?;
                for (e, &c) in poly.terms() {
                    *lhs.entry((h, e.clone())).or_insert(0) += c;
                }
            }
        }
        lhs.retain(|_, c| *c != 0);
        let mut keys: Vec<&(Mask, Vec<u32>)> = lhs.keys().chain(rhs.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let (a, b) = (
                lhs.get(k).copied().unwrap_or(0),
                rhs.get(k).copied().unwrap_or(0),
            );
            if a != b {
                out.push(CauchyMismatch {
                    start: g.clone(),
                    end: shape_of(k.0),
                    exponents: k.1.clone(),
                    lhs: a,
                    rhs: b,
                });
            }
        }
    }
    Ok(out)
}

/// [`cauchy_mismatches`] over every start shape of size at most
/// `n_ops + 1`.
pub fn cauchy_check(n_ops: usize, nvars: usize, max_degree: u32) -> Result<bool> {
    let starts = StrictPartition::all_up_to_size(n_ops + 1);
    let bound = n_ops + 1 + max_degree as usize;
    Ok(cauchy_mismatches(n_ops, nvars, max_degree, &starts, bound)?.is_empty())
}
