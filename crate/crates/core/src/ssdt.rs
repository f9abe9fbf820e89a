//! Hook words, semistandard decomposition tableaux and SK insertion.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::words;
use crate::error::{Error, Result};
use crate::insertion::{mread, p_mix, InsertionResult};
use crate::letter::Word;
use crate::partition::StrictPartition;
use crate::tableau::{ShiftedTableau, StandardShiftedTableau};

/// Length of the maximal strictly decreasing prefix.
fn decreasing_prefix_len(w: &[u32]) -> usize {
    if w.is_empty() {
        return 0;
    }
    1 + w.windows(2).take_while(|p| p[0] > p[1]).count()
}

fn is_hook(w: &[u32]) -> bool {
    let k = decreasing_prefix_len(w);
    k > 0 && w[k..].windows(2).all(|p| p[0] <= p[1])
}

/// A strictly decreasing run followed by a weakly increasing one. The
/// decreasing part is nonempty, so the empty word is not a hook word.
pub fn is_hook_word(w: &Word) -> bool {
    is_hook(w.letters())
}

/// A hook word cut after its maximal strictly decreasing prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookWordSplit {
    pub decreasing: Word,
    pub increasing: Word,
}

impl fmt::Display for HookWordSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.decreasing, self.increasing)
    }
}

pub fn hook_split(w: &Word) -> Result<HookWordSplit> {
    if !is_hook_word(w) {
        return Err(Error::Split(w.to_string()));
    }
    let k = decreasing_prefix_len(w.letters());
    Ok(HookWordSplit {
        decreasing: Word::from(w.letters()[..k].to_vec()),
        increasing: Word::from(w.letters()[k..].to_vec()),
    })
}

fn longest_hook(w: &[u32]) -> usize {
    let n = w.len();
    // dec[i]: longest strictly decreasing subsequence ending at i
    // inc[i]: longest weakly increasing subsequence starting at i
    let mut dec = vec![1usize; n];
    for i in 0..n {
        for j in 0..i {
            if w[j] > w[i] {
                dec[i] = dec[i].max(dec[j] + 1);
            }
        }
    }
    let mut inc = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if w[j] >= w[i] {
                inc[i] = inc[i].max(inc[j] + 1);
            }
        }
    }
    (0..n).map(|i| dec[i] + inc[i] - 1).max().unwrap_or(0)
}

/// Length of the longest hook subword, by dynamic programming over the
/// letter where the decreasing run turns into the increasing one.
pub fn longest_hook_subword_length(w: &Word) -> usize {
    longest_hook(w.letters())
}

/// A semistandard decomposition tableau: row `i` is a hook word `u_i` of
/// length `λ_i` that is a longest hook subword of `u_l ... u_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecompositionTableau {
    rows: Vec<Word>,
}

/// Which rows fail the maximality condition checked against every row
/// below; the first failing row, if any.
fn full_condition_failure(rows: &[Word]) -> Option<usize> {
    let mut below: Vec<u32> = Vec::new();
    for i in (0..rows.len()).rev() {
        let mut word = below.clone();
        word.extend_from_slice(rows[i].letters());
        if i + 1 < rows.len() && longest_hook(&word) != rows[i].len() {
            return Some(i + 1);
        }
        below = word;
    }
    None
}

/// Same, but comparing each row only with the row right below it.
fn pairwise_condition_failure(rows: &[Word]) -> Option<usize> {
    (0..rows.len().saturating_sub(1))
        .rev()
        .find(|&i| longest_hook(rows[i + 1].concat(&rows[i]).letters()) != rows[i].len())
        .map(|i| i + 1)
}

impl DecompositionTableau {
    /// Validates the rows, failing with [`Error::Shape`],
    /// [`Error::Hook`] or [`Error::Maximality`].
    pub fn new(rows: Vec<Word>) -> Result<Self> {
        StrictPartition::new(rows.iter().map(Word::len).collect())?;
        if let Some(i) = rows.iter().position(|u| !is_hook_word(u)) {
            return Err(Error::Hook { row: i + 1 });
        }
        let full = full_condition_failure(&rows);
        let pairwise = pairwise_condition_failure(&rows);
        if full.is_some() != pairwise.is_some() {
            return Err(Error::Internal(format!(
                "maximality checks disagree on rows {rows:?}: full {full:?}, pairwise {pairwise:?}"
            )));
        }
        if let Some(row) = full {
            return Err(Error::Maximality { row });
        }
        Ok(DecompositionTableau { rows })
    }

    pub fn empty() -> Self {
        DecompositionTableau { rows: Vec::new() }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Word>) -> Self {
        debug_assert!(
            DecompositionTableau::new(rows.clone()).is_ok(),
            "invalid decomposition tableau {rows:?}"
        );
        DecompositionTableau { rows }
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.rows.iter().map(Word::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Word::len).sum()
    }

    pub fn content(&self) -> Vec<usize> {
        self.read().content()
    }

    /// `u_l u_{l-1} ... u_1`.
    pub fn read(&self) -> Word {
        self.rows
            .iter()
            .rev()
            .fold(Word::empty(), |acc, row| acc.concat(row))
    }
}

/// Whether each row is a longest hook subword of everything from the
/// bottom row up to it.
pub fn satisfies_full_condition(rows: &[Word]) -> bool {
    rows.iter().all(is_hook_word) && full_condition_failure(rows).is_none()
}

/// Whether each row is a longest hook subword of itself preceded by the
/// row below.
pub fn satisfies_pairwise_condition(rows: &[Word]) -> bool {
    rows.iter().all(is_hook_word) && pairwise_condition_failure(rows).is_none()
}

impl fmt::Display for DecompositionTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(Word::to_string).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl fmt::Debug for DecompositionTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for DecompositionTableau {
    type Err = Error;

    /// Rows separated by `/`, each a word: `96524 / 511 / 34`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DecompositionTableau::empty());
        }
        let rows = s
            .split('/')
            .map(|r| {
                let w: Word = r.parse()?;
                if w.is_empty() {
                    return Err(Error::Parse("empty row".into()));
                }
                Ok(w)
            })
            .collect::<Result<Vec<_>>>()?;
        DecompositionTableau::new(rows)
    }
}

fn insert_into_row(u: &mut Vec<u32>, x: u32) -> Option<u32> {
    let k = decreasing_prefix_len(u);
    if u.len() == k || u[u.len() - 1] <= x {
        u.push(x);
        return None;
    }
    let j = k + u[k..]
        .iter()
        .position(|&y| y > x)
        .expect("last letter exceeds x");
    let y = std::mem::replace(&mut u[j], x);
    // largest letter of the decreasing part that is <= y; it sits leftmost
    // among such letters because the part is strictly decreasing
    let i = u[..k]
        .iter()
        .position(|&z| z <= y)
        .expect("decreasing part ends below y");
    Some(std::mem::replace(&mut u[i], y))
}

/// Inserts `x` into the hook word `u`, returning the new row and the
/// letter bumped out of it, if any.
pub fn sk_insert_into_row(u: &Word, x: u32) -> Result<(Word, Option<u32>)> {
    if !u.is_empty() && !is_hook_word(u) {
        return Err(Error::Split(u.to_string()));
    }
    let mut letters = u.letters().to_vec();
    let bumped = insert_into_row(&mut letters, x);
    Ok((Word::from(letters), bumped))
}

/// SK-inserts `x` into `r`, returning the new tableau and the 1-based row
/// that grew.
pub fn sk_insert_letter(r: &DecompositionTableau, x: u32) -> (DecompositionTableau, usize) {
    let mut rows: Vec<Vec<u32>> = r.rows.iter().map(|w| w.letters().to_vec()).collect();
    let row = sk_insert_in_place(&mut rows, x);
    (
        DecompositionTableau::from_rows_unchecked(rows.into_iter().map(Word::from).collect()),
        row,
    )
}

fn sk_insert_in_place(rows: &mut Vec<Vec<u32>>, x: u32) -> usize {
    let mut letter = x;
    let mut i = 0;
    loop {
        if i == rows.len() {
            rows.push(vec![letter]);
            return i + 1;
        }
        match insert_into_row(&mut rows[i], letter) {
            None => return i + 1,
            Some(y) => {
                letter = y;
                i += 1;
            }
        }
    }
}

/// `(P_sk(w), Q_sk(w))`.
pub fn sk_insertion(w: &Word) -> InsertionResult<DecompositionTableau, StandardShiftedTableau> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in w.letters().iter().enumerate() {
        let row = sk_insert_in_place(&mut rows, x);
        if row > q.len() {
            q.push(Vec::new());
        }
        q[row - 1].push(i + 1);
    }
    InsertionResult {
        p: DecompositionTableau::from_rows_unchecked(rows.into_iter().map(Word::from).collect()),
        q: StandardShiftedTableau::from_rows_unchecked(q),
    }
}

/// `P_sk(w)` alone.
pub fn p_sk(w: &Word) -> DecompositionTableau {
    sk_insertion(w).p
}

/// The reading word of a decomposition tableau.
pub fn read(r: &DecompositionTableau) -> Word {
    r.read()
}

/// The shifted tableau with the same reading word.
pub fn phi(r: &DecompositionTableau) -> ShiftedTableau {
    p_mix(&r.read())
}

/// Inverse of [`phi`].
pub fn psi(t: &ShiftedTableau) -> DecompositionTableau {
    p_sk(&mread(t))
}

/// Hook words of length `len` over `1..=max_letter`.
pub fn hook_words(len: usize, max_letter: u32) -> Vec<Word> {
    words(len, max_letter)
        .into_iter()
        .filter(is_hook_word)
        .collect()
}

/// All decomposition tableaux of `shape` over `1..=max_letter`, by
/// filtering products of hook words.
pub fn decomposition_tableaux(
    shape: &StrictPartition,
    max_letter: u32,
) -> Vec<DecompositionTableau> {
    fn rec(
        pools: &[Vec<Word>],
        i: usize,
        cur: &mut Vec<Word>,
        out: &mut Vec<DecompositionTableau>,
    ) {
        // rows are chosen bottom-up so the pairwise condition prunes early
        if i == 0 {
            out.push(DecompositionTableau::from_rows_unchecked(
                cur.iter().rev().cloned().collect(),
            ));
            return;
        }
        for u in &pools[i - 1] {
            if let Some(below) = cur.last() {
                if longest_hook(below.concat(u).letters()) != u.len() {
                    continue;
                }
            }
            cur.push(u.clone());
            rec(pools, i - 1, cur, out);
            cur.pop();
        }
    }
    let parts = shape.parts();
    let pools: Vec<Vec<Word>> = parts
        .iter()
        .map(|&len| hook_words(len, max_letter))
        .collect();
    let mut out = Vec::new();
    rec(&pools, parts.len(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn hook_words_and_splits() {
        assert_eq!(hook_split(&w("96524")).unwrap().to_string(), "9652|4");
        assert_eq!(hook_split(&w("34")).unwrap().to_string(), "3|4");
        assert!(!is_hook_word(&w("1212")));
        assert_eq!(hook_split(&w("1212")), Err(Error::Split("1212".into())));
        assert!(!is_hook_word(&Word::empty()));
        assert!(is_hook_word(&w("1")));
    }

    #[test]
    fn longest_hook_examples() {
        assert_eq!(longest_hook_subword_length(&w("3415961254")), 5);
        assert_eq!(longest_hook_subword_length(&w("654321")), 6);
        assert_eq!(longest_hook_subword_length(&Word::empty()), 0);
    }

    #[test]
    fn row_insertions() {
        let cases = [
            ("6542114", 3, "6542113", Some(4)),
            ("63215", 4, "65214", Some(3)),
            ("522", 3, "5223", None),
        ];
        for (u, x, expect, bumped) in cases {
            let (row, out) = sk_insert_into_row(&w(u), x).unwrap();
            assert_eq!(row.to_string(), expect);
            assert_eq!(out, bumped);
        }
    }

    #[test]
    fn tableau_insertion_example() {
        let r: DecompositionTableau = "6542114 / 63215 / 522".parse().unwrap();
        let (s, row) = sk_insert_letter(&r, 3);
        assert_eq!(s.to_string(), "6542113 / 65214 / 5223");
        assert_eq!(row, 3);
    }

    #[test]
    fn worked_sk_insertion() {
        let res = sk_insertion(&w("3415961254"));
        assert_eq!(res.p.to_string(), "96524 / 511 / 34");
        assert_eq!(res.q.to_string(), "1 2 4 5 9 / 3 6 8 / 7 10");
        assert_eq!(res.p.read().to_string(), "3451196524");
        let single = sk_insertion(&w("7"));
        assert_eq!(single.p.to_string(), "7");
        assert_eq!(single.q.to_string(), "1");
    }

    #[test]
    fn validation() {
        let r: DecompositionTableau = "96524 / 511 / 34".parse().unwrap();
        assert_eq!(r.shape().parts(), &[5, 3, 2]);
        assert_eq!(r.content(), vec![2, 1, 1, 2, 2, 1, 0, 0, 1]);
        assert!("8523 / 617 / 4".parse::<DecompositionTableau>().is_ok());
        assert!(matches!(
            "12 / 12".parse::<DecompositionTableau>(),
            Err(Error::Shape(_))
        ));
        assert_eq!(
            "1212 / 1".parse::<DecompositionTableau>(),
            Err(Error::Hook { row: 1 })
        );
        // 12 is not a longest hook subword of 3 12 (312 is longer)
        assert_eq!(
            "12 / 3".parse::<DecompositionTableau>(),
            Err(Error::Maximality { row: 1 })
        );
    }

    #[test]
    fn phi_and_psi_examples() {
        let r: DecompositionTableau = "96524 / 511 / 34".parse().unwrap();
        assert_eq!(phi(&r).to_string(), "1 1 2 3' 4 / 4 5 5 / 6 9'");
        let one_row: DecompositionTableau = "63212245".parse().unwrap();
        let t = phi(&one_row);
        assert_eq!(t.to_string(), "1 2' 2 2 3' 4 5 6'");
        assert_eq!(psi(&t), one_row);
        assert_eq!(psi(&phi(&r)), r);
    }
}
