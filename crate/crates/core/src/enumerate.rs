//! Exhaustive generators for words and tableaux. Everything here is
//! exponential; callers keep sizes small.

use crate::letter::{PrimedLetter, Word};
use crate::partition::{Partition, StrictPartition};
use crate::tableau::{
    ShiftedTableau, SkewShiftedTableau, SkewStandardShiftedTableau, StandardShiftedTableau,
    YoungTableau,
};

/// All words of length `len` over `1..=alphabet`, lexicographic.
pub fn words(len: usize, alphabet: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, alphabet: u32, cur: &mut Vec<u32>, out: &mut Vec<Word>) {
        if cur.len() == len {
            out.push(Word::from(cur.clone()));
            return;
        }
        for x in 1..=alphabet {
            cur.push(x);
            rec(len, alphabet, cur, out);
            cur.pop();
        }
    }
    rec(len, alphabet, &mut cur, &mut out);
    out
}

/// All words of length at most `max_len` over `1..=alphabet`, shortest first.
pub fn words_up_to(max_len: usize, alphabet: u32) -> Vec<Word> {
    (0..=max_len).flat_map(|n| words(n, alphabet)).collect()
}

/// All rearrangements of the word with the given content, lexicographic.
pub fn words_with_content(content: &[usize]) -> Vec<Word> {
    fn rec(left: &mut [usize], n: usize, cur: &mut Vec<u32>, out: &mut Vec<Word>) {
        if cur.len() == n {
            out.push(Word::from(cur.clone()));
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u32 + 1);
                rec(left, n, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let n = content.iter().sum();
    let mut out = Vec::new();
    rec(
        &mut content.to_vec(),
        n,
        &mut Vec::with_capacity(n),
        &mut out,
    );
    out
}

/// Number of words with the given content (a multinomial coefficient).
pub fn count_words_with_content(content: &[usize]) -> u128 {
    let mut total = 0usize;
    let mut acc: u128 = 1;
    for &c in content {
        for k in 1..=c {
            total += 1;
            acc = acc * total as u128 / k as u128;
        }
    }
    acc
}

struct ShiftedFill {
    alphabet: Vec<PrimedLetter>,
    diagonal_primes: bool,
    /// Remaining multiplicity per value, when the content is fixed.
    content: Option<Vec<usize>>,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<Option<PrimedLetter>>>,
}

impl ShiftedFill {
    fn fits(&self, r: usize, k: usize, x: PrimedLetter) -> bool {
        if k == 0 && x.is_primed() && !self.diagonal_primes {
            return false;
        }
        if k > 0 {
            if let Some(left) = self.grid[r][k - 1] {
                if left > x || (left == x && x.is_primed()) {
                    return false;
                }
            }
        }
        if r > 0 {
            if let Some(Some(above)) = self.grid[r - 1].get(k + 1) {
                if *above > x || (*above == x && !x.is_primed()) {
                    return false;
                }
            }
        }
        true
    }

    fn run<F: FnMut(&[Vec<Option<PrimedLetter>>])>(&mut self, idx: usize, emit: &mut F) {
        if idx == self.cells.len() {
            emit(&self.grid);
            return;
        }
        let (r, k) = self.cells[idx];
        for a in 0..self.alphabet.len() {
            let x = self.alphabet[a];
            let v = x.value() as usize - 1;
            if let Some(content) = &self.content {
                if content[v] == 0 {
                    continue;
                }
            }
            if !self.fits(r, k, x) {
                continue;
            }
            if let Some(content) = &mut self.content {
                content[v] -= 1;
            }
            self.grid[r][k] = Some(x);
            self.run(idx + 1, emit);
            self.grid[r][k] = None;
            if let Some(content) = &mut self.content {
                content[v] += 1;
            }
        }
    }
}

fn fill_shifted<F: FnMut(&[Vec<Option<PrimedLetter>>])>(
    outer: &StrictPartition,
    inner: &StrictPartition,
    max_letter: u32,
    diagonal_primes: bool,
    content: Option<&[usize]>,
    emit: &mut F,
) {
    if !outer.contains(inner) {
        return;
    }
    let alphabet = (1..=max_letter)
        .flat_map(|v| [PrimedLetter::primed(v), PrimedLetter::unprimed(v)])
        .collect();
    let cells = (0..outer.len())
        .flat_map(|r| (inner.row_len(r + 1)..outer.row_len(r + 1)).map(move |k| (r, k)))
        .collect();
    let grid = (0..outer.len())
        .map(|r| vec![None; outer.row_len(r + 1)])
        .collect();
    let mut fill = ShiftedFill {
        alphabet,
        diagonal_primes,
        content: content.map(<[usize]>::to_vec),
        cells,
        grid,
    };
    fill.run(0, emit);
}

/// Shifted tableaux of `shape` with entries at most `max_letter`. With
/// `diagonal_primes` the diagonal may hold primed letters (the tableaux
/// counted by `Q` functions); the result is then not a [`ShiftedTableau`]
/// in the strict sense, so rows are returned raw.
pub fn shifted_fillings(
    shape: &StrictPartition,
    max_letter: u32,
    diagonal_primes: bool,
) -> Vec<Vec<Vec<PrimedLetter>>> {
    let mut out = Vec::new();
    fill_shifted(
        shape,
        &StrictPartition::empty(),
        max_letter,
        diagonal_primes,
        None,
        &mut |g| {
            out.push(
                g.iter()
                    .map(|r| r.iter().map(|x| x.unwrap()).collect())
                    .collect(),
            )
        },
    );
    out
}

/// Shifted tableaux of `shape` with entries at most `max_letter`.
pub fn shifted_tableaux(shape: &StrictPartition, max_letter: u32) -> Vec<ShiftedTableau> {
    shifted_fillings(shape, max_letter, false)
        .into_iter()
        .map(ShiftedTableau::from_rows_unchecked)
        .collect()
}

/// Shifted tableaux of `shape` with exactly the given content.
pub fn shifted_tableaux_with_content(
    shape: &StrictPartition,
    content: &[usize],
) -> Vec<ShiftedTableau> {
    let mut out = Vec::new();
    if content.iter().sum::<usize>() != shape.size() {
        return out;
    }
    fill_shifted(
        shape,
        &StrictPartition::empty(),
        content.len() as u32,
        false,
        Some(content),
        &mut |g| {
            out.push(ShiftedTableau::from_rows_unchecked(
                g.iter()
                    .map(|r| r.iter().map(|x| x.unwrap()).collect())
                    .collect(),
            ))
        },
    );
    out
}

/// Semistandard fillings of the skew shifted shape `outer / inner`.
pub fn skew_shifted_tableaux(
    outer: &StrictPartition,
    inner: &StrictPartition,
    max_letter: u32,
) -> Vec<SkewShiftedTableau> {
    let mut out = Vec::new();
    fill_shifted(outer, inner, max_letter, false, None, &mut |g| {
        out.push(
            SkewShiftedTableau::new(outer.clone(), inner.clone(), g.to_vec())
                .expect("generated skew tableau is valid"),
        )
    });
    out
}

/// Raw skew fillings where diagonal cells may be primed; these are the
/// tableaux counted by skew `Q` functions.
pub fn skew_shifted_fillings_diagonal_primes(
    outer: &StrictPartition,
    inner: &StrictPartition,
    max_letter: u32,
) -> Vec<Vec<Vec<Option<PrimedLetter>>>> {
    let mut out = Vec::new();
    fill_shifted(outer, inner, max_letter, true, None, &mut |g| {
        out.push(g.to_vec())
    });
    out
}

/// Standard fillings of `outer / inner` by `1..=n`, as chains of shapes.
pub fn skew_standard_fillings(
    outer: &StrictPartition,
    inner: &StrictPartition,
) -> Vec<SkewStandardShiftedTableau> {
    fn rec(
        outer: &StrictPartition,
        cur: &StrictPartition,
        next: usize,
        grid: &mut Vec<Vec<Option<usize>>>,
        out: &mut Vec<Vec<Vec<Option<usize>>>>,
    ) {
        if cur == outer {
            out.push(grid.clone());
            return;
        }
        for r in 1..=outer.len() {
            if cur.row_len(r) >= outer.row_len(r) {
                continue;
            }
            if let Some(bigger) = cur.add_to_row(r) {
                let k = cur.row_len(r);
                grid[r - 1][k] = Some(next);
                rec(outer, &bigger, next + 1, grid, out);
                grid[r - 1][k] = None;
            }
        }
    }
    if !outer.contains(inner) {
        return Vec::new();
    }
    let mut grid = (0..outer.len())
        .map(|r| vec![None; outer.row_len(r + 1)])
        .collect();
    let mut raw = Vec::new();
    rec(outer, inner, 1, &mut grid, &mut raw);
    raw.into_iter()
        .map(|g| SkewStandardShiftedTableau::from_parts_unchecked(outer.clone(), inner.clone(), g))
        .collect()
}

/// Standard shifted tableaux of `shape`.
pub fn standard_shifted_tableaux(shape: &StrictPartition) -> Vec<StandardShiftedTableau> {
    skew_standard_fillings(shape, &StrictPartition::empty())
        .into_iter()
        .map(|t| t.to_straight().expect("straight shape"))
        .collect()
}

/// Standard Young tableaux of the ordinary shape `shape`.
pub fn standard_young_tableaux(shape: &Partition) -> Vec<YoungTableau> {
    fn rec(
        shape: &[usize],
        cur: &mut Vec<usize>,
        next: u32,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<YoungTableau>,
    ) {
        if cur.as_slice() == shape {
            out.push(YoungTableau::from_rows_unchecked(grid.clone()));
            return;
        }
        for r in 0..shape.len() {
            let fits_row = cur[r] < shape[r];
            let fits_col = r == 0 || cur[r - 1] > cur[r];
            if fits_row && fits_col {
                grid[r].push(next);
                cur[r] += 1;
                rec(shape, cur, next + 1, grid, out);
                cur[r] -= 1;
                grid[r].pop();
            }
        }
    }
    let parts = shape.parts();
    let mut out = Vec::new();
    rec(
        parts,
        &mut vec![0; parts.len()],
        1,
        &mut vec![Vec::new(); parts.len()],
        &mut out,
    );
    out
}

/// Semistandard Young tableaux of the ordinary shape `shape` with entries at
/// most `max_letter`.
pub fn semistandard_young_tableaux(shape: &Partition, max_letter: u32) -> Vec<YoungTableau> {
    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        max_letter: u32,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<YoungTableau>,
    ) {
        if idx == cells.len() {
            out.push(YoungTableau::from_rows_unchecked(grid.clone()));
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for x in lo_row.max(lo_col)..=max_letter {
            grid[r][c] = x;
            rec(cells, idx + 1, max_letter, grid, out);
        }
        grid[r][c] = 0;
    }
    let parts = shape.parts();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid = parts.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    rec(&cells, 0, max_letter, &mut grid, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    /// Thrall's product formula for the number of standard shifted tableaux.
    fn thrall_count(shape: &StrictPartition) -> u128 {
        let p: Vec<u128> = shape.parts().iter().map(|&x| x as u128).collect();
        let fact = |k: u128| (1..=k).product::<u128>();
        let mut num = fact(p.iter().sum());
        let mut den: u128 = p.iter().map(|&x| fact(x)).product();
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                num *= p[i] - p[j];
                den *= p[i] + p[j];
            }
        }
        num / den
    }

    #[test]
    fn standard_counts_match_product_formula() {
        for n in 0..=8 {
            for shape in StrictPartition::all_of_size(n) {
                let generated = standard_shifted_tableaux(&shape);
                assert_eq!(generated.len() as u128, thrall_count(&shape), "{shape}");
                for t in &generated {
                    assert!(StandardShiftedTableau::new(t.rows().to_vec()).is_ok());
                }
            }
        }
    }

    #[test]
    fn word_counts() {
        assert_eq!(words(3, 2).len(), 8);
        assert_eq!(words_up_to(2, 3).len(), 1 + 3 + 9);
        let w = words_with_content(&[3, 2]);
        assert_eq!(w.len(), 10);
        assert_eq!(count_words_with_content(&[3, 2]), 10);
        assert_eq!(count_words_with_content(&[2, 1, 1]), 12);
    }

    #[test]
    fn tableaux_counts() {
        // the four tableaux of shape (3,1) over {1,2}
        assert_eq!(shifted_tableaux(&sp(&[3, 1]), 2).len(), 4);
        assert_eq!(shifted_fillings(&sp(&[3, 1]), 2, true).len(), 16);
        assert_eq!(
            standard_young_tableaux(&Partition::new(vec![3, 2]).unwrap()).len(),
            5
        );
        assert_eq!(
            semistandard_young_tableaux(&Partition::new(vec![2, 1]).unwrap(), 2).len(),
            2
        );
        assert_eq!(skew_standard_fillings(&sp(&[3, 2]), &sp(&[2])).len(), 2);
    }
}
