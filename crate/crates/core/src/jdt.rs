//! Shifted jeu de taquin on standard skew tableaux, the evacuation step
//! `Δ`, standardization and skew mixed reading words.

use crate::error::{Error, Result};
use crate::insertion::{mread_letters, p_mix};
use crate::letter::{PrimedLetter, Word};
use crate::partition::StrictPartition;
use crate::ssdt::DecompositionTableau;
use crate::tableau::{
    Cell, ShiftedTableau, SkewShiftedTableau, SkewStandardShiftedTableau, StandardShiftedTableau,
    YoungTableau,
};

/// Where the hole moves during one step of a slide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlideStep {
    Right,
    Down,
}

/// One inward slide: the hole starts at an inner corner, travels along
/// `steps` and leaves the shape at `vacated`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slide {
    pub start: Cell,
    pub steps: Vec<SlideStep>,
    pub vacated: Cell,
}

/// The slides of a rectification, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SlideSequence {
    pub slides: Vec<Slide>,
}

/// Which inner corner to slide into next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CornerSchedule {
    TopFirst,
    BottomFirst,
}

/// Rows indexed relative to the diagonal; `None` marks inner cells.
type Grid = Vec<Vec<Option<usize>>>;

fn inner_len(grid: &Grid, r: usize) -> usize {
    grid.get(r)
        .map_or(0, |row| row.iter().take_while(|x| x.is_none()).count())
}

/// 0-based rows whose last inner cell is a removable corner of the inner shape.
fn inner_corners(grid: &Grid) -> Vec<usize> {
    (0..grid.len())
        .filter(|&r| {
            let a = inner_len(grid, r);
            a > 0 && (a - 1 > inner_len(grid, r + 1) || (a == 1 && inner_len(grid, r + 1) == 0))
        })
        .collect()
}

/// Slides the hole at `(r, k)` outwards and removes the vacated cell.
fn slide_from(grid: &mut Grid, mut r: usize, mut k: usize) -> Slide {
    let start = Cell::new(r + 1, r + 1 + k);
    let mut steps = Vec::new();
    loop {
        let right = grid[r].get(k + 1).copied().flatten();
        // the cell below sits one step closer to the diagonal of its row
        let below = match k.checked_sub(1) {
            Some(kb) => grid
                .get(r + 1)
                .and_then(|row| row.get(kb))
                .copied()
                .flatten(),
            None => None,
        };
        let step = match (right, below) {
            (None, None) => break,
            (Some(_), None) => SlideStep::Right,
            (None, Some(_)) => SlideStep::Down,
            (Some(a), Some(b)) => {
                if a < b {
                    SlideStep::Right
                } else {
                    SlideStep::Down
                }
            }
        };
        let (nr, nk) = match step {
            SlideStep::Right => (r, k + 1),
            SlideStep::Down => (r + 1, k - 1),
        };
        grid[r][k] = grid[nr][nk].take();
        steps.push(step);
        r = nr;
        k = nk;
    }
    debug_assert_eq!(k + 1, grid[r].len(), "hole must end at the end of its row");
    grid[r].pop();
    while grid.last().is_some_and(Vec::is_empty) {
        grid.pop();
    }
    Slide {
        start,
        steps,
        vacated: Cell::new(r + 1, r + 1 + k),
    }
}

fn rectify_grid(mut grid: Grid, schedule: CornerSchedule) -> (Grid, SlideSequence) {
    let mut seq = SlideSequence::default();
    loop {
        let corners = inner_corners(&grid);
        let r = match schedule {
            CornerSchedule::TopFirst => corners.first(),
            CornerSchedule::BottomFirst => corners.last(),
        };
        let Some(&r) = r else { break };
        let k = inner_len(&grid, r) - 1;
        seq.slides.push(slide_from(&mut grid, r, k));
    }
    (grid, seq)
}

/// Straightens a grid with no inner cells, relabelling entries to `1..=n`.
fn straighten(grid: Grid) -> StandardShiftedTableau {
    let lo = grid.iter().flatten().flatten().copied().min().unwrap_or(1);
    StandardShiftedTableau::from_rows_unchecked(
        grid.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| x.expect("no inner cells") + 1 - lo)
                    .collect()
            })
            .collect(),
    )
}

/// Rectifies `t` along the given corner schedule, recording the slides.
pub fn rectify_traced(
    t: &SkewStandardShiftedTableau,
    schedule: CornerSchedule,
) -> (StandardShiftedTableau, SlideSequence) {
    let (grid, seq) = rectify_grid(t.rows().to_vec(), schedule);
    (straighten(grid), seq)
}

pub fn rectify_with(
    t: &SkewStandardShiftedTableau,
    schedule: CornerSchedule,
) -> StandardShiftedTableau {
    rectify_traced(t, schedule).0
}

/// Rectification by shifted jeu de taquin. Entries are relabelled to
/// start at 1.
pub fn shifted_jdt_rectify(t: &SkewStandardShiftedTableau) -> StandardShiftedTableau {
    let result = rectify_with(t, CornerSchedule::BottomFirst);
    debug_assert_eq!(
        result,
        rectify_with(t, CornerSchedule::TopFirst),
        "rectification of {t} depends on the corner order"
    );
    result
}

/// Removes the entry 1, slides into the vacated cell and decrements the
/// remaining entries.
pub fn delta(u: &StandardShiftedTableau) -> Result<StandardShiftedTableau> {
    if u.is_empty() {
        return Err(Error::Empty);
    }
    let mut grid: Grid = u
        .rows()
        .iter()
        .map(|r| r.iter().map(|&v| Some(v)).collect())
        .collect();
    grid[0][0] = None;
    slide_from(&mut grid, 0, 0);
    Ok(StandardShiftedTableau::from_rows_unchecked(
        grid.into_iter()
            .map(|row| row.into_iter().map(|x| x.expect("filled") - 1).collect())
            .collect(),
    ))
}

/// Embeds a standard Young tableau of shape `μ` as a standard filling of
/// the skew shifted shape `(μ + δ) / δ`, with `δ` the staircase of the
/// same length.
pub fn embed_young(q: &YoungTableau) -> Result<SkewStandardShiftedTableau> {
    if !q.is_standard() {
        return Err(Error::Shape(format!("{q} is not standard")));
    }
    let l = q.rows().len();
    let rows = q
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            std::iter::repeat_n(None, l - i)
                .chain(row.iter().map(|&v| Some(v as usize)))
                .collect()
        })
        .collect();
    SkewStandardShiftedTableau::new(rows)
}

/// Rectifies the shifted embedding of a standard Young tableau. Applied
/// to `Q_rsk(w)` this gives `Q_mix(w)`.
pub fn rsk_to_mixed_recording(q: &YoungTableau) -> Result<StandardShiftedTableau> {
    Ok(shifted_jdt_rectify(&embed_young(q)?))
}

/// The diagonal index of each entry of a standard skew tableau, listed
/// from the largest entry down to the smallest.
pub fn diagonal_reading_word(t: &SkewStandardShiftedTableau) -> Word {
    let mut cells: Vec<(usize, Cell)> = t.entries().map(|(c, v)| (v, c)).collect();
    cells.sort_unstable_by_key(|c| std::cmp::Reverse(c.0));
    Word::from(
        cells
            .into_iter()
            .map(|(_, c)| c.diagonal() as u32)
            .collect::<Vec<_>>(),
    )
}

/// Relabels the letters of `w` by `1..=n`: the copies of the smallest
/// value first, left to right, then the next value, and so on.
pub fn stan_word(w: &Word) -> Word {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w.letters()[i], i));
    let mut out = vec![0u32; w.len()];
    for (label, i) in order.into_iter().enumerate() {
        out[i] = label as u32 + 1;
    }
    Word::from(out)
}

/// Relabels a shifted tableau by `1..=n` keeping primes in place: for
/// each value, primed cells top to bottom, then unprimed cells left to
/// right.
pub fn stan_tableau(t: &ShiftedTableau) -> ShiftedTableau {
    let mut cells: Vec<(u32, bool, usize, Cell)> = t
        .entries()
        .map(|(c, x)| {
            let key = if x.is_primed() { c.row } else { c.col };
            (x.value(), !x.is_primed(), key, c)
        })
        .collect();
    cells.sort_unstable();
    let mut rows: Vec<Vec<PrimedLetter>> = t.rows().to_vec();
    for (label, (_, unprimed, _, c)) in cells.into_iter().enumerate() {
        rows[c.row - 1][c.col - c.row] = PrimedLetter::new(label as u32 + 1, !unprimed);
    }
    ShiftedTableau::from_rows_unchecked(rows)
}

/// Relabels a decomposition tableau by standardizing its reading word.
pub fn stan_ssdt(r: &DecompositionTableau) -> DecompositionTableau {
    let labels = stan_word(&r.read()).into_letters();
    let mut rest = labels.as_slice();
    let mut rows = vec![Word::empty(); r.rows().len()];
    for (i, row) in r.rows().iter().enumerate().rev() {
        let (head, tail) = rest.split_at(row.len());
        rows[i] = Word::from(head.to_vec());
        rest = tail;
    }
    DecompositionTableau::new(rows).expect("standardization preserves decomposition tableaux")
}

/// Numbers the cells of `shape` row by row, which is always standard.
pub fn row_filling(shape: &StrictPartition) -> ShiftedTableau {
    let mut next = 0;
    let rows = shape
        .parts()
        .iter()
        .map(|&len| {
            (0..len)
                .map(|_| {
                    next += 1;
                    PrimedLetter::unprimed(next)
                })
                .collect()
        })
        .collect();
    ShiftedTableau::from_rows_unchecked(rows)
}

/// Mixed reading word of `t` after filling the inner shape with the
/// letters of `filling` shifted below every positive letter.
pub fn skew_mread_with_filling(t: &SkewShiftedTableau, filling: &ShiftedTableau) -> Result<Word> {
    if filling.shape() != *t.inner() {
        return Err(Error::Shape(format!(
            "filling has shape {}, inner shape is {}",
            filling.shape(),
            t.inner()
        )));
    }
    let max = filling.entries().map(|(_, x)| x.value()).max().unwrap_or(0) as i32;
    let shift = 2 * (max + 1);
    let rows: Vec<Vec<PrimedLetter>> = t
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(k, x)| match x {
                    Some(x) => *x,
                    None => PrimedLetter::from_code(filling.rows()[i][k].code() - shift),
                })
                .collect()
        })
        .collect();
    let combined = ShiftedTableau::new(rows)?;
    Ok(Word::from(
        mread_letters(&combined)
            .into_iter()
            .filter(|x| !x.is_negative())
            .map(PrimedLetter::value)
            .collect::<Vec<_>>(),
    ))
}

/// Mixed reading word of a skew tableau, with the inner shape numbered
/// row by row.
pub fn skew_mread(t: &SkewShiftedTableau) -> Word {
    skew_mread_with_filling(t, &row_filling(t.inner())).expect("row filling has the inner shape")
}

/// Rectification of a semistandard skew tableau through its mixed
/// reading word.
pub fn skew_rect(t: &SkewShiftedTableau) -> ShiftedTableau {
    p_mix(&skew_mread(t))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::enumerate::skew_standard_fillings;
    use crate::insertion::{mixed_insertion, mread, rsk_insertion};
    use crate::ssdt::sk_insertion;

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    /// Every tableau reachable by sliding into inner corners in any order.
    fn all_rectifications(grid: &Grid, out: &mut BTreeSet<StandardShiftedTableau>) {
        let corners = inner_corners(grid);
        if corners.is_empty() {
            out.insert(straighten(grid.clone()));
        }
        for r in corners {
            let mut g = grid.clone();
            let k = inner_len(&g, r) - 1;
            slide_from(&mut g, r, k);
            all_rectifications(&g, out);
        }
    }

    #[test]
    fn worked_rectification() {
        let t: SkewStandardShiftedTableau = "_ _ _ 1 4 / _ 2 3 5 / 6 7".parse().unwrap();
        assert_eq!(shifted_jdt_rectify(&t).to_string(), "1 2 3 4 / 5 6 7");
        assert_eq!(diagonal_reading_word(&t).to_string(), "2145324");
        let straight: StandardShiftedTableau = "1 2 4 / 3".parse().unwrap();
        let skew = SkewStandardShiftedTableau::from_straight(&straight);
        assert_eq!(shifted_jdt_rectify(&skew), straight);
    }

    #[test]
    fn rectification_is_order_independent() {
        for outer in StrictPartition::all_up_to_size(7) {
            for inner in StrictPartition::all_up_to_size(outer.size()) {
                for t in skew_standard_fillings(&outer, &inner) {
                    let mut all = BTreeSet::new();
                    all_rectifications(&t.rows().to_vec(), &mut all);
                    assert_eq!(all.len(), 1, "{t}");
                    assert_eq!(all.into_iter().next().unwrap(), shifted_jdt_rectify(&t));
                }
            }
        }
        assert_eq!(skew_standard_fillings(&sp(&[3, 2]), &sp(&[2])).len(), 2);
    }

    #[test]
    fn delta_examples() {
        let w: Word = "3415961254".parse().unwrap();
        let q = sk_insertion(&w).q;
        let tail = Word::from(w.letters()[1..].to_vec());
        assert_eq!(delta(&q).unwrap(), sk_insertion(&tail).q);
        let mut u = q;
        for _ in 0..w.len() {
            u = delta(&u).unwrap();
        }
        assert!(u.is_empty());
        assert_eq!(delta(&u), Err(Error::Empty));
        assert!(delta(&"1".parse().unwrap()).unwrap().is_empty());
    }

    #[test]
    fn rsk_recording_rectifies_to_mixed_recording() {
        let w: Word = "3415961254".parse().unwrap();
        let q = rsk_insertion(&w).q;
        let rect = rsk_to_mixed_recording(&q).unwrap();
        assert_eq!(rect.to_string(), "1 2 4 5 9 / 3 6 8 / 7 10");
        assert_eq!(rect, mixed_insertion(&w).q);
        let row: YoungTableau = "1 2 3".parse().unwrap();
        assert_eq!(rsk_to_mixed_recording(&row).unwrap().to_string(), "1 2 3");
    }

    #[test]
    fn standardization_examples() {
        let w: Word = "23314211".parse().unwrap();
        assert_eq!(stan_word(&w).to_string(), "46718523");
        let perm: Word = "3142".parse().unwrap();
        assert_eq!(stan_word(&perm), perm);
        let t: ShiftedTableau = "1 1 1 2' / 2 3' 4 / 3".parse().unwrap();
        assert_eq!(stan_tableau(&t).to_string(), "1 2 3 4' / 5 6' 8 / 7");
        let r: DecompositionTableau = "4211 / 313 / 2".parse().unwrap();
        assert_eq!(stan_ssdt(&r).to_string(), "8523 / 617 / 4");
    }

    #[test]
    fn skew_reading_words() {
        let t: ShiftedTableau = "1 1 2 3' 4 / 4 5 5 / 6 9'".parse().unwrap();
        let skew = SkewShiftedTableau::from_straight(&t);
        assert_eq!(skew_mread(&skew), mread(&t));
        let s: SkewShiftedTableau = "_ _ 1 / 1 2'".parse().unwrap();
        let other = ShiftedTableau::from_values(vec![vec![1, 1]]).unwrap();
        assert_eq!(skew_mread_with_filling(&s, &other).unwrap(), skew_mread(&s));
        assert_eq!(skew_rect(&s).size(), 3);
    }
}
