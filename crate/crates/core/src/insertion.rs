//! Mixed insertion, its inverse, RSK row insertion, special recording
//! tableaux and mixed reading words.

use crate::error::{Error, Result};
use crate::letter::{PrimedLetter, Word};
use crate::partition::StrictPartition;
use crate::tableau::{Cell, ShiftedTableau, StandardShiftedTableau, YoungTableau};

/// Insertion and recording tableau of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InsertionResult<P, Q> {
    pub p: P,
    pub q: Q,
}

/// Whether a letter is being inserted into a row or into a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Row,
    Column,
}

/// One displacement during an insertion: `displaced` left `cell` when a
/// letter arrived there by `direction` insertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BumpStep {
    pub cell: Cell,
    pub displaced: PrimedLetter,
    pub direction: Direction,
}

/// The displacements of one insertion, in the order they happen. For a
/// deletion the steps run backwards.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BumpTrace {
    pub steps: Vec<BumpStep>,
}

type Rows = Vec<Vec<PrimedLetter>>;

/// Number of rows reaching column `col`; they always form a prefix.
fn column_height(rows: &Rows, col: usize) -> usize {
    rows.iter()
        .enumerate()
        .take_while(|(i, row)| *i < col && col < i + 1 + row.len())
        .count()
}

/// Where a displaced letter goes next.
fn next_mode(cell: Cell, a: PrimedLetter) -> Result<(Direction, usize, PrimedLetter)> {
    if cell.row == cell.col {
        if a.is_primed() {
            return Err(Error::Internal(format!(
                "primed {a} found on the diagonal at {cell}"
            )));
        }
        Ok((Direction::Column, cell.col + 1, a.with_prime()))
    } else if a.is_primed() {
        Ok((Direction::Column, cell.col + 1, a))
    } else {
        Ok((Direction::Row, cell.row + 1, a))
    }
}

fn insert_in_place(rows: &mut Rows, x: PrimedLetter) -> Result<(Cell, BumpTrace)> {
    let mut trace = BumpTrace::default();
    let (mut dir, mut index, mut letter) = (Direction::Row, 1usize, x);
    loop {
        match dir {
            Direction::Row => {
                let r = index;
                if r == rows.len() + 1 {
                    if r > 1 && rows[r - 2].len() < 2 {
                        return Err(Error::Internal(format!("cannot open row {r}")));
                    }
                    rows.push(vec![letter]);
                    return Ok((Cell::new(r, r), trace));
                }
                let row = &mut rows[r - 1];
                match row.iter().position(|&y| y > letter) {
                    None => {
                        let cell = Cell::new(r, r + row.len());
                        row.push(letter);
                        if r > 1 && rows[r - 2].len() <= rows[r - 1].len() {
                            return Err(Error::Internal(format!("row {r} outgrew the row above")));
                        }
                        return Ok((cell, trace));
                    }
                    Some(k) => {
                        let a = std::mem::replace(&mut row[k], letter);
                        let cell = Cell::new(r, r + k);
                        trace.steps.push(BumpStep {
                            cell,
                            displaced: a,
                            direction: dir,
                        });
                        (dir, index, letter) = next_mode(cell, a)?;
                    }
                }
            }
            Direction::Column => {
                let c = index;
                let height = column_height(rows, c);
                let hit = (1..=height).find(|&r| rows[r - 1][c - r] > letter);
                match hit {
                    None => {
                        let r = height + 1;
                        if r == c {
                            return Err(Error::Internal(format!(
                                "primed {letter} would open the diagonal cell ({r}, {c})"
                            )));
                        }
                        match rows.get_mut(r - 1) {
                            Some(row) if r + row.len() == c => row.push(letter),
                            _ => {
                                return Err(Error::Internal(format!(
                                    "column {c} cannot grow into row {r}"
                                )))
                            }
                        }
                        if r > 1 && rows[r - 2].len() <= rows[r - 1].len() {
                            return Err(Error::Internal(format!("row {r} outgrew the row above")));
                        }
                        return Ok((Cell::new(r, c), trace));
                    }
                    Some(r) => {
                        if r == c {
                            return Err(Error::Internal(format!(
                                "primed {letter} would replace the diagonal cell ({r}, {c})"
                            )));
                        }
                        let a = std::mem::replace(&mut rows[r - 1][c - r], letter);
                        let cell = Cell::new(r, c);
                        trace.steps.push(BumpStep {
                            cell,
                            displaced: a,
                            direction: dir,
                        });
                        (dir, index, letter) = next_mode(cell, a)?;
                    }
                }
            }
        }
    }
}

/// Mixed-inserts one letter, returning the new tableau, the cell it added
/// and the bumping trace. The letter should be unprimed; negative letters
/// are accepted for skew reading words.
pub fn mixed_insert_letter(
    t: &ShiftedTableau,
    x: PrimedLetter,
) -> Result<(ShiftedTableau, Cell, BumpTrace)> {
    let mut rows = t.rows().to_vec();
    let (cell, trace) = insert_in_place(&mut rows, x)?;
    Ok((ShiftedTableau::from_rows_unchecked(rows), cell, trace))
}

/// Mixed insertion of a sequence of letters from the empty tableau.
pub fn mixed_insertion_letters(
    letters: &[PrimedLetter],
) -> Result<InsertionResult<ShiftedTableau, StandardShiftedTableau>> {
    let mut rows: Rows = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in letters.iter().enumerate() {
        let (cell, _) = insert_in_place(&mut rows, x)?;
        if cell.row > q.len() {
            q.push(Vec::new());
        }
        q[cell.row - 1].push(i + 1);
    }
    Ok(InsertionResult {
        p: ShiftedTableau::from_rows_unchecked(rows),
        q: StandardShiftedTableau::from_rows_unchecked(q),
    })
}

/// `(P_mix(w), Q_mix(w))`.
pub fn mixed_insertion(w: &Word) -> InsertionResult<ShiftedTableau, StandardShiftedTableau> {
    let letters: Vec<PrimedLetter> = w.primed_letters().collect();
    mixed_insertion_letters(&letters).expect("mixed insertion of unprimed letters")
}

/// The mixed insertion tableau alone.
pub fn p_mix(w: &Word) -> ShiftedTableau {
    let mut rows: Rows = Vec::new();
    for x in w.primed_letters() {
        insert_in_place(&mut rows, x).expect("mixed insertion of unprimed letters");
    }
    ShiftedTableau::from_rows_unchecked(rows)
}

fn delete_in_place(rows: &mut Rows, cell: Cell) -> Result<(PrimedLetter, BumpTrace)> {
    let r = cell.row;
    let removable = r >= 1
        && r <= rows.len()
        && cell.col + 1 == r + rows[r - 1].len()
        && (rows[r - 1].len() == 1 && r == rows.len()
            || rows[r - 1].len() > 1 && rows[r - 1].len() - 1 > rows.get(r).map_or(0, Vec::len));
    if !removable {
        return Err(Error::Corner(cell));
    }
    let mut trace = BumpTrace::default();
    let mut y = rows[r - 1].pop().expect("nonempty row");
    if rows[r - 1].is_empty() {
        rows.pop();
    }
    let (mut dir, mut index) = if y.is_primed() {
        (Direction::Column, cell.col)
    } else {
        (Direction::Row, cell.row)
    };
    loop {
        let (at, z) = match dir {
            Direction::Row => {
                if index == 1 {
                    return Ok((y, trace));
                }
                let above = index - 1;
                let row = &mut rows[above - 1];
                let k = row
                    .iter()
                    .rposition(|&v| v < y)
                    .ok_or_else(|| Error::Internal(format!("no entry below {y} in row {above}")))?;
                if k == 0 {
                    return Err(Error::Internal(format!(
                        "row reversal reached the diagonal of row {above}"
                    )));
                }
                let at = Cell::new(above, above + k);
                (at, std::mem::replace(&mut row[k], y))
            }
            Direction::Column => {
                let c = index;
                if c == 1 {
                    return Err(Error::Internal(format!("primed {y} reached column 1")));
                }
                let left = c - 1;
                let height = column_height(rows, left);
                let r = (1..=height)
                    .rev()
                    .find(|&r| rows[r - 1][left - r] < y)
                    .ok_or_else(|| {
                        Error::Internal(format!("no entry below {y} in column {left}"))
                    })?;
                let placed = if r == left { y.without_prime() } else { y };
                let at = Cell::new(r, left);
                (at, std::mem::replace(&mut rows[r - 1][left - r], placed))
            }
        };
        let placed = rows[at.row - 1][at.col - at.row];
        trace.steps.push(BumpStep {
            cell: at,
            displaced: placed,
            direction: dir,
        });
        y = z;
        (dir, index) = if z.is_primed() {
            (Direction::Column, at.col)
        } else {
            (Direction::Row, at.row)
        };
    }
}

/// Inverse of [`mixed_insert_letter`]: removes the letter sitting at the
/// removable corner `cell` by running the bumping backwards.
pub fn mixed_delete(t: &ShiftedTableau, cell: Cell) -> Result<(ShiftedTableau, PrimedLetter)> {
    mixed_delete_traced(t, cell).map(|(t, x, _)| (t, x))
}

/// [`mixed_delete`] together with the reverse bumping trace; the recorded
/// letters are the ones put back, in decreasing order.
pub fn mixed_delete_traced(
    t: &ShiftedTableau,
    cell: Cell,
) -> Result<(ShiftedTableau, PrimedLetter, BumpTrace)> {
    let mut rows = t.rows().to_vec();
    let (x, trace) = delete_in_place(&mut rows, cell)?;
    Ok((ShiftedTableau::from_rows_unchecked(rows), x, trace))
}

/// Recovers the word from an insertion pair. Fails with
/// [`Error::Shape`] when the shapes differ.
pub fn inverse_mixed_insertion(
    p: &ShiftedTableau,
    q: &StandardShiftedTableau,
) -> Result<Vec<PrimedLetter>> {
    if p.shape() != q.shape() {
        return Err(Error::Shape(format!(
            "insertion tableau has shape {} but recording tableau has shape {}",
            p.shape(),
            q.shape()
        )));
    }
    let mut rows = p.rows().to_vec();
    let mut letters = vec![PrimedLetter::unprimed(1); q.size()];
    for (k, cell) in q.cells_in_order().into_iter().enumerate().rev() {
        letters[k] = delete_in_place(&mut rows, cell)?.0;
    }
    Ok(letters)
}

/// The special recording tableau: stacks connected vees for the rows
/// `l, l-1, ..., 1` of the shape.
pub fn special_recording_tableau(shape: &StrictPartition) -> StandardShiftedTableau {
    let parts = shape.parts();
    let l = parts.len();
    let mut grid: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0; len]).collect();
    let mut next = 1;
    for i in (0..l).rev() {
        // the stage tableau of shape parts[i+1..] sits in the top left corner
        // of the next stage, so final coordinates never move
        let old = &parts[i + 1..];
        let new = &parts[i..];
        let old_len = |r: usize| old.get(r).copied().unwrap_or(0);
        let strip: Vec<Cell> = (0..new.len())
            .flat_map(|r| (r + old_len(r)..r + new[r]).map(move |c| Cell::new(r + 1, c + 1)))
            .collect();
        let in_strip = |c: Cell| strip.contains(&c);
        let mut vertical: Vec<Cell> = strip
            .iter()
            .copied()
            .filter(|c| !in_strip(Cell::new(c.row, c.col - 1)))
            .collect();
        vertical.sort_by_key(|c| c.row);
        let pivot = *vertical.last().expect("nonempty strip");
        let mut horizontal: Vec<Cell> = strip
            .iter()
            .copied()
            .filter(|&c| c != pivot && !in_strip(Cell::new(c.row + 1, c.col)))
            .collect();
        horizontal.sort_by_key(|c| c.col);
        for c in vertical.into_iter().chain(horizontal) {
            grid[c.row - 1][c.col - c.row] = next;
            next += 1;
        }
    }
    StandardShiftedTableau::from_rows_unchecked(grid)
}

/// Mixed reading word over letters of either sign: the word whose mixed
/// recording tableau is the special recording tableau of the shape.
pub fn mread_letters(t: &ShiftedTableau) -> Vec<PrimedLetter> {
    inverse_mixed_insertion(t, &special_recording_tableau(&t.shape()))
        .expect("special recording tableau cells are removable corners")
}

/// Mixed reading word of a tableau over the positive alphabet.
pub fn mread(t: &ShiftedTableau) -> Word {
    Word::new(
        mread_letters(t)
            .into_iter()
            .map(PrimedLetter::value)
            .collect(),
    )
    .expect("positive letters")
}

/// Classical RSK row insertion.
pub fn rsk_insertion(w: &Word) -> InsertionResult<YoungTableau, YoungTableau> {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (i, &x) in w.letters().iter().enumerate() {
        let mut letter = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![letter]);
                q.push(vec![i as u32 + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > letter) {
                Some(k) => {
                    letter = std::mem::replace(&mut p[r][k], letter);
                    r += 1;
                }
                None => {
                    p[r].push(letter);
                    q[r].push(i as u32 + 1);
                    break;
                }
            }
        }
    }
    InsertionResult {
        p: YoungTableau::from_rows_unchecked(p),
        q: YoungTableau::from_rows_unchecked(q),
    }
}

/// `P_rsk(w)` alone.
pub fn p_rsk(w: &Word) -> YoungTableau {
    rsk_insertion(w).p
}
