//! Validated tableau containers: shifted (semistandard, standard, skew) and
//! ordinary Young tableaux, together with their text format.
//!
//! Rows are stored left to right starting at the main diagonal, so entry `k`
//! (0-based) of row `r` sits in column `r + k`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::letter::{content_of, PrimedLetter};
use crate::partition::{Partition, StrictPartition};

/// A cell `(row, col)` in 1-based coordinates. In shifted diagrams the main
/// diagonal is `col == row`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Diagonal index of a shifted cell, 1 for the main diagonal.
    pub fn diagonal(self) -> usize {
        self.col + 1 - self.row
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

fn split_rows(s: &str) -> Vec<Vec<&str>> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Vec::new();
    }
    s.split('/')
        .map(|row| row.split_whitespace().collect())
        .collect()
}

fn write_rows<T, F>(f: &mut fmt::Formatter<'_>, rows: &[Vec<T>], mut cell: F) -> fmt::Result
where
    F: FnMut(&T) -> String,
{
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, " / ")?;
        }
        let cells: Vec<String> = row.iter().map(&mut cell).collect();
        write!(f, "{}", cells.join(" "))?;
    }
    Ok(())
}

fn shifted_shape_of<T>(rows: &[Vec<T>]) -> Result<StrictPartition> {
    StrictPartition::new(rows.iter().map(Vec::len).collect())
}

/// A semistandard shifted tableau over the primed alphabet.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedTableau {
    rows: Vec<Vec<PrimedLetter>>,
}

impl ShiftedTableau {
    /// Validates a raw filling, rejecting bad row lengths with
    /// [`Error::Shape`] and the first bad cell with [`Error::Filling`].
    pub fn new(rows: Vec<Vec<PrimedLetter>>) -> Result<Self> {
        shifted_shape_of(&rows)?;
        check_shifted_filling(&rows, false)?;
        Ok(ShiftedTableau { rows })
    }

    pub fn empty() -> Self {
        ShiftedTableau { rows: Vec::new() }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<PrimedLetter>>) -> Self {
        debug_assert!(
            ShiftedTableau::new(rows.clone()).is_ok(),
            "invalid shifted tableau {rows:?}"
        );
        ShiftedTableau { rows }
    }

    /// Builds a tableau from rows of unprimed values; handy for tests.
    pub fn from_values(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(PrimedLetter::unprimed).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> &[Vec<PrimedLetter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<PrimedLetter>> {
        self.rows
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<PrimedLetter> {
        if cell.row == 0 || cell.col < cell.row {
            return None;
        }
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - cell.row))
            .copied()
    }

    /// `(cell, letter)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, PrimedLetter)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(k, &x)| (Cell::new(i + 1, i + 1 + k), x))
        })
    }

    /// Counts of `i` and `i'` at index `i - 1`. Only meaningful for tableaux
    /// over the positive alphabet.
    pub fn content(&self) -> Vec<usize> {
        content_of(
            self.entries()
                .filter(|(_, x)| !x.is_negative())
                .map(|(_, x)| x.value()),
        )
    }

    /// True when the entries are `1..=n`, unprimed, each once.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (_, x) in self.entries() {
            if x.is_primed() || x.is_negative() || x.value() as usize > n {
                return false;
            }
            let v = x.value() as usize;
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Reinterprets a standard tableau's entries as the letters `1, 2, ...`.
    pub fn from_standard(t: &StandardShiftedTableau) -> Self {
        ShiftedTableau {
            rows: t
                .rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| PrimedLetter::unprimed(v as u32))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Checks the semistandard conditions on shifted rows. With
/// `diagonal_primes` set, primed letters may sit on the main diagonal.
pub(crate) fn check_shifted_filling(
    rows: &[Vec<PrimedLetter>],
    diagonal_primes: bool,
) -> Result<()> {
    for (i, row) in rows.iter().enumerate() {
        let r = i + 1;
        for (k, &x) in row.iter().enumerate() {
            let cell = Cell::new(r, r + k);
            if k == 0 && x.is_primed() && !diagonal_primes {
                return Err(Error::filling(
                    cell,
                    format!("primed entry {x} on the main diagonal"),
                ));
            }
            if k > 0 {
                let left = row[k - 1];
                if left > x {
                    return Err(Error::filling(
                        cell,
                        format!("row decreases from {left} to {x}"),
                    ));
                }
                if left == x && x.is_primed() {
                    return Err(Error::filling(cell, format!("{x} repeated in a row")));
                }
            }
            if i > 0 {
                let above_row = &rows[i - 1];
                let idx = k + 1;
                if idx < above_row.len() {
                    let above = above_row[idx];
                    if above > x {
                        return Err(Error::filling(
                            cell,
                            format!("column decreases from {above} to {x}"),
                        ));
                    }
                    if above == x && !x.is_primed() {
                        return Err(Error::filling(cell, format!("{x} repeated in a column")));
                    }
                } else {
                    return Err(Error::filling(cell, "cell has no cell above it"));
                }
            }
        }
    }
    Ok(())
}

fn parse_letter_rows(s: &str) -> Result<Vec<Vec<PrimedLetter>>> {
    split_rows(s)
        .into_iter()
        .map(|row| {
            if row.is_empty() {
                return Err(Error::Parse("empty row in tableau".into()));
            }
            row.into_iter().map(str::parse).collect()
        })
        .collect()
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows, |x| x.to_string())
    }
}

impl fmt::Debug for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for ShiftedTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ShiftedTableau::new(parse_letter_rows(s)?)
    }
}

/// A standard shifted tableau: entries `1..=n`, each once, strictly
/// increasing along rows and columns.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardShiftedTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardShiftedTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        shifted_shape_of(&rows)?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                let cell = Cell::new(i + 1, i + 1 + k);
                if v == 0 || v > n || seen[v] {
                    return Err(Error::filling(
                        cell,
                        format!("entry {v} is not a fresh value in 1..={n}"),
                    ));
                }
                seen[v] = true;
                if k > 0 && row[k - 1] >= v {
                    return Err(Error::filling(cell, "row does not increase"));
                }
                if i > 0 && rows[i - 1][k + 1] >= v {
                    return Err(Error::filling(cell, "column does not increase"));
                }
            }
        }
        Ok(StandardShiftedTableau { rows })
    }

    pub fn empty() -> Self {
        StandardShiftedTableau { rows: Vec::new() }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(
            StandardShiftedTableau::new(rows.clone()).is_ok(),
            "invalid standard tableau {rows:?}"
        );
        StandardShiftedTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.col < cell.row {
            return None;
        }
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - cell.row))
            .copied()
    }

    /// The cell holding `entry`.
    pub fn cell_of(&self, entry: usize) -> Option<Cell> {
        self.entries().find(|&(_, v)| v == entry).map(|(c, _)| c)
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(k, &v)| (Cell::new(i + 1, i + 1 + k), v))
        })
    }

    /// Cells ordered by their entries.
    pub fn cells_in_order(&self) -> Vec<Cell> {
        let mut cells = vec![Cell::new(0, 0); self.size()];
        for (c, v) in self.entries() {
            cells[v - 1] = c;
        }
        cells
    }
}

impl fmt::Display for StandardShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows, |v| v.to_string())
    }
}

impl fmt::Debug for StandardShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

fn parse_number_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    split_rows(s)
        .into_iter()
        .map(|row| {
            if row.is_empty() {
                return Err(Error::Parse("empty row in tableau".into()));
            }
            row.into_iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("invalid entry `{t}`")))
                })
                .collect()
        })
        .collect()
}

impl FromStr for StandardShiftedTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardShiftedTableau::new(parse_number_rows(s)?)
    }
}

/// An ordinary (unshifted) semistandard Young tableau: rows weakly
/// increase, columns strictly increase.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Partition::new(rows.iter().map(Vec::len).collect())?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let cell = Cell::new(i + 1, j + 1);
                if v == 0 {
                    return Err(Error::filling(cell, "entries are positive"));
                }
                if j > 0 && row[j - 1] > v {
                    return Err(Error::filling(cell, "row decreases"));
                }
                if i > 0 && rows[i - 1][j] >= v {
                    return Err(Error::filling(cell, "column does not strictly increase"));
                }
            }
        }
        Ok(YoungTableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(
            YoungTableau::new(rows.clone()).is_ok(),
            "invalid tableau {rows:?}"
        );
        YoungTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            let v = v as usize;
            if v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows, |v| v.to_string())
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for YoungTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_number_rows(s)?
            .into_iter()
            .map(|r| r.into_iter().map(|v| v as u32).collect())
            .collect();
        YoungTableau::new(rows)
    }
}

/// Cells of the skew shifted diagram `outer / inner`, row-major.
pub fn skew_cells(outer: &StrictPartition, inner: &StrictPartition) -> Vec<Cell> {
    (1..=outer.len())
        .flat_map(|r| (r + inner.row_len(r)..r + outer.row_len(r)).map(move |c| Cell::new(r, c)))
        .collect()
}

/// Number of edge-connected groups of cells in `outer / inner`.
pub fn connected_components(outer: &StrictPartition, inner: &StrictPartition) -> usize {
    let cells: HashSet<Cell> = skew_cells(outer, inner).into_iter().collect();
    let mut seen = HashSet::new();
    let mut count = 0;
    for &start in &cells {
        if !seen.insert(start) {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            let mut nbrs = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
            if c.row > 1 {
                nbrs.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                nbrs.push(Cell::new(c.row, c.col - 1));
            }
            for n in nbrs {
                if cells.contains(&n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
    }
    count
}

/// True when no two cells of `outer / inner` share a diagonal. Away from
/// the main diagonal this means no 2x2 block; on it, it also rules out a
/// diagonal cell together with the cells right of and below-right of it.
pub fn is_border_strip(outer: &StrictPartition, inner: &StrictPartition) -> bool {
    let mut seen = HashSet::new();
    skew_cells(outer, inner)
        .into_iter()
        .all(|c| seen.insert(c.diagonal()))
}

/// A standard filling of a skew shifted shape by a consecutive range of
/// integers `i..=k`, strictly increasing along rows and columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewStandardShiftedTableau {
    outer: StrictPartition,
    inner: StrictPartition,
    /// Full outer rows; inner cells are `None`.
    rows: Vec<Vec<Option<usize>>>,
}

impl SkewStandardShiftedTableau {
    pub fn new(rows: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let outer = shifted_shape_of(&rows)?;
        let mut inner_parts = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let k = row.iter().take_while(|x| x.is_none()).count();
            if row[k..].iter().any(Option::is_none) {
                let j = k + row[k..].iter().position(Option::is_none).unwrap();
                return Err(Error::filling(
                    Cell::new(i + 1, i + 1 + j),
                    "inner cells must form a prefix of the row",
                ));
            }
            inner_parts.push(k);
        }
        while inner_parts.last() == Some(&0) {
            inner_parts.pop();
        }
        let inner = StrictPartition::new(inner_parts)
            .map_err(|e| Error::Shape(format!("inner shape: {e}")))?;
        let entries: Vec<usize> = rows.iter().flatten().flatten().copied().collect();
        if let (Some(&lo), Some(&hi)) = (entries.iter().min(), entries.iter().max()) {
            let distinct: BTreeSet<usize> = entries.iter().copied().collect();
            if lo == 0 || distinct.len() != entries.len() || hi - lo + 1 != entries.len() {
                return Err(Error::Shape(format!(
                    "entries must be a consecutive range of distinct positive integers, got {entries:?}"
                )));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                let Some(v) = x else { continue };
                let cell = Cell::new(i + 1, i + 1 + k);
                if k > 0 {
                    if let Some(left) = row[k - 1] {
                        if left >= *v {
                            return Err(Error::filling(cell, "row does not increase"));
                        }
                    }
                }
                if i > 0 {
                    match rows[i - 1].get(k + 1) {
                        Some(Some(above)) if above >= v => {
                            return Err(Error::filling(cell, "column does not increase"))
                        }
                        None => return Err(Error::filling(cell, "cell has no cell above it")),
                        _ => {}
                    }
                }
            }
        }
        Ok(SkewStandardShiftedTableau { outer, inner, rows })
    }

    /// Embeds a straight standard tableau as a skew one with empty inner shape.
    pub fn from_straight(t: &StandardShiftedTableau) -> Self {
        SkewStandardShiftedTableau {
            outer: t.shape(),
            inner: StrictPartition::empty(),
            rows: t
                .rows()
                .iter()
                .map(|r| r.iter().map(|&v| Some(v)).collect())
                .collect(),
        }
    }

    pub(crate) fn from_parts_unchecked(
        outer: StrictPartition,
        inner: StrictPartition,
        rows: Vec<Vec<Option<usize>>>,
    ) -> Self {
        let t = SkewStandardShiftedTableau { outer, inner, rows };
        debug_assert!(
            SkewStandardShiftedTableau::new(t.rows.clone()).is_ok(),
            "invalid skew tableau {t}"
        );
        t
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.col < cell.row {
            return None;
        }
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - cell.row))
            .copied()
            .flatten()
    }

    /// `(cell, entry)` pairs of the skew cells, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(k, x)| x.map(|v| (Cell::new(i + 1, i + 1 + k), v)))
        })
    }

    /// The straight tableau, when the inner shape is empty and entries start at 1.
    pub fn to_straight(&self) -> Option<StandardShiftedTableau> {
        if !self.inner.is_empty() || self.entries().any(|(_, v)| v > self.size()) {
            return None;
        }
        Some(StandardShiftedTableau::from_rows_unchecked(
            self.rows
                .iter()
                .map(|r| r.iter().map(|x| x.unwrap()).collect())
                .collect(),
        ))
    }

    /// Whether the filling is a vee: a border strip whose entries climb a
    /// vertical strip downwards to a pivot and then run along a horizontal
    /// strip to the right.
    pub fn is_vee(&self) -> bool {
        if !is_border_strip(&self.outer, &self.inner) {
            return false;
        }
        let mut cells: Vec<(usize, Cell)> = self.entries().map(|(c, v)| (v, c)).collect();
        if cells.is_empty() {
            return true;
        }
        cells.sort();
        (0..cells.len()).any(|pivot| {
            let vertical = &cells[..=pivot];
            let horizontal = &cells[pivot..];
            let vertical_ok = vertical.windows(2).all(|w| w[0].1.row < w[1].1.row);
            let horizontal_ok = horizontal.windows(2).all(|w| w[0].1.col < w[1].1.col);
            let left_of = vertical.iter().all(|&(a, v)| {
                horizontal
                    .iter()
                    .all(|&(b, h)| a == b || h.row != v.row || v.col < h.col)
            });
            vertical_ok && horizontal_ok && left_of
        })
    }

    pub fn connected_components(&self) -> usize {
        connected_components(&self.outer, &self.inner)
    }
}

impl fmt::Display for SkewStandardShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows, |x| match x {
            Some(v) => v.to_string(),
            None => "_".to_string(),
        })
    }
}

impl fmt::Debug for SkewStandardShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SkewStandardShiftedTableau {
    type Err = Error;

    /// Inner cells are written `_`: `_ _ _ 1 4 / _ 2 3 5 / 6 7`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = split_rows(s)
            .into_iter()
            .map(|row| {
                if row.is_empty() {
                    return Err(Error::Parse("empty row in tableau".into()));
                }
                row.into_iter()
                    .map(|t| match t {
                        "_" => Ok(None),
                        _ => t
                            .parse::<usize>()
                            .map(Some)
                            .map_err(|_| Error::Parse(format!("invalid entry `{t}`"))),
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        SkewStandardShiftedTableau::new(rows)
    }
}

/// A semistandard filling of a skew shifted shape over the primed alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShiftedTableau {
    outer: StrictPartition,
    inner: StrictPartition,
    rows: Vec<Vec<Option<PrimedLetter>>>,
}

impl SkewShiftedTableau {
    pub fn new(
        outer: StrictPartition,
        inner: StrictPartition,
        rows: Vec<Vec<Option<PrimedLetter>>>,
    ) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
        }
        if rows.len() != outer.len()
            || rows
                .iter()
                .enumerate()
                .any(|(i, r)| r.len() != outer.row_len(i + 1))
        {
            return Err(Error::Shape("rows do not match the outer shape".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            let r = i + 1;
            for (k, x) in row.iter().enumerate() {
                let cell = Cell::new(r, r + k);
                let is_inner = k < inner.row_len(r);
                if is_inner != x.is_none() {
                    return Err(Error::filling(
                        cell,
                        "inner cells must be empty and skew cells filled",
                    ));
                }
                let Some(x) = *x else { continue };
                if k == 0 && x.is_primed() {
                    return Err(Error::filling(
                        cell,
                        format!("primed entry {x} on the main diagonal"),
                    ));
                }
                if let Some(Some(left)) = k.checked_sub(1).map(|j| row[j]) {
                    if left > x || (left == x && x.is_primed()) {
                        return Err(Error::filling(cell, "row condition violated"));
                    }
                }
                if i > 0 {
                    if let Some(Some(above)) = rows[i - 1].get(k + 1) {
                        if *above > x || (*above == x && !x.is_primed()) {
                            return Err(Error::filling(cell, "column condition violated"));
                        }
                    }
                }
            }
        }
        Ok(SkewShiftedTableau { outer, inner, rows })
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<Option<PrimedLetter>>] {
        &self.rows
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, PrimedLetter)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(k, x)| x.map(|v| (Cell::new(i + 1, i + 1 + k), v)))
        })
    }

    /// Reads a straight tableau as a skew one with empty inner shape.
    pub fn from_straight(t: &ShiftedTableau) -> Self {
        SkewShiftedTableau {
            outer: t.shape(),
            inner: StrictPartition::empty(),
            rows: t
                .rows()
                .iter()
                .map(|r| r.iter().map(|&x| Some(x)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for SkewShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows, |x| match x {
            Some(v) => v.to_string(),
            None => "_".to_string(),
        })
    }
}

impl fmt::Debug for SkewShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SkewShiftedTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = split_rows(s)
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| match t {
                        "_" => Ok(None),
                        _ => t.parse::<PrimedLetter>().map(Some),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let outer = shifted_shape_of(&rows)?;
        let mut inner_parts: Vec<usize> = rows
            .iter()
            .map(|r| r.iter().take_while(|x| x.is_none()).count())
            .collect();
        while inner_parts.last() == Some(&0) {
            inner_parts.pop();
        }
        let inner = StrictPartition::new(inner_parts)?;
        SkewShiftedTableau::new(outer, inner, rows)
    }
}
