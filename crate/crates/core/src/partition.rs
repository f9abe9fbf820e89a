//! Strict partitions (shifted shapes) and ordinary partitions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid part `{t}`")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// A strict partition `λ₁ > λ₂ > ... > λ_l > 0`, identified with its shifted
/// diagram: row `i` holds the cells `(i, i), ..., (i, i + λᵢ - 1)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Shape(format!("parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Shape(format!(
                "row lengths must strictly decrease: {parts:?}"
            )));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λᵢ` for the 1-based row `i`, zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= row && col < row + self.row_len(row)
    }

    /// Cells `(row, col)` in row-major order, 1-based shifted coordinates.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |k| (i + 1, i + 1 + k)))
    }

    /// Rows whose last cell can be removed leaving a strict partition.
    pub fn corner_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&r| self.row_len(r) - 1 > self.row_len(r + 1) || self.row_len(r) == 1)
            .collect()
    }

    /// Shape with one more cell at the end of `row`, if that is still strict.
    pub fn add_to_row(&self, row: usize) -> Option<StrictPartition> {
        let mut parts = self.0.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else if row >= 1 && row <= parts.len() {
            parts[row - 1] += 1;
        } else {
            return None;
        }
        StrictPartition::new(parts).ok()
    }

    pub fn remove_from_row(&self, row: usize) -> Option<StrictPartition> {
        if row == 0 || row > self.len() {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            if row != parts.len() {
                return None;
            }
            parts.pop();
        }
        StrictPartition::new(parts).ok()
    }

    /// All strict partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<StrictPartition> {
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if remaining == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                cur.push(p);
                rec(remaining - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn all_up_to_size(n: usize) -> Vec<StrictPartition> {
        (0..=n).flat_map(Self::all_of_size).collect()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

/// An ordinary partition `μ₁ ≥ μ₂ ≥ ... > 0`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Shape(format!("parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!(
                "row lengths must weakly decrease: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}
