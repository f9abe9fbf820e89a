//! Letters of the primed alphabet and words over the unprimed alphabet.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of `1' < 1 < 2' < 2 < ...`, or of the auxiliary negative alphabet
/// `... < -2 < -2' < -1 < -1'` which sits below every positive letter.
///
/// The letter is stored as a single integer: `k` is `2k`, `k'` is `2k - 1`,
/// and a negative letter is the negation of its magnitude's code. Comparing
/// letters is comparing codes, and a letter is primed iff its code is odd.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimedLetter(i32);

impl PrimedLetter {
    pub fn new(value: u32, primed: bool) -> Self {
        assert!(value > 0, "letters are positive integers");
        let code = 2 * value as i32 - primed as i32;
        PrimedLetter(code)
    }

    pub fn unprimed(value: u32) -> Self {
        Self::new(value, false)
    }

    pub fn primed(value: u32) -> Self {
        Self::new(value, true)
    }

    /// A letter of the negative alphabet `-X'`; `negative(1, true)` is `-1'`.
    pub fn negative(value: u32, primed: bool) -> Self {
        PrimedLetter(-Self::new(value, primed).0)
    }

    pub fn from_code(code: i32) -> Self {
        assert!(code != 0, "zero is not a letter code");
        PrimedLetter(code)
    }

    pub fn code(self) -> i32 {
        self.0
    }

    /// Magnitude `k` of `k`, `k'`, `-k` or `-k'`.
    pub fn value(self) -> u32 {
        self.0.unsigned_abs().div_ceil(2)
    }

    pub fn is_primed(self) -> bool {
        self.0 % 2 != 0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// The primed form of the same letter (`k -> k'`, `-k -> -k'`).
    pub fn with_prime(self) -> Self {
        if self.is_primed() {
            self
        } else {
            PrimedLetter(self.0 - self.0.signum())
        }
    }

    pub fn without_prime(self) -> Self {
        if self.is_primed() {
            PrimedLetter(self.0 + self.0.signum())
        } else {
            self
        }
    }
}

impl fmt::Display for PrimedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-")?;
        }
        write!(f, "{}", self.value())?;
        if self.is_primed() {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PrimedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PrimedLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (negative, rest) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (primed, digits) = match rest.strip_suffix('\'') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("invalid letter `{s}`")))?;
        if value == 0 {
            return Err(Error::Parse(format!("letters are positive, got `{s}`")));
        }
        Ok(if negative {
            PrimedLetter::negative(value, primed)
        } else {
            PrimedLetter::new(value, primed)
        })
    }
}

/// Number of occurrences of `i` (primed or not) at index `i - 1`, trimmed so
/// that the last entry is nonzero.
pub fn content_of<I: IntoIterator<Item = u32>>(values: I) -> Vec<usize> {
    let mut content = Vec::new();
    for v in values {
        let i = v as usize;
        if content.len() < i {
            content.resize(i, 0);
        }
        content[i - 1] += 1;
    }
    content
}

/// A finite word over the positive alphabet `1 < 2 < ...`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Parse("words use positive letters".into()));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn content(&self) -> Vec<usize> {
        content_of(self.0.iter().copied())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The letters as unprimed positive `PrimedLetter`s.
    pub fn primed_letters(&self) -> impl Iterator<Item = PrimedLetter> + '_ {
        self.0.iter().map(|&x| PrimedLetter::unprimed(x))
    }
}

impl From<Vec<u32>> for Word {
    fn from(letters: Vec<u32>) -> Self {
        Word::new(letters).expect("positive letters")
    }
}

impl fmt::Display for Word {
    /// Concatenated digits when every letter is below 10 (`3415961254`),
    /// space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x < 10) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts space- or comma-separated letters (`3 4 1`, `3,4,1`), or a
    /// single run of digits read one letter per digit (`341`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        if s.contains(|c: char| c.is_whitespace() || c == ',') {
            let letters = s
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid letter `{t}` in word")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Word::new(letters);
        }
        let letters = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .ok_or_else(|| Error::Parse(format!("invalid letter `{c}` in word `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }
}
