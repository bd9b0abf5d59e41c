//! Words over an integer alphabet, their borders and periods.
//!
//! A border of length `r` of a word of length `n` is a prefix that is also a
//! suffix; it corresponds to the period `n - r`. Both sets are kept in the
//! canonical form used throughout the crate: the border set always contains
//! `0` and the period set always contains `n`.

use std::fmt;

use crate::error::{Error, Result};

/// A finite word whose letters are indices into an alphabet `0..alphabet`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self> {
        if let Some((position, &letter)) = letters.iter().enumerate().find(|(_, &a)| a >= alphabet)
        {
            return Err(Error::LetterOutOfRange {
                letter,
                position,
                alphabet,
            });
        }
        Ok(Self { letters, alphabet })
    }

    /// Maps each distinct character to an index in order of first occurrence.
    pub fn from_chars(text: &str) -> Self {
        let mut seen: Vec<char> = Vec::new();
        let letters = text
            .chars()
            .map(|c| match seen.iter().position(|&s| s == c) {
                Some(i) => i as u32,
                None => {
                    seen.push(c);
                    (seen.len() - 1) as u32
                }
            })
            .collect();
        Self {
            letters,
            alphabet: seen.len().max(1) as u32,
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Canonical set of periods of a length-`n` word. Always contains `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodSet {
    n: u32,
    periods: Vec<u32>,
}

impl PeriodSet {
    /// Builds the canonical set from arbitrary input; `n` is added if absent.
    pub fn new(n: u32, periods: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let mut v: Vec<u32> = periods.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&p| p == 0 || p > n) {
            return Err(Error::InvalidPeriods(format!(
                "period {bad} is outside 1..={n}"
            )));
        }
        v.push(n);
        v.sort_unstable();
        v.dedup();
        Ok(Self { n, periods: v })
    }

    /// Only the trivial period: the unbordered case.
    pub fn trivial(n: u32) -> Self {
        assert!(n > 0, "period sets need a positive length");
        Self {
            n,
            periods: vec![n],
        }
    }

    /// Builds from an already sorted, deduplicated vector ending in `n`.
    pub(crate) fn from_sorted_unchecked(n: u32, periods: Vec<u32>) -> Self {
        debug_assert!(periods.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(periods.last(), Some(&n));
        debug_assert!(periods[0] >= 1);
        Self { n, periods }
    }

    pub fn length(&self) -> u32 {
        self.n
    }

    pub fn periods(&self) -> &[u32] {
        &self.periods
    }

    pub fn min_period(&self) -> u32 {
        self.periods[0]
    }

    pub fn contains(&self, p: u32) -> bool {
        self.periods.binary_search(&p).is_ok()
    }

    /// The periods strictly below the length.
    pub fn nontrivial(&self) -> &[u32] {
        &self.periods[..self.periods.len() - 1]
    }

    pub fn with(&self, p: u32) -> Self {
        assert!(p >= 1 && p <= self.n);
        match self.periods.binary_search(&p) {
            Ok(_) => self.clone(),
            Err(i) => {
                let mut periods = self.periods.clone();
                periods.insert(i, p);
                Self { n: self.n, periods }
            }
        }
    }

    /// `{q - shift : q in P}` as periods of a word of length `n - shift`.
    /// Every member must exceed `shift`.
    pub fn shifted_down(&self, shift: u32) -> Self {
        assert!(shift < self.min_period());
        Self {
            n: self.n - shift,
            periods: self.periods.iter().map(|&q| q - shift).collect(),
        }
    }

    pub fn to_borders(&self) -> BorderSet {
        BorderSet {
            n: self.n,
            borders: self.periods.iter().rev().map(|&p| self.n - p).collect(),
        }
    }
}

impl fmt::Display for PeriodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.periods.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}} (n = {})", self.n)
    }
}

/// Canonical set of border lengths of a length-`n` word. Always contains `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorderSet {
    n: u32,
    borders: Vec<u32>,
}

impl BorderSet {
    pub fn length(&self) -> u32 {
        self.n
    }

    pub fn borders(&self) -> &[u32] {
        &self.borders
    }

    pub fn max(&self) -> u32 {
        *self.borders.last().expect("border sets contain 0")
    }

    pub fn to_periods(&self) -> PeriodSet {
        PeriodSet {
            n: self.n,
            periods: self.borders.iter().rev().map(|&r| self.n - r).collect(),
        }
    }
}

/// Failure function: `fail[i]` is the longest proper border of `w[..=i]`.
pub fn failure_function(letters: &[u32]) -> Vec<usize> {
    let mut fail = vec![0usize; letters.len()];
    let mut k = 0;
    for i in 1..letters.len() {
        while k > 0 && letters[i] != letters[k] {
            k = fail[k - 1];
        }
        if letters[i] == letters[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Longest proper border of a nonempty letter slice.
pub(crate) fn max_border_of(letters: &[u32]) -> usize {
    failure_function(letters).last().copied().unwrap_or(0)
}

pub fn border_lengths(w: &Word) -> BorderSet {
    let n = w.len() as u32;
    let mut borders = vec![0];
    if n > 0 {
        let fail = failure_function(&w.letters);
        let mut chain = Vec::new();
        let mut r = fail[fail.len() - 1];
        while r > 0 {
            chain.push(r as u32);
            r = fail[r - 1];
        }
        borders.extend(chain.into_iter().rev());
    }
    BorderSet { n, borders }
}

pub fn period_lengths(w: &Word) -> Result<PeriodSet> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(border_lengths(w).to_periods())
}

pub fn max_border(w: &Word) -> Result<u32> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(max_border_of(&w.letters) as u32)
}

pub fn least_period(w: &Word) -> Result<u32> {
    Ok(w.len() as u32 - max_border(w)?)
}

pub fn is_unbordered(w: &Word) -> Result<bool> {
    Ok(max_border(w)? == 0)
}

/// Direct check of `w[i] == w[i + p]`.
pub fn has_period(letters: &[u32], p: usize) -> bool {
    p >= 1
        && letters
            .iter()
            .zip(letters.iter().skip(p))
            .all(|(a, b)| a == b)
}
