//! Exhaustive enumeration of `Σ_l^n`, the ground truth for every recurrence.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::{failure_function, has_period, PeriodSet};

/// Largest number of words an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget(pub u64);

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget(1 << 26)
    }
}

impl EnumBudget {
    fn check(self, alphabet: u32, n: u32) -> Result<()> {
        if alphabet == 0 {
            return Err(Error::AlphabetTooSmall { min: 1, got: 0 });
        }
        let exceeded = Error::BudgetExceeded {
            alphabet,
            length: n,
            budget: self.0,
        };
        let total = (alphabet as u64)
            .checked_pow(n)
            .ok_or_else(|| exceeded.clone())?;
        if total > self.0 {
            return Err(exceeded);
        }
        Ok(())
    }
}

/// Counts of words by maximum border length for fixed `(l, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    pub alphabet: u32,
    pub n: u32,
    /// `counts[r]` for `r` in `0..n`.
    pub counts: Vec<BigUint>,
}

impl DistributionTable {
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Odometer over `Σ_l^n` in lexicographic order, last position fastest.
#[derive(Debug, Clone)]
pub struct Words {
    alphabet: u32,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl Words {
    pub fn new(alphabet: u32, n: u32, budget: EnumBudget) -> Result<Self> {
        budget.check(alphabet, n)?;
        Ok(Self::from_prefix(alphabet, n, &[]))
    }

    /// All words of length `n` beginning with `prefix`.
    fn from_prefix(alphabet: u32, n: u32, prefix: &[u32]) -> Self {
        let mut current = prefix.to_vec();
        current.resize(n as usize, 0);
        Self {
            alphabet,
            current,
            started: false,
            done: false,
        }
    }

    /// Advances in place and returns the leftmost changed position.
    fn advance(&mut self, frozen: usize) -> Option<usize> {
        if !self.started {
            self.started = true;
            return Some(frozen);
        }
        if self.done {
            return None;
        }
        let mut i = self.current.len();
        while i > frozen {
            i -= 1;
            self.current[i] += 1;
            if self.current[i] < self.alphabet {
                return Some(i);
            }
            self.current[i] = 0;
        }
        self.done = true;
        None
    }
}

impl Iterator for Words {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        self.advance(0).map(|_| self.current.clone())
    }
}

/// Tallies maximum border lengths over all words with the given prefix.
fn tally_prefix(alphabet: u32, n: u32, prefix: &[u32]) -> Vec<u64> {
    let mut counts = vec![0u64; n as usize];
    let mut words = Words::from_prefix(alphabet, n, prefix);
    let mut fail = vec![0usize; n as usize];
    let frozen = prefix.len();
    let mut valid_upto = 0;
    while let Some(changed) = words.advance(frozen) {
        let w = &words.current;
        // fail[..changed] still describes the unchanged prefix
        let start = changed.min(valid_upto).max(1);
        for i in start..w.len() {
            let mut k = fail[i - 1];
            while k > 0 && w[i] != w[k] {
                k = fail[k - 1];
            }
            if w[i] == w[k] {
                k += 1;
            }
            fail[i] = k;
        }
        valid_upto = w.len();
        counts[fail[w.len() - 1]] += 1;
    }
    counts
}

fn prefixes(alphabet: u32, len: u32) -> Vec<Vec<u32>> {
    Words::from_prefix(alphabet, len, &[]).collect()
}

/// Exact distribution of maximum border lengths by enumeration.
pub fn enumerate_distribution(
    alphabet: u32,
    n: u32,
    budget: EnumBudget,
) -> Result<DistributionTable> {
    enumerate_with(alphabet, n, budget, false)
}

/// Same as [`enumerate_distribution`], split across the rayon pool by
/// leading letters. Partial tables are summed, so the result is identical.
pub fn enumerate_distribution_par(
    alphabet: u32,
    n: u32,
    budget: EnumBudget,
) -> Result<DistributionTable> {
    enumerate_with(alphabet, n, budget, true)
}

fn enumerate_with(
    alphabet: u32,
    n: u32,
    budget: EnumBudget,
    parallel: bool,
) -> Result<DistributionTable> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    budget.check(alphabet, n)?;
    let counts = if parallel && n > 4 {
        let mut split = 1;
        while split + 1 < n && (alphabet as u64).pow(split + 1) <= 256 {
            split += 1;
        }
        prefixes(alphabet, split)
            .par_iter()
            .map(|p| tally_prefix(alphabet, n, p))
            .reduce(
                || vec![0u64; n as usize],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    } else {
        tally_prefix(alphabet, n, &[])
    };
    Ok(DistributionTable {
        alphabet,
        n,
        counts: counts.into_iter().map(BigUint::from).collect(),
    })
}

/// `|G_l(P, n)|`: words having every period in `P`.
pub fn count_with_periods(
    alphabet: u32,
    periods: &PeriodSet,
    budget: EnumBudget,
) -> Result<BigUint> {
    let nontrivial = periods.nontrivial();
    let count = Words::new(alphabet, periods.length(), budget)?
        .filter(|w| nontrivial.iter().all(|&p| has_period(w, p as usize)))
        .count();
    Ok(BigUint::from(count))
}

/// `|F_l({p, n}, n)|`: words of length `n` with least period exactly `p`.
pub fn count_least_period(alphabet: u32, p: u32, n: u32, budget: EnumBudget) -> Result<BigUint> {
    if p == 0 || p > n {
        return Ok(BigUint::zero());
    }
    let target = (n - p) as usize;
    let mut total = BigUint::zero();
    for w in Words::new(alphabet, n, budget)? {
        if failure_function(&w).last() == Some(&target) {
            total += BigUint::one();
        }
    }
    Ok(total)
}
