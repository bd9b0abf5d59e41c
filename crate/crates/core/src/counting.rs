//! Exact counts of words by least period.
//!
//! `F_l(P, n)` counts the words of length `n` that have every period in `P`
//! and whose least period is `min P`. Two routes are implemented:
//!
//! * the divisor-sum route: when `m = min P <= n/2 + 1`, every smaller period
//!   of a word with period `m` divides `m`, so
//!   `F(P) = sum_{d | m} mu(m/d) G(P + {d})`;
//! * the subtraction route: `F(P) = G(P) - sum_{ceil(m/2) <= p < m} H(P, p)`
//!   where `H(P, p)` counts the words with periods `P + {p}` and no period
//!   strictly between `p` and `m`. These sets partition `G(P) \ F(P)`.
//!
//! The trivial period `n` is part of every key and never constrains anything,
//! so the unbordered case `P = {n}` needs no special treatment.

use std::sync::{Mutex, RwLock};

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fw::FwCache;
use crate::word::PeriodSet;

/// Möbius function by trial division.
pub fn mobius(mut k: u32) -> i32 {
    assert!(k > 0);
    let mut sign = 1;
    let mut d = 2;
    while d * d <= k {
        if k % d == 0 {
            k /= d;
            if k % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(k: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k % d == 0 {
            small.push(d);
            if d * d != k {
                large.push(k / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Exact counts of length-`n` words by maximum border length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactDistribution {
    pub alphabet: u32,
    pub n: u32,
    /// `counts[r]` for `r` in `0..n`.
    pub counts: Vec<BigUint>,
    /// `l^n`.
    pub total: BigUint,
}

impl ExactDistribution {
    /// `lambda_l(r, n)` as an unreduced pair `(count, l^n)`.
    pub fn probability(&self, r: u32) -> (BigUint, BigUint) {
        let count = self
            .counts
            .get(r as usize)
            .cloned()
            .unwrap_or_else(BigUint::zero);
        (count, self.total.clone())
    }

    /// Sum of `r * counts[r]`.
    pub fn border_moment(&self) -> BigUint {
        self.counts
            .iter()
            .enumerate()
            .map(|(r, c)| c * BigUint::from(r))
            .sum()
    }

    /// `alpha_l(n)`, the expected maximum border length.
    pub fn expected_max_border(&self) -> Ratio<BigUint> {
        Ratio::new(self.border_moment(), self.total.clone())
    }
}

/// Memoizing counter for a fixed alphabet size.
///
/// All caches are safe to share between threads; racing insertions store the
/// same value.
#[derive(Debug)]
pub struct Counter {
    alphabet: u32,
    fw: FwCache,
    memo: DashMap<PeriodSet, BigUint>,
    powers: RwLock<Vec<BigUint>>,
    unbordered: Mutex<Vec<BigUint>>,
    border_one: Mutex<Vec<BigUint>>,
}

impl Counter {
    pub fn new(alphabet: u32) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::AlphabetTooSmall { min: 1, got: 0 });
        }
        let l = BigUint::from(alphabet);
        Ok(Self {
            alphabet,
            fw: FwCache::new(),
            memo: DashMap::new(),
            powers: RwLock::new(vec![BigUint::one()]),
            unbordered: Mutex::new(vec![BigUint::zero(), l.clone()]),
            border_one: Mutex::new(vec![BigUint::zero(), BigUint::zero()]),
        })
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// Number of memoized `F` values.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `l^k`.
    pub fn power(&self, k: u32) -> BigUint {
        let k = k as usize;
        if let Some(p) = self.powers.read().unwrap().get(k) {
            return p.clone();
        }
        let mut powers = self.powers.write().unwrap();
        while powers.len() <= k {
            let next = powers.last().unwrap() * self.alphabet;
            powers.push(next);
        }
        powers[k].clone()
    }

    pub fn c(&self, periods: &PeriodSet) -> u32 {
        self.fw.c(periods)
    }

    /// `G_l(P, n) = l^c(P, n)`.
    pub fn g_count(&self, periods: &PeriodSet) -> BigUint {
        self.power(self.c(periods))
    }

    /// `F_l(P, n)`, dispatching to the divisor sum whenever it applies.
    pub fn f_count(&self, periods: &PeriodSet) -> BigUint {
        if let Some(v) = self.memo.get(periods) {
            return v.clone();
        }
        let value = match self.f_count_by_mobius(periods) {
            Some(v) => v,
            None => self.f_count_by_recurrence(periods),
        };
        self.memo.insert(periods.clone(), value.clone());
        value
    }

    /// Divisor-sum route; `None` unless `min P <= n/2 + 1`.
    pub fn f_count_by_mobius(&self, periods: &PeriodSet) -> Option<BigUint> {
        let m = periods.min_period();
        let n = periods.length();
        if m > n / 2 + 1 {
            return None;
        }
        let mut acc = BigInt::zero();
        for d in divisors(m) {
            let term = BigInt::from(self.g_count(&periods.with(d)));
            match mobius(m / d) {
                1 => acc += term,
                -1 => acc -= term,
                _ => {}
            }
        }
        Some(acc.to_biguint().expect("divisor sum counts words"))
    }

    /// Subtraction route, valid for every key.
    pub fn f_count_by_recurrence(&self, periods: &PeriodSet) -> BigUint {
        let m = periods.min_period();
        let mut value = self.g_count(periods);
        for p in m.div_ceil(2)..m {
            value -= self.h_term(periods, p);
        }
        value
    }

    /// Number of words with periods `P + {p}` and no period in `(p, min P)`.
    ///
    /// For `p < ceil(n/2)` the prefix of length `n - p` determines the word
    /// and has least period `min P - p`; otherwise the word is `v u v` with
    /// `v` of length `n - p` and a free middle of length `2p - n`.
    pub fn h_term(&self, periods: &PeriodSet, p: u32) -> BigUint {
        let n = periods.length();
        debug_assert!(p >= 1 && p < periods.min_period());
        let shifted = periods.shifted_down(p);
        if p < n.div_ceil(2) {
            self.f_count(&shifted.with(p))
        } else {
            self.power(2 * p - n) * self.f_count(&shifted)
        }
    }

    /// `u_n`: unbordered words of length `n`.
    pub fn unbordered_count(&self, n: u32) -> BigUint {
        assert!(n >= 1);
        let l = self.alphabet;
        let mut u = self.unbordered.lock().unwrap();
        while u.len() <= n as usize {
            let k = u.len();
            let next = if k == 2 {
                BigUint::from(l) * (l - 1)
            } else if k % 2 == 1 {
                &u[k - 1] * l
            } else {
                &u[k - 1] * l - &u[k / 2]
            };
            u.push(next);
        }
        u[n as usize].clone()
    }

    /// `v_n`: words of length `n` whose longest border has length one.
    ///
    /// Even lengths use `v_n = l * v_{n-1} + (l - 1) * v_{n/2}`.
    pub fn border_one_count(&self, n: u32) -> BigUint {
        assert!(n >= 1);
        let l = self.alphabet;
        let mut v = self.border_one.lock().unwrap();
        while v.len() <= n as usize {
            let k = v.len();
            let next = if k == 2 {
                BigUint::from(l)
            } else if k % 2 == 1 {
                &v[k - 1] * l - &v[k.div_ceil(2)]
            } else {
                &v[k - 1] * l + &v[k / 2] * (l - 1)
            };
            v.push(next);
        }
        v[n as usize].clone()
    }

    /// Words of length `n` with maximum border exactly `r`.
    pub fn max_border_count(&self, n: u32, r: u32) -> BigUint {
        assert!(r < n);
        if r == 0 {
            self.unbordered_count(n)
        } else if r == 1 {
            self.border_one_count(n)
        } else {
            let set = PeriodSet::from_sorted_unchecked(n, vec![n - r, n]);
            self.f_count(&set)
        }
    }

    pub fn exact_distribution(&self, n: u32) -> Result<ExactDistribution> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let counts = (0..n).map(|r| self.max_border_count(n, r)).collect();
        Ok(self.wrap(n, counts))
    }

    /// Evaluates the entries on the current rayon pool.
    pub fn exact_distribution_par(&self, n: u32) -> Result<ExactDistribution> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        // warm the sequential tables so workers only read them
        self.unbordered_count(n);
        self.border_one_count(n);
        self.power(n);
        let counts = (0..n)
            .into_par_iter()
            .map(|r| self.max_border_count(n, r))
            .collect();
        Ok(self.wrap(n, counts))
    }

    fn wrap(&self, n: u32, counts: Vec<BigUint>) -> ExactDistribution {
        ExactDistribution {
            alphabet: self.alphabet,
            n,
            counts,
            total: self.power(n),
        }
    }

    /// `alpha_l(n)` as an exact fraction.
    pub fn alpha_n(&self, n: u32) -> Result<Ratio<BigUint>> {
        Ok(self.exact_distribution(n)?.expected_max_border())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn ps(n: u32, p: &[u32]) -> PeriodSet {
        PeriodSet::new(n, p.iter().copied()).unwrap()
    }

    #[test]
    fn number_theory_helpers() {
        let mu: Vec<i32> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn f_count_named_cases() {
        let c = Counter::new(2).unwrap();
        assert_eq!(c.f_count(&ps(5, &[1])), big(2));
        assert_eq!(c.f_count(&ps(4, &[2])), big(2));
        assert_eq!(c.f_count_by_mobius(&ps(4, &[2])), Some(big(2)));
        assert_eq!(c.f_count(&ps(4, &[3])), big(6));
        assert_eq!(c.f_count(&PeriodSet::trivial(8)), big(74));
    }

    #[test]
    fn unbordered_named_cases() {
        let c = Counter::new(2).unwrap();
        assert_eq!(c.unbordered_count(1), big(2));
        assert_eq!(c.unbordered_count(2), big(2));
        assert_eq!(c.unbordered_count(8), big(74));
        let c3 = Counter::new(3).unwrap();
        assert_eq!(c3.unbordered_count(2), big(6));
    }

    #[test]
    fn border_one_uses_plus_sign_for_even_lengths() {
        let c = Counter::new(2).unwrap();
        assert_eq!(c.border_one_count(1), big(0));
        assert_eq!(c.border_one_count(3), big(2));
        assert_eq!(c.border_one_count(4), big(6));
        let c5 = Counter::new(5).unwrap();
        assert_eq!(c5.border_one_count(1), big(0));
    }

    #[test]
    fn distribution_named_cases() {
        let c = Counter::new(2).unwrap();
        let d = c.exact_distribution(4).unwrap();
        assert_eq!(d.counts, vec![big(6), big(6), big(2), big(2)]);
        assert_eq!(d.total, big(16));
        let d = c.exact_distribution(1).unwrap();
        assert_eq!(d.counts, vec![big(2)]);
        assert!(c.exact_distribution(0).is_err());
    }

    #[test]
    fn alpha_n_named_cases() {
        let c = Counter::new(2).unwrap();
        assert_eq!(c.alpha_n(1).unwrap(), Ratio::from_integer(big(0)));
        assert_eq!(c.alpha_n(2).unwrap(), Ratio::new(big(1), big(2)));
        assert_eq!(c.alpha_n(4).unwrap(), Ratio::from_integer(big(1)));
    }

    #[test]
    fn unary_alphabet_is_degenerate() {
        let c = Counter::new(1).unwrap();
        for n in 1..10 {
            let d = c.exact_distribution(n).unwrap();
            let mut expect = vec![big(0); n as usize];
            expect[n as usize - 1] = big(1);
            assert_eq!(d.counts, expect);
        }
        assert!(Counter::new(0).is_err());
    }

    #[test]
    fn parallel_distribution_matches_sequential() {
        let a = Counter::new(3).unwrap();
        let b = Counter::new(3).unwrap();
        assert_eq!(
            a.exact_distribution(40).unwrap(),
            b.exact_distribution_par(40).unwrap()
        );
    }
}
