//! Limits `lambda_l(r)` and `alpha_l` with certified error radii.
//!
//! Two independent routes are available for `lambda_l(0)` and `lambda_l(1)`:
//! alternating series obtained from the functional equations of their
//! generating functions, and exact finite-length counts combined with a
//! geometric tail bound. All other limits use the second route.
//!
//! Tail bounds. For `l >= 2` and `r < k`,
//! `|lambda(r, k+1) - lambda(r, k)| <= l^-floor(k/2)`, hence
//!
//! ```text
//! |lambda(r) - lambda(r, n)| <= T(n) = sum_{k >= n} l^-floor(k/2)
//!     = 2l/(l-1) * l^-m              for n = 2m,
//!     = l^-m + 2/(l-1) * l^-m        for n = 2m + 1,
//! ```
//!
//! which is at most `2l/(l-1) * l^-floor(n/2)`. Independently, a word with
//! longest border `r` is fixed by its first `n - r` letters, so
//! `0 <= lambda(r, n) <= l^-r` for every `n` and the same holds in the limit.
//! For `alpha = sum_r r lambda(r)` this gives
//!
//! ```text
//! |alpha - alpha(n)| <= sum_{r >= 1} r * min(T(n), l^-r)
//!                     = T(n) k(k+1)/2 + S(k+1),   k = min(n - 1, r0),
//! ```
//!
//! where `r0` is the largest `r` with `l^-r >= T(n)` and
//! `S(a) = sum_{r >= a} r x^r = x^a (a - (a-1) x) / (1-x)^2` at `x = 1/l`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::counting::Counter;
use crate::decimal::{rational, ten_to_minus, ErrDecimal};
use crate::error::{Error, Result};

/// Extra decimals requested from every bound beyond the rendered digits, so
/// that printed values are rounded from a much tighter enclosure.
pub const GUARD_DIGITS: u32 = 2;

/// Extra decimals kept in the stored mantissa.
const SCALE_DIGITS: u32 = 10;

pub const DEFAULT_DIGITS: u32 = 20;

/// Limits on how far the finite-length route may go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalConfig {
    /// Largest word length `n*` evaluated exactly.
    pub max_length: u32,
    /// Evaluate distribution entries on the rayon pool.
    pub parallel: bool,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            max_length: 512,
            parallel: false,
        }
    }
}

/// How a limit was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Alternating series truncated after `terms` terms.
    Series { terms: u32 },
    /// Exact counts at word length `length` plus the tail bound.
    FiniteLength { length: u32 },
    /// The value is below `l^-r`, which is already under the target error.
    TailOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: ErrDecimal,
    pub method: Method,
}

fn check_alphabet(alphabet: u32) -> Result<()> {
    if alphabet < 2 {
        return Err(Error::AlphabetTooSmall {
            min: 2,
            got: alphabet,
        });
    }
    Ok(())
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn pow(alphabet: u32, k: u32) -> BigInt {
    BigInt::from(alphabet).pow(k)
}

/// Half of `10^-(digits + GUARD_DIGITS)`: every bound is pushed below this.
pub fn target_error(digits: u32) -> BigRational {
    ten_to_minus(digits + GUARD_DIGITS) / int(2)
}

/// Terms `(-1)^(n+1) a_n prod_{i<n} (1 + a_i)` with `a_i = 1/(l^(2^i - 1) - 1)`,
/// whose sum is `L_0(1/l)` and `lambda_l(0) = 1 - L_0(1/l)`.
pub fn unbordered_series_terms(alphabet: u32, count: u32) -> Vec<BigRational> {
    let mut terms = Vec::with_capacity(count as usize);
    let mut product = int(1);
    for n in 1..=count {
        let e = pow(alphabet, (1u32 << n) - 1);
        let a = BigRational::new(BigInt::one(), e - 1);
        let sign = if n % 2 == 1 { int(1) } else { int(-1) };
        terms.push(sign * &a * &product);
        product *= int(1) + a;
    }
    terms
}

/// Terms `(-1)^(n+1) b_n prod_{i<n} c_i` with
/// `b_i = 1/(l^(2^i) (l^(2^i - 1) - 1))` and
/// `c_i = l^(2^i - 1) (l^(2^i) - l + 1) / (l^(2^i - 1) - 1)`, obtained by
/// iterating `L_1(x_i) = b_i - c_i L_1(x_{i+1})` at `x_i = l^-(2^i - 1)`.
/// Their sum is `L_1(1/l)` and `lambda_l(1) = 1/l - L_1(1/l)`.
pub fn border_one_series_terms(alphabet: u32, count: u32) -> Vec<BigRational> {
    let l = BigInt::from(alphabet);
    let mut terms = Vec::with_capacity(count as usize);
    let mut product = int(1);
    for n in 1..=count {
        let full = pow(alphabet, 1u32 << n);
        let odd = pow(alphabet, (1u32 << n) - 1);
        let b = BigRational::new(BigInt::one(), &full * (&odd - 1));
        let c = BigRational::new(&odd * (&full - &l + 1), &odd - 1);
        let sign = if n % 2 == 1 { int(1) } else { int(-1) };
        terms.push(sign * &b * &product);
        product *= c;
    }
    terms
}

/// Sums terms until the next one is below `target`. The remainder after
/// `N` terms is bounded by `|term_{N+1}|` because the generating functions
/// have coefficients in `[0, 1]` (resp. `[0, 1/l]`); the magnitudes are also
/// checked to decrease.
fn sum_series(
    alphabet: u32,
    target: &BigRational,
    terms: fn(u32, u32) -> Vec<BigRational>,
) -> Result<(BigRational, BigRational, u32)> {
    let mut count = 2;
    loop {
        let t = terms(alphabet, count);
        if let Some(i) = (1..t.len()).find(|&i| t[i].abs() >= t[i - 1].abs()) {
            return Err(Error::Series(format!(
                "term {} does not decrease in magnitude for alphabet {alphabet}",
                i + 1
            )));
        }
        if let Some(i) = (1..t.len()).find(|&i| &t[i].abs() <= target) {
            let sum = t[..i].iter().fold(BigRational::zero(), |acc, x| acc + x);
            return Ok((sum, t[i].abs(), i as u32));
        }
        count += 2;
    }
}

/// `lambda_l(0)` from the series for `L_0(1/l)`.
pub fn lambda0_limit(alphabet: u32, digits: u32) -> Result<Evaluation> {
    check_alphabet(alphabet)?;
    let (sum, err, terms) = sum_series(alphabet, &target_error(digits), unbordered_series_terms)?;
    let value = int(1) - sum;
    Ok(Evaluation {
        value: ErrDecimal::from_rational(&value, err, digits + SCALE_DIGITS),
        method: Method::Series { terms },
    })
}

/// `lambda_l(1)` from the series for `L_1(1/l)`.
pub fn lambda1_limit(alphabet: u32, digits: u32) -> Result<Evaluation> {
    check_alphabet(alphabet)?;
    let (sum, err, terms) = sum_series(alphabet, &target_error(digits), border_one_series_terms)?;
    let value = BigRational::new(BigInt::one(), BigInt::from(alphabet)) - sum;
    Ok(Evaluation {
        value: ErrDecimal::from_rational(&value, err, digits + SCALE_DIGITS),
        method: Method::Series { terms },
    })
}

/// `T(n) = sum_{k >= n} l^-floor(k/2)`, exactly.
pub fn length_tail(alphabet: u32, n: u32) -> BigRational {
    let m = n / 2;
    let lm = BigRational::new(BigInt::one(), pow(alphabet, m));
    let l1 = int(alphabet - 1);
    if n % 2 == 0 {
        lm * int(2 * alphabet) / l1
    } else {
        &lm + lm.clone() * int(2) / l1
    }
}

/// `sum_{r >= a} r l^-r`.
fn weighted_geometric_tail(alphabet: u32, a: u32) -> BigRational {
    let x = BigRational::new(BigInt::one(), BigInt::from(alphabet));
    let xa = BigRational::new(BigInt::one(), pow(alphabet, a));
    let one_minus = int(1) - &x;
    xa * (int(a) - int(a as i64 - 1) * x) / (&one_minus * &one_minus)
}

/// Bound on `|alpha - alpha(n)|`.
pub fn alpha_error_bound(alphabet: u32, n: u32) -> BigRational {
    let t = length_tail(alphabet, n);
    let mut k = 0;
    while k + 1 < n && BigRational::new(BigInt::one(), pow(alphabet, k + 1)) >= t {
        k += 1;
    }
    t * int(u64::from(k) * u64::from(k + 1) / 2) + weighted_geometric_tail(alphabet, k + 1)
}

fn infeasible(digits: u32, required: u32, config: &EvalConfig) -> Error {
    Error::InfeasiblePrecision {
        digits,
        required: u64::from(required),
        budget: config.max_length,
    }
}

/// `lambda_l(r)` from exact counts at a length where the tail bound is met.
pub fn lambda_r_limit(
    counter: &Counter,
    r: u32,
    digits: u32,
    config: &EvalConfig,
) -> Result<Evaluation> {
    let l = counter.alphabet();
    check_alphabet(l)?;
    let target = target_error(digits);
    let scale = digits + SCALE_DIGITS;
    let cap = BigRational::new(BigInt::one(), pow(l, r));
    if cap <= target {
        return Ok(Evaluation {
            value: ErrDecimal::from_rational(&BigRational::zero(), cap, scale),
            method: Method::TailOnly,
        });
    }
    let mut n = r + 1;
    while length_tail(l, n) > target {
        n += 1;
    }
    if n > config.max_length {
        return Err(infeasible(digits, n, config));
    }
    let count = counter.max_border_count(n, r);
    let value = rational(&count, &counter.power(n));
    Ok(Evaluation {
        value: ErrDecimal::from_rational(&value, length_tail(l, n), scale),
        method: Method::FiniteLength { length: n },
    })
}

/// Smallest length at which the `alpha` error bound meets `target`.
pub fn alpha_length(alphabet: u32, target: &BigRational) -> u32 {
    let mut n = 1;
    while &alpha_error_bound(alphabet, n) > target {
        n += 1;
    }
    n
}

/// `alpha_l` from `alpha_l(n*)` computed exactly.
pub fn alpha_limit(counter: &Counter, digits: u32, config: &EvalConfig) -> Result<Evaluation> {
    let l = counter.alphabet();
    check_alphabet(l)?;
    let n = alpha_length(l, &target_error(digits));
    if n > config.max_length {
        return Err(infeasible(digits, n, config));
    }
    let dist = if config.parallel {
        counter.exact_distribution_par(n)?
    } else {
        counter.exact_distribution(n)?
    };
    let value = rational(&dist.border_moment(), &dist.total);
    Ok(Evaluation {
        value: ErrDecimal::from_rational(&value, alpha_error_bound(l, n), digits + SCALE_DIGITS),
        method: Method::FiniteLength { length: n },
    })
}

/// `|lambda(r, n+1) - lambda(r, n)|` never exceeds this.
pub fn step_bound(alphabet: u32, n: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow(alphabet, n / 2))
}

/// `lambda_l(r, n)` as an exact rational.
pub fn lambda_at(counter: &Counter, r: u32, n: u32) -> BigRational {
    if r >= n {
        return BigRational::zero();
    }
    rational(&counter.max_border_count(n, r), &counter.power(n))
}

/// `l^-r`, the a priori cap on `lambda_l(r, n)`.
pub fn border_cap(alphabet: u32, r: u32) -> BigRational {
    rational(&BigUint::one(), &BigUint::from(alphabet).pow(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn border_one_series_first_terms() {
        let t = border_one_series_terms(2, 3);
        assert_eq!(t[0], q(1, 4));
        assert_eq!(t[1], q(-3, 56));
        assert_eq!(t[2], q(6, 1) * q(120, 7) / q(32512, 1));
    }

    #[test]
    fn unbordered_series_first_terms() {
        let t = unbordered_series_terms(2, 3);
        assert_eq!(t[0], q(1, 1));
        assert_eq!(t[1], q(-2, 7));
        assert_eq!(t[2], q(2, 1) * q(8, 7) / q(127, 1));
    }

    #[test]
    fn length_tail_matches_direct_sum() {
        for l in [2u32, 3, 10] {
            for n in 1..12u32 {
                let direct =
                    (n..n + 200).fold(BigRational::zero(), |acc, k| acc + step_bound(l, k));
                let closed = length_tail(l, n);
                assert!(closed >= direct);
                assert!(&closed - &direct < q(1, 1_000_000_000));
                assert!(closed <= int(2 * l) / int(l - 1) * step_bound(l, n));
            }
        }
    }

    #[test]
    fn weighted_tail_matches_direct_sum() {
        for l in [2u32, 5] {
            for a in 1..6u32 {
                let direct = (a..a + 300).fold(BigRational::zero(), |acc, r| {
                    acc + int(r) * border_cap(l, r)
                });
                let closed = weighted_geometric_tail(l, a);
                assert!(closed >= direct && &closed - &direct < q(1, 1_000_000_000));
            }
        }
    }

    #[test]
    fn alpha_bound_decreases_with_length() {
        let mut prev = alpha_error_bound(2, 1);
        for n in 2..80 {
            let next = alpha_error_bound(2, n);
            assert!(next <= prev, "n = {n}");
            prev = next;
        }
    }

    #[test]
    fn small_alphabets_rejected() {
        assert!(matches!(
            lambda0_limit(1, 5),
            Err(Error::AlphabetTooSmall { .. })
        ));
        let c = Counter::new(1).unwrap();
        assert!(alpha_limit(&c, 5, &EvalConfig::default()).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let c = Counter::new(2).unwrap();
        let cfg = EvalConfig {
            max_length: 60,
            parallel: false,
        };
        assert!(matches!(
            alpha_limit(&c, 20, &cfg),
            Err(Error::InfeasiblePrecision { budget: 60, .. })
        ));
        assert!(lambda_r_limit(&c, 2, 5, &cfg).is_ok());
    }

    #[test]
    fn huge_r_is_answered_by_the_cap() {
        let c = Counter::new(2).unwrap();
        let e = lambda_r_limit(&c, 200, 20, &EvalConfig::default()).unwrap();
        assert_eq!(e.method, Method::TailOnly);
        assert_eq!(e.value.render(20).unwrap(), "0.00000000000000000000");
    }
}
