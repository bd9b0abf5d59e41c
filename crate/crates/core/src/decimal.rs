//! Decimal values carrying a rigorous absolute error radius.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub(crate) fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// `10^-k` as a rational.
pub fn ten_to_minus(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow10(k))
}

/// Rounds `num / den` to the nearest integer, ties to even. `den > 0`.
fn round_half_even(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_mod_floor(den);
    match (&r * 2u32).cmp(den) {
        Ordering::Less => q,
        Ordering::Greater => q + 1,
        Ordering::Equal if q.is_odd() => q + 1,
        Ordering::Equal => q,
    }
}

/// `mantissa * 10^-scale`, with the claim `|true - value| <= err`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrDecimal {
    mantissa: BigInt,
    scale: u32,
    err: BigRational,
}

impl ErrDecimal {
    /// Rounds `value` to `scale` decimals; the rounding error is added to `err`.
    pub fn from_rational(value: &BigRational, err: BigRational, scale: u32) -> Self {
        assert!(!err.is_negative(), "error radius must be nonnegative");
        let scaled = value.numer() * pow10(scale);
        let mantissa = round_half_even(&scaled, value.denom());
        let rounded = BigRational::new(mantissa.clone(), pow10(scale));
        let err = err + (value - rounded).abs();
        Self {
            mantissa,
            scale,
            err,
        }
    }

    pub fn exact(value: &BigRational, scale: u32) -> Self {
        Self::from_rational(value, BigRational::zero(), scale)
    }

    pub fn value(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10(self.scale))
    }

    pub fn err(&self) -> &BigRational {
        &self.err
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn lower(&self) -> BigRational {
        self.value() - &self.err
    }

    pub fn upper(&self) -> BigRational {
        self.value() + &self.err
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lower() <= x && x <= &self.upper()
    }

    /// Whether the two enclosures intersect.
    pub fn overlaps(&self, other: &ErrDecimal) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }

    /// Whether the enclosure is tight enough to print `digits` decimals.
    pub fn renders_to(&self, digits: u32) -> bool {
        self.err.clone() * BigInt::from(2u32) < ten_to_minus(digits)
    }

    /// The value rounded half-to-even to `digits` decimals. Refused unless
    /// `err < 10^-digits / 2`, which keeps the printed value within one unit
    /// in the last place of the true value.
    pub fn render(&self, digits: u32) -> Result<String> {
        Ok(self.rounded(digits)?.fixed())
    }

    /// Like [`render`](Self::render), but keeps the enclosure: the result's
    /// error covers both the old radius and the rounding.
    pub fn rounded(&self, digits: u32) -> Result<ErrDecimal> {
        if !self.renders_to(digits) {
            return Err(Error::InsufficientPrecision { digits });
        }
        Ok(Self::from_rational(&self.value(), self.err.clone(), digits))
    }

    /// The stored mantissa in fixed notation, all `scale` decimals.
    pub fn fixed(&self) -> String {
        format_fixed(&self.mantissa, self.scale)
    }

    /// Decimal upper bound on `err` with two significant digits, e.g. `4.2e-23`.
    pub fn err_upper_string(&self) -> String {
        sci_upper(&self.err)
    }
}

fn format_fixed(mantissa: &BigInt, digits: u32) -> String {
    let negative = mantissa.sign() == Sign::Minus;
    let mut body = mantissa.magnitude().to_string();
    let d = digits as usize;
    if body.len() <= d {
        body = format!("{}{}", "0".repeat(d + 1 - body.len()), body);
    }
    let (int, frac) = body.split_at(body.len() - d);
    let sign = if negative { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Smallest `d.d * 10^e` that is at least `x`.
fn sci_upper(x: &BigRational) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let x = x.abs();
    // 10^e <= x < 10^(e+1)
    let mut e = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    let ten = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(pow10(k as u32))
        } else {
            ten_to_minus((-k) as u32)
        }
    };
    while ten(e) > x {
        e -= 1;
    }
    while ten(e + 1) <= x {
        e += 1;
    }
    let scaled = x / ten(e - 1);
    let mut m = scaled.ceil().to_integer();
    if m >= BigInt::from(100u32) {
        m = BigInt::from(10u32);
        e += 1;
    }
    let m = m.to_string();
    format!("{}.{}e{}", &m[..1], &m[1..], e)
}

impl fmt::Display for ErrDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", self.fixed(), self.err_upper_string())
    }
}

fn aligned(a: &ErrDecimal, b: &ErrDecimal) -> (BigInt, BigInt, u32) {
    let scale = a.scale.max(b.scale);
    (
        &a.mantissa * pow10(scale - a.scale),
        &b.mantissa * pow10(scale - b.scale),
        scale,
    )
}

impl Add for &ErrDecimal {
    type Output = ErrDecimal;

    fn add(self, rhs: &ErrDecimal) -> ErrDecimal {
        let (a, b, scale) = aligned(self, rhs);
        ErrDecimal {
            mantissa: a + b,
            scale,
            err: &self.err + &rhs.err,
        }
    }
}

impl Sub for &ErrDecimal {
    type Output = ErrDecimal;

    fn sub(self, rhs: &ErrDecimal) -> ErrDecimal {
        self + &(-rhs)
    }
}

impl Neg for &ErrDecimal {
    type Output = ErrDecimal;

    fn neg(self) -> ErrDecimal {
        ErrDecimal {
            mantissa: -&self.mantissa,
            scale: self.scale,
            err: self.err.clone(),
        }
    }
}

impl Mul for &ErrDecimal {
    type Output = ErrDecimal;

    /// `|ab - xy| <= |x| eb + |y| ea + ea eb` for `|a - x| <= ea`, `|b - y| <= eb`.
    fn mul(self, rhs: &ErrDecimal) -> ErrDecimal {
        let err =
            self.value().abs() * &rhs.err + rhs.value().abs() * &self.err + &self.err * &rhs.err;
        ErrDecimal {
            mantissa: &self.mantissa * &rhs.mantissa,
            scale: self.scale + rhs.scale,
            err,
        }
    }
}

/// Exact rational from an unsigned fraction.
pub fn rational(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rounding_and_rendering() {
        let x = ErrDecimal::exact(&q(1, 3), 10);
        assert_eq!(x.render(5).unwrap(), "0.33333");
        assert_eq!(x.err(), &q(1, 30_000_000_000));

        let y = ErrDecimal::exact(&q(-5, 4), 4);
        assert_eq!(y.render(1).unwrap(), "-1.2");
        assert_eq!(y.render(6).unwrap(), "-1.250000");
        assert_eq!(ErrDecimal::exact(&q(35, 100), 2).render(1).unwrap(), "0.4");
        assert_eq!(ErrDecimal::exact(&q(7, 1), 0).render(0).unwrap(), "7");
        assert_eq!(
            ErrDecimal::exact(&q(1, 1000), 3).render(3).unwrap(),
            "0.001"
        );
    }

    #[test]
    fn rendering_requires_small_error() {
        let x = ErrDecimal::from_rational(&q(1, 2), q(1, 1000), 10);
        assert!(x.render(2).is_ok());
        assert_eq!(x.render(3), Err(Error::InsufficientPrecision { digits: 3 }));
        let x = ErrDecimal::from_rational(&q(1, 2), q(5, 10_000), 10);
        assert!(x.render(3).is_err());
    }

    #[test]
    fn error_string_is_an_upper_bound() {
        let x = ErrDecimal::from_rational(&q(0, 1), q(123, 100_000), 0);
        assert_eq!(x.err_upper_string(), "1.3e-3");
        let x = ErrDecimal::from_rational(&q(0, 1), q(1, 100), 0);
        assert_eq!(x.err_upper_string(), "1.0e-2");
        let x = ErrDecimal::from_rational(&q(0, 1), q(995, 10), 0);
        assert_eq!(x.err_upper_string(), "1.0e2");
        assert_eq!(ErrDecimal::exact(&q(3, 1), 0).err_upper_string(), "0");
    }

    #[test]
    fn arithmetic_encloses_exact_results() {
        let a = ErrDecimal::exact(&q(1, 7), 6);
        let b = ErrDecimal::exact(&q(-2, 3), 4);
        assert!((&a + &b).contains(&(q(1, 7) + q(-2, 3))));
        assert!((&a - &b).contains(&(q(1, 7) - q(-2, 3))));
        assert!((&a * &b).contains(&(q(1, 7) * q(-2, 3))));
    }

    proptest! {
        #[test]
        fn enclosure_holds_under_arithmetic(
            an in -10_000i64..10_000, ad in 1i64..1000,
            bn in -10_000i64..10_000, bd in 1i64..1000,
            sa in 0u32..8, sb in 0u32..8,
        ) {
            let (x, y) = (q(an, ad), q(bn, bd));
            let a = ErrDecimal::exact(&x, sa);
            let b = ErrDecimal::exact(&y, sb);
            prop_assert!(a.contains(&x));
            prop_assert!((&a + &b).contains(&(&x + &y)));
            prop_assert!((&a - &b).contains(&(&x - &y)));
            prop_assert!((&a * &b).contains(&(&x * &y)));
        }

        #[test]
        fn render_is_within_one_unit_of_truth(n in -1_000_000i64..1_000_000, d in 1i64..10_000, digits in 0u32..6) {
            let x = q(n, d);
            let v = ErrDecimal::exact(&x, digits + 8);
            let printed = v.render(digits).unwrap();
            let back: BigRational = {
                let neg = printed.starts_with('-');
                let digits_only: String = printed.chars().filter(|c| c.is_ascii_digit()).collect();
                let m: BigInt = digits_only.parse().unwrap();
                BigRational::new(if neg { -m } else { m }, pow10(digits))
            };
            prop_assert!((back - x).abs() <= ten_to_minus(digits));
        }
    }
}
