//! Exact rational scalars and the small combinatorial quantities
//! (factorials, binomial and multinomial coefficients) used throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (`num_rational` maintains both invariants on construction).
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics on a zero denominator; meant for literals.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn big_to_rat(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Parse an exact fraction string: `"7"`, `"-3/4"`, `"0"`.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact fraction: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator: {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Render as `num/den`, or just `num` when the denominator is one.
pub fn format_rational(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient with the usual convention: zero when `k < 0` or
/// `k > n` (and for `n < 0`, which never arises here).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `(Σ parts)! / Π partsᵢ!`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut seen: u64 = 0;
    for &p in parts {
        for i in 1..=p as u64 {
            acc = acc * (seen + i) / i;
        }
        seen += p as u64;
    }
    acc
}
