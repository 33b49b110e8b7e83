//! Exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q` or an integer. Whitespace around the value is ignored.
pub fn parse(text: &str) -> Result<Rat> {
    let t = text.trim();
    let bad = || Error::parse(0, format!("not a rational number: {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(0, format!("zero denominator in {text:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Comma separated list of rationals.
pub fn parse_list(text: &str) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let v = parse(piece).map_err(|_| {
            Error::parse(offset, format!("not a rational number: {:?}", piece.trim()))
        })?;
        out.push(v);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Least nonnegative representative of `x` modulo the positive rational `m`.
pub fn modulo(x: &Rat, m: &Rat) -> Rat {
    debug_assert!(m.is_positive());
    let k = (x / m).floor();
    x - k * m
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// `x` as an `i64` when it is an integer of moderate size.
pub fn to_i64(x: &Rat) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn display_list(xs: &[Rat]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
