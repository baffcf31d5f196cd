//! Helpers around [`num_rational::BigRational`], the scalar of the exponent calculus.
//!
//! `num_rational::BigRational` keeps every value in lowest terms with a
//! positive denominator, so the canonical-form invariant comes for free.
//! What lives here is construction shorthand, the `num/den` wire format,
//! and the few operations the calculus needs that `num` does not provide
//! (powers of two, dyadic enclosures of n-th roots, decimal rendering).

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^k` for `k >= 0`.
pub fn pow2(k: u32) -> Rational {
    Rational::from_integer(BigInt::one() << k as usize)
}

/// `2^-k` for `k >= 0`.
pub fn inv_pow2(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k as usize)
}

/// Renders a rational as `num/den`, always with an explicit denominator.
pub fn to_exact_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` (or a bare integer) exactly.
///
/// Decimal inputs such as `0.125` are rejected: exact operations take exact
/// inputs only.
pub fn parse_exact(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(Error::Parse(format!(
            "`{s}` is a decimal; exact inputs must be written as num/den (e.g. 1/8)"
        )));
    }
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Decimal annotation with 15 significant digits.
pub fn sig15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = 15i32;
    let mag = x.abs().log10().floor() as i32;
    let decimals = (digits - 1 - mag).max(0) as usize;
    if (-5..15).contains(&mag) {
        format!("{x:.decimals$}")
    } else {
        format!("{x:.14e}")
    }
}

/// Returns the exact square root of `r` when it is a rational square.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Returns the exact `k`-th root of a nonnegative `r` when it is rational.
pub fn exact_root(r: &Rational, k: u32) -> Option<Rational> {
    if r.is_negative() || k == 0 {
        return None;
    }
    let n = r.numer().nth_root(k);
    let d = r.denom().nth_root(k);
    (num_traits::pow(n.clone(), k as usize) == *r.numer()
        && num_traits::pow(d.clone(), k as usize) == *r.denom())
    .then(|| Rational::new(n, d))
}

/// Dyadic enclosure `[lo, hi]` of `x^(1/k)` for `x >= 0` with
/// `hi - lo <= 2^-bits`.
pub fn root_enclosure(x: &Rational, k: u32, bits: u32) -> (Rational, Rational) {
    assert!(!x.is_negative() && k > 0);
    // floor((x * 2^(k*bits))^(1/k)) / 2^bits, using floor(n/d) first.
    let scaled = x * pow2(k * bits);
    let fl = scaled.numer() / scaled.denom();
    let mut root = fl.nth_root(k);
    // nth_root is exact floor for integers; the rational floor can only lower it
    while num_traits::pow(&root + BigInt::one(), k as usize) * scaled.denom() <= *scaled.numer() {
        root += BigInt::one();
    }
    let den = BigInt::one() << bits as usize;
    let lo = Rational::new(root.clone(), den.clone());
    let exact = num_traits::pow(root.clone(), k as usize) * scaled.denom() == *scaled.numer();
    let hi = if exact {
        lo.clone()
    } else {
        Rational::new(root + BigInt::one(), den)
    };
    (lo, hi)
}

/// Integer power with a possibly negative exponent. Panics on `0^-k`.
pub fn powi(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

pub fn sign(r: &Rational) -> Sign {
    if r.is_zero() {
        Sign::NoSign
    } else if r.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}
