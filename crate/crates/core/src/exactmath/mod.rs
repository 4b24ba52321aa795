//! Exact scalar, polynomial and truncated power series arithmetic.
//!
//! Integers are [`num_bigint::BigInt`], rationals are [`num_rational::BigRational`]
//! (always stored in lowest terms with a positive denominator).

mod poly;
mod series;

pub use poly::Poly;
pub use series::SeriesTrunc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::{Int, Rat};

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^e` as ±1.
pub fn sign(e: usize) -> Int {
    if e % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

/// Parses `"-3"`, `"7/4"` or a plain decimal such as `"0.25"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("`{s}` is not a rational number"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        let mut num: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rat::new(num, den));
    }
    let v: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(v))
}

/// Renders an integer-valued rational without a denominator.
pub fn format_rat(v: &Rat) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Converts to an integer, or `None` if the value has a denominator.
pub fn rat_to_int(v: &Rat) -> Option<Int> {
    v.is_integer().then(|| v.numer().clone())
}

/// Converts to a small nonnegative integer index.
pub fn rat_to_usize(v: &Rat) -> Option<usize> {
    rat_to_int(v).and_then(|i| i.to_usize())
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: i64) -> Int {
    if k < 0 || k as usize > n {
        return Int::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `x(x-1)...(x-n+1)`, one for `n = 0`.
pub fn falling_factorial(x: &Rat, n: usize) -> Rat {
    generalized_falling(x, &Rat::one(), n)
}

/// `x(x+1)...(x+n-1)`, one for `n = 0`.
pub fn rising_factorial(x: &Rat, n: usize) -> Rat {
    generalized_rising(x, &Rat::one(), n)
}

/// `(x|m)_k = x(x-m)...(x-(k-1)m)`.
pub fn generalized_falling(x: &Rat, m: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term -= m;
    }
    acc
}

/// `[x|m]_n = x(x+m)...(x+(n-1)m)`.
pub fn generalized_rising(x: &Rat, m: &Rat, n: usize) -> Rat {
    generalized_falling(x, &-m, n)
}

/// Integer-only `(x|m)_k`, used by recurrences that never leave the integers.
pub fn int_generalized_falling(x: &Int, m: &Int, k: usize) -> Int {
    let mut acc = Int::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term -= m;
    }
    acc
}

/// Integer-only `[x|m]_n`.
pub fn int_generalized_rising(x: &Int, m: &Int, n: usize) -> Int {
    int_generalized_falling(x, &-m, n)
}

/// `prod_{i<n} (a x + b - i m)` as a polynomial in `x`.
///
/// This one constructor covers every factorial basis used in the crate:
/// monomials `(1, 0, 0)`, falling factorials `(1, 0, 1)`, `(x-1|m)_n` as
/// `(1, -1, m)`, `(mx+r)^n` as `(m, r, 0)` and so on.
pub fn factorial_basis_poly(a: &Rat, b: &Rat, m: &Rat, n: usize) -> Result<Poly> {
    if a.is_zero() && n >= 1 {
        return Err(Error::DegenerateBasis { index: n, degree: Some(0) });
    }
    Ok(factorial_basis_sequence(a, b, m, n)
        .pop()
        .expect("sequence always has n + 1 elements"))
}

/// All of `factorial_basis_poly(a, b, m, j)` for `j = 0..=n`, built incrementally.
pub fn factorial_basis_sequence(a: &Rat, b: &Rat, m: &Rat, n: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n + 1);
    let mut current = Poly::one();
    out.push(current.clone());
    let mut shift = b.clone();
    for _ in 0..n {
        current = current.mul(&Poly::new(vec![shift.clone(), a.clone()]));
        out.push(current.clone());
        shift -= m;
    }
    out
}

/// Number of bits in `|v|`.
pub fn bit_length(v: &Int) -> u64 {
    v.abs().bits()
}

/// Exact division that reports a remainder instead of truncating.
pub fn exact_div(num: &Int, den: &Int) -> Option<Int> {
    if den.is_zero() {
        return None;
    }
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}
