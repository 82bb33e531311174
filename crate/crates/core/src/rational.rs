//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with
//! a positive denominator; zero is always `0/1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`. Panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Returns `s >= 0` with `s * s == r` when `r` is a square in the rationals.
pub fn is_perfect_square(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = exact_isqrt(r.numer())?;
    let den = exact_isqrt(r.denom())?;
    Some(Rational::new(num, den))
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Nearest `f64`, saturating to infinity outside the representable range.
pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // num-rational returns None for huge numerators even when the quotient fits.
    let (n, d) = (r.numer(), r.denom());
    let shift = n.bits() as i64 - d.bits() as i64 - 60;
    let (n2, d2) = if shift > 0 {
        (n >> (shift as usize), d.clone())
    } else {
        (n.clone(), d << ((-shift) as usize))
    };
    let q = n2.to_f64().unwrap_or(0.0) / d2.to_f64().unwrap_or(1.0);
    q * 2f64.powi(shift.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Positive divisors of `|n|` by trial division. `n` must be nonzero.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    debug_assert!(!m.is_zero());
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divisors = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    divisors
}
