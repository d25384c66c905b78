//! Helpers around [`BigRational`], the exact coefficient type used everywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders as `numerator/denominator`, always with an explicit denominator.
pub fn to_ratio_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `base^exp` for any integer exponent. Panics on `0^negative`.
pub fn pow_i64(base: &Rational, exp: i64) -> Rational {
    let mag = num_traits::pow::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        assert!(!mag.is_zero(), "zero raised to a negative power");
        mag.recip()
    } else {
        mag
    }
}

pub fn sign(q: &Rational) -> Ordering {
    if q.is_positive() {
        Ordering::Greater
    } else if q.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// The rational with the smallest denominator (then smallest absolute numerator)
/// in the closed interval `[lo, hi]`. Found by walking continued fractions.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "empty interval");
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if fl.clone() + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    // both endpoints share the integer part; recurse on reciprocals of the fractional parts
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    let inner = simplest_positive(&hi_frac.recip(), &lo_frac.recip());
    fl + inner.recip()
}

/// Least common multiple of the coefficient denominators.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(coeffs: I) -> BigInt {
    coeffs
        .into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}
