//! Coefficient rings used throughout the crate.
//!
//! Everything that touches polynomial coefficients is generic over
//! [`Coefficient`]. The canonical choice is [`num_bigint::BigInt`]; the
//! primitive signed integers also qualify, in which case every addition and
//! multiplication is overflow-checked and an overflow panics instead of
//! wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer ring.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Signed
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Signed
        + Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[inline]
pub(crate) fn add<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_add(b).expect("coefficient overflow in addition")
}

#[inline]
pub(crate) fn sub<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_sub(b)
        .expect("coefficient overflow in subtraction")
}

#[inline]
pub(crate) fn mul<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_mul(b)
        .expect("coefficient overflow in multiplication")
}

/// Lifts a machine integer into the coefficient ring.
#[inline]
pub fn from_i64<C: Coefficient>(v: i64) -> C {
    C::from_i64(v).expect("integer does not fit the coefficient type")
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn exact_div<C: Coefficient>(a: &C, b: &C) -> Option<C> {
    if b.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`, and
/// `C(n, 0) = 1` for every `n` (including negative `n`).
pub fn binomial<C: Coefficient>(n: i64, k: i64) -> C {
    if k < 0 {
        return C::zero();
    }
    if k == 0 {
        return C::one();
    }
    if n < 0 || k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    let mut acc = C::one();
    for i in 0..k {
        // acc = C(n, i) here, so acc * (n - i) is divisible by (i + 1)
        acc = mul(&acc, &from_i64(n - i));
        acc = exact_div(&acc, &from_i64(i + 1)).expect("binomial recurrence is exact");
    }
    acc
}

/// Multinomial coefficient `n! / (parts[0]! parts[1]! ...)`; zero unless the
/// parts are non-negative and sum to `n`.
pub fn multinomial<C: Coefficient>(n: i64, parts: &[i64]) -> C {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return C::zero();
    }
    let mut remaining = n;
    let mut acc = C::one();
    for &p in parts {
        acc = mul(&acc, &binomial::<C>(remaining, p));
        remaining -= p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn binomials() {
        assert_eq!(binomial::<i64>(5, 2), 10);
        assert_eq!(binomial::<i64>(4, 0), 1);
        assert_eq!(binomial::<i64>(-1, 0), 1);
        assert_eq!(binomial::<i64>(3, 4), 0);
        assert_eq!(binomial::<i64>(3, -1), 0);
        assert_eq!(binomial::<BigInt>(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial::<i64>(4, &[1, 1, 2]), 12);
        assert_eq!(multinomial::<i64>(4, &[2, 2, 0]), 6);
        assert_eq!(multinomial::<i64>(4, &[2, 2, 1]), 0);
    }

    #[test]
    fn exact_division() {
        assert_eq!(exact_div(&12i64, &4), Some(3));
        assert_eq!(exact_div(&13i64, &4), None);
        assert_eq!(exact_div(&13i64, &0), None);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn fixed_width_overflow_is_checked() {
        let _ = mul(&i8::MAX, &2i8);
    }
}
