//! Laurent polynomials in one variable `t` with exact integer coefficients.

use std::cmp::{max, min};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Coefficient};

/// `sum_i coeffs[i] * t^(low + i)`.
///
/// Always stored in canonical form: the first and last coefficients are
/// nonzero, and the zero polynomial is `low = 0` with no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn new(low: i64, coeffs: Vec<C>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.canonicalize();
        p
    }

    /// Ordinary polynomial from coefficients listed from degree 0 upward.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        Self::new(0, coeffs)
    }

    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| scalar::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: C, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(C::one(), exp)
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient; `0` for the zero polynomial.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Nonzero span of coefficients, starting at `t^low()`.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Highest exponent with a nonzero coefficient; `None` stands for
    /// `deg 0 = -inf`.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Lowest exponent with a nonzero coefficient, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> C {
        self.coeff_ref(k).cloned().unwrap_or_else(C::zero)
    }

    fn coeff_ref(&self, k: i64) -> Option<&C> {
        let i = k - self.low;
        if i < 0 {
            return None;
        }
        self.coeffs.get(i as usize)
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Dense coefficient list from degree 0 up to the degree, or `None`
    /// if a negative exponent occurs.
    pub fn to_dense(&self) -> Option<Vec<C>> {
        if !self.is_polynomial() {
            return None;
        }
        let mut out = vec![C::zero(); self.low as usize];
        out.extend(self.coeffs.iter().cloned());
        Some(out)
    }

    /// Iterator over `(exponent, coefficient)` for nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(
            self.low,
            self.coeffs.iter().map(|x| scalar::mul(x, c)).collect(),
        )
    }

    /// Coefficient-wise exact division by a scalar.
    pub fn exact_div_scalar(&self, c: &C) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| scalar::exact_div(x, c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(self.low, coeffs))
    }

    /// `self += c * t^k * other`, without intermediate allocations.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: &C, k: i64) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let olow = other.low + k;
        if self.is_zero() {
            self.low = olow;
        }
        let new_low = min(self.low, olow);
        let new_high = max(
            self.low + self.coeffs.len() as i64,
            olow + other.coeffs.len() as i64,
        );
        if new_low < self.low {
            let pad = (self.low - new_low) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_n(C::zero(), pad));
            self.low = new_low;
        }
        self.coeffs
            .resize((new_high - self.low) as usize, C::zero());
        let off = (olow - self.low) as usize;
        for (i, x) in other.coeffs.iter().enumerate() {
            let term = if c.is_one() {
                x.clone()
            } else {
                scalar::mul(x, c)
            };
            self.coeffs[off + i] = scalar::add(&self.coeffs[off + i], &term);
        }
        self.canonicalize();
    }

    /// `f(t^k)`; `k = 0` is rejected.
    pub fn substitute_power(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroSubstitution);
        }
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_scaled_shifted(&Self::one(), c, e * k);
        }
        Ok(out)
    }

    /// `f(t^-1)`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let high = self.low + self.coeffs.len() as i64 - 1;
        LaurentPoly { low: -high, coeffs }
    }

    /// Membership in `Pal(n)`: `a_k = a_{n-k}` for every `k`.
    pub fn is_palindromic(&self, n: i64) -> bool {
        if self.is_zero() {
            return true;
        }
        let high = self.low + self.coeffs.len() as i64 - 1;
        if self.low + high != n {
            return false;
        }
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// The unique `g` with `deg g < d/2` such that `self + g` lies in
    /// `Pal(d)`: `g_k = f_{d-k} - f_k` for `k < d/2`.
    pub fn palindromic_completion(&self, d: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let high = self.low + self.coeffs.len() as i64 - 1;
        // exponents k < d/2, i.e. 2k < d
        let top = (d - 1).div_euclid(2);
        let bottom = min(self.low, d - high);
        if bottom > top {
            return Self::zero();
        }
        let coeffs = (bottom..=top)
            .map(|k| scalar::sub(&self.coeff(d - k), &self.coeff(k)))
            .collect();
        Self::new(bottom, coeffs)
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> C {
        self.coeffs
            .iter()
            .fold(C::zero(), |acc, c| scalar::add(&acc, c))
    }
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl<C: Coefficient> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<C: Coefficient> From<C> for LaurentPoly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl<'a, C: Coefficient> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &C::one(), 0);
        out
    }
}

impl<'a, C: Coefficient> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &-C::one(), 0);
        out
    }
}

impl<'a, C: Coefficient> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = scalar::add(&coeffs[i + j], &scalar::mul(a, b));
            }
        }
        LaurentPoly::new(self.low + rhs.low, coeffs)
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Coefficient> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: Coefficient> $tr<&'a LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(rhs)
            }
        }
        impl<'a, C: Coefficient> $tr<LaurentPoly<C>> for &'a LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coefficient> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        self.add_scaled_shifted(rhs, &C::one(), 0);
    }
}

impl<C: Coefficient> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        self.add_scaled_shifted(rhs, &-C::one(), 0);
    }
}

impl<C: Coefficient> std::iter::Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{abs}t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{abs}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
