//! Truncated power series in `u` whose coefficients are Laurent
//! polynomials in `t`, and the generating series of fan and cycle
//! Kazhdan-Lusztig polynomials.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::scalar::{self, Coefficient};

/// `sum_{k <= order} coeffs[k] u^k`, exact modulo `u^(order + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries<C: Coefficient> {
    coeffs: Vec<LaurentPoly<C>>,
}

impl<C: Coefficient> BivariateSeries<C> {
    /// Pads or truncates `coeffs` to `order + 1` terms.
    pub fn new(order: usize, mut coeffs: Vec<LaurentPoly<C>>) -> Self {
        coeffs.resize(order + 1, LaurentPoly::zero());
        BivariateSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: LaurentPoly<C>) -> Self {
        Self::new(order, vec![c])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> LaurentPoly<C> {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn coeffs(&self) -> &[LaurentPoly<C>] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: LaurentPoly<C>) {
        self.coeffs[k] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.clone())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &LaurentPoly<C>) -> Self {
        BivariateSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `u^k`; the order is unchanged.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.order(), coeffs)
    }

    /// Division by `u^k`; the first `k` coefficients must vanish and the
    /// order drops by `k`.
    pub fn divide_by_u(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Parameter(format!(
                "cannot divide order-{} series by u^{k}",
                self.order()
            )));
        }
        if let Some(i) = (0..k).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(Error::Internal(format!(
                "series division by u^{k} leaves remainder at u^{i}"
            )));
        }
        Ok(BivariateSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Division of every coefficient by `c * t^k`, which must be exact.
    pub fn divide_by_monomial(&self, c: &C, k: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, x)| {
                x.exact_div_scalar(c).map(|q| q.shift(-k)).ok_or_else(|| {
                    Error::Internal(format!("coefficient of u^{i} is not divisible by {c}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BivariateSeries { coeffs })
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let unit = if a0.is_one() {
            C::one()
        } else if (-a0).is_one() {
            -C::one()
        } else {
            return Err(Error::Internal(format!(
                "series constant term {a0} is not a unit"
            )));
        };
        let mut inv: Vec<LaurentPoly<C>> = vec![LaurentPoly::constant(unit.clone())];
        for n in 1..=self.order() {
            let mut acc = LaurentPoly::zero();
            for i in 1..=n {
                acc += &(&self.coeffs[i] * &inv[n - i]);
            }
            // b_n = -acc / a0 with a0 = unit = 1/unit
            inv.push(acc.scale(&-unit.clone()));
        }
        Ok(BivariateSeries { coeffs: inv })
    }

    /// Square root with constant term 1 by Newton iteration
    /// `s <- s + (x - s^2) / (2 s)`, doubling the precision each step.
    /// Requires constant term 1; every division by 2 is checked.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Internal(format!(
                "square root needs constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        let target = self.order();
        let two: C = scalar::from_i64(2);
        let mut s = Self::constant(0, LaurentPoly::one());
        let mut prec = 0usize;
        while prec < target {
            prec = (2 * prec + 1).min(target);
            let s_p = s.truncate(prec);
            let residual = &self.truncate(prec) - &(&s_p * &s_p);
            let step = (&residual * &s_p.inverse()?).divide_by_monomial(&two, 0)?;
            s = &s_p + &step;
        }
        Ok(s.truncate(target))
    }
}

impl<C: Coefficient> Add for &BivariateSeries<C> {
    type Output = BivariateSeries<C>;
    fn add(self, rhs: &BivariateSeries<C>) -> BivariateSeries<C> {
        let order = self.order().min(rhs.order());
        BivariateSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl<C: Coefficient> Sub for &BivariateSeries<C> {
    type Output = BivariateSeries<C>;
    fn sub(self, rhs: &BivariateSeries<C>) -> BivariateSeries<C> {
        let order = self.order().min(rhs.order());
        BivariateSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl<C: Coefficient> Neg for &BivariateSeries<C> {
    type Output = BivariateSeries<C>;
    fn neg(self) -> BivariateSeries<C> {
        BivariateSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Coefficient> Mul for &BivariateSeries<C> {
    type Output = BivariateSeries<C>;
    fn mul(self, rhs: &BivariateSeries<C>) -> BivariateSeries<C> {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += &(a * b);
            }
        }
        BivariateSeries { coeffs }
    }
}

/// `(1 - u)^2 - 4 t u^2` to the given order.
fn discriminant<C: Coefficient>(order: usize) -> BivariateSeries<C> {
    BivariateSeries::new(
        order,
        vec![
            LaurentPoly::one(),
            LaurentPoly::from_ints(0, &[-2]),
            LaurentPoly::from_ints(0, &[1, -4]),
        ],
    )
}

/// `sum_{n >= 1} P_{F_n}(t) u^n = (1 - u - sqrt((1-u)^2 - 4tu^2)) / (2tu)`,
/// truncated at `u^order`.
pub fn phi_f_series<C: Coefficient>(order: usize) -> Result<BivariateSeries<C>> {
    let work = order + 1;
    let root = discriminant::<C>(work).sqrt()?;
    let one_minus_u = BivariateSeries::new(work, vec![LaurentPoly::one(), -LaurentPoly::one()]);
    let numerator = &one_minus_u - &root;
    numerator
        .divide_by_u(1)?
        .divide_by_monomial(&scalar::from_i64(2), 1)
}

/// `sum_{n >= 1} P_{C_{n+1}}(t) u^n
///  = (1 - u - 2tu^2 - sqrt((1-u)^2 - 4tu^2)) / (2tu^2 (1 + tu))`,
/// truncated at `u^order`.
pub fn phi_c_series<C: Coefficient>(order: usize) -> Result<BivariateSeries<C>> {
    let work = order + 2;
    let root = discriminant::<C>(work).sqrt()?;
    let head = BivariateSeries::new(
        work,
        vec![
            LaurentPoly::one(),
            -LaurentPoly::one(),
            LaurentPoly::from_ints(1, &[-2]),
        ],
    );
    let numerator = &head - &root;
    let quotient = numerator
        .divide_by_u(2)?
        .divide_by_monomial(&scalar::from_i64(2), 1)?;
    let one_plus_tu = BivariateSeries::new(order, vec![LaurentPoly::one(), LaurentPoly::t_pow(1)]);
    Ok(&quotient * &one_plus_tu.inverse()?)
}

/// `Phi_F = Phi_C - t u Phi_C Phi_F`, compared coefficient by coefficient
/// up to the smaller order.
pub fn series_identity_holds<C: Coefficient>(
    phi_f: &BivariateSeries<C>,
    phi_c: &BivariateSeries<C>,
) -> bool {
    let order = phi_f.order().min(phi_c.order());
    let (f, c) = (phi_f.truncate(order), phi_c.truncate(order));
    let correction = (&c * &f).shift_up(1).scale(&LaurentPoly::t_pow(1));
    f == &c - &correction
}

pub fn verify_series_identity<C: Coefficient>(order: usize) -> Result<bool> {
    Ok(series_identity_holds(
        &phi_f_series::<C>(order)?,
        &phi_c_series::<C>(order)?,
    ))
}
