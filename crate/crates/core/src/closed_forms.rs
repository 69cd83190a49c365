//! Closed formulas and recursions for the Kazhdan-Lusztig polynomials of
//! corank-one uniform matroids and of several graph families.
//!
//! The formulas are computed independently of the lattice engine; the
//! gluing formulas (`parallel_connection_kl`, `thagomizer_kl`) call the
//! engine only on the smaller graphs on their right-hand sides.

use crate::error::{Error, Result};
use crate::graph::{parallel_connection, Family, Graph};
use crate::hecke::{check, NamedCheck};
use crate::kl::kl_polynomial;
use crate::poly::LaurentPoly;
use crate::scalar::{self, binomial, exact_div, multinomial, Coefficient};
use crate::series::{phi_c_series, phi_f_series, verify_series_identity};

fn exact<C: Coefficient>(a: C, b: i64, what: &str) -> C {
    exact_div(&a, &scalar::from_i64(b))
        .unwrap_or_else(|| panic!("inexact division by {b} in {what}"))
}

/// Coefficient of `t^k` in the KL polynomial of the rank-`d` corank-one
/// uniform matroid: `C(d-k-1, k) C(d+1, k) / (k+1)`.
pub fn uniform_corank1_coeff<C: Coefficient>(d: i64, k: i64) -> Result<C> {
    if k < 0 || (k > 0 && 2 * k >= d) {
        return Err(Error::Parameter(format!(
            "need 0 <= k < d/2, got d={d}, k={k}"
        )));
    }
    let num = scalar::mul(&binomial::<C>(d - k - 1, k), &binomial::<C>(d + 1, k));
    Ok(exact(num, k + 1, "uniform_corank1_coeff"))
}

/// The same coefficient through the deletion recursion
/// `c(d, k) = -c(d-1, k-1) + C(d, d-2k) c(2k-1, k-1)`, with `c(d, 0) = 1`.
pub fn uniform_corank1_recurrence<C: Coefficient>(d: i64, k: i64) -> Result<C> {
    if k < 0 || (k > 0 && 2 * k >= d) {
        return Err(Error::Parameter(format!(
            "need 0 <= k < d/2, got d={d}, k={k}"
        )));
    }
    if k == 0 {
        return Ok(C::one());
    }
    let left = uniform_corank1_recurrence::<C>(d - 1, k - 1)?;
    let right = uniform_corank1_recurrence::<C>(2 * k - 1, k - 1)?;
    Ok(scalar::sub(
        &scalar::mul(&binomial::<C>(d, d - 2 * k), &right),
        &left,
    ))
}

/// `P` of the `n`-cycle: `sum_i C(n-i-2, i) C(n, i) t^i / (i+1)`.
pub fn cycle_kl<C: Coefficient>(n: usize) -> Result<LaurentPoly<C>> {
    if n < 2 {
        return Err(Error::Parameter(format!("cycle needs n >= 2, got {n}")));
    }
    let n = n as i64;
    let coeffs = (0..=(n - 1) / 2)
        .map(|i| {
            let num = scalar::mul(&binomial::<C>(n - i - 2, i), &binomial::<C>(n, i));
            exact(num, i + 1, "cycle_kl")
        })
        .collect();
    Ok(LaurentPoly::from_coeffs(coeffs))
}

/// `P_{C_{m+n-2}} - t P_{C_{m-1}} P_{C_{n-1}}`.
pub fn double_cycle_kl<C: Coefficient>(m: usize, n: usize) -> Result<LaurentPoly<C>> {
    if m < 3 || n < 3 {
        return Err(Error::Parameter(format!(
            "double cycle needs m, n >= 3, got {m}, {n}"
        )));
    }
    let glued = cycle_kl::<C>(m + n - 2)?;
    let product = &cycle_kl::<C>(m - 1)? * &cycle_kl::<C>(n - 1)?;
    Ok(&glued - &product.shift(1))
}

fn saw_p<C: Coefficient>(j: usize) -> Result<LaurentPoly<C>> {
    match j {
        0 => Ok(LaurentPoly::t_pow(-1)),
        1 => Ok(LaurentPoly::zero()),
        _ => cycle_kl(j),
    }
}

/// `sum_k (-t)^k C(r, k) p_{n+r-2k}` with `p_j = P_{C_j}`, `p_1 = 0` and
/// `p_0 = t^-1`.
pub fn saw_kl<C: Coefficient>(n: usize, r: usize) -> Result<LaurentPoly<C>> {
    if n < 2 || r > n {
        return Err(Error::Parameter(format!(
            "saw needs n >= 2 and r <= n, got {n}, {r}"
        )));
    }
    let mut total = LaurentPoly::zero();
    for k in 0..=r {
        let mut c = binomial::<C>(r as i64, k as i64);
        if k % 2 == 1 {
            c = -c;
        }
        total.add_scaled_shifted(&saw_p::<C>(n + r - 2 * k)?, &c, k as i64);
    }
    if !total.is_polynomial() {
        return Err(Error::Internal(format!(
            "saw formula left negative powers: {total}"
        )));
    }
    Ok(total)
}

/// `sum_k multinomial(n-1; k, k, n-2k-1) t^k / (k+1)`.
pub fn fan_kl<C: Coefficient>(n: usize) -> Result<LaurentPoly<C>> {
    if n < 1 {
        return Err(Error::Parameter("fan needs n >= 1".into()));
    }
    let n = n as i64;
    let coeffs = (0..=(n - 1) / 2)
        .map(|k| {
            exact(
                multinomial::<C>(n - 1, &[k, k, n - 2 * k - 1]),
                k + 1,
                "fan_kl",
            )
        })
        .collect();
    Ok(LaurentPoly::from_coeffs(coeffs))
}

/// `P_{C_{n+1}} - t sum_{k=2}^{n-1} P_{C_k} P_{F_{n-k}}`, built from the
/// closed forms.
pub fn fan_recursion<C: Coefficient>(n: usize) -> Result<LaurentPoly<C>> {
    if n < 1 {
        return Err(Error::Parameter("fan needs n >= 1".into()));
    }
    let mut sum = LaurentPoly::zero();
    for k in 2..n {
        sum += &(&cycle_kl::<C>(k)? * &fan_kl::<C>(n - k)?);
    }
    Ok(&cycle_kl::<C>(n + 1)? - &sum.shift(1))
}

/// The edge-gluing formula `P_G = P_{G-e} - t P_{H1/e} P_{H2/e}` for the
/// parallel connection `G` of `h1` and `h2` along `e1` and `e2`. Each
/// `Hi - e` must be connected.
pub fn parallel_connection_kl<C: Coefficient>(
    h1: &Graph,
    e1: usize,
    h2: &Graph,
    e2: usize,
) -> Result<LaurentPoly<C>> {
    for (h, e) in [(h1, e1), (h2, e2)] {
        if !h.delete_edge(e)?.is_connected() {
            return Err(Error::Precondition(format!(
                "deleting edge {e} disconnects a glued graph"
            )));
        }
    }
    let (g, e) = parallel_connection(h1, e1, h2, e2)?;
    let deleted = kl_polynomial::<C>(&g.delete_edge(e)?.graphic_matroid()?);
    let c1 = kl_polynomial::<C>(&h1.contract_edge(e1)?.graphic_matroid()?);
    let c2 = kl_polynomial::<C>(&h2.contract_edge(e2)?.graphic_matroid()?);
    Ok(&deleted - &(&c1 * &c2).shift(1))
}

/// `P_{K_{2,n}} - t`, for `n >= 2`. At `n = 1` the formula would give
/// `1 - t` while `T_1` is a triangle with a pendant edge and has `P = 1`.
pub fn thagomizer_kl<C: Coefficient>(n: usize) -> Result<LaurentPoly<C>> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "thagomizer formula needs n >= 2, got {n} (T_1 has P = 1, not 1 - t)"
        )));
    }
    let k2n = Family::CompleteBipartite(2, n).build()?.graphic_matroid()?;
    Ok(&kl_polynomial::<C>(&k2n) - &LaurentPoly::t_pow(1))
}

fn engine<C: Coefficient>(family: Family) -> Result<LaurentPoly<C>> {
    Ok(kl_polynomial(&family.build()?.graphic_matroid()?))
}

fn compare<C: Coefficient>(
    name: String,
    formula: LaurentPoly<C>,
    oracle: LaurentPoly<C>,
) -> NamedCheck {
    let passed = formula == oracle;
    let detail = if passed {
        format!("{formula}")
    } else {
        format!("formula {formula}, engine {oracle}")
    };
    check(name, passed, detail)
}

/// Every closed form against the engine over fixed ranges, plus the
/// recursions and the generating-series identity.
pub fn verify_closed_forms<C: Coefficient>() -> Result<Vec<NamedCheck>> {
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push(compare(
            format!("cycle:{n}"),
            cycle_kl::<C>(n)?,
            engine(Family::Cycle(n))?,
        ));
    }
    for n in 2..=9 {
        for r in 0..=n.min(9 - n) {
            out.push(compare(
                format!("saw:{n},{r}"),
                saw_kl::<C>(n, r)?,
                engine(Family::Saw(n, r))?,
            ));
        }
    }
    for n in 1..=8 {
        out.push(compare(
            format!("fan:{n}"),
            fan_kl::<C>(n)?,
            engine(Family::Fan(n))?,
        ));
    }
    for m in 3..=7 {
        for n in 3..=10 - m {
            let name = format!("doublecycle:{m},{n}");
            out.push(compare(
                name,
                double_cycle_kl::<C>(m, n)?,
                engine(Family::DoubleCycle(m, n))?,
            ));
        }
    }
    for n in 2..=5 {
        out.push(compare(
            format!("thagomizer:{n}"),
            thagomizer_kl::<C>(n)?,
            engine(Family::Thagomizer(n))?,
        ));
    }
    for d in 1..=10i64 {
        let m = crate::matroid::uniform_matroid(1, d as usize)?;
        let oracle = kl_polynomial::<C>(&m);
        let mut ok = true;
        for k in 0..=(d - 1) / 2 {
            let closed = uniform_corank1_coeff::<C>(d, k)?;
            ok &= closed == oracle.coeff(k) && closed == uniform_corank1_recurrence::<C>(d, k)?;
        }
        out.push(check(
            format!("uniform-corank1:{d}"),
            ok,
            format!("{oracle}"),
        ));
    }
    for n in 1..=10 {
        out.push(compare(
            format!("fan-recursion:{n}"),
            fan_recursion::<C>(n)?,
            fan_kl::<C>(n)?,
        ));
    }
    let order = 10;
    let phi_f = phi_f_series::<C>(order)?;
    let phi_c = phi_c_series::<C>(order)?;
    let mut ok = true;
    for n in 1..=order {
        ok &= phi_f.coeff(n) == fan_kl::<C>(n)? && phi_c.coeff(n) == cycle_kl::<C>(n + 1)?;
    }
    out.push(check(format!("series-coefficients:{order}"), ok, ""));
    out.push(check(
        format!("series-identity:{order}"),
        verify_series_identity::<C>(order)?,
        "",
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    fn p(c: &[i64]) -> P {
        P::from_ints(0, c)
    }

    #[test]
    fn uniform_coefficients() {
        assert_eq!(uniform_corank1_coeff::<i64>(5, 2).unwrap(), 5);
        assert_eq!(uniform_corank1_coeff::<i64>(3, 1).unwrap(), 2);
        assert_eq!(uniform_corank1_coeff::<i64>(1, 0).unwrap(), 1);
        assert!(uniform_corank1_coeff::<i64>(4, 2).is_err());
        assert!(uniform_corank1_coeff::<i64>(4, -1).is_err());
        assert_eq!(uniform_corank1_recurrence::<i64>(5, 2).unwrap(), 5);
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle_kl::<BigInt>(6).unwrap(), p(&[1, 9, 5]));
        assert_eq!(cycle_kl::<BigInt>(3).unwrap(), P::one());
        assert_eq!(cycle_kl::<BigInt>(5).unwrap(), p(&[1, 5]));
        assert_eq!(cycle_kl::<BigInt>(2).unwrap(), P::one());
        assert!(cycle_kl::<BigInt>(1).is_err());
    }

    #[test]
    fn double_cycle_examples() {
        assert_eq!(double_cycle_kl::<BigInt>(3, 3).unwrap(), p(&[1, 1]));
        assert_eq!(double_cycle_kl::<BigInt>(3, 4).unwrap(), p(&[1, 4]));
        assert_eq!(
            double_cycle_kl::<BigInt>(6, 5).unwrap(),
            engine(Family::DoubleCycle(6, 5)).unwrap()
        );
        assert!(double_cycle_kl::<BigInt>(2, 5).is_err());
    }

    #[test]
    fn saw_examples() {
        assert_eq!(saw_kl::<BigInt>(3, 3).unwrap(), p(&[1, 6, 1]));
        assert_eq!(
            saw_kl::<BigInt>(7, 0).unwrap(),
            cycle_kl::<BigInt>(7).unwrap()
        );
        assert_eq!(saw_kl::<BigInt>(2, 1).unwrap(), P::one());
        assert!(saw_kl::<BigInt>(3, 4).is_err());
    }

    #[test]
    fn fan_examples() {
        assert_eq!(fan_kl::<BigInt>(5).unwrap(), p(&[1, 6, 2]));
        assert_eq!(fan_kl::<BigInt>(2).unwrap(), P::one());
        assert_eq!(fan_kl::<BigInt>(1).unwrap(), P::one());
        assert_eq!(fan_recursion::<BigInt>(5).unwrap(), p(&[1, 6, 2]));
    }

    #[test]
    fn gluing_two_triangles() {
        let tri = Family::Cycle(3).build().unwrap();
        assert_eq!(
            parallel_connection_kl::<BigInt>(&tri, 0, &tri, 0).unwrap(),
            p(&[1, 1])
        );
        let path = Family::Path(3).build().unwrap();
        let err = parallel_connection_kl::<BigInt>(&tri, 0, &path, 0).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn thagomizer_examples() {
        assert_eq!(thagomizer_kl::<BigInt>(2).unwrap(), p(&[1, 1]));
        assert_eq!(
            thagomizer_kl::<BigInt>(3).unwrap(),
            engine(Family::Thagomizer(3)).unwrap()
        );
        assert!(thagomizer_kl::<BigInt>(1).is_err());
        // the formula's value at n = 1 disagrees with the engine
        let k21 = Family::CompleteBipartite(2, 1)
            .build()
            .unwrap()
            .graphic_matroid()
            .unwrap();
        let formula = &kl_polynomial::<BigInt>(&k21) - &P::t_pow(1);
        assert_eq!(formula, p(&[1, -1]));
        assert_eq!(engine::<BigInt>(Family::Thagomizer(1)).unwrap(), P::one());
    }

    #[test]
    fn fixed_width_overflow_panics() {
        let r = std::panic::catch_unwind(|| cycle_kl::<i8>(40));
        assert!(r.is_err());
    }
}
