//! Kazhdan-Lusztig and Z-polynomials of matroids, the tau-invariant,
//! characteristic polynomials, and both sides of the deletion formula.
//!
//! `P` is computed from the lattice alone. For a flat `F` below a fixed top
//! `T`, write `f_F = sum_{F < G <= T} t^(rk G - rk F) P_[G,T]`; then
//! `P_[F,T]` is the unique polynomial of degree `< (rk T - rk F)/2` making
//! `P_[F,T] + f_F` palindromic of degree `rk T - rk F`. Walking the flats
//! from `T` downward fills every interval `[F, T]` in one pass.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::poly::LaurentPoly;
use crate::scalar::{self, Coefficient};

/// `P_[F, T]` for every flat `F <= T`, indexed by flat index; `None` for
/// flats not below `T`.
pub fn interval_kl_below<C: Coefficient>(m: &Matroid, top: usize) -> Vec<Option<LaurentPoly<C>>> {
    let tf = m.flat(top);
    let rt = m.rank_at(top);
    let mut out: Vec<Option<LaurentPoly<C>>> = vec![None; m.num_flats()];
    out[top] = Some(LaurentPoly::one());
    // flats strictly above g, found through the cover relation; `seen`
    // holds the last g that visited each flat
    let mut seen = vec![usize::MAX; m.num_flats()];
    let mut stack = Vec::new();
    for g in (0..top).rev() {
        if !m.flat(g).is_subset(tf) {
            continue;
        }
        let rg = m.rank_at(g);
        // dense coefficients of f, degrees 0..=rk T - rk G
        let mut acc = vec![C::zero(); rt - rg + 1];
        stack.extend(
            m.upper_covers(g)
                .iter()
                .copied()
                .filter(|&h| m.flat(h).is_subset(tf)),
        );
        while let Some(h) = stack.pop() {
            if seen[h] == g {
                continue;
            }
            seen[h] = g;
            let p = out[h].as_ref().expect("upper flats are filled first");
            let shift = m.rank_at(h) - rg;
            for (i, c) in p.coeffs().iter().enumerate() {
                let slot = &mut acc[shift + p.low() as usize + i];
                *slot = scalar::add(slot, c);
            }
            stack.extend(
                m.upper_covers(h)
                    .iter()
                    .copied()
                    .filter(|&k| seen[k] != g && m.flat(k).is_subset(tf)),
            );
        }
        let f = LaurentPoly::new(0, acc);
        out[g] = Some(f.palindromic_completion((rt - rg) as i64));
    }
    out
}

/// Möbius values `mu(bottom, G)` for all flats `G >= bottom`.
pub fn mobius_from<C: Coefficient>(m: &Matroid, bottom: usize) -> Vec<Option<C>> {
    let bf = m.flat(bottom);
    let mut mu: Vec<Option<C>> = vec![None; m.num_flats()];
    mu[bottom] = Some(C::one());
    for g in bottom + 1..m.num_flats() {
        let gf = m.flat(g);
        if !bf.is_subset(gf) {
            continue;
        }
        let mut acc = C::zero();
        for (h, v) in mu.iter().enumerate().take(g).skip(bottom) {
            if let Some(v) = v {
                if m.flat(h).is_subset(gf) {
                    acc = scalar::add(&acc, v);
                }
            }
        }
        mu[g] = Some(-acc);
    }
    mu
}

/// The characteristic polynomial of the interval `[lower, upper]`:
/// `sum_H mu(lower, H) t^(rk upper - rk H)`.
pub fn interval_char_polynomial<C: Coefficient>(
    m: &Matroid,
    mu_from_lower: &[Option<C>],
    upper: usize,
) -> LaurentPoly<C> {
    let uf = m.flat(upper);
    let ru = m.rank_at(upper) as i64;
    let mut out = LaurentPoly::zero();
    for (h, mu) in mu_from_lower.iter().enumerate() {
        if let Some(mu) = mu {
            if m.flat(h).is_subset(uf) {
                out.add_scaled_shifted(&LaurentPoly::one(), mu, ru - m.rank_at(h) as i64);
            }
        }
    }
    out
}

/// `P_{M_F}` for every flat `F` of one matroid.
#[derive(Clone, Debug)]
pub struct KlTable<C: Coefficient> {
    matroid: Matroid,
    p: Vec<LaurentPoly<C>>,
}

impl<C: Coefficient> KlTable<C> {
    pub fn new(m: &Matroid) -> Self {
        let p = interval_kl_below(m, m.top_index())
            .into_iter()
            .map(|p| p.expect("every flat lies below E"))
            .collect();
        KlTable {
            matroid: m.clone(),
            p,
        }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// `P` of the upper interval `[F_i, E]`, i.e. of the contraction `M_F`.
    pub fn p_of_interval(&self, i: usize) -> &LaurentPoly<C> {
        &self.p[i]
    }

    pub fn p_of_flat(&self, f: ElementSet) -> Option<&LaurentPoly<C>> {
        self.matroid.flat_index(f).map(|i| &self.p[i])
    }

    pub fn kl_polynomial(&self) -> &LaurentPoly<C> {
        &self.p[0]
    }

    /// `Z` of the upper interval `[F_i, E]`.
    pub fn z_of_interval(&self, i: usize) -> LaurentPoly<C> {
        let m = &self.matroid;
        let fi = m.flat(i);
        let ri = m.rank_at(i) as i64;
        let mut z = LaurentPoly::zero();
        for (g, p) in self.p.iter().enumerate().skip(i) {
            if fi.is_subset(m.flat(g)) {
                z.add_scaled_shifted(p, &C::one(), m.rank_at(g) as i64 - ri);
            }
        }
        z
    }

    /// `Z_M(t) = sum_F t^(rk F) P_{M_F}(t)`.
    pub fn z_polynomial(&self) -> LaurentPoly<C> {
        self.z_of_interval(0)
    }

    pub fn tau(&self) -> C {
        tau_of(self.kl_polynomial(), self.matroid.rank())
    }
}

/// The coefficient of `t^((rank-1)/2)` when `rank` is odd, else zero.
pub fn tau_of<C: Coefficient>(p: &LaurentPoly<C>, rank: usize) -> C {
    if rank % 2 == 1 {
        p.coeff((rank as i64 - 1) / 2)
    } else {
        C::zero()
    }
}

pub fn kl_polynomial<C: Coefficient>(m: &Matroid) -> LaurentPoly<C> {
    KlTable::new(m).kl_polynomial().clone()
}

pub fn z_polynomial<C: Coefficient>(m: &Matroid) -> LaurentPoly<C> {
    KlTable::new(m).z_polynomial()
}

pub fn tau<C: Coefficient>(m: &Matroid) -> C {
    KlTable::<C>::new(m).tau()
}

/// `#coatoms - #atoms`, computed from the lattice without the recursion.
pub fn linear_coefficient(m: &Matroid) -> Result<i64> {
    if m.rank() == 0 {
        return Err(Error::RankZero);
    }
    Ok(m.num_coatoms() as i64 - m.num_atoms() as i64)
}

/// `chi_M(t) = sum_F mu(bottom, F) t^(crk F)`.
pub fn char_polynomial<C: Coefficient>(m: &Matroid) -> LaurentPoly<C> {
    interval_char_polynomial(m, &mobius_from::<C>(m, 0), m.top_index())
}

/// Flats `F` with `e` not in `F` and `F + e` also a flat.
pub fn s_set(m: &Matroid, e: usize) -> Result<Vec<ElementSet>> {
    if e >= m.ground_size() {
        return Err(Error::InvalidElement(e));
    }
    Ok(m.flats()
        .iter()
        .copied()
        .filter(|f| !f.contains(e) && m.is_flat(f.with(e)))
        .collect())
}

fn check_deletable(m: &Matroid, e: usize) -> Result<()> {
    if m.is_coloop(e)? {
        return Err(Error::Coloop(e));
    }
    if !m.is_simple() {
        return Err(Error::Precondition(
            "the deletion formula needs a simple matroid".into(),
        ));
    }
    Ok(())
}

/// `sum_{F in S, crk F even} tau(M_{F+e}) t^(crk F / 2) X(M^F)` for a
/// per-localization polynomial `X`.
fn correction_sum<C: Coefficient>(
    m: &Matroid,
    e: usize,
    local: impl Fn(&Matroid) -> LaurentPoly<C>,
) -> Result<LaurentPoly<C>> {
    let mut sum = LaurentPoly::zero();
    for f in s_set(m, e)? {
        let crk = m.rank() - m.rank_of(f).unwrap();
        if crk % 2 == 1 {
            continue;
        }
        let upper = m.contract(f.with(e))?;
        let t = tau::<C>(&upper);
        if t.is_zero() {
            continue;
        }
        sum.add_scaled_shifted(&local(&m.localize(f)?), &t, crk as i64 / 2);
    }
    Ok(sum)
}

/// `P_{M\e} - t P_{M_e} + sum_{F in S} tau(M_{F+e}) t^(crk F/2) P_{M^F}`,
/// each term computed on its own minor.
pub fn deletion_rhs_p<C: Coefficient>(m: &Matroid, e: usize) -> Result<LaurentPoly<C>> {
    if e >= m.ground_size() {
        return Err(Error::InvalidElement(e));
    }
    check_deletable(m, e)?;
    let deleted: LaurentPoly<C> = kl_polynomial(&m.delete(e)?);
    let contracted: LaurentPoly<C> = kl_polynomial(&m.contract_element(e)?);
    let mut rhs = deleted;
    rhs.add_scaled_shifted(&contracted, &-C::one(), 1);
    rhs += &correction_sum(m, e, kl_polynomial::<C>)?;
    Ok(rhs)
}

/// `Z_{M\e} + sum_{F in S} tau(M_{F+e}) t^(crk F/2) Z_{M^F}`.
pub fn deletion_rhs_z<C: Coefficient>(m: &Matroid, e: usize) -> Result<LaurentPoly<C>> {
    if e >= m.ground_size() {
        return Err(Error::InvalidElement(e));
    }
    check_deletable(m, e)?;
    let mut rhs: LaurentPoly<C> = z_polynomial(&m.delete(e)?);
    rhs += &correction_sum(m, e, z_polynomial::<C>)?;
    Ok(rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    SkippedColoop,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::SkippedColoop => "skipped-coloop",
        }
    }
}

/// Both sides of one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides<C: Coefficient> {
    pub lhs: LaurentPoly<C>,
    pub rhs: LaurentPoly<C>,
}

#[derive(Clone, Debug)]
pub struct DeletionCheck<C: Coefficient> {
    pub element: usize,
    pub label: usize,
    pub status: CheckStatus,
    /// `None` for skipped coloops.
    pub kl: Option<Sides<C>>,
    pub z: Option<Sides<C>>,
}

#[derive(Clone, Debug)]
pub struct DeletionReport<C: Coefficient> {
    pub checks: Vec<DeletionCheck<C>>,
}

impl<C: Coefficient> DeletionReport<C> {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

/// Checks both deletion identities at every non-coloop element.
pub fn verify_deletion<C: Coefficient>(m: &Matroid) -> Result<DeletionReport<C>> {
    let table = KlTable::<C>::new(m);
    let p = table.kl_polynomial().clone();
    let z = table.z_polynomial();
    let mut checks = Vec::with_capacity(m.ground_size());
    for e in 0..m.ground_size() {
        let label = m.label(e);
        if m.is_coloop(e)? {
            checks.push(DeletionCheck {
                element: e,
                label,
                status: CheckStatus::SkippedColoop,
                kl: None,
                z: None,
            });
            continue;
        }
        let kl = Sides {
            lhs: p.clone(),
            rhs: deletion_rhs_p(m, e)?,
        };
        let zs = Sides {
            lhs: z.clone(),
            rhs: deletion_rhs_z(m, e)?,
        };
        let status = if kl.lhs == kl.rhs && zs.lhs == zs.rhs {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        checks.push(DeletionCheck {
            element: e,
            label,
            status,
            kl: Some(kl),
            z: Some(zs),
        });
    }
    Ok(DeletionReport { checks })
}
