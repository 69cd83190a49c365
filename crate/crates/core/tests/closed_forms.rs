mod common;

use common::isomorphic;
use matkl::closed_forms::{
    cycle_kl, double_cycle_kl, fan_kl, fan_recursion, parallel_connection_kl, saw_kl,
    thagomizer_kl, uniform_corank1_coeff, uniform_corank1_recurrence, verify_closed_forms,
};
use matkl::series::{phi_c_series, phi_f_series, series_identity_holds, verify_series_identity};
use matkl::{kl_polynomial, tau, Family, Graph, IntPoly, Matroid};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graphic(f: Family) -> Matroid {
    f.build().unwrap().graphic_matroid().unwrap()
}

fn engine(f: Family) -> IntPoly {
    kl_polynomial(&graphic(f))
}

fn t() -> IntPoly {
    IntPoly::t_pow(1)
}

#[test]
fn closed_form_suite_passes() {
    let checks = verify_closed_forms::<BigInt>().unwrap();
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    assert!(failed.is_empty(), "{failed:?}");
}

#[test]
fn uniform_recurrence_matches_closed_form() {
    for d in 1..=12i64 {
        for k in 0..=(d - 1) / 2 {
            assert_eq!(
                uniform_corank1_recurrence::<BigInt>(d, k).unwrap(),
                uniform_corank1_coeff::<BigInt>(d, k).unwrap()
            );
        }
    }
}

#[test]
fn partial_fan_steps() {
    for n in 3..=8 {
        for r in 0..=n - 3 {
            let step = &engine(Family::FanPartial(n, r + 1)) - &engine(Family::FanPartial(n, r));
            let expect = &(&t() * &cycle_kl::<BigInt>(r + 2).unwrap())
                * &fan_kl::<BigInt>(n - r - 2).unwrap();
            assert_eq!(step, expect, "n={n}, r={r}");
        }
        let all_removed = graphic(Family::FanPartial(n, n - 2));
        assert!(isomorphic(&all_removed, &graphic(Family::Cycle(n + 1))));
    }
}

#[test]
fn partial_fans_are_parallel_connections() {
    for n in 3..=7 {
        for r in 0..=n - 3 {
            let fan = Family::Fan(n - r - 1).build().unwrap();
            let cycle = Family::Cycle(r + 3).build().unwrap();
            // spokes come first, so spoke (0, n-r-1) has index n-r-2
            let spoke = n - r - 2;
            let glued = parallel_connection_kl::<BigInt>(&fan, spoke, &cycle, 0).unwrap();
            assert_eq!(glued, engine(Family::FanPartial(n, r)), "n={n}, r={r}");
            let (g, _) = matkl::parallel_connection(&fan, spoke, &cycle, 0).unwrap();
            assert!(isomorphic(
                &g.graphic_matroid().unwrap(),
                &graphic(Family::FanPartial(n, r))
            ));
        }
    }
}

#[test]
fn fan_recursion_to_ten() {
    for n in 1..=10 {
        assert_eq!(
            fan_recursion::<BigInt>(n).unwrap(),
            fan_kl::<BigInt>(n).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn saw_recursion() {
    for n in 3..=6 {
        for r in 1..=n.min(8 - n) {
            let expect =
                &engine(Family::Saw(n + 1, r - 1)) - &(&t() * &engine(Family::Saw(n - 1, r - 1)));
            assert_eq!(engine(Family::Saw(n, r)), expect, "n={n}, r={r}");
        }
    }
}

#[test]
fn double_cycles_by_gluing() {
    for m in 3..=6 {
        for n in 3..=6 {
            let (cm, cn) = (
                Family::Cycle(m).build().unwrap(),
                Family::Cycle(n).build().unwrap(),
            );
            let glued = parallel_connection_kl::<BigInt>(&cm, 0, &cn, 0).unwrap();
            assert_eq!(glued, double_cycle_kl::<BigInt>(m, n).unwrap());
        }
    }
}

#[test]
fn square_saw_tau_is_top_coefficient() {
    // S_{k,k} has rank 2k - 1, so tau is the coefficient of t^(k-1)
    let mut taus = Vec::new();
    for k in 2..=5 {
        let m = graphic(Family::Saw(k, k));
        assert_eq!(m.rank(), 2 * k - 1);
        let closed = saw_kl::<BigInt>(k, k).unwrap();
        assert_eq!(closed.degree(), Some(k as i64 - 1));
        let engine_tau = tau::<BigInt>(&m);
        assert_eq!(engine_tau, closed.coeff(k as i64 - 1));
        taus.push(engine_tau);
    }
    assert!(taus.iter().all(|v| *v > BigInt::from(0)));
}

#[test]
fn quadratic_coefficient_depends_on_diagonals() {
    let saw = engine(Family::Saw(3, 3));
    let fan = engine(Family::Fan(5));
    assert_eq!(saw.coeff(1), fan.coeff(1));
    assert_eq!(saw.coeff(1), BigInt::from(6));
    assert_ne!(saw.coeff(2), fan.coeff(2));
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn noncrossing_chords_linear_coefficient(
        n in 4usize..=9,
        candidates in prop::collection::vec((0usize..9, 0usize..9), 0..8),
    ) {
        let mut chords: Vec<(usize, usize)> = Vec::new();
        for (x, y) in candidates {
            let (a, b) = ((x % n).min(y % n), (x % n).max(y % n));
            if b < a + 2 || b - a > n - 2 || chords.contains(&(a, b)) || chords.iter().any(|&c| crosses(c, (a, b))) {
                continue;
            }
            chords.push((a, b));
        }
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend(&chords);
        let g = Graph::new(n, edges).unwrap();
        let p: IntPoly = kl_polynomial(&g.graphic_matroid().unwrap());
        let (n, k) = (n as i64, chords.len() as i64);
        prop_assert_eq!(p.coeff(1), BigInt::from(n * (n - 1) / 2 - n - k));
    }
}

#[test]
fn crossing_chords_break_the_count() {
    // a 4-cycle with both diagonals is K_4: C(4,2) - 4 - 2 = 0, but P = 1 + t
    let k4 = engine(Family::Complete(4));
    assert_eq!(k4.coeff(1), BigInt::from(1));
}

#[test]
fn thagomizer_boundary() {
    for n in 2..=5 {
        assert_eq!(
            thagomizer_kl::<BigInt>(n).unwrap(),
            engine(Family::Thagomizer(n))
        );
    }
    let err = thagomizer_kl::<BigInt>(1).unwrap_err().to_string();
    assert!(err.contains("1 - t"), "{err}");
    assert_eq!(engine(Family::Thagomizer(1)), IntPoly::one());
}

#[test]
fn series_reproduce_closed_forms() {
    let order = 12;
    let phi_f = phi_f_series::<BigInt>(order).unwrap();
    let phi_c = phi_c_series::<BigInt>(order).unwrap();
    for n in 1..=order {
        assert_eq!(phi_f.coeff(n), fan_kl::<BigInt>(n).unwrap(), "fan {n}");
        assert_eq!(
            phi_c.coeff(n),
            cycle_kl::<BigInt>(n + 1).unwrap(),
            "cycle {}",
            n + 1
        );
    }
    assert!(series_identity_holds(&phi_f, &phi_c));
    for order in 1..=12 {
        assert!(verify_series_identity::<BigInt>(order).unwrap());
    }
}

proptest! {
    #[test]
    fn series_identity_detects_perturbation(k in 1usize..=10, which in any::<bool>(), delta in prop::sample::select(vec![-2i64, -1, 1, 2]), exp in 0i64..4) {
        let mut phi_f = phi_f_series::<BigInt>(10).unwrap();
        let mut phi_c = phi_c_series::<BigInt>(10).unwrap();
        let bump = IntPoly::monomial(BigInt::from(delta), exp);
        if which {
            phi_f.set_coeff(k, &phi_f.coeff(k) + &bump);
        } else {
            phi_c.set_coeff(k, &phi_c.coeff(k) + &bump);
        }
        prop_assert!(!series_identity_holds(&phi_f, &phi_c));
    }
}
