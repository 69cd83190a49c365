mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use common::catalog;
use matkl::closed_forms::uniform_corank1_coeff;
use matkl::hecke::verify_hecke;
use matkl::kl::{deletion_rhs_p, deletion_rhs_z, linear_coefficient};
use matkl::{
    kl_polynomial, tau, uniform_matroid, verify_deletion, z_polynomial, CheckStatus, DeletionMap,
    Error, Family, IntHElement, IntHeckeModule, IntPoly, Matroid,
};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn definitional_invariants_on_catalog() {
    for entry in catalog() {
        let m = &entry.matroid;
        let p: IntPoly = kl_polynomial(m);
        let z: IntPoly = z_polynomial(m);
        let r = m.rank() as i64;
        assert!(z.is_palindromic(r), "{}: Z = {z}", entry.name);
        assert!(2 * p.degree().unwrap() < r, "{}: P = {p}", entry.name);
        assert_eq!(p.coeff(0), BigInt::from(1), "{}", entry.name);
        let linear = m.num_coatoms() as i64 - m.num_atoms() as i64;
        assert_eq!(p.coeff(1), BigInt::from(linear), "{}", entry.name);
        if r >= 3 {
            assert_eq!(linear_coefficient(m).unwrap(), linear);
        }
        // fixed-width coefficients agree with big integers at this size
        let small: matkl::LaurentPoly<i64> = kl_polynomial(m);
        assert_eq!(small.to_string(), p.to_string());
    }
}

#[test]
fn deletion_formula_on_catalog() {
    for entry in catalog() {
        let report = verify_deletion::<BigInt>(&entry.matroid).unwrap();
        assert!(report.all_passed(), "{}", entry.name);
        assert_eq!(report.count(CheckStatus::Fail), 0);
    }
}

#[test]
fn coloops_are_rejected() {
    let m = Family::Path(3).build().unwrap().graphic_matroid().unwrap();
    assert!(matches!(
        deletion_rhs_p::<BigInt>(&m, 0),
        Err(Error::Coloop(_))
    ));
    assert!(matches!(
        deletion_rhs_z::<BigInt>(&m, 1),
        Err(Error::Coloop(_))
    ));
    let report = verify_deletion::<BigInt>(&m).unwrap();
    assert_eq!(report.count(CheckStatus::SkippedColoop), m.ground_size());
    // a coloop next to a cycle
    let paw = matkl::Graph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3)])
        .unwrap()
        .graphic_matroid()
        .unwrap();
    let report = verify_deletion::<BigInt>(&paw).unwrap();
    assert_eq!(report.count(CheckStatus::SkippedColoop), 1);
    assert_eq!(report.count(CheckStatus::Pass), 3);
}

#[test]
fn uniform_corank_one_coefficients_match_engine() {
    for d in 1..=10usize {
        let p: IntPoly = kl_polynomial(&uniform_matroid(1, d).unwrap());
        for k in 0..=((d as i64) - 1) / 2 {
            assert_eq!(
                p.coeff(k),
                uniform_corank1_coeff::<BigInt>(d as i64, k).unwrap(),
                "d={d}, k={k}"
            );
        }
    }
}

fn positive_rank() -> Vec<&'static Matroid> {
    catalog()
        .iter()
        .map(|e| &e.matroid)
        .filter(|m| m.rank() > 0 && m.ground_size() <= 7)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn direct_sums_multiply(i in 0usize..1000, j in 0usize..1000) {
        let pool = positive_rank();
        let (a, b) = (pool[i % pool.len()], pool[j % pool.len()]);
        let sum = a.direct_sum(b).unwrap();
        let pa: IntPoly = kl_polynomial(a);
        let pb: IntPoly = kl_polynomial(b);
        prop_assert_eq!(kl_polynomial::<BigInt>(&sum), &pa * &pb);
        prop_assert_eq!(z_polynomial::<BigInt>(&sum), &z_polynomial::<BigInt>(a) * &z_polynomial::<BigInt>(b));
        prop_assert_eq!(tau::<BigInt>(&sum), BigInt::from(0));
    }

    #[test]
    fn perverse_combinations_decompose(i in 0usize..1000, seeds in prop::collection::vec(-5i64..=5, 64)) {
        let pool: Vec<_> = catalog().iter().filter(|e| e.matroid.num_flats() <= 64).collect();
        let m = &pool[i % pool.len()].matroid;
        let hm = IntHeckeModule::new(m);
        let arc = hm.matroid().clone();
        let mut alpha = IntHElement::zero(&arc);
        let mut expect = BTreeMap::new();
        for (f, &c) in seeds.iter().enumerate().take(m.num_flats()) {
            if c != 0 {
                alpha.add_scaled(&hm.zeta(f), &IntPoly::constant(BigInt::from(c)));
                expect.insert(f, BigInt::from(c));
            }
        }
        prop_assert!(hm.is_perverse(&alpha));
        prop_assert_eq!(hm.decompose_perverse(&alpha).unwrap(), expect);
        prop_assert_eq!(hm.bar(&alpha), alpha);
    }

    #[test]
    fn phi_commutes_with_delta(
        i in 0usize..1000,
        e in 0usize..64,
        coords in prop::collection::vec((-2i64..=2, prop::collection::vec(-3i64..=3, 0..4)), 64),
    ) {
        let m = &catalog()[i % catalog().len()].matroid;
        let e = e % m.ground_size();
        prop_assume!(!m.is_coloop(e).unwrap());
        let arc = Arc::new(m.clone());
        let pairs = (0..m.num_flats()).map(|f| {
            let (low, cs) = &coords[f % coords.len()];
            (m.flat(f), IntPoly::from_ints(*low, cs))
        });
        let alpha = IntHElement::from_pairs(&arc, pairs).unwrap();
        let map = DeletionMap::new(&arc, e).unwrap();
        prop_assert_eq!(map.apply(&alpha).phi(), alpha.phi());
    }
}

#[test]
fn hecke_suite_on_small_catalog() {
    for entry in catalog().iter().filter(|e| e.matroid.ground_size() <= 6) {
        for c in verify_hecke::<BigInt>(&entry.matroid).unwrap() {
            assert!(c.passed, "{}: {} {}", entry.name, c.name, c.detail);
        }
    }
}
