#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use matkl::catalog::{standard_catalog, Entry};
use matkl::{ElementSet, Matroid};

pub fn catalog() -> &'static [Entry] {
    static CATALOG: OnceLock<Vec<Entry>> = OnceLock::new();
    CATALOG.get_or_init(|| standard_catalog().expect("catalog builds"))
}

/// Flats as sets of labels, for comparing matroids whose element positions
/// differ but whose labels agree.
pub fn labeled(m: &Matroid) -> HashSet<Vec<usize>> {
    m.labeled_flats().into_iter().collect()
}

fn apply(perm: &[usize], f: ElementSet) -> ElementSet {
    f.iter().fold(ElementSet::EMPTY, |acc, e| acc.with(perm[e]))
}

/// Brute-force lattice isomorphism: some bijection of ground sets carries
/// the flats of `a` onto those of `b`. Elements are only matched when they
/// lie in the same number of flats of each rank.
pub fn isomorphic(a: &Matroid, b: &Matroid) -> bool {
    if a.ground_size() != b.ground_size() || a.rank_profile() != b.rank_profile() {
        return false;
    }
    let signature = |m: &Matroid, e: usize| -> Vec<usize> {
        (0..=m.rank())
            .map(|r| {
                m.flats_of_rank(r)
                    .filter(|&i| m.flat(i).contains(e))
                    .count()
            })
            .collect()
    };
    let sa: Vec<_> = (0..a.ground_size()).map(|e| signature(a, e)).collect();
    let sb: Vec<_> = (0..b.ground_size()).map(|e| signature(b, e)).collect();
    let target: HashSet<ElementSet> = b.flats().iter().copied().collect();
    let mut perm = vec![usize::MAX; a.ground_size()];
    let mut used = vec![false; b.ground_size()];
    search(a, &target, &sa, &sb, 0, &mut perm, &mut used)
}

fn search(
    a: &Matroid,
    target: &HashSet<ElementSet>,
    sa: &[Vec<usize>],
    sb: &[Vec<usize>],
    k: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == perm.len() {
        return a.flats().iter().all(|&f| target.contains(&apply(perm, f)));
    }
    for j in 0..used.len() {
        if used[j] || sa[k] != sb[j] {
            continue;
        }
        perm[k] = j;
        used[j] = true;
        // flats inside the assigned prefix must already map onto flats
        let prefix = ElementSet::full(k + 1);
        let ok = a
            .flats()
            .iter()
            .filter(|f| f.is_subset(prefix))
            .all(|&f| target.contains(&apply(perm, f)));
        if ok && search(a, target, sa, sb, k + 1, perm, used) {
            return true;
        }
        used[j] = false;
    }
    perm[k] = usize::MAX;
    false
}
