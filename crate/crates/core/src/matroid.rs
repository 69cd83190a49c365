//! Matroids represented explicitly by their lattice of flats.
//!
//! A [`Matroid`] owns every flat as an [`ElementSet`], sorted by rank and
//! then by bit pattern, together with the upper-cover relation. Flat
//! indices are therefore rank-ascending: index `0` is the bottom flat and
//! the last index is `E`.
//!
//! Ground elements are addressed by position `0..n`. Each position carries
//! a label (the identifier of the element in whatever the matroid was built
//! from); minors keep the labels of surviving elements.
//!
//! Uniform matroids use corank-first indexing: `uniform_matroid(m, d)` has
//! rank `d` on `d + m` elements, so `uniform_matroid(1, d)` is the matroid
//! of a `(d + 1)`-cycle.

use std::collections::HashMap;

use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Axiom, Error, Result};

/// Default bound on the ground set for constructors that enumerate subsets
/// exhaustively, and for ingested inputs.
pub const DEFAULT_CAP: usize = 24;

#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    labels: Vec<usize>,
    flats: Vec<ElementSet>,
    ranks: Vec<usize>,
    covers: Vec<Vec<usize>>,
    index: HashMap<ElementSet, usize>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.labels == other.labels && self.flats == other.flats
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// Builds a simple matroid from its flats, checking every flat axiom
    /// and simplicity. Ranks are recomputed from the cover relation.
    pub fn from_flats(n: usize, flats: &[Vec<usize>]) -> Result<Self> {
        let sets = to_sets(n, flats)?;
        let m = Self::build(n, (0..n).collect(), sets, true)?;
        m.check_simple()?;
        Ok(m)
    }

    /// Like [`Matroid::from_flats`] but accepts loops and parallel
    /// elements; the result can be passed to [`Matroid::simplify`].
    pub fn from_lattice(n: usize, labels: Vec<usize>, flats: Vec<ElementSet>) -> Result<Self> {
        if labels.len() != n {
            return Err(Error::Parameter(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
        Self::build(n, labels, flats, true)
    }

    /// Construction from a family already known to satisfy the axioms.
    pub(crate) fn from_trusted(n: usize, labels: Vec<usize>, flats: Vec<ElementSet>) -> Self {
        Self::build(n, labels, flats, false).expect("trusted flat family violates an axiom")
    }

    fn build(
        n: usize,
        labels: Vec<usize>,
        mut flats: Vec<ElementSet>,
        validate: bool,
    ) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap {
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        let full = ElementSet::full(n);
        if let Some(bad) = flats.iter().find(|f| !f.is_subset(full)) {
            return Err(axiom(
                Axiom::GroundSet,
                format!("{bad:?} is not a subset of 0..{n}"),
            ));
        }
        flats.sort_unstable_by_key(|f| (f.len(), f.0));
        flats.dedup();
        if flats.last() != Some(&full) {
            return Err(axiom(Axiom::FullSetIsFlat, format!("{full:?} is missing")));
        }
        let members: HashMap<ElementSet, usize> =
            flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        if validate {
            for (i, &a) in flats.iter().enumerate() {
                for &b in &flats[i + 1..] {
                    let c = a.intersection(b);
                    if !members.contains_key(&c) {
                        return Err(axiom(
                            Axiom::IntersectionClosed,
                            format!("{a:?} ∩ {b:?} = {c:?} is not a flat"),
                        ));
                    }
                }
            }
        }

        // first index holding a flat with at least k elements
        let mut size_start = vec![flats.len(); n + 2];
        for (i, f) in flats.iter().enumerate().rev() {
            size_start[f.len()] = i;
        }
        for k in (0..=n).rev() {
            size_start[k] = size_start[k].min(size_start[k + 1]);
        }
        let closure_idx = |s: ElementSet| -> usize {
            flats[size_start[s.len()]..]
                .iter()
                .position(|f| s.is_subset(*f))
                .map(|p| p + size_start[s.len()])
                .expect("E contains every subset")
        };

        let mut covers: Vec<Vec<usize>> = Vec::with_capacity(flats.len());
        for &f in &flats {
            let rest = full.difference(f);
            let mut cands: Vec<usize> = Vec::new();
            let mut seen = ElementSet::EMPTY;
            for e in rest.iter() {
                if !validate && seen.contains(e) {
                    continue;
                }
                let c = closure_idx(f.with(e));
                seen = seen.union(flats[c]);
                if !cands.contains(&c) {
                    cands.push(c);
                }
            }
            if validate {
                let minimal: Vec<usize> = cands
                    .iter()
                    .copied()
                    .filter(|&c| {
                        !cands
                            .iter()
                            .any(|&d| d != c && flats[d].is_subset(flats[c]))
                    })
                    .collect();
                let mut union = ElementSet::EMPTY;
                let mut disjoint = true;
                for &c in &minimal {
                    let part = flats[c].difference(f);
                    disjoint &= union.is_disjoint(part);
                    union = union.union(part);
                }
                if !disjoint || union != rest {
                    let cov: Vec<ElementSet> = minimal.iter().map(|&c| flats[c]).collect();
                    return Err(axiom(
                        Axiom::CoverPartition,
                        format!("at flat {f:?}: covers {cov:?} do not partition {rest:?}"),
                    ));
                }
                cands = minimal;
            }
            covers.push(cands);
        }

        let mut ranks: Vec<Option<usize>> = vec![None; flats.len()];
        ranks[0] = Some(0);
        if validate {
            if let Some(f) = flats.iter().find(|f| !flats[0].is_subset(**f)) {
                return Err(axiom(
                    Axiom::IntersectionClosed,
                    format!("no least flat: {:?} ⊄ {f:?}", flats[0]),
                ));
            }
        }
        for i in 0..flats.len() {
            let r = ranks[i].expect("flats are reached in size order from the bottom");
            for &j in &covers[i] {
                match ranks[j] {
                    None => ranks[j] = Some(r + 1),
                    Some(s) if s != r + 1 => {
                        return Err(axiom(
                            Axiom::Graded,
                            format!("{:?} covers flats of different ranks", flats[j]),
                        ))
                    }
                    _ => {}
                }
            }
        }
        let ranks: Vec<usize> = ranks.into_iter().map(|r| r.unwrap()).collect();

        let mut order: Vec<usize> = (0..flats.len()).collect();
        order.sort_by_key(|&i| (ranks[i], flats[i].0));
        let mut position = vec![0; flats.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let sorted_flats: Vec<ElementSet> = order.iter().map(|&i| flats[i]).collect();
        let sorted_ranks: Vec<usize> = order.iter().map(|&i| ranks[i]).collect();
        let sorted_covers: Vec<Vec<usize>> = order
            .iter()
            .map(|&i| {
                let mut c: Vec<usize> = covers[i].iter().map(|&j| position[j]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        let index = sorted_flats
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        Ok(Matroid {
            n,
            labels,
            flats: sorted_flats,
            ranks: sorted_ranks,
            covers: sorted_covers,
            index,
        })
    }

    fn check_simple(&self) -> Result<()> {
        if !self.flats[0].is_empty() {
            return Err(axiom(Axiom::Simple, format!("loops {:?}", self.flats[0])));
        }
        for e in 0..self.n {
            if !self.index.contains_key(&ElementSet::singleton(e)) {
                return Err(axiom(Axiom::Simple, format!("{{{e}}} is not a flat")));
            }
        }
        Ok(())
    }

    /// Re-checks every flat axiom from scratch.
    pub fn validate(&self) -> Result<()> {
        let again = Self::build(self.n, self.labels.clone(), self.flats.clone(), true)?;
        if again.ranks != self.ranks {
            return Err(Error::Internal(
                "stored ranks disagree with the cover relation".into(),
            ));
        }
        Ok(())
    }

    pub fn is_simple(&self) -> bool {
        self.check_simple().is_ok()
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> usize {
        self.labels[e]
    }

    pub fn position_of_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn rank(&self) -> usize {
        *self.ranks.last().unwrap()
    }

    pub fn num_flats(&self) -> usize {
        self.flats.len()
    }

    /// All flats, rank-ascending.
    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> ElementSet {
        self.flats[i]
    }

    pub fn rank_at(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn corank_at(&self, i: usize) -> usize {
        self.rank() - self.ranks[i]
    }

    pub fn flat_index(&self, f: ElementSet) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn is_flat(&self, f: ElementSet) -> bool {
        self.index.contains_key(&f)
    }

    /// Rank of a flat, `None` if `f` is not a flat.
    pub fn rank_of(&self, f: ElementSet) -> Option<usize> {
        self.flat_index(f).map(|i| self.ranks[i])
    }

    /// Indices of the flats covering flat `i`.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn top_index(&self) -> usize {
        self.flats.len() - 1
    }

    /// Indices of the flats of rank `k`.
    pub fn flats_of_rank(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.flats.len()).filter(move |&i| self.ranks[i] == k)
    }

    pub fn num_atoms(&self) -> usize {
        self.flats_of_rank(1).count()
    }

    pub fn num_coatoms(&self) -> usize {
        match self.rank() {
            0 => 0,
            r => self.flats_of_rank(r - 1).count(),
        }
    }

    /// Whitney numbers of the second kind: flats counted by rank.
    pub fn rank_profile(&self) -> Vec<usize> {
        let mut out = vec![0; self.rank() + 1];
        for &r in &self.ranks {
            out[r] += 1;
        }
        out
    }

    /// Smallest flat containing `s`.
    pub fn closure(&self, s: ElementSet) -> ElementSet {
        self.flats
            .iter()
            .filter(|f| s.is_subset(**f))
            .fold(self.ground_set(), |acc, &f| acc.intersection(f))
    }

    /// Rank of an arbitrary subset (rank of its closure).
    pub fn rank_of_set(&self, s: ElementSet) -> usize {
        self.rank_of(self.closure(s)).expect("closure is a flat")
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e < self.n {
            Ok(())
        } else {
            Err(Error::InvalidElement(e))
        }
    }

    fn check_flat(&self, f: ElementSet) -> Result<()> {
        if self.is_flat(f) {
            Ok(())
        } else {
            Err(Error::NotAFlat(f.to_vec()))
        }
    }

    /// `M \ e`, flats `{F \ e}`.
    pub fn delete(&self, e: usize) -> Result<Matroid> {
        self.check_element(e)?;
        let keep = self.ground_set().without(e);
        let flats = self.flats.iter().map(|f| f.compress(keep)).collect();
        let labels = keep.iter().map(|i| self.labels[i]).collect();
        Ok(Matroid::from_trusted(self.n - 1, labels, flats))
    }

    /// Deletes every element outside `keep`.
    pub fn restrict(&self, keep: ElementSet) -> Matroid {
        let keep = keep.intersection(self.ground_set());
        let flats = self.flats.iter().map(|f| f.compress(keep)).collect();
        let labels = keep.iter().map(|i| self.labels[i]).collect();
        Matroid::from_trusted(keep.len(), labels, flats)
    }

    /// True iff deleting `e` lowers the rank, i.e. `E \ e` is a flat.
    pub fn is_coloop(&self, e: usize) -> Result<bool> {
        self.check_element(e)?;
        Ok(self.is_flat(self.ground_set().without(e)))
    }

    /// `M_F`: the upper interval `[F, E]`, simplified. Each cover `G` of
    /// `F` is represented by the smallest element of `G \ F`.
    pub fn contract(&self, f: ElementSet) -> Result<Matroid> {
        self.check_flat(f)?;
        let fi = self.flat_index(f).unwrap();
        let reps = self.covers[fi]
            .iter()
            .map(|&g| self.flats[g].difference(f).min_element().unwrap())
            .fold(ElementSet::EMPTY, |acc, e| acc.with(e));
        let flats = self
            .flats
            .iter()
            .filter(|g| f.is_subset(**g))
            .map(|g| g.intersection(reps).compress(reps))
            .collect();
        let labels = reps.iter().map(|i| self.labels[i]).collect();
        Ok(Matroid::from_trusted(reps.len(), labels, flats))
    }

    /// Contraction by the closure of a single element.
    pub fn contract_element(&self, e: usize) -> Result<Matroid> {
        self.check_element(e)?;
        self.contract(self.closure(ElementSet::singleton(e)))
    }

    /// `M^F`: ground set `F`, flats the lower interval `[bottom, F]`.
    pub fn localize(&self, f: ElementSet) -> Result<Matroid> {
        self.check_flat(f)?;
        let flats = self
            .flats
            .iter()
            .filter(|g| g.is_subset(f))
            .map(|g| g.compress(f))
            .collect();
        let labels = f.iter().map(|i| self.labels[i]).collect();
        Ok(Matroid::from_trusted(f.len(), labels, flats))
    }

    /// `M_F^G` for flats `F <= G`: the interval `[F, G]` as a simple matroid.
    pub fn minor(&self, f: ElementSet, g: ElementSet) -> Result<Matroid> {
        self.check_flat(f)?;
        self.check_flat(g)?;
        if !f.is_subset(g) {
            return Err(Error::NotBelow {
                lower: f.to_vec(),
                upper: g.to_vec(),
            });
        }
        self.localize(g)?.contract(f.compress(g))
    }

    /// One representative per rank-one flat, loops removed.
    pub fn simplify(&self) -> Matroid {
        self.contract(self.flats[0]).expect("bottom is a flat")
    }

    /// Ground set is the disjoint union; labels of `other` are shifted past
    /// the largest label of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap {
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        let offset = self.labels.iter().max().map_or(0, |m| m + 1);
        let labels = self
            .labels
            .iter()
            .copied()
            .chain(other.labels.iter().map(|l| l + offset))
            .collect();
        let mut flats = Vec::with_capacity(self.flats.len() * other.flats.len());
        for &a in &self.flats {
            for &b in &other.flats {
                flats.push(a.union(ElementSet(b.0 << self.n)));
            }
        }
        Ok(Matroid::from_trusted(n, labels, flats))
    }

    /// Flats as sorted element lists, rank-ascending.
    pub fn flat_lists(&self) -> Vec<Vec<usize>> {
        self.flats.iter().map(|f| f.to_vec()).collect()
    }

    /// Flats expressed through element labels instead of positions.
    pub fn labeled_flats(&self) -> Vec<Vec<usize>> {
        self.flats
            .iter()
            .map(|f| {
                let mut v: Vec<usize> = f.iter().map(|e| self.labels[e]).collect();
                v.sort_unstable();
                v
            })
            .collect()
    }
}

fn axiom(axiom: Axiom, witness: String) -> Error {
    Error::Axiom { axiom, witness }
}

fn to_sets(n: usize, flats: &[Vec<usize>]) -> Result<Vec<ElementSet>> {
    if n > MAX_ELEMENTS {
        return Err(Error::SizeCap {
            size: n,
            cap: MAX_ELEMENTS,
        });
    }
    flats
        .iter()
        .map(|f| {
            if let Some(&bad) = f.iter().find(|&&e| e >= n) {
                Err(axiom(
                    Axiom::GroundSet,
                    format!("element {bad} in {f:?} is outside 0..{n}"),
                ))
            } else {
                Ok(ElementSet::from_elements(f.iter().copied()))
            }
        })
        .collect()
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > DEFAULT_CAP {
        Err(Error::SizeCap {
            size: n,
            cap: DEFAULT_CAP,
        })
    } else {
        Ok(())
    }
}

/// `U_{m,d}` in corank-first convention: rank `d` on `d + m` elements,
/// proper flats are the subsets of size `< d`.
pub fn uniform_matroid(corank: usize, rank: usize) -> Result<Matroid> {
    let n = corank + rank;
    check_enumerable(n)?;
    let full = ElementSet::full(n);
    let mut flats: Vec<ElementSet> = (0..1u64 << n)
        .map(ElementSet)
        .filter(|s| s.len() < rank)
        .collect();
    flats.push(full);
    Ok(Matroid::from_trusted(n, (0..n).collect(), flats))
}

/// Every subset is a flat.
pub fn boolean_matroid(n: usize) -> Result<Matroid> {
    uniform_matroid(0, n)
}
