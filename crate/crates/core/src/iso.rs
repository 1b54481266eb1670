//! Isomorphism testing for binary matroids.
//!
//! Binary matroids are uniquely representable, so two of them are isomorphic
//! exactly when some invertible linear map carries the columns of one
//! (normalized to full row rank) onto the columns of the other, as multisets.
//! The search fixes a basis of the first matroid, maps its elements one at a
//! time into the second, and checks every element spanned so far against the
//! image under the partially determined map. Elements are only matched to
//! elements with the same local signature (parallel/series class sizes and
//! triangle/triad degrees).

use std::collections::HashMap;

use crate::gf2::{xor_selected, BitMatrix, TrackedBasis, XorBasis};
use crate::matroid::{normalized_rep, BinaryMatroid};
use crate::structure::triangles;

/// A column bijection plus the basis change realizing it.
///
/// `column_map[e]` is the element of the second matroid that `e` maps to, and
/// `basis_change * column(e) = column(column_map[e])` holds for the
/// normalized representations of both matroids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub column_map: Vec<usize>,
    pub basis_change: BitMatrix,
}

impl IsoWitness {
    pub fn verify(&self, m1: &BinaryMatroid, m2: &BinaryMatroid) -> bool {
        let n = m1.len();
        if m2.len() != n || self.column_map.len() != n || m1.rank() != m2.rank() {
            return false;
        }
        let mut seen = vec![false; n];
        for &f in &self.column_map {
            if f >= n || std::mem::replace(&mut seen[f], true) {
                return false;
            }
        }
        let r = m1.rank();
        let t = &self.basis_change;
        if t.rows() != r || t.cols() != r || t.rank() != r {
            return false;
        }
        let a = m1.normalized();
        let b = m2.normalized();
        let linear_ok = (0..n).all(|e| t.apply(a.columns()[e]) == b.columns()[self.column_map[e]]);
        // Independently: reordering the second matroid's columns along the map
        // must give the same reduced representation as the first.
        let reordered: Vec<u64> = self.column_map.iter().map(|&f| b.columns()[f]).collect();
        linear_ok && normalized_rep(r, &reordered) == normalized_rep(r, a.columns())
    }

    pub fn inverse(&self) -> Option<IsoWitness> {
        let n = self.column_map.len();
        let mut column_map = vec![0; n];
        for (e, &f) in self.column_map.iter().enumerate() {
            column_map[f] = e;
        }
        let basis_change = invert(&self.basis_change)?;
        Some(IsoWitness { column_map, basis_change })
    }

    pub fn label_pairs<'a>(&self, m1: &'a BinaryMatroid, m2: &'a BinaryMatroid) -> Vec<(&'a str, &'a str)> {
        self.column_map.iter().enumerate().map(|(e, &f)| (m1.label(e), m2.label(f))).collect()
    }
}

fn invert(t: &BitMatrix) -> Option<BitMatrix> {
    let r = t.rows();
    if t.cols() != r {
        return None;
    }
    let mut basis = TrackedBasis::new();
    for j in 0..r {
        basis.insert(t.column(j), 1 << j);
    }
    let cols: Option<Vec<u64>> = (0..r).map(|k| basis.express(1 << k)).collect();
    BitMatrix::from_columns(r, &cols?).ok()
}

/// Local invariant of an element, preserved by every isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct ElementSig {
    parallel: u8,
    series: u8,
    triangles: u16,
    triads: u16,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ClassKey {
    sigs: Vec<ElementSig>,
}

/// Precomputed data for one side of an isomorphism test.
pub(crate) struct IsoData {
    rank: usize,
    cols: Vec<u64>,
    sigs: Vec<ElementSig>,
    sorted_sigs: Vec<ElementSig>,
    /// Distinct column vectors with their members and class key.
    classes: Vec<(u64, Vec<usize>, ClassKey)>,
    class_of: HashMap<u64, usize>,
}

impl IsoData {
    pub(crate) fn new(m: &BinaryMatroid) -> Self {
        let norm = m.normalized();
        Self::from_normalized(&norm)
    }

    pub(crate) fn from_normalized(norm: &BinaryMatroid) -> Self {
        let n = norm.len();
        let cols = norm.columns().to_vec();
        let dual = norm.dual();
        let mut sigs = vec![ElementSig { parallel: 0, series: 0, triangles: 0, triads: 0 }; n];
        for t in triangles(norm) {
            for e in t.iter() {
                sigs[e].triangles += 1;
            }
        }
        for t in triangles(&dual) {
            for e in t.iter() {
                sigs[e].triads += 1;
            }
        }
        let dcols = dual.columns();
        for e in 0..n {
            sigs[e].parallel = cols.iter().filter(|&&c| c == cols[e]).count() as u8;
            sigs[e].series = dcols.iter().filter(|&&c| c == dcols[e]).count() as u8;
        }
        let mut class_of = HashMap::new();
        let mut classes: Vec<(u64, Vec<usize>, ClassKey)> = Vec::new();
        for e in 0..n {
            let idx = *class_of.entry(cols[e]).or_insert_with(|| {
                classes.push((cols[e], Vec::new(), ClassKey { sigs: Vec::new() }));
                classes.len() - 1
            });
            classes[idx].1.push(e);
            classes[idx].2.sigs.push(sigs[e]);
        }
        for c in &mut classes {
            c.2.sigs.sort_unstable();
        }
        let mut sorted_sigs = sigs.clone();
        sorted_sigs.sort_unstable();
        IsoData { rank: norm.rank(), cols, sigs, sorted_sigs, classes, class_of }
    }

    fn key_of(&self, v: u64) -> Option<&ClassKey> {
        self.class_of.get(&v).map(|&i| &self.classes[i].2)
    }

    /// Quick necessary condition for isomorphism.
    pub(crate) fn compatible(&self, other: &IsoData) -> bool {
        self.rank == other.rank && self.cols.len() == other.cols.len() && self.sorted_sigs == other.sorted_sigs
    }

    pub(crate) fn find_isomorphism(&self, other: &IsoData) -> Option<IsoWitness> {
        if !self.compatible(other) {
            return None;
        }
        if self.key_of(0) != other.key_of(0) {
            return None;
        }
        let plan = self.basis_plan(other);
        let mut search = IsoSearch { a: self, b: other, plan: &plan, images: vec![0; self.rank] };
        let mut basis = XorBasis::new();
        if !search.dfs(0, &mut basis) {
            return None;
        }
        Some(self.build_witness(other, &plan, &search.images))
    }

    /// Orders a basis of `self` so that each new basis element spans as many
    /// new column classes as possible, preferring elements with few candidates.
    fn basis_plan(&self, other: &IsoData) -> BasisPlan {
        let candidates_for = |key: &ClassKey| -> Vec<u64> {
            other.classes.iter().filter(|c| c.0 != 0 && &c.2 == key).map(|c| c.0).collect()
        };
        let mut chosen: Vec<u64> = Vec::new();
        let mut span = XorBasis::new();
        let mut spanned = vec![false; self.classes.len()];
        let mut steps = Vec::new();
        let mut tracked = TrackedBasis::new();
        while chosen.len() < self.rank {
            let mut best: Option<(usize, usize, usize)> = None; // (gain, -cands, idx)
            for (i, c) in self.classes.iter().enumerate() {
                if c.0 == 0 || spanned[i] || span.contains(c.0) {
                    continue;
                }
                let mut trial = span.clone();
                trial.insert(c.0);
                let gain = self.classes.iter().enumerate().filter(|(j, d)| !spanned[*j] && trial.contains(d.0)).count();
                let cands = candidates_for(&c.2).len();
                let better = match best {
                    None => true,
                    Some((g, k, _)) => (gain, usize::MAX - cands) > (g, k),
                };
                if better {
                    best = Some((gain, usize::MAX - cands, i));
                }
            }
            let (_, _, i) = best.expect("rank exceeds spanned dimension");
            let v = self.classes[i].0;
            let j = chosen.len();
            chosen.push(v);
            span.insert(v);
            tracked.insert(v, 1 << j);
            let mut checks = Vec::new();
            for (k, c) in self.classes.iter().enumerate() {
                if !spanned[k] && span.contains(c.0) {
                    spanned[k] = true;
                    if c.0 != 0 {
                        checks.push((tracked.express(c.0).expect("in span"), k));
                    }
                }
            }
            steps.push(PlanStep { candidates: candidates_for(&self.classes[i].2), checks });
        }
        BasisPlan { basis: chosen, steps, tracked }
    }

    fn build_witness(&self, other: &IsoData, plan: &BasisPlan, images: &[u64]) -> IsoWitness {
        let r = self.rank;
        let t_cols: Vec<u64> =
            (0..r).map(|k| xor_selected(images, plan.tracked.express(1 << k).expect("basis spans"))).collect();
        let basis_change = BitMatrix::from_columns(r, &t_cols).expect("square of size rank");
        let mut column_map = vec![usize::MAX; self.cols.len()];
        for (v, members, _) in &self.classes {
            let w = basis_change.apply(*v);
            let target = &other.classes[other.class_of[&w]].1;
            // Pair members class by class, matching signatures.
            let mut used = vec![false; target.len()];
            for &e in members {
                let sig = self.sig_of(e);
                let slot =
                    (0..target.len()).find(|&s| !used[s] && other.sig_of(target[s]) == sig).expect("class keys agree");
                used[slot] = true;
                column_map[e] = target[slot];
            }
        }
        debug_assert!(plan.basis.len() == r);
        IsoWitness { column_map, basis_change }
    }

    fn sig_of(&self, e: usize) -> ElementSig {
        self.sigs[e]
    }
}

struct PlanStep {
    candidates: Vec<u64>,
    /// (coefficient mask over chosen basis, class index in `a`) newly spanned at this step.
    checks: Vec<(u64, usize)>,
}

struct BasisPlan {
    basis: Vec<u64>,
    steps: Vec<PlanStep>,
    tracked: TrackedBasis,
}

struct IsoSearch<'a> {
    a: &'a IsoData,
    b: &'a IsoData,
    plan: &'a BasisPlan,
    images: Vec<u64>,
}

impl IsoSearch<'_> {
    fn dfs(&mut self, j: usize, basis: &mut XorBasis) -> bool {
        if j == self.plan.steps.len() {
            return true;
        }
        let step = &self.plan.steps[j];
        for &cand in &step.candidates {
            let Some(pivot) = basis.insert(cand) else { continue };
            self.images[j] = cand;
            let ok = step.checks.iter().all(|&(coeff, k)| {
                let w = xor_selected(&self.images, coeff);
                self.b.key_of(w) == Some(&self.a.classes[k].2)
            });
            if ok && self.dfs(j + 1, basis) {
                return true;
            }
            basis.remove_pivot(pivot);
        }
        false
    }
}

pub fn are_isomorphic(m1: &BinaryMatroid, m2: &BinaryMatroid) -> Option<IsoWitness> {
    IsoData::new(m1).find_isomorphism(&IsoData::new(m2))
}
