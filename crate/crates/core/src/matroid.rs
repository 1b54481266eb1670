//! The [`BinaryMatroid`] value and its rank-oracle queries.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{low_mask, rref, BitMatrix, XorBasis};

/// A subset of a matroid's ground set, one bit per element in label order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        ElementSet(low_mask(n))
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        ElementSet(indices.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A binary matroid: labelled columns of a GF(2) matrix.
///
/// Values are immutable. Minors and duals are new values that keep the
/// labels of the surviving elements.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatroid {
    labels: Vec<String>,
    rep: BitMatrix,
    cols: Vec<u64>,
    rank: usize,
}

impl BinaryMatroid {
    pub fn new(labels: Vec<String>, rep: BitMatrix) -> Result<Self> {
        if labels.len() != rep.cols() {
            return Err(Error::DimensionMismatch { expected: rep.cols(), found: labels.len() });
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let cols = rep.columns();
        let rank = rep.rank();
        Ok(BinaryMatroid { labels, rep, cols, rank })
    }

    /// Labels elements `e1, e2, ...`.
    pub fn from_matrix(rep: BitMatrix) -> Result<Self> {
        let labels = (1..=rep.cols()).map(|i| format!("e{i}")).collect();
        Self::new(labels, rep)
    }

    pub fn from_columns(labels: Vec<String>, rows: usize, columns: &[u64]) -> Result<Self> {
        Self::new(labels, BitMatrix::from_columns(rows, columns)?)
    }

    /// Same matroid with a full-row-rank representation in reduced echelon form.
    pub fn from_columns_normalized(labels: Vec<String>, rows: usize, columns: &[u64]) -> Self {
        let rep = normalized_rep(rows, columns);
        let cols = rep.columns();
        let rank = rep.rows();
        BinaryMatroid { labels, rep, cols, rank }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.len() - self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn rep(&self) -> &BitMatrix {
        &self.rep
    }

    /// Columns of the representation, packed over the rows.
    pub fn columns(&self) -> &[u64] {
        &self.cols
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        labels.iter().try_fold(ElementSet::EMPTY, |acc, l| {
            let l = l.as_ref();
            self.index_of(l).map(|i| acc.with(i)).ok_or_else(|| Error::UnknownElement(l.to_string()))
        })
    }

    pub fn set_labels(&self, s: ElementSet) -> Vec<&str> {
        s.iter().map(|i| self.label(i)).collect()
    }

    pub fn format_set(&self, s: ElementSet) -> String {
        format!("{{{}}}", self.set_labels(s).join(","))
    }

    pub fn check_subset(&self, s: ElementSet) -> Result<()> {
        if s.is_subset(self.ground()) {
            Ok(())
        } else {
            let index = (s.0 & !self.ground().0).trailing_zeros() as usize;
            Err(Error::ElementOutOfRange { index, size: self.len() })
        }
    }

    /// Renames the elements, keeping the representation.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        Self::new(labels, self.rep.clone())
    }

    /// The same matroid and labels with a normalized (full-row-rank, reduced) representation.
    pub fn normalized(&self) -> Self {
        Self::from_columns_normalized(self.labels.clone(), self.rep.rows(), &self.cols)
    }

    /// Two values describe the same labelled matroid (identical labels and rank function).
    pub fn same_matroid(&self, other: &BinaryMatroid) -> bool {
        self.labels == other.labels
            && normalized_rep(self.rep.rows(), &self.cols) == normalized_rep(other.rep.rows(), &other.cols)
    }

    /// Rank of a subset given as a raw mask; no validation.
    #[inline]
    pub fn rank_mask(&self, mask: u64) -> usize {
        let mut basis = XorBasis::new();
        let mut bits = mask;
        while bits != 0 {
            basis.insert(self.cols[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        basis.rank()
    }

    pub fn rank_of(&self, s: ElementSet) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.rank_mask(s.0))
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.rank_mask(s.0) == s.len()
    }

    /// `r(X) + r(E - X) - r(M)`.
    pub fn lambda(&self, x: ElementSet) -> Result<usize> {
        self.check_subset(x)?;
        Ok(self.lambda_mask(x.0))
    }

    #[inline]
    pub fn lambda_mask(&self, x: u64) -> usize {
        let y = self.ground().0 & !x;
        self.rank_mask(x) + self.rank_mask(y) - self.rank
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.cols[e] == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_mask(self.ground().0 & !(1 << e)) < self.rank
    }

    /// The dual matroid, same labels.
    pub fn dual(&self) -> BinaryMatroid {
        let n = self.len();
        let (reduced, pivots) = rref(&self.rep);
        let r = pivots.len();
        let rows = &reduced.row_words()[..r];
        let nonpivots: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let mut cols = vec![0u64; n];
        for (k, &j) in nonpivots.iter().enumerate() {
            cols[j] = 1 << k;
            for (i, &p) in pivots.iter().enumerate() {
                if rows[i] >> j & 1 == 1 {
                    cols[p] |= 1 << k;
                }
            }
        }
        let rep = BitMatrix::from_columns(n - r, &cols).expect("dual fits within source dimensions");
        BinaryMatroid { labels: self.labels.clone(), rep, cols, rank: n - r }
    }

    /// `M \ del / con`. Contraction projects the remaining columns along the
    /// contracted ones; the result carries a normalized representation.
    pub fn minor(&self, del: ElementSet, con: ElementSet) -> Result<BinaryMatroid> {
        self.check_subset(del)?;
        self.check_subset(con)?;
        if !del.is_disjoint(con) {
            return Err(Error::OverlappingMinorSets);
        }
        if del.is_empty() && con.is_empty() {
            return Ok(self.clone());
        }
        let mut cols = self.cols.clone();
        for e in con.iter() {
            let v = cols[e];
            project_out(&mut cols, v);
        }
        let keep = self.ground().difference(del.union(con));
        let labels = keep.iter().map(|i| self.labels[i].clone()).collect();
        let kept: Vec<u64> = keep.iter().map(|i| cols[i]).collect();
        Ok(Self::from_columns_normalized(labels, self.rep.rows(), &kept))
    }

    pub fn delete(&self, e: usize) -> Result<BinaryMatroid> {
        self.minor(ElementSet::singleton(e), ElementSet::EMPTY)
    }

    pub fn contract(&self, e: usize) -> Result<BinaryMatroid> {
        self.minor(ElementSet::EMPTY, ElementSet::singleton(e))
    }

    /// Restriction to the elements of `s`.
    pub fn restrict(&self, s: ElementSet) -> Result<BinaryMatroid> {
        self.minor(self.ground().difference(s), ElementSet::EMPTY)
    }

    /// All circuits with at most `max_size` elements, ordered by size then lexicographically.
    pub fn circuits(&self, max_size: usize) -> Vec<ElementSet> {
        let mut out = Vec::new();
        if max_size > 0 {
            let mut basis = XorBasis::new();
            self.circuit_dfs(0, 0, 0, 0, max_size, &mut basis, &mut out);
        }
        sort_sets(&mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn circuit_dfs(
        &self,
        start: usize,
        set: u64,
        sum: u64,
        size: usize,
        max_size: usize,
        basis: &mut XorBasis,
        out: &mut Vec<ElementSet>,
    ) {
        for e in start..self.len() {
            let c = self.cols[e];
            match basis.insert(c) {
                None => {
                    // set is independent and spans c; set + e is a circuit iff c uses all of set.
                    if c == sum {
                        out.push(ElementSet(set | 1 << e));
                    }
                }
                Some(pivot) => {
                    if size + 2 <= max_size {
                        self.circuit_dfs(e + 1, set | 1 << e, sum ^ c, size + 1, max_size, basis, out);
                    }
                    basis.remove_pivot(pivot);
                }
            }
        }
    }

    pub fn cocircuits(&self, max_size: usize) -> Vec<ElementSet> {
        self.dual().circuits(max_size)
    }

    pub fn is_circuit(&self, s: ElementSet) -> bool {
        !s.is_empty() && self.rank_mask(s.0) + 1 == s.len() && s.iter().all(|e| self.is_independent(s.without(e)))
    }

    pub fn closure(&self, s: ElementSet) -> Result<ElementSet> {
        self.check_subset(s)?;
        Ok(self.closure_mask(s.0))
    }

    pub(crate) fn closure_mask(&self, s: u64) -> ElementSet {
        let mut basis = XorBasis::new();
        for i in ElementSet(s).iter() {
            basis.insert(self.cols[i]);
        }
        ElementSet::from_indices((0..self.len()).filter(|&i| basis.contains(self.cols[i])))
    }

    pub fn coclosure(&self, s: ElementSet) -> Result<ElementSet> {
        self.dual().closure(s)
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatroid(rank {}, {} elements)", self.rank, self.len())?;
        writeln!(f, "  {}", self.labels.join(" "))?;
        for row in self.rep.to_bit_strings() {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Eliminates the lowest set bit of `v` from every column, so that `v`
/// becomes zero and the quotient by `span(v)` is represented in place.
#[inline]
pub(crate) fn project_out(cols: &mut [u64], v: u64) {
    if v == 0 {
        return;
    }
    let bit = v & v.wrapping_neg();
    for c in cols.iter_mut() {
        if *c & bit != 0 {
            *c ^= v;
        }
    }
}

/// Reduced echelon representation with zero rows dropped.
pub(crate) fn normalized_rep(rows: usize, columns: &[u64]) -> BitMatrix {
    let m = BitMatrix::from_columns(rows, columns).expect("columns fit the declared row count");
    let (reduced, pivots) = rref(&m);
    BitMatrix::from_rows(m.cols(), reduced.row_words()[..pivots.len()].to_vec()).expect("rows come from a valid matrix")
}

pub(crate) fn sort_sets(sets: &mut [ElementSet]) {
    sets.sort_by_key(|s| (s.len(), s.indices()));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    fn fano() -> BinaryMatroid {
        construct(&FamilySpec::Fano).unwrap()
    }

    /// Minimal dependent sets found by scanning every subset.
    fn brute_circuits(m: &BinaryMatroid) -> Vec<ElementSet> {
        let n = m.len();
        let dependent = |s: u64| m.rank_mask(s) < s.count_ones() as usize;
        let mut out: Vec<ElementSet> = (1u64..1 << n)
            .filter(|&s| dependent(s) && ElementSet(s).iter().all(|e| !dependent(s & !(1 << e))))
            .map(ElementSet)
            .collect();
        sort_sets(&mut out);
        out
    }

    #[test]
    fn rank_examples() {
        let f = fano();
        assert_eq!(f.rank_of(ElementSet::EMPTY).unwrap(), 0);
        assert_eq!(f.rank_of(f.ground()).unwrap(), 3);
        let bp = construct(&FamilySpec::BiwheelPlus(4)).unwrap();
        assert_eq!(bp.rank_of(bp.ground()).unwrap(), 5);
        assert!(matches!(f.rank_of(ElementSet(1 << 9)), Err(Error::ElementOutOfRange { .. })));
    }

    #[test]
    fn fano_circuits_match_brute_force() {
        let f = fano();
        let c = f.circuits(7);
        assert_eq!(c, brute_circuits(&f));
        assert_eq!(c.len(), 14);
        assert_eq!(c.iter().filter(|s| s.len() == 3).count(), 7);
        assert_eq!(c.iter().filter(|s| s.len() == 4).count(), 7);
        let cc = f.cocircuits(7);
        assert_eq!(cc.len(), 7);
        assert!(cc.iter().all(|s| s.len() == 4));
        // Cocircuits of F7 are the complements of its lines.
        let lines: Vec<_> = c.iter().filter(|s| s.len() == 3).copied().collect();
        for s in &cc {
            assert!(lines.contains(&f.ground().difference(*s)));
        }
    }

    #[test]
    fn dual_examples() {
        let f = fano();
        let d = f.dual();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.len(), 7);
        assert_eq!(d.labels(), f.labels());
        assert!(d.circuits(3).is_empty());
        assert!(d.dual().same_matroid(&f));
        assert_eq!(d.cocircuits(7), f.circuits(7));
    }

    #[test]
    fn minor_examples() {
        let f = fano();
        assert_eq!(f.minor(ElementSet::EMPTY, ElementSet::EMPTY).unwrap(), f);
        for e in 0..7 {
            let d = f.delete(e).unwrap();
            assert_eq!((d.len(), d.rank()), (6, 3));
        }
        let a = f.minor(ElementSet::singleton(0), ElementSet::EMPTY).unwrap();
        let ab = a.minor(ElementSet::EMPTY, a.element_set(&[f.label(1)]).unwrap()).unwrap();
        let direct = f.minor(ElementSet::singleton(0), ElementSet::singleton(1)).unwrap();
        assert!(ab.same_matroid(&direct));
        assert!(matches!(f.minor(ElementSet(1), ElementSet(1)), Err(Error::OverlappingMinorSets)));
    }

    #[test]
    fn contraction_matches_rank_formula() {
        let m = construct(&FamilySpec::BiwheelPlus(4)).unwrap();
        let con = ElementSet::from_indices([0, 5, 9]);
        let mc = m.minor(ElementSet::EMPTY, con).unwrap();
        let rest: Vec<usize> = m.ground().difference(con).indices();
        for mask in 0u64..1 << rest.len() {
            let x = ElementSet(mask);
            let orig = ElementSet::from_indices(x.iter().map(|i| rest[i]));
            let expect = m.rank_mask(orig.0 | con.0) - m.rank_mask(con.0);
            assert_eq!(mc.rank_mask(mask), expect);
        }
    }

    #[test]
    fn lambda_examples() {
        let f = fano();
        assert_eq!(f.lambda(ElementSet::EMPTY).unwrap(), 0);
        for mask in 0..128u64 {
            let x = ElementSet(mask);
            assert_eq!(f.lambda(x).unwrap(), f.lambda(f.ground().difference(x)).unwrap());
            assert_eq!(f.lambda(x).unwrap(), f.dual().lambda(x).unwrap());
        }
    }

    #[test]
    fn closure_examples() {
        let f = fano();
        assert_eq!(f.closure(f.ground()).unwrap(), f.ground());
        let line = f.circuits(3)[0];
        let mut it = line.iter();
        let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        let cl = f.closure(ElementSet::from_indices([a, b])).unwrap();
        assert!(cl.contains(c));
        assert_eq!(f.closure(cl).unwrap(), cl);
        // In F7 the coclosure of a 4-element cocircuit minus a point picks the point back up.
        let cc = f.cocircuits(4)[0];
        let e = cc.iter().next().unwrap();
        assert!(f.coclosure(cc.without(e)).unwrap().contains(e));
    }

    #[test]
    fn independent_ground_set_has_no_circuits() {
        let m = BinaryMatroid::from_matrix(BitMatrix::identity(5).unwrap()).unwrap();
        assert!(m.circuits(5).is_empty());
    }

    #[test]
    fn label_validation() {
        let rep = BitMatrix::identity(2).unwrap();
        assert!(matches!(BinaryMatroid::new(vec!["a".into(), "a".into()], rep.clone()), Err(Error::DuplicateLabel(_))));
        assert!(BinaryMatroid::new(vec!["a".into()], rep).is_err());
    }
}
