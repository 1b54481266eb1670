//! Triangles, triads, fans, quads, low-order separations and the
//! connectivity classification built on them.

use std::collections::HashSet;
use std::fmt;

use crate::gf2::XorBasis;
use crate::matroid::{sort_sets, BinaryMatroid, ElementSet};

pub fn triangles(m: &BinaryMatroid) -> Vec<ElementSet> {
    m.circuits(3).into_iter().filter(|c| c.len() == 3).collect()
}

pub fn triads(m: &BinaryMatroid) -> Vec<ElementSet> {
    triangles(&m.dual())
}

/// 4-element sets that are both circuits and cocircuits.
pub fn quads(m: &BinaryMatroid) -> Vec<Quad> {
    let cocircuits: HashSet<ElementSet> = m.cocircuits(4).into_iter().filter(|c| c.len() == 4).collect();
    m.circuits(4)
        .into_iter()
        .filter(|c| c.len() == 4 && cocircuits.contains(c))
        .map(|elements| Quad { elements })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quad {
    pub elements: ElementSet,
}

impl Quad {
    pub fn verify(&self, m: &BinaryMatroid) -> bool {
        self.elements.len() == 4 && m.is_circuit(self.elements) && m.dual().is_circuit(self.elements)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FanKind {
    /// Four elements, first triple a triangle.
    FourFan,
    /// Five elements with two triangles.
    FiveFan,
    /// Five elements with two triads.
    FiveCofan,
    Generic,
}

impl fmt::Display for FanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FanKind::FourFan => "4-fan",
            FanKind::FiveFan => "5-fan",
            FanKind::FiveCofan => "5-cofan",
            FanKind::Generic => "fan",
        })
    }
}

/// A fan ordering `(s1, ..., sn)`: consecutive triples alternate between
/// triangles and triads, starting with a triangle iff `starts_with_triangle`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FanOrdering {
    pub elements: Vec<usize>,
    pub starts_with_triangle: bool,
    pub kind: FanKind,
}

impl FanOrdering {
    pub fn new(elements: Vec<usize>, starts_with_triangle: bool) -> Self {
        let kind = match (elements.len(), starts_with_triangle) {
            (4, true) => FanKind::FourFan,
            (5, true) => FanKind::FiveFan,
            (5, false) => FanKind::FiveCofan,
            _ => FanKind::Generic,
        };
        FanOrdering { elements, starts_with_triangle, kind }
    }

    pub fn set(&self) -> ElementSet {
        ElementSet::from_indices(self.elements.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reversed(&self) -> FanOrdering {
        let mut elements = self.elements.clone();
        elements.reverse();
        let starts = if self.len() % 2 == 1 { self.starts_with_triangle } else { !self.starts_with_triangle };
        FanOrdering::new(elements, starts)
    }

    fn triple(&self, i: usize) -> ElementSet {
        ElementSet::from_indices(self.elements[i..i + 3].iter().copied())
    }

    /// Re-checks the alternating structure against freshly computed circuits.
    pub fn verify(&self, m: &BinaryMatroid) -> bool {
        if self.len() < 3 || self.set().len() != self.len() || self.elements.iter().any(|&e| e >= m.len()) {
            return false;
        }
        let dual = m.dual();
        (0..self.len() - 2).all(|i| {
            let t = self.triple(i);
            if (i % 2 == 0) == self.starts_with_triangle {
                m.is_circuit(t)
            } else {
                dual.is_circuit(t)
            }
        })
    }

    pub fn display(&self, m: &BinaryMatroid) -> String {
        let names: Vec<&str> = self.elements.iter().map(|&e| m.label(e)).collect();
        format!("{}({})", self.kind, names.join(","))
    }
}

/// All fan orderings with exactly `length` elements.
///
/// Orderings with the same sequence of triples (as sets) are reported once,
/// in their lexicographically least form; an ordering and its reverse are
/// distinct results.
pub fn fans(m: &BinaryMatroid, length: usize) -> Vec<FanOrdering> {
    if length < 3 {
        return Vec::new();
    }
    let tri: HashSet<ElementSet> = triangles(m).into_iter().collect();
    let tad: HashSet<ElementSet> = triads(m).into_iter().collect();
    fans_with(&tri, &tad, length)
}

pub(crate) fn fans_with(tri: &HashSet<ElementSet>, tad: &HashSet<ElementSet>, length: usize) -> Vec<FanOrdering> {
    let mut found = HashSet::new();
    for (first, start) in tri.iter().map(|t| (t, true)).chain(tad.iter().map(|t| (t, false))) {
        let idx = first.indices();
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let mut seq: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            extend_fan(tri, tad, &mut seq, start, length, &mut found);
        }
    }
    let mut out: Vec<FanOrdering> = found.into_iter().collect();
    out.sort();
    out
}

fn extend_fan(
    tri: &HashSet<ElementSet>,
    tad: &HashSet<ElementSet>,
    seq: &mut Vec<usize>,
    start: bool,
    length: usize,
    found: &mut HashSet<FanOrdering>,
) {
    if seq.len() == length {
        found.insert(FanOrdering::new(canonical_fan(seq), start));
        return;
    }
    let want_triangle = (seq.len() - 2).is_multiple_of(2) == start;
    let pool = if want_triangle { tri } else { tad };
    let (a, b) = (seq[seq.len() - 2], seq[seq.len() - 1]);
    let used = ElementSet::from_indices(seq.iter().copied());
    let mut next: Vec<usize> = pool
        .iter()
        .filter(|t| t.contains(a) && t.contains(b))
        .filter_map(|t| t.without(a).without(b).iter().next())
        .filter(|&c| !used.contains(c))
        .collect();
    next.sort_unstable();
    for c in next {
        seq.push(c);
        extend_fan(tri, tad, seq, start, length, found);
        seq.pop();
    }
}

/// Least ordering with the same triple sequence. The triples fix every
/// position except the two middle elements of a 4-element fan and all
/// positions of a lone triple.
fn canonical_fan(seq: &[usize]) -> Vec<usize> {
    let mut out = seq.to_vec();
    match out.len() {
        3 => out.sort_unstable(),
        4 if out[1] > out[2] => out.swap(1, 2),
        _ => {}
    }
    out
}

/// Does some ordering of the 4-set `x` form a 4-fan (triangle first)?
pub fn is_four_fan(tri: &HashSet<ElementSet>, tad: &HashSet<ElementSet>, x: ElementSet) -> bool {
    x.len() == 4
        && x.iter().any(|s1| {
            x.iter().filter(|&s4| s4 != s1).any(|s4| tri.contains(&x.without(s4)) && tad.contains(&x.without(s1)))
        })
}

/// A partition `(X, Y)` of the ground set with its connectivity value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Separation {
    pub side_x: ElementSet,
    pub side_y: ElementSet,
    pub lambda_value: usize,
}

impl Separation {
    pub fn from_side(m: &BinaryMatroid, x: ElementSet) -> Self {
        let side_y = m.ground().difference(x);
        Separation { side_x: x, side_y, lambda_value: m.lambda_mask(x.0) }
    }

    pub fn verify(&self, m: &BinaryMatroid) -> bool {
        self.side_x.is_disjoint(self.side_y)
            && self.side_x.union(self.side_y) == m.ground()
            && m.lambda_mask(self.side_x.0) == self.lambda_value
    }

    pub fn is_violator(&self, m: &BinaryMatroid, k: usize) -> bool {
        self.verify(m) && self.lambda_value <= 2 && self.side_x.len() > k && self.side_y.len() > k
    }

    pub fn display(&self, m: &BinaryMatroid) -> String {
        format!("X={} Y={} lambda={}", m.format_set(self.side_x), m.format_set(self.side_y), self.lambda_value)
    }
}

/// Finds `X` with `lambda(X) <= max_lambda` and both sides of size at least
/// `min_side`, or `None` if no such partition exists.
///
/// Exact branch-and-bound over assignments of elements to sides. Element 0
/// is pinned to `X` (the conditions are symmetric), and a branch is cut as
/// soon as the ranks of the partial sides already exceed the bound.
pub fn find_separation(m: &BinaryMatroid, max_lambda: usize, min_side: usize) -> Option<Separation> {
    let n = m.len();
    if n < 2 * min_side.max(1) {
        return None;
    }
    let mut search = SeparationSearch {
        cols: m.columns(),
        n,
        budget: m.rank() + max_lambda,
        min_side,
        bx: XorBasis::new(),
        by: XorBasis::new(),
    };
    search.bx.insert(search.cols[0]);
    search.dfs(1, 1, 0, 1).map(|x| Separation::from_side(m, ElementSet(x)))
}

struct SeparationSearch<'a> {
    cols: &'a [u64],
    n: usize,
    budget: usize,
    min_side: usize,
    bx: XorBasis,
    by: XorBasis,
}

impl SeparationSearch<'_> {
    fn dfs(&mut self, e: usize, x: u64, y_len: usize, x_len: usize) -> Option<u64> {
        if self.bx.rank() + self.by.rank() > self.budget {
            return None;
        }
        let left = self.n - e;
        if x_len + left < self.min_side || y_len + left < self.min_side {
            return None;
        }
        if e == self.n {
            return Some(x);
        }
        let c = self.cols[e];
        let px = self.bx.insert(c);
        let found = self.dfs(e + 1, x | 1 << e, y_len, x_len + 1);
        if let Some(p) = px {
            self.bx.remove_pivot(p);
        }
        if found.is_some() {
            return found;
        }
        let py = self.by.insert(c);
        let found = self.dfs(e + 1, x, y_len + 1, x_len);
        if let Some(p) = py {
            self.by.remove_pivot(p);
        }
        found
    }
}

/// Grows seeds (triangles, triads, 4-circuits and 4-cocircuits) under
/// alternating closure and coclosure and reports the first one that splits
/// the ground set into a 3-separation with both sides larger than `k`.
fn violator_from_seeds(m: &BinaryMatroid, k: usize) -> Option<Separation> {
    let dual = m.dual();
    let ground = m.ground();
    let mut seeds: Vec<ElementSet> = m.circuits(4);
    seeds.extend(dual.circuits(4));
    sort_sets(&mut seeds);
    seeds.dedup();
    for seed in seeds.into_iter().filter(|s| s.len() >= 3) {
        if m.lambda_mask(seed.0) > 2 {
            continue;
        }
        let mut x = seed;
        loop {
            if x.len() > k && ground.len() - x.len() > k {
                return Some(Separation::from_side(m, x));
            }
            if ground.len() - x.len() <= k {
                break;
            }
            // Adding one element of the closure or coclosure keeps lambda <= 2.
            let grown = m.closure_mask(x.0).union(dual.closure_mask(x.0));
            match grown.difference(x).iter().next() {
                Some(e) => x = x.with(e),
                None => break,
            }
        }
    }
    None
}

/// A `(4, k)`-violator: a 3-separation with both sides of size greater than `k`.
/// Intended for 3-connected inputs; on others it still reports any partition
/// with `lambda <= 2` and both sides larger than `k`.
pub fn find_violator(m: &BinaryMatroid, k: usize) -> Option<Separation> {
    violator_from_seeds(m, k).or_else(|| find_separation(m, 2, k + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConnectivityClass {
    NotThreeConnected,
    /// 3-connected but with a 3-separation whose sides both exceed four elements.
    ThreeConnected,
    /// (4,4)-connected with some (4,3)-violator.
    FourFourConnectedOnly,
    InternallyFourConnected,
    FourConnected,
}

impl ConnectivityClass {
    pub fn is_three_connected(self) -> bool {
        self >= ConnectivityClass::ThreeConnected
    }

    pub fn is_four_four_connected(self) -> bool {
        self >= ConnectivityClass::FourFourConnectedOnly
    }

    pub fn is_internally_four_connected(self) -> bool {
        self >= ConnectivityClass::InternallyFourConnected
    }

    pub fn name(self) -> &'static str {
        match self {
            ConnectivityClass::NotThreeConnected => "not-3-connected",
            ConnectivityClass::ThreeConnected => "3-connected",
            ConnectivityClass::FourFourConnectedOnly => "(4,4)-connected-only",
            ConnectivityClass::InternallyFourConnected => "internally-4-connected",
            ConnectivityClass::FourConnected => "4-connected",
        }
    }
}

impl fmt::Display for ConnectivityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn is_three_connected(m: &BinaryMatroid) -> bool {
    find_separation(m, 0, 1).is_none() && find_separation(m, 1, 2).is_none()
}

pub fn connectivity_class(m: &BinaryMatroid) -> ConnectivityClass {
    if !is_three_connected(m) {
        return ConnectivityClass::NotThreeConnected;
    }
    if find_violator(m, 3).is_none() {
        if find_separation(m, 2, 3).is_none() {
            ConnectivityClass::FourConnected
        } else {
            ConnectivityClass::InternallyFourConnected
        }
    } else if find_violator(m, 4).is_none() {
        ConnectivityClass::FourFourConnectedOnly
    } else {
        ConnectivityClass::ThreeConnected
    }
}

/// The least `k` for which the matroid has a `k`-separation, if it has one below `max_k`.
pub fn separation_order(m: &BinaryMatroid, max_k: usize) -> Option<(usize, Separation)> {
    (1..max_k).find_map(|k| find_separation(m, k - 1, k).map(|s| (k, s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    fn fano() -> BinaryMatroid {
        construct(&FamilySpec::Fano).unwrap()
    }

    fn brute_violator_exists(m: &BinaryMatroid, k: usize) -> bool {
        let n = m.len();
        (0u64..1 << n).any(|x| {
            let s = ElementSet(x);
            s.len() > k && n - s.len() > k && m.lambda(s).unwrap() <= 2
        })
    }

    #[test]
    fn triangle_and_triad_counts() {
        let f = fano();
        assert_eq!(triangles(&f).len(), 7);
        assert!(triads(&f).is_empty());
        assert_eq!(triads(&f.dual()).len(), 7);
        assert!(triangles(&f.dual()).is_empty());
        let brute = (0u64..128).filter(|&s| s.count_ones() == 3 && f.is_circuit(ElementSet(s))).count();
        assert_eq!(brute, 7);
    }

    #[test]
    fn fan_examples() {
        assert!(fans(&fano(), 4).is_empty());
        let k4 = construct(&FamilySpec::CycleK4).unwrap();
        let idx = |l: &str| k4.index_of(l).unwrap();
        let want = vec![idx("12"), idx("13"), idx("23"), idx("34")];
        let f4 = fans(&k4, 4);
        let hit = f4.iter().find(|f| f.elements == want).expect("K4 4-fan present");
        assert_eq!(hit.kind, FanKind::FourFan);
        for f in &f4 {
            assert!(f.verify(&k4));
            let rev = f.reversed();
            assert!(rev.verify(&k4));
            if f.kind == FanKind::FourFan {
                assert_eq!(rev.kind, FanKind::Generic);
            }
        }
        for f in fans(&k4, 5) {
            assert!(f.verify(&k4));
            if f.kind == FanKind::FiveFan {
                assert_eq!(f.reversed().kind, FanKind::FiveFan);
            }
        }
    }

    #[test]
    fn quad_examples() {
        let f = fano();
        let q = quads(&f);
        assert_eq!(q.len(), 7);
        assert!(q.iter().all(|q| q.verify(&f)));
        assert_eq!(quads(&f.dual()), q);
        let lines = triangles(&f);
        for quad in &q {
            assert!(lines.contains(&f.ground().difference(quad.elements)));
        }
    }

    #[test]
    fn violator_examples() {
        let f = fano();
        assert!(find_violator(&f, 3).is_none());
        assert!(!brute_violator_exists(&f, 3));
        let bp = construct(&FamilySpec::BiwheelPlus(4)).unwrap();
        assert!(find_violator(&bp, 3).is_none());
        assert!(!brute_violator_exists(&bp, 3));
    }

    #[test]
    fn long_fan_yields_violator() {
        // The wheel of rank 5 has a fan through all its spokes and rim edges.
        let edges: Vec<(usize, usize)> = (1..=5).flat_map(|i| [(0, i), (i, if i == 5 { 1 } else { i + 1 })]).collect();
        let w5 = crate::families::graphic_from_edges(6, &edges).unwrap();
        assert!(is_three_connected(&w5));
        let five = fans(&w5, 5);
        assert!(!five.is_empty());
        let sep = find_violator(&w5, 3).unwrap();
        assert!(sep.is_violator(&w5, 3));
        assert!(brute_violator_exists(&w5, 3));
        assert_eq!(connectivity_class(&w5), ConnectivityClass::ThreeConnected);
    }

    #[test]
    fn class_examples() {
        assert_eq!(connectivity_class(&fano()), ConnectivityClass::InternallyFourConnected);
        assert_eq!(connectivity_class(&fano().dual()), ConnectivityClass::InternallyFourConnected);
        // Two disjoint triangles: a 1-separation.
        let two = BinaryMatroid::from_columns(
            (0..6).map(|i| format!("e{i}")).collect(),
            4,
            &[0b0001, 0b0010, 0b0011, 0b0100, 0b1000, 0b1100],
        )
        .unwrap();
        assert_eq!(connectivity_class(&two), ConnectivityClass::NotThreeConnected);
        assert_eq!(separation_order(&two, 4).unwrap().0, 1);
    }
}
