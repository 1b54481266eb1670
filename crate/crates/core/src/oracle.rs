//! Brute-force reference implementations for small matroids.
//!
//! Everything here works from subset ranks alone: circuits come from a scan
//! of all subsets, isomorphism is a search for a circuit-preserving
//! bijection, and minors are enumerated as rank functions. They are
//! exponential in the ground set and meant for checking the fast paths on
//! matroids with at most 16 elements.

use std::collections::HashSet;

use crate::matroid::{BinaryMatroid, ElementSet};
use crate::structure::ConnectivityClass;

/// Largest ground set the oracles accept.
pub const ORACLE_MAX: usize = 16;

/// A matroid given by the rank of every subset of `0..n`.
#[derive(Clone, Debug)]
pub struct RankTable {
    n: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn of(m: &BinaryMatroid) -> Self {
        assert!(m.len() <= ORACLE_MAX, "oracle limited to {ORACLE_MAX} elements");
        let ranks = (0u64..1 << m.len()).map(|s| m.rank_mask(s) as u8).collect();
        RankTable { n: m.len(), ranks }
    }

    /// `M \ delete / contract`, elements renumbered in increasing order.
    pub fn minor(&self, delete: u64, contract: u64) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&e| (delete | contract) >> e & 1 == 0).collect();
        let base = self.ranks[contract as usize];
        let ranks = (0u64..1 << keep.len())
            .map(|s| {
                let lifted =
                    keep.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).fold(0u64, |a, (_, &e)| a | 1 << e);
                self.ranks[(lifted | contract) as usize] - base
            })
            .collect();
        RankTable { n: keep.len(), ranks }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rank(&self, s: u64) -> usize {
        self.ranks[s as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank((1u64 << self.n) - 1)
    }

    pub fn lambda(&self, x: u64) -> usize {
        let full = (1u64 << self.n) - 1;
        self.rank(x) + self.rank(full & !x) - self.full_rank()
    }

    pub fn circuits(&self) -> Vec<u64> {
        (1u64..1 << self.n)
            .filter(|&s| {
                let k = s.count_ones() as usize;
                self.rank(s) == k - 1
                    && (0..self.n).filter(|e| s >> e & 1 == 1).all(|e| self.rank(s & !(1 << e)) == k - 1)
            })
            .collect()
    }
}

/// Searches for a bijection mapping circuits onto circuits.
pub fn brute_isomorphic(a: &RankTable, b: &RankTable) -> bool {
    if a.n != b.n || a.full_rank() != b.full_rank() {
        return false;
    }
    let (ca, cb) = (a.circuits(), b.circuits());
    if ca.len() != cb.len() {
        return false;
    }
    let n = a.n;
    let profile = |cs: &[u64], e: usize| {
        let mut p = vec![0usize; n + 2];
        for c in cs.iter().filter(|c| *c >> e & 1 == 1) {
            p[c.count_ones() as usize] += 1;
        }
        p
    };
    let pa: Vec<_> = (0..n).map(|e| profile(&ca, e)).collect();
    let pb: Vec<_> = (0..n).map(|e| profile(&cb, e)).collect();
    // Circuits of `a` grouped by their largest element, checked once it is mapped.
    let mut closing = vec![Vec::new(); n];
    for &c in &ca {
        closing[63 - c.leading_zeros() as usize].push(c);
    }
    let targets: HashSet<u64> = cb.into_iter().collect();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    extend(0, &mut map, &mut used, &pa, &pb, &closing, &targets)
}

fn extend(
    e: usize,
    map: &mut [usize],
    used: &mut u64,
    pa: &[Vec<usize>],
    pb: &[Vec<usize>],
    closing: &[Vec<u64>],
    targets: &HashSet<u64>,
) -> bool {
    if e == map.len() {
        return true;
    }
    for f in 0..map.len() {
        if *used >> f & 1 == 1 || pa[e] != pb[f] {
            continue;
        }
        map[e] = f;
        let image = |c: u64| (0..=e).filter(|i| c >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << map[i]);
        if closing[e].iter().all(|&c| targets.contains(&image(c))) {
            *used |= 1 << f;
            if extend(e + 1, map, used, pa, pb, closing, targets) {
                return true;
            }
            *used &= !(1 << f);
        }
    }
    map[e] = usize::MAX;
    false
}

/// Tries every deletion/contraction pair of the right sizes.
pub fn brute_has_minor(m: &BinaryMatroid, n: &BinaryMatroid) -> bool {
    if n.len() > m.len() || n.rank() > m.rank() || n.corank() > m.corank() {
        return false;
    }
    let (tm, tn) = (RankTable::of(m), RankTable::of(n));
    let drop = m.len() - n.len();
    let contract_size = m.rank() - n.rank();
    let full = (1u64 << m.len()) - 1;
    (0..=full).filter(|r| r.count_ones() as usize == drop).any(|removed| {
        let mut c = removed;
        loop {
            if c.count_ones() as usize == contract_size && tm.rank(c) == contract_size {
                let minor = tm.minor(removed & !c, c);
                if minor.full_rank() == tn.full_rank() && brute_isomorphic(&minor, &tn) {
                    return true;
                }
            }
            if c == 0 {
                return false;
            }
            c = (c - 1) & removed;
        }
    })
}

/// Whether some `X` has `lambda(X) <= max_lambda` with both sides of size at least `min_side`.
pub fn brute_separation(m: &BinaryMatroid, max_lambda: usize, min_side: usize) -> Option<ElementSet> {
    let t = RankTable::of(m);
    let n = m.len();
    (0u64..1 << n)
        .find(|&x| {
            let k = x.count_ones() as usize;
            k >= min_side && n - k >= min_side && t.lambda(x) <= max_lambda
        })
        .map(ElementSet)
}

pub fn brute_violator(m: &BinaryMatroid, k: usize) -> Option<ElementSet> {
    brute_separation(m, 2, k + 1)
}

/// Connectivity class straight from the definitions.
pub fn brute_class(m: &BinaryMatroid) -> ConnectivityClass {
    if brute_separation(m, 0, 1).is_some() || brute_separation(m, 1, 2).is_some() {
        ConnectivityClass::NotThreeConnected
    } else if brute_separation(m, 2, 3).is_none() {
        ConnectivityClass::FourConnected
    } else if brute_violator(m, 3).is_none() {
        ConnectivityClass::InternallyFourConnected
    } else if brute_violator(m, 4).is_none() {
        ConnectivityClass::FourFourConnectedOnly
    } else {
        ConnectivityClass::ThreeConnected
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    #[test]
    fn fano_tables() {
        let f = construct(&FamilySpec::Fano).unwrap();
        let t = RankTable::of(&f);
        assert_eq!(t.circuits().iter().filter(|c| c.count_ones() == 3).count(), 7);
        assert!(brute_isomorphic(&t, &t));
        assert!(!brute_isomorphic(&t, &RankTable::of(&f.dual())));
        assert_eq!(brute_class(&f), ConnectivityClass::InternallyFourConnected);
    }

    #[test]
    fn k4_is_a_minor_of_fano_but_not_conversely() {
        let f = construct(&FamilySpec::Fano).unwrap();
        let k4 = construct(&FamilySpec::CycleK4).unwrap();
        assert!(brute_has_minor(&f, &k4));
        assert!(!brute_has_minor(&k4, &f));
        assert!(!brute_has_minor(&f.dual(), &f));
    }
}
