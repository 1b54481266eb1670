//! Simple binary matroids of small rank, one per isomorphism class.
//!
//! A simple binary matroid of rank `r` is a spanning set of points of the
//! projective geometry `PG(r-1, 2)`, and two such sets give isomorphic
//! matroids exactly when some element of `GL(r, 2)` maps one onto the other.
//! For `r <= 4` the group has at most 20160 elements, so orbits are computed
//! directly: the least point set of each orbit is its representative.
//!
//! Ranks 5 and 6 are too large for that. There, matroids are grown one point
//! at a time from a basis, and each new point set is kept unless it is
//! isomorphic to one already kept. Every simple matroid contains a basis, so
//! every isomorphism class is reached.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::rank_of_vectors;
use crate::iso::IsoData;
use crate::matroid::BinaryMatroid;
use crate::structure::{connectivity_class, is_three_connected};

/// Largest rank handled by exact orbit computation.
pub const MAX_ENUM_RANK: usize = 4;
/// Largest rank and size handled by growth with isomorphism rejection.
pub const MAX_GROW_RANK: usize = 6;
pub const MAX_GROW_SIZE: usize = 13;

/// Predicates applied after enumeration. Simplicity always holds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub cosimple: bool,
    pub three_connected: bool,
    pub internally_four_connected: bool,
}

impl EnumFilter {
    pub fn accepts(&self, m: &BinaryMatroid) -> bool {
        if self.cosimple && !is_cosimple(m) {
            return false;
        }
        if self.internally_four_connected {
            return connectivity_class(m).is_internally_four_connected();
        }
        !self.three_connected || is_three_connected(m)
    }
}

pub fn is_simple(m: &BinaryMatroid) -> bool {
    let cols = m.columns();
    cols.iter().all(|&c| c != 0) && {
        let mut sorted = cols.to_vec();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

pub fn is_cosimple(m: &BinaryMatroid) -> bool {
    is_simple(&m.dual())
}

/// Permutations of the points `0..2^r - 1` (point `p` is the vector `p + 1`) induced by `GL(r, 2)`.
fn linear_group(rank: usize) -> &'static [Vec<u8>] {
    static GROUPS: [OnceLock<Vec<Vec<u8>>>; MAX_ENUM_RANK + 1] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    GROUPS[rank].get_or_init(|| {
        let points = (1usize << rank) - 1;
        let mut out = Vec::new();
        let mut images = vec![1u64; rank];
        // Odometer over all r-tuples of nonzero column images.
        loop {
            if rank_of_vectors(images.iter().copied()) == rank {
                let perm = (1..=points as u64).map(|v| (crate::gf2::xor_selected(&images, v) - 1) as u8).collect();
                out.push(perm);
            }
            let mut i = 0;
            loop {
                if i == rank {
                    return out;
                }
                images[i] += 1;
                if images[i] as usize <= points {
                    break;
                }
                images[i] = 1;
                i += 1;
            }
        }
    })
}

pub fn group_order(rank: usize) -> usize {
    linear_group(rank).len()
}

#[inline]
fn apply_perm(perm: &[u8], mask: u32) -> u32 {
    let mut out = 0;
    let mut bits = mask;
    while bits != 0 {
        out |= 1 << perm[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    out
}

fn mask_vectors(mask: u64) -> impl Iterator<Item = u64> {
    (0..64).filter(move |p| mask >> p & 1 == 1).map(|p| p as u64 + 1)
}

fn check_regime(rank: usize, size: usize) -> Result<()> {
    if rank == 0 || rank > MAX_ENUM_RANK || size > (1 << MAX_ENUM_RANK) - 1 {
        return Err(Error::OutOfRegime(format!("rank {rank}, size {size}: need 1 <= rank <= 4, size <= 15")));
    }
    Ok(())
}

fn check_catalog_regime(rank: usize, size: usize) -> Result<()> {
    if rank <= MAX_ENUM_RANK {
        return check_regime(rank, size);
    }
    if rank > MAX_GROW_RANK || size > MAX_GROW_SIZE {
        return Err(Error::OutOfRegime(format!(
            "rank {rank}, size {size}: ranks 5 and 6 are supported up to {MAX_GROW_SIZE} elements"
        )));
    }
    Ok(())
}

/// Least point set of every orbit of spanning `size`-subsets of `PG(rank-1, 2)`.
pub fn orbit_representatives(rank: usize, size: usize) -> Result<Vec<u32>> {
    check_regime(rank, size)?;
    let points = (1usize << rank) - 1;
    if size > points || size < rank {
        return Ok(Vec::new());
    }
    let group = linear_group(rank);
    let mut seen = vec![false; 1 << points];
    let mut reps = Vec::new();
    for mask in 0u32..1 << points {
        if mask.count_ones() as usize != size || seen[mask as usize] {
            continue;
        }
        if rank_of_vectors(mask_vectors(mask.into())) != rank {
            continue;
        }
        reps.push(mask);
        for g in group {
            seen[apply_perm(g, mask) as usize] = true;
        }
    }
    Ok(reps)
}

/// The matroid whose columns are the points of `mask`, labelled `v<vector>`.
pub fn matroid_from_points(rank: usize, mask: u64) -> BinaryMatroid {
    let cols: Vec<u64> = mask_vectors(mask).collect();
    let labels = cols.iter().map(|v| format!("v{v}")).collect();
    BinaryMatroid::from_columns(labels, rank, &cols).expect("points fit in rank rows")
}

/// Point sets of one simple matroid per isomorphism class: exact orbits up
/// to rank 4, growth with isomorphism rejection for ranks 5 and 6.
pub fn representatives(rank: usize, size: usize) -> Result<Vec<u64>> {
    check_catalog_regime(rank, size)?;
    if rank <= MAX_ENUM_RANK {
        return Ok(orbit_representatives(rank, size)?.into_iter().map(u64::from).collect());
    }
    Ok(grown_representatives(rank, size))
}

/// Per-element counts of small circuits and cocircuits, sorted. Isomorphic
/// matroids have equal keys.
fn growth_key(m: &BinaryMatroid) -> Vec<[u8; 5]> {
    let mut counts = vec![[0u8; 5]; m.len()];
    for c in m.circuits(5) {
        for e in c.iter() {
            counts[e][c.len() - 3] += 1;
        }
    }
    for c in m.cocircuits(4) {
        if c.len() >= 3 {
            for e in c.iter() {
                counts[e][c.len()] += 1;
            }
        }
    }
    counts.sort_unstable();
    counts
}

/// Levels of grown representatives per rank; level `k` holds size `k`.
fn grown_levels() -> &'static Mutex<HashMap<usize, Vec<Vec<u64>>>> {
    static LEVELS: OnceLock<Mutex<HashMap<usize, Vec<Vec<u64>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(HashMap::new()))
}

fn grown_representatives(rank: usize, size: usize) -> Vec<u64> {
    let points = (1usize << rank) - 1;
    if size < rank || size > points {
        return Vec::new();
    }
    let mut guard = grown_levels().lock().unwrap_or_else(|e| e.into_inner());
    let levels = guard.entry(rank).or_insert_with(|| {
        let mut levels = vec![Vec::new(); rank + 1];
        levels[rank] = vec![(0..rank).fold(0u64, |acc, i| acc | 1 << ((1u64 << i) - 1))];
        levels
    });
    while levels.len() <= size {
        let next = grow_level(rank, levels.last().expect("basis level"));
        levels.push(next);
    }
    levels[size].clone()
}

fn grow_level(rank: usize, parents: &[u64]) -> Vec<u64> {
    let points = (1usize << rank) - 1;
    let mut seen = HashSet::new();
    let mut children = Vec::new();
    for &mask in parents {
        for p in 0..points {
            let child = mask | 1 << p;
            if child != mask && seen.insert(child) {
                children.push(child);
            }
        }
    }
    let keyed: Vec<(u64, Vec<[u8; 5]>, IsoData)> = children
        .par_iter()
        .map(|&mask| {
            let m = matroid_from_points(rank, mask);
            (mask, growth_key(&m), IsoData::new(&m))
        })
        .collect();
    let mut buckets: HashMap<&Vec<[u8; 5]>, Vec<usize>> = HashMap::new();
    let mut kept = Vec::new();
    for (i, (_, key, data)) in keyed.iter().enumerate() {
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().all(|&j| data.find_isomorphism(&keyed[j].2).is_none()) {
            bucket.push(i);
            kept.push(i);
        }
    }
    kept.into_iter().map(|i| keyed[i].0).collect()
}

/// One simple binary matroid per isomorphism class with the given rank and
/// size, restricted by `filter`, in a fixed order.
pub fn enumerate_binary_matroids(
    rank: usize,
    size: usize,
    filter: EnumFilter,
) -> Result<impl Iterator<Item = BinaryMatroid>> {
    let reps = representatives(rank, size)?;
    Ok(reps.into_iter().map(move |mask| matroid_from_points(rank, mask)).filter(move |m| filter.accepts(m)))
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: BinaryMatroid,
}

/// Scope of a catalog (rank at most 4 with size at most 15, or rank at most
/// 6 with size at most 13), written `rank<=R,size<=S[,size>=T][,3connected][,i4c][,cosimple][,duals]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogFilter {
    pub max_rank: usize,
    pub max_size: usize,
    pub min_size: usize,
    pub filter: EnumFilter,
    /// Also list duals not isomorphic to an entry already present.
    pub include_duals: bool,
}

impl Default for CatalogFilter {
    fn default() -> Self {
        CatalogFilter { max_rank: 4, max_size: 10, min_size: 1, filter: EnumFilter::default(), include_duals: false }
    }
}

impl FromStr for CatalogFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = CatalogFilter::default();
        let bad = |part: &str| Error::OutOfRegime(format!("unrecognized catalog filter `{part}`"));
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let num = |prefix: &str| -> Option<usize> { part.strip_prefix(prefix)?.trim().parse().ok() };
            if let Some(v) = num("rank<=") {
                out.max_rank = v;
            } else if let Some(v) = num("size<=") {
                out.max_size = v;
            } else if let Some(v) = num("size>=") {
                out.min_size = v;
            } else {
                match part {
                    "3connected" | "3-connected" => out.filter.three_connected = true,
                    "i4c" | "internally-4-connected" => out.filter.internally_four_connected = true,
                    "cosimple" => out.filter.cosimple = true,
                    "duals" => out.include_duals = true,
                    "simple" => {}
                    _ => return Err(bad(part)),
                }
            }
        }
        if out.max_rank == 0 {
            return Err(Error::OutOfRegime(format!("catalog `{s}` has no ranks")));
        }
        check_catalog_regime(out.max_rank, out.max_size)
            .map_err(|e| Error::OutOfRegime(format!("catalog `{s}`: {e}")))?;
        Ok(out)
    }
}

impl fmt::Display for CatalogFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank<={},size<={}", self.max_rank, self.max_size)?;
        if self.min_size > 1 {
            write!(f, ",size>={}", self.min_size)?;
        }
        if self.filter.three_connected {
            f.write_str(",3connected")?;
        }
        if self.filter.internally_four_connected {
            f.write_str(",i4c")?;
        }
        if self.filter.cosimple {
            f.write_str(",cosimple")?;
        }
        if self.include_duals {
            f.write_str(",duals")?;
        }
        Ok(())
    }
}

/// All catalog matroids within the filter, ordered by rank, size and orbit index.
pub fn catalog(filter: &CatalogFilter) -> Result<Vec<CatalogEntry>> {
    let mut jobs = Vec::new();
    for rank in 1..=filter.max_rank {
        for size in filter.min_size.max(1)..=filter.max_size {
            for (i, mask) in representatives(rank, size)?.into_iter().enumerate() {
                jobs.push((rank, size, i, mask));
            }
        }
    }
    let accepted: Vec<Option<CatalogEntry>> = jobs
        .par_iter()
        .map(|&(rank, size, i, mask)| {
            let m = matroid_from_points(rank, mask);
            filter.filter.accepts(&m).then(|| CatalogEntry { name: format!("r{rank}n{size}#{i}"), matroid: m })
        })
        .collect();
    let mut entries: Vec<CatalogEntry> = accepted.into_iter().flatten().collect();
    if filter.include_duals {
        let duals: Vec<CatalogEntry> =
            entries.iter().map(|e| CatalogEntry { name: format!("{}*", e.name), matroid: e.matroid.dual() }).collect();
        for d in duals {
            let data = IsoData::new(&d.matroid);
            let duplicate = entries.iter().any(|e| {
                e.matroid.len() == d.matroid.len()
                    && e.matroid.rank() == d.matroid.rank()
                    && data.find_isomorphism(&IsoData::new(&e.matroid)).is_some()
            });
            if !duplicate {
                entries.push(d);
            }
        }
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};
    use crate::iso::are_isomorphic;

    /// Orbit count by brute force: canonical form = least image under every group element.
    fn naive_orbit_count(rank: usize, size: usize) -> usize {
        let group = linear_group(rank);
        let points = (1usize << rank) - 1;
        let mut canon = std::collections::BTreeSet::new();
        for mask in 0u32..1 << points {
            if mask.count_ones() as usize == size && rank_of_vectors(mask_vectors(mask.into())) == rank {
                canon.insert(group.iter().map(|g| apply_perm(g, mask)).min().unwrap());
            }
        }
        canon.len()
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(1), 1);
        assert_eq!(group_order(2), 6);
        assert_eq!(group_order(3), 168);
        assert_eq!(group_order(4), 20160);
    }

    #[test]
    fn small_counts() {
        let f7: Vec<_> = enumerate_binary_matroids(3, 7, EnumFilter::default()).unwrap().collect();
        assert_eq!(f7.len(), 1);
        assert!(are_isomorphic(&f7[0], &construct(&FamilySpec::Fano).unwrap()).is_some());
        assert_eq!(enumerate_binary_matroids(2, 3, EnumFilter::default()).unwrap().count(), 1);
        let six: Vec<_> = enumerate_binary_matroids(3, 6, EnumFilter::default()).unwrap().collect();
        assert_eq!(six.len(), 1);
        assert!(are_isomorphic(&six[0], &construct(&FamilySpec::CycleK4).unwrap()).is_some());
    }

    #[test]
    fn counts_match_naive_orbit_partition() {
        for rank in 1..=3 {
            for size in 1..=7 {
                assert_eq!(orbit_representatives(rank, size).unwrap().len(), naive_orbit_count(rank, size));
            }
        }
        for size in [4, 6, 8, 11] {
            assert_eq!(orbit_representatives(4, size).unwrap().len(), naive_orbit_count(4, size));
        }
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        for size in 5..=9 {
            let ms: Vec<_> = enumerate_binary_matroids(4, size, EnumFilter::default()).unwrap().collect();
            for i in 0..ms.len() {
                for j in i + 1..ms.len() {
                    assert!(are_isomorphic(&ms[i], &ms[j]).is_none(), "size {size}: {i} vs {j}");
                }
            }
        }
    }

    #[test]
    fn growth_matches_orbits_up_to_rank_4() {
        for rank in 2..=4 {
            for size in rank..(1 << rank) {
                let grown = grown_representatives(rank, size);
                assert_eq!(grown.len(), orbit_representatives(rank, size).unwrap().len(), "rank {rank} size {size}");
            }
        }
    }

    #[test]
    fn grown_rank_5_classes_are_distinct_and_simple() {
        // I_5 plus one vector of weight 2..5: circuits of size 3..6.
        assert_eq!(representatives(5, 6).unwrap().len(), 4);
        for size in 6..=9 {
            let ms: Vec<_> = enumerate_binary_matroids(5, size, EnumFilter::default()).unwrap().collect();
            for (i, m) in ms.iter().enumerate() {
                assert!(is_simple(m) && m.rank() == 5);
                for other in &ms[i + 1..] {
                    assert!(are_isomorphic(m, other).is_none());
                }
            }
        }
    }

    #[test]
    fn out_of_regime() {
        assert!(matches!(orbit_representatives(5, 6), Err(Error::OutOfRegime(_))));
        assert!(matches!(representatives(5, 14), Err(Error::OutOfRegime(_))));
        assert!(matches!(representatives(7, 8), Err(Error::OutOfRegime(_))));
        assert!(enumerate_binary_matroids(0, 1, EnumFilter::default()).is_err());
    }

    #[test]
    fn catalog_filter_parsing() {
        let f: CatalogFilter = "rank<=4,size<=10,3connected".parse().unwrap();
        assert_eq!((f.max_rank, f.max_size), (4, 10));
        assert!(f.filter.three_connected);
        assert_eq!(f.to_string(), "rank<=4,size<=10,3connected");
        assert!("rank<=9".parse::<CatalogFilter>().is_err());
        assert!("rank<=6,size<=14".parse::<CatalogFilter>().is_err());
        assert!("rank<=6,size<=13".parse::<CatalogFilter>().is_ok());
        assert!("bogus".parse::<CatalogFilter>().is_err());
    }

    #[test]
    fn i4c_catalog_membership() {
        let f: CatalogFilter = "rank<=4,size<=10,i4c".parse().unwrap();
        let cat = catalog(&f).unwrap();
        let present = |spec: FamilySpec| {
            let m = construct(&spec).unwrap();
            cat.iter().any(|e| are_isomorphic(&e.matroid, &m).is_some())
        };
        assert!(present(FamilySpec::Fano));
        assert!(present(FamilySpec::CycleK4));
        // Complementary planes of AG(3,2) are quads, so it has a (4,3)-violator.
        assert!(!present(FamilySpec::Ag32));
        let three: CatalogFilter = "rank<=4,size<=10,3connected".parse().unwrap();
        let ag = construct(&FamilySpec::Ag32).unwrap();
        assert!(catalog(&three).unwrap().iter().any(|e| are_isomorphic(&e.matroid, &ag).is_some()));
    }
}
