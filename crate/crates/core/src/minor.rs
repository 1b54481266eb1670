//! Minor testing with replayable certificates.
//!
//! The search walks the elements of `M` in label order and decides the fate
//! of each one: delete, contract or keep (in that order). Contracted sets are
//! kept independent and deleted sets coindependent, which every minor admits,
//! so the number of contractions and deletions is fixed in advance by the
//! ranks and coranks of `M` and `N`. Each completed assignment is tested for
//! isomorphism with `N`.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::gf2::{low_mask, XorBasis};
use crate::iso::{IsoData, IsoWitness};
use crate::matroid::{normalized_rep, project_out, BinaryMatroid, ElementSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
}

impl SearchLimits {
    pub const DEFAULT_NODES: u64 = 10_000_000;
    pub const DEFAULT_TIME: Duration = Duration::from_secs(300);

    pub fn unlimited() -> Self {
        SearchLimits { node_budget: u64::MAX, time_budget: None }
    }

    pub fn nodes(node_budget: u64) -> Self {
        SearchLimits { node_budget, time_budget: None }
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { node_budget: Self::DEFAULT_NODES, time_budget: Some(Self::DEFAULT_TIME) }
    }
}

/// Tracks node and wall-clock consumption across one or more searches.
#[derive(Debug)]
pub struct Budget {
    limits: SearchLimits,
    nodes: u64,
    started: Instant,
}

impl Budget {
    pub fn new(limits: SearchLimits) -> Self {
        Budget { limits, nodes: 0, started: Instant::now() }
    }

    pub fn nodes_used(&self) -> u64 {
        self.nodes
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limits.node_budget {
            return Err(Error::ResourceExhausted { nodes: self.nodes - 1 });
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(t) = self.limits.time_budget {
                if self.started.elapsed() > t {
                    return Err(Error::ResourceExhausted { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}

/// `N ≅ M \ delete_set / contract_set`, with `iso_map` sending each surviving
/// element of `M` (by index in `M`) to an element of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCertificate {
    pub delete_set: ElementSet,
    pub contract_set: ElementSet,
    pub iso_map: Vec<(usize, usize)>,
}

impl MinorCertificate {
    pub fn surviving(&self, m: &BinaryMatroid) -> ElementSet {
        m.ground().difference(self.delete_set.union(self.contract_set))
    }

    /// Replays the minor and checks that relabelling along `iso_map` gives `N` exactly.
    pub fn verify(&self, m: &BinaryMatroid, n: &BinaryMatroid) -> bool {
        if !self.delete_set.is_disjoint(self.contract_set)
            || m.len() - self.delete_set.len() - self.contract_set.len() != n.len()
        {
            return false;
        }
        let Ok(minor) = m.minor(self.delete_set, self.contract_set) else {
            return false;
        };
        if minor.rank() != n.rank() || self.iso_map.len() != n.len() {
            return false;
        }
        let surviving = self.surviving(m).indices();
        let mut by_target = vec![None; n.len()];
        for &(e, f) in &self.iso_map {
            let Some(pos) = surviving.iter().position(|&s| s == e) else {
                return false;
            };
            if f >= n.len() || by_target[f].is_some() {
                return false;
            }
            by_target[f] = Some(pos);
        }
        let cols: Vec<u64> = by_target.iter().map(|p| minor.columns()[p.expect("bijection")]).collect();
        normalized_rep(minor.rep().rows(), &cols) == normalized_rep(n.rep().rows(), n.columns())
    }

    pub fn display(&self, m: &BinaryMatroid, n: &BinaryMatroid) -> String {
        let pairs: Vec<String> = self.iso_map.iter().map(|&(e, f)| format!("{}->{}", m.label(e), n.label(f))).collect();
        format!(
            "delete={} contract={} map={}",
            m.format_set(self.delete_set),
            m.format_set(self.contract_set),
            pairs.join(",")
        )
    }
}

/// Searches for an `N`-minor of `M` whose ground set contains `fix`.
///
/// `Ok(None)` means the search was exhaustive and found nothing; running out
/// of budget is reported as [`Error::ResourceExhausted`].
pub fn has_minor(
    m: &BinaryMatroid,
    n: &BinaryMatroid,
    fix: ElementSet,
    limits: SearchLimits,
) -> Result<Option<MinorCertificate>> {
    let mut budget = Budget::new(limits);
    has_minor_with_budget(m, n, fix, &mut budget)
}

pub fn has_minor_with_budget(
    m: &BinaryMatroid,
    n: &BinaryMatroid,
    fix: ElementSet,
    budget: &mut Budget,
) -> Result<Option<MinorCertificate>> {
    has_minor_target(m, &MinorTarget::new(n), fix, budget)
}

/// Ground sets of every `N`-minor of `M` (each listed once).
pub fn minor_ground_sets(m: &BinaryMatroid, n: &BinaryMatroid, limits: SearchLimits) -> Result<Vec<ElementSet>> {
    let mut budget = Budget::new(limits);
    let mut sets = Vec::new();
    let target = MinorTarget::new(n);
    search(m, &target, ElementSet::EMPTY, &mut budget, &mut |del, con, _| {
        sets.push(m.ground().difference(del.union(con)));
        true
    })?;
    sets.sort();
    sets.dedup();
    Ok(sets)
}

/// A prepared `N` for repeated minor searches.
pub struct MinorTarget {
    len: usize,
    rank: usize,
    data: IsoData,
}

impl MinorTarget {
    pub fn new(n: &BinaryMatroid) -> Self {
        MinorTarget { len: n.len(), rank: n.rank(), data: IsoData::new(n) }
    }
}

pub fn has_minor_target(
    m: &BinaryMatroid,
    target: &MinorTarget,
    fix: ElementSet,
    budget: &mut Budget,
) -> Result<Option<MinorCertificate>> {
    let mut found = None;
    search(m, target, fix, budget, &mut |del, con, w| {
        found = Some(certificate(m, del, con, w));
        false
    })?;
    Ok(found)
}

fn certificate(m: &BinaryMatroid, del: ElementSet, con: ElementSet, w: IsoWitness) -> MinorCertificate {
    let surviving = m.ground().difference(del.union(con));
    let iso_map = surviving.iter().zip(w.column_map).collect();
    MinorCertificate { delete_set: del, contract_set: con, iso_map }
}

type Visit<'a> = dyn FnMut(ElementSet, ElementSet, IsoWitness) -> bool + 'a;

fn search(
    m: &BinaryMatroid,
    target: &MinorTarget,
    fix: ElementSet,
    budget: &mut Budget,
    visit: &mut Visit<'_>,
) -> Result<()> {
    m.check_subset(fix)?;
    if target.len > m.len() || target.rank > m.rank() || target.len - target.rank > m.corank() {
        return Ok(());
    }
    let contractions = m.rank() - target.rank;
    let deletions = m.corank() - (target.len - target.rank);
    let mut state = MinorSearch {
        n: m.len(),
        rows: m.rep().rows(),
        labels_len: target.len,
        target: &target.data,
        fix: fix.bits(),
        budget,
        visit,
    };
    let mut cols = m.columns().to_vec();
    state.dfs(0, &mut cols, 0, 0, deletions, contractions, m.rank())?;
    Ok(())
}

struct MinorSearch<'a, 'b> {
    n: usize,
    rows: usize,
    labels_len: usize,
    target: &'a IsoData,
    fix: u64,
    budget: &'a mut Budget,
    visit: &'a mut Visit<'b>,
}

impl MinorSearch<'_, '_> {
    /// Returns `Ok(false)` once the visitor asks to stop.
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &mut self,
        e: usize,
        cols: &mut Vec<u64>,
        del: u64,
        con: u64,
        dels_left: usize,
        cons_left: usize,
        rank: usize,
    ) -> Result<bool> {
        self.budget.tick()?;
        if dels_left + cons_left == 0 {
            return Ok(self.leaf(cols, del, con));
        }
        if self.n - e < dels_left + cons_left {
            return Ok(true);
        }
        let alive = !(del | con) & low_mask(self.n);
        if self.fix >> e & 1 == 0 {
            if dels_left > 0
                && !is_coloop(cols, alive, e, rank)
                && !self.dfs(e + 1, cols, del | 1 << e, con, dels_left - 1, cons_left, rank)?
            {
                return Ok(false);
            }
            if cons_left > 0 && cols[e] != 0 {
                let mut next = cols.clone();
                project_out(&mut next, cols[e]);
                if !self.dfs(e + 1, &mut next, del, con | 1 << e, dels_left, cons_left - 1, rank - 1)? {
                    return Ok(false);
                }
            }
        }
        if self.n - e > dels_left + cons_left {
            return self.dfs(e + 1, cols, del, con, dels_left, cons_left, rank);
        }
        Ok(true)
    }

    fn leaf(&mut self, cols: &[u64], del: u64, con: u64) -> bool {
        let keep = ElementSet(!(del | con) & low_mask(self.n));
        debug_assert_eq!(keep.len(), self.labels_len);
        let kept: Vec<u64> = keep.iter().map(|i| cols[i]).collect();
        let labels = (0..kept.len()).map(|i| i.to_string()).collect();
        let minor = BinaryMatroid::from_columns_normalized(labels, self.rows, &kept);
        let data = IsoData::from_normalized(&minor);
        match data.find_isomorphism(self.target) {
            Some(w) => (self.visit)(ElementSet(del), ElementSet(con), w),
            None => true,
        }
    }
}

fn is_coloop(cols: &[u64], alive: u64, e: usize, rank: usize) -> bool {
    let mut basis = XorBasis::new();
    let mut bits = alive & !(1 << e);
    while bits != 0 {
        basis.insert(cols[bits.trailing_zeros() as usize]);
        if basis.rank() == rank {
            return false;
        }
        bits &= bits - 1;
    }
    basis.rank() < rank
}
