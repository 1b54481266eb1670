//! Fixed benchmark instances shared by the criterion benches.

use binmat_core::{construct, BinaryMatroid, FamilySpec};

/// The 16-element rank-8 instance also used by `binmat bench`.
pub fn rank8_sixteen() -> BinaryMatroid {
    binmat_core::suites::rank8_sixteen_instance()
}

pub fn family(spec: FamilySpec) -> BinaryMatroid {
    construct(&spec).expect("valid family")
}

/// Deterministic pseudo-random subsets of an `n`-element ground set.
pub fn subsets(n: usize, count: usize, mut seed: u64) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    (0..count)
        .map(|_| {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed & full
        })
        .collect()
}
