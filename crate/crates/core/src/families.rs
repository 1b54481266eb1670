//! Constructors for named binary matroids.
//!
//! The four ladder-like families share one block layout over `n + 1` rows:
//!
//! ```text
//!   [ I_{n+1} | 1   top ]
//!   [         | I_n A_n ]
//! ```
//!
//! where `A_n` has ones on the diagonal, the subdiagonal and in the top-right
//! corner, and `top` is the zero row (biwheel with hub edge) or the unit
//! vector `e_n` (triangular Möbius). Column labels are fixed:
//! `z, x2..x{n+1}` for the identity block, `s1..sn` for the all-ones-topped
//! block and `t1..tn` for the `A_n` block. `z` is the first identity column,
//! which in the graphic case is the edge joining the two hubs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matroid::{BinaryMatroid, ElementSet};

pub const Z_LABEL: &str = "z";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Cycle matroid of the biwheel on `n + 2` vertices.
    Biwheel(usize),
    /// Biwheel with the hub edge `z` added.
    BiwheelPlus(usize),
    /// Triangular Möbius matroid of rank `n + 1`.
    MobiusDelta(usize),
    /// Triangular Möbius matroid with `z` deleted.
    MobiusDeltaMinusZ(usize),
    Fano,
    FanoDual,
    CycleK4,
    /// Rank-4 binary affine geometry on 8 points.
    Ag32,
}

impl FamilySpec {
    pub const LADDER_FAMILIES: [fn(usize) -> FamilySpec; 4] =
        [FamilySpec::Biwheel, FamilySpec::BiwheelPlus, FamilySpec::MobiusDelta, FamilySpec::MobiusDeltaMinusZ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Biwheel(_) => "biwheel",
            FamilySpec::BiwheelPlus(_) => "biwheel_plus",
            FamilySpec::MobiusDelta(_) => "mobius_delta",
            FamilySpec::MobiusDeltaMinusZ(_) => "mobius_delta_minus_z",
            FamilySpec::Fano => "fano",
            FamilySpec::FanoDual => "fano_dual",
            FamilySpec::CycleK4 => "cycle_K4",
            FamilySpec::Ag32 => "ag32",
        }
    }

    pub fn parameter(&self) -> Option<usize> {
        match *self {
            FamilySpec::Biwheel(n)
            | FamilySpec::BiwheelPlus(n)
            | FamilySpec::MobiusDelta(n)
            | FamilySpec::MobiusDeltaMinusZ(n) => Some(n),
            _ => None,
        }
    }

    /// Parses a family name; `n` is required for the ladder families and ignored otherwise.
    pub fn from_name(name: &str, n: Option<usize>) -> Result<Self> {
        let need_n = || n.ok_or_else(|| Error::InvalidFamily(format!("family `{name}` needs a parameter n")));
        Ok(match name {
            "biwheel" => FamilySpec::Biwheel(need_n()?),
            "biwheel_plus" => FamilySpec::BiwheelPlus(need_n()?),
            "mobius_delta" => FamilySpec::MobiusDelta(need_n()?),
            "mobius_delta_minus_z" => FamilySpec::MobiusDeltaMinusZ(need_n()?),
            "fano" => FamilySpec::Fano,
            "fano_dual" => FamilySpec::FanoDual,
            "cycle_K4" | "cycle_k4" => FamilySpec::CycleK4,
            "ag32" => FamilySpec::Ag32,
            other => return Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(n) => write!(f, "{}({n})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `name` or `name(n)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('(') {
            Some((name, rest)) => {
                let n = rest
                    .strip_suffix(')')
                    .and_then(|v| v.trim().parse().ok())
                    .ok_or_else(|| Error::InvalidFamily(format!("bad parameter in `{s}`")))?;
                Self::from_name(name.trim(), Some(n))
            }
            None => Self::from_name(s, None),
        }
    }
}

pub fn construct(spec: &FamilySpec) -> Result<BinaryMatroid> {
    if let Some(n) = spec.parameter() {
        if n < 4 {
            return Err(Error::InvalidFamily(format!("{spec}: n must be at least 4")));
        }
        if 3 * n + 1 > 64 {
            return Err(Error::TooLarge { rows: n + 1, cols: 3 * n + 1 });
        }
    }
    match *spec {
        FamilySpec::BiwheelPlus(n) => ladder(n, false),
        FamilySpec::MobiusDelta(n) => ladder(n, true),
        FamilySpec::Biwheel(n) => ladder(n, false)?.delete(0),
        FamilySpec::MobiusDeltaMinusZ(n) => ladder(n, true)?.delete(0),
        FamilySpec::Fano => {
            let cols: Vec<u64> = (1..=7).collect();
            let labels = (1..=7).map(|i| format!("p{i}")).collect();
            BinaryMatroid::from_columns(labels, 3, &cols)
        }
        FamilySpec::FanoDual => Ok(construct(&FamilySpec::Fano)?.dual()),
        FamilySpec::CycleK4 => graphic_from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        FamilySpec::Ag32 => {
            let cols: Vec<u64> = (0..8).map(|k| 1 | (k << 1)).collect();
            let labels = (0..8).map(|k| format!("a{k}")).collect();
            BinaryMatroid::from_columns(labels, 4, &cols)
        }
    }
}

/// The `(n+1) x (3n+1)` block matrix shared by the ladder families.
fn ladder(n: usize, mobius: bool) -> Result<BinaryMatroid> {
    let mut cols = Vec::with_capacity(3 * n + 1);
    let mut labels = Vec::with_capacity(3 * n + 1);
    for i in 0..=n {
        cols.push(1u64 << i);
        labels.push(if i == 0 { Z_LABEL.to_string() } else { format!("x{}", i + 1) });
    }
    for i in 1..=n {
        cols.push(1 | 1 << i);
        labels.push(format!("s{i}"));
    }
    // Column j of A_n (1-based) is e_j + e_{j+1}; the last column wraps to the corner (1, n).
    for j in 1..=n {
        let mut c = if j < n { 1 << j | 1 << (j + 1) } else { 1 << 1 | 1 << n };
        if mobius && j == n {
            c |= 1;
        }
        cols.push(c);
        labels.push(format!("t{j}"));
    }
    BinaryMatroid::from_columns(labels, n + 1, &cols)
}

/// Cycle matroid of a multigraph: vertex-edge incidence over GF(2) with the
/// last vertex's row dropped. Edges are labelled by their 1-based endpoints,
/// `"12"` style for graphs with fewer than ten vertices and `"1-2"` otherwise.
pub fn graphic_from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<BinaryMatroid> {
    let labels = edges
        .iter()
        .map(|&(a, b)| if vertex_count < 10 { format!("{}{}", a + 1, b + 1) } else { format!("{}-{}", a + 1, b + 1) })
        .collect::<Vec<_>>();
    let labelled: Vec<(String, usize, usize)> = labels.into_iter().zip(edges).map(|(l, &(a, b))| (l, a, b)).collect();
    graphic_from_labelled_edges(vertex_count, &labelled)
}

pub fn graphic_from_labelled_edges(vertex_count: usize, edges: &[(String, usize, usize)]) -> Result<BinaryMatroid> {
    if vertex_count == 0 {
        return Err(Error::InvalidVertex { vertex: 0, count: 0 });
    }
    let rows = vertex_count - 1;
    let vertex_bit = |v: usize| -> Result<u64> {
        if v >= vertex_count {
            Err(Error::InvalidVertex { vertex: v, count: vertex_count })
        } else if v == rows {
            Ok(0)
        } else {
            Ok(1 << v)
        }
    };
    let mut cols = Vec::with_capacity(edges.len());
    for (_, a, b) in edges {
        cols.push(vertex_bit(*a)? ^ vertex_bit(*b)?);
    }
    let labels = edges.iter().map(|(l, _, _)| l.clone()).collect();
    BinaryMatroid::from_columns(labels, rows, &cols)
}

/// Edge list of the biwheel `G_{n+2}` (with the hub edge when `plus`).
/// Vertices: `0 = u`, `1..=n` the rim cycle, `n + 1 = v`.
pub fn biwheel_edges(n: usize, plus: bool) -> Vec<(usize, usize)> {
    let (u, v) = (0, n + 1);
    let mut edges = Vec::new();
    if plus {
        edges.push((u, v));
    }
    for i in 1..=n {
        edges.push((u, i));
        edges.push((v, i));
        edges.push((i, if i == n { 1 } else { i + 1 }));
    }
    edges
}

/// Index of the element labelled `z`, if present.
pub fn z_element(m: &BinaryMatroid) -> Option<ElementSet> {
    m.index_of(Z_LABEL).map(ElementSet::singleton)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    #[test]
    fn biwheel_plus_4_block_layout() {
        let m = construct(&FamilySpec::BiwheelPlus(4)).unwrap();
        assert_eq!((m.len(), m.rank()), (13, 5));
        let expect = BitMatrix::from_bit_strings(&[
            "1000011110000",
            "0100010001001",
            "0010001001100",
            "0001000100110",
            "0000100010011",
        ])
        .unwrap();
        assert_eq!(m.rep(), &expect);
        assert_eq!(m.labels()[0], "z");
        assert_eq!(m.labels()[12], "t4");
    }

    #[test]
    fn mobius_delta_top_row() {
        let m = construct(&FamilySpec::MobiusDelta(4)).unwrap();
        assert_eq!((m.len(), m.rank()), (13, 5));
        assert_eq!(m.rep().to_bit_strings()[0], "1000011110001");
    }

    #[test]
    fn sizes_and_ranks() {
        for n in 4..=8 {
            for (ctor, size) in [
                (FamilySpec::Biwheel as fn(usize) -> FamilySpec, 3 * n),
                (FamilySpec::BiwheelPlus, 3 * n + 1),
                (FamilySpec::MobiusDelta, 3 * n + 1),
                (FamilySpec::MobiusDeltaMinusZ, 3 * n),
            ] {
                let m = construct(&ctor(n)).unwrap();
                assert_eq!(m.len(), size);
                assert_eq!(m.rank(), n + 1);
            }
        }
    }

    #[test]
    fn small_parameters_rejected() {
        assert!(matches!(construct(&FamilySpec::Biwheel(3)), Err(Error::InvalidFamily(_))));
    }

    #[test]
    fn standard_matroids() {
        let f = construct(&FamilySpec::Fano).unwrap();
        assert_eq!(f.columns(), &[1, 2, 3, 4, 5, 6, 7]);
        let k4 = construct(&FamilySpec::CycleK4).unwrap();
        assert_eq!((k4.len(), k4.rank()), (6, 3));
        let c = k4.circuits(6);
        assert_eq!(c.len(), 7);
        assert_eq!(c.iter().filter(|s| s.len() == 3).count(), 4);
        let ag = construct(&FamilySpec::Ag32).unwrap();
        assert_eq!((ag.len(), ag.rank()), (8, 4));
        assert!(ag.circuits(3).is_empty());
    }

    #[test]
    fn graphic_edge_cases() {
        let tree = graphic_from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(tree.circuits(3).is_empty());
        assert!(matches!(graphic_from_edges(3, &[(0, 3)]), Err(Error::InvalidVertex { .. })));
    }

    #[test]
    fn graphic_biwheel_plus_matches_matrix_in_vertex_order() {
        // u, rim, v with v's row dropped reproduces the block matrix column for column.
        let g = graphic_from_edges(6, &biwheel_edges(4, true)).unwrap();
        let m = construct(&FamilySpec::BiwheelPlus(4)).unwrap();
        let mut cols_g = g.columns().to_vec();
        let mut cols_m = m.columns().to_vec();
        cols_g.sort_unstable();
        cols_m.sort_unstable();
        assert_eq!(cols_g, cols_m);
    }

    #[test]
    fn parse_spec_names() {
        assert_eq!("biwheel_plus(5)".parse::<FamilySpec>().unwrap(), FamilySpec::BiwheelPlus(5));
        assert_eq!("fano".parse::<FamilySpec>().unwrap(), FamilySpec::Fano);
        assert!("biwheel".parse::<FamilySpec>().is_err());
        assert!("nope".parse::<FamilySpec>().is_err());
    }
}
