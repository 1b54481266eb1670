//! Binary matroid algorithms over GF(2).
//!
//! The crate is organized bottom-up:
//!
//! * [`gf2`]: bit-packed matrices and elimination.
//! * [`matroid`]: the [`BinaryMatroid`] value, rank oracle, duality, minors,
//!   circuits and the connectivity function.
//! * [`structure`]: triangles, triads, fans, quads, separations and
//!   connectivity classes.
//! * [`families`]: named matroids with fixed labels.
//! * [`iso`], [`minor`], [`enumerate`]: isomorphism, minor search with
//!   certificates, and enumeration of small binary matroids.
//! * [`splitter`]: hypothesis reports, candidate elements, family
//!   classification and the splitter step that removes one or two elements
//!   while keeping internal 4-connectivity and an `N`-minor.
//! * [`suites`]: the property-checking harness over enumerated catalogs.
//! * [`bmx`]: the `.bmx` text format.

pub mod bmx;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod gf2;
pub mod iso;
pub mod matroid;
pub mod minor;
pub mod oracle;
pub mod splitter;
pub mod structure;
pub mod suites;

pub use error::{Error, Result};
pub use families::{construct, graphic_from_edges, FamilySpec};
pub use gf2::BitMatrix;
pub use iso::{are_isomorphic, IsoWitness};
pub use matroid::{BinaryMatroid, ElementSet};
pub use minor::{has_minor, MinorCertificate, SearchLimits};
pub use structure::{connectivity_class, find_violator, ConnectivityClass, FanOrdering, Quad, Separation};
