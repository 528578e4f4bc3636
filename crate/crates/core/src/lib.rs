//! Exact root data, affine Weyl actions and ordinary-module classification for
//! affine Lie superalgebras at boundary principal admissible levels.
//!
//! All arithmetic is over 64-bit rationals; no floating point is used.

pub mod admissible;
pub mod classify;
pub mod error;
pub mod findim;
pub mod linalg;
pub mod rootdata;
pub mod weyl;
pub mod witness;

pub use admissible::{boundary_levels, enumerate_candidates, BoundaryLevel, Candidate, LevelKind};
pub use classify::{classify, expected_closed_form, verify, CanonicalWeight, Report, Verdict};
pub use error::{Error, Result};
pub use findim::{is_even_dominant_integral, DominanceVerdict};
pub use linalg::{Matrix, Vector, Q};
pub use rootdata::{build_root_system, parse_algebra, FamilyKind, FamilySpec, Parity, Root, RootSystem};
pub use weyl::{generate_weyl, AffineWeight, WeylElement, WeylGroup};
pub use witness::{find_long_root_witness, find_witness, WitnessResult};
