//! Even-dominant-integrality filter on the finite part of an affine weight.

use crate::linalg::{self, q, Vector, Q};
use crate::rootdata::RootSystem;
use crate::weyl::AffineWeight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceVerdict {
    pub accepted: bool,
    /// Even simple roots γ with `2(λ, γ)/(γ, γ) ∉ Z≥0`, with the offending value.
    pub violations: Vec<(Vector, Q)>,
}

/// Accepts iff `2(λ, γ)/(γ, γ) ∈ Z≥0` for every γ in the even simple system.
pub fn is_even_dominant_integral(rs: &RootSystem, w: &AffineWeight) -> DominanceVerdict {
    let violations: Vec<(Vector, Q)> = rs
        .even_simple
        .iter()
        .filter_map(|g| {
            let value = q(2) * rs.pair(&w.finite, g) / rs.pair(g, g);
            (!linalg::is_nonneg_integer(&value)).then(|| (g.clone(), value))
        })
        .collect();
    DominanceVerdict { accepted: violations.is_empty(), violations }
}
