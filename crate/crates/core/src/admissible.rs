//! Boundary admissible levels and the finite enumeration of principal
//! admissible weights `(t_β y)·(𝒦Λ_0)` at a boundary level.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{self, q, Matrix, Vector, Q};
use crate::rootdata::{FamilySpec, RootSystem};
use crate::weyl::{self, AffineWeight, WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LevelKind {
    Principal,
    Subprincipal,
}

impl fmt::Display for LevelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LevelKind::Principal => "principal",
            LevelKind::Subprincipal => "subprincipal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLevel {
    pub u: u64,
    pub level: Q,
    pub kind: LevelKind,
}

/// `h∨/u − h∨`.
pub fn principal_level(rs: &RootSystem, u: u64) -> Q {
    rs.h_dual / q(u as i64) - rs.h_dual
}

/// Why `u` fails to give a principal boundary level, if it does.
pub fn principal_violation(rs: &RootSystem, u: u64) -> Option<String> {
    if u == 0 {
        return Some("u must be a positive integer".into());
    }
    if rs.h_dual.is_zero() {
        return Some("h∨ = 0: no boundary admissible levels".into());
    }
    let r = rs.lacety;
    if (u as i64).gcd(&r) != 1 {
        return Some(format!("gcd(u, r∨) = gcd({u}, {r}) ≠ 1"));
    }
    if !rs.coprime_to_h_dual(u) {
        let h = rs.h_dual;
        return Some(if h.is_integer() {
            format!("gcd(u, h∨) = gcd({u}, {h}) ≠ 1")
        } else {
            format!("gcd(2u, 2h∨) = gcd({}, {}) ≠ 1", 2 * u, h * q(2))
        });
    }
    None
}

fn subprincipal_level(rs: &RootSystem, u: u64) -> Option<Q> {
    let FamilySpec::OspB { m: 0, n } = rs.family else {
        return None;
    };
    let odd = 2 * n as i64 - 1;
    (u > 0 && u.is_multiple_of(2) && (u as i64).gcd(&odd) == 1).then(|| Q::new(odd, 2 * u as i64) - rs.h_dual)
}

/// All boundary levels with `u ≤ u_max`, ordered by `u`, principal before subprincipal.
pub fn boundary_levels(rs: &RootSystem, u_max: u64) -> Vec<BoundaryLevel> {
    let mut out = Vec::new();
    if rs.h_dual.is_zero() {
        return out;
    }
    for u in 1..=u_max {
        if principal_violation(rs, u).is_none() {
            out.push(BoundaryLevel { u, level: principal_level(rs, u), kind: LevelKind::Principal });
        }
        if let Some(level) = subprincipal_level(rs, u) {
            out.push(BoundaryLevel { u, level, kind: LevelKind::Subprincipal });
        }
    }
    out
}

/// Ok if `u` defines a principal boundary level, otherwise the matching error.
pub fn check_principal(rs: &RootSystem, u: u64) -> Result<()> {
    match principal_violation(rs, u) {
        None => Ok(()),
        Some(_) if subprincipal_level(rs, u).is_some() => Err(Error::SubprincipalLevel { u }),
        Some(reason) => Err(Error::RejectedLevel { u, reason }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    /// Position of `y` in the enumerated Weyl group.
    pub y_index: usize,
    pub y: WeylElement,
    /// `d_i = −(β, yα_i)`.
    pub d: Vec<i64>,
    pub beta: Vector,
    /// Canonical weight (δ-coefficient dropped).
    pub weight: AffineWeight,
}

/// A real affine root `γ + cδ` is positive iff `c > 0`, or `c = 0` and `γ ∈ Δ₊`.
pub fn is_positive_affine_root(rs: &RootSystem, gamma: &[Q], c: Q) -> bool {
    rs.is_root(gamma) && c.is_integer() && (c.is_positive() || (c.is_zero() && rs.is_positive_root(gamma)))
}

/// Checks `(t_β y)Π̂_u ⊂ Δ̂₊` directly from the images
/// `(t_β y)α_i = yα_i − (β, yα_i)δ` and `(t_β y)(uδ − θ) = −yθ + (u + (β, yθ))δ`.
pub fn passes_positivity_oracle(rs: &RootSystem, y: &WeylElement, beta: &[Q], u: u64) -> bool {
    let y_theta = y.apply(&rs.theta);
    let c0 = q(u as i64) + rs.pair(beta, &y_theta);
    is_positive_affine_root(rs, &linalg::neg(&y_theta), c0)
        && rs.simple_roots.iter().all(|a| {
            let ya = y.apply(a);
            let c = -rs.pair(beta, &ya);
            is_positive_affine_root(rs, &ya, c)
        })
}

/// `M[i][j] = (yα_i, α_j)`; β = Σ c_j α_j then satisfies `M c = ((β, yα_i))_i`.
fn pairing_system(rs: &RootSystem, y: &WeylElement) -> Matrix {
    rs.simple_roots
        .iter()
        .map(|a| {
            let ya = y.apply(a);
            rs.simple_roots.iter().map(|b| rs.pair(&ya, b)).collect()
        })
        .collect()
}

/// The unique β ∈ span Π with `(β, yα_i) = −d_i`.
pub fn beta_from_marks(rs: &RootSystem, y: &WeylElement, d: &[i64]) -> Result<Vector> {
    let rhs: Vec<Q> = d.iter().map(|&x| q(-x)).collect();
    let c = linalg::solve(&pairing_system(rs, y), &rhs)
        .ok_or_else(|| Error::Internal("singular pairing system for β".into()))?;
    Ok(rs.vector_from_pi(&c))
}

/// `(t_β y)·(𝒦Λ_0)` with δ dropped, `𝒦 = h∨/u − h∨`.
pub fn candidate_weight(rs: &RootSystem, y: &WeylElement, beta: &[Q], u: u64) -> AffineWeight {
    let vac = AffineWeight::vacuum(principal_level(rs, u), rs.dim);
    weyl::shifted_translate_act(rs, y, beta, &vac).canonical()
}

/// Closed-form pairings `(h∨/u)(β, α_i) + (ρ, y⁻¹α_i − α_i)`.
pub fn pairing_formula(rs: &RootSystem, y: &WeylElement, beta: &[Q], u: u64) -> Vec<Q> {
    let scale = rs.h_dual / q(u as i64);
    rs.simple_roots
        .iter()
        .map(|a| {
            let back = y.apply_inverse(a);
            scale * rs.pair(beta, a) + rs.pair(&rs.rho, &linalg::sub(&back, a))
        })
        .collect()
}

/// Integer tuples with `d_i ≥ lower_i` and `Σ a_i d_i ≤ budget`, in lexicographic order.
fn bounded_tuples(marks: &[i64], lower: &[i64], budget: i64) -> Vec<Vec<i64>> {
    fn go(marks: &[i64], lower: &[i64], budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i == marks.len() {
            out.push(cur.clone());
            return;
        }
        // reserve what the remaining lower bounds need
        let reserved: i64 = (i + 1..marks.len()).map(|j| marks[j] * lower[j]).sum();
        let mut d = lower[i];
        while marks[i] * d + reserved <= budget {
            cur.push(d);
            go(marks, lower, budget - marks[i] * d, cur, out);
            cur.pop();
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(marks, lower, budget, &mut Vec::new(), &mut out);
    out
}

fn candidates_for(rs: &RootSystem, y_index: usize, y: &WeylElement, u: u64) -> Result<Vec<Candidate>> {
    let lower: Vec<i64> = rs.simple_roots.iter().map(|a| i64::from(rs.is_negative_root(&y.apply(a)))).collect();
    let budget = if rs.is_negative_root(&y.apply(&rs.theta)) { u as i64 } else { u as i64 - 1 };
    let system = pairing_system(rs, y);
    let inv = linalg::inverse(&system).ok_or_else(|| Error::Internal("singular pairing system for β".into()))?;
    bounded_tuples(&rs.marks, &lower, budget)
        .into_iter()
        .map(|d| {
            let rhs: Vec<Q> = d.iter().map(|&x| q(-x)).collect();
            let beta = rs.vector_from_pi(&linalg::mat_vec(&inv, &rhs));
            if !passes_positivity_oracle(rs, y, &beta, u) {
                return Err(Error::Internal(format!(
                    "{}: candidate y#{y_index}, d = {d:?} fails the affine positivity recheck",
                    rs.family
                )));
            }
            let weight = candidate_weight(rs, y, &beta, u);
            Ok(Candidate { y_index, y: y.clone(), d, beta, weight })
        })
        .collect()
}

/// Every `(y, d)` solution at principal level `u`, ordered by (y index, d).
pub fn enumerate_candidates(rs: &RootSystem, u: u64) -> Result<Vec<Candidate>> {
    check_principal(rs, u)?;
    let w = weyl::generate_weyl(rs)?;
    enumerate_candidates_in(rs, &w, u)
}

/// As [`enumerate_candidates`] with a pre-generated Weyl group.
pub fn enumerate_candidates_in(rs: &RootSystem, w: &WeylGroup, u: u64) -> Result<Vec<Candidate>> {
    check_principal(rs, u)?;
    enumerate_unchecked(rs, w, u)
}

/// Runs the enumeration at `𝒦 = h∨/u − h∨` without checking that `u` is a
/// principal boundary level. Only meaningful as a diagnostic off such levels.
pub fn enumerate_unchecked(rs: &RootSystem, w: &WeylGroup, u: u64) -> Result<Vec<Candidate>> {
    if u == 0 {
        return Err(Error::RejectedLevel { u, reason: "u must be a positive integer".into() });
    }
    let per_y: Vec<Vec<Candidate>> =
        w.elements.par_iter().enumerate().map(|(k, y)| candidates_for(rs, k, y, u)).collect::<Result<_>>()?;
    Ok(per_y.into_iter().flatten().collect())
}
