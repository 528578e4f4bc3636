//! Classification of ordinary modules at a principal boundary level, and
//! comparison against the closed-form answers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::admissible::{self, Candidate};
use crate::error::{Error, Result};
use crate::findim;
use crate::linalg::{q, Q};
use crate::rootdata::{FamilyKind, FamilySpec, RootSystem};
use crate::weyl::{self, WeylGroup};

/// A weight modulo δ: its level and `(λ̂, α_i)` for each simple root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalWeight {
    pub pairings: Vec<Q>,
    pub level: Q,
}

impl CanonicalWeight {
    pub fn vacuum(level: Q, rank: usize) -> Self {
        CanonicalWeight { pairings: vec![Q::zero(); rank], level }
    }

    pub fn is_vacuum(&self) -> bool {
        self.pairings.iter().all(Zero::is_zero)
    }

    fn from_candidate(rs: &RootSystem, c: &Candidate) -> Self {
        CanonicalWeight { pairings: c.weight.pairings(rs), level: c.weight.level }
    }
}

impl fmt::Display for CanonicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.pairings.iter().map(ToString::to_string).collect();
        write!(f, "({}; ({}))", self.level, p.join(", "))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CandidateStats {
    pub candidates: usize,
    pub survivors: usize,
    /// Distinct canonical weights among survivors.
    pub distinct: usize,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub weights: Vec<CanonicalWeight>,
    pub stats: CandidateStats,
    /// Survivors per canonical weight, for inspecting collisions.
    pub multiplicity: BTreeMap<CanonicalWeight, usize>,
}

/// Runs enumeration and the dominance filter with a pre-generated group.
pub fn classify_in(rs: &RootSystem, w: &WeylGroup, u: u64) -> Result<Classification> {
    let candidates = admissible::enumerate_candidates_in(rs, w, u)?;
    Ok(filter(rs, &candidates))
}

/// [`classify_in`] without the principal-level check; see
/// [`admissible::enumerate_unchecked`].
pub fn classify_unchecked(rs: &RootSystem, w: &WeylGroup, u: u64) -> Result<Classification> {
    let candidates = admissible::enumerate_unchecked(rs, w, u)?;
    Ok(filter(rs, &candidates))
}

fn filter(rs: &RootSystem, candidates: &[Candidate]) -> Classification {
    let kept: Vec<CanonicalWeight> = candidates
        .par_iter()
        .filter(|c| findim::is_even_dominant_integral(rs, &c.weight).accepted)
        .map(|c| CanonicalWeight::from_candidate(rs, c))
        .collect();
    let mut multiplicity = BTreeMap::new();
    for k in &kept {
        *multiplicity.entry(k.clone()).or_insert(0) += 1;
    }
    let weights: Vec<CanonicalWeight> = multiplicity.keys().cloned().collect();
    Classification {
        stats: CandidateStats { candidates: candidates.len(), survivors: kept.len(), distinct: weights.len() },
        weights,
        multiplicity,
    }
}

/// Detailed classification at principal level `u`.
pub fn classify_detailed(rs: &RootSystem, u: u64) -> Result<Classification> {
    admissible::check_principal(rs, u)?;
    let w = weyl::generate_weyl(rs)?;
    classify_in(rs, &w, u)
}

/// Distinct canonical weights of the irreducible ordinary modules, sorted.
pub fn classify(rs: &RootSystem, u: u64) -> Result<Vec<CanonicalWeight>> {
    Ok(classify_detailed(rs, u)?.weights)
}

/// The closed-form module list at principal level `u`.
///
/// Type I: `u` weights, the p-th with `−(p/u)h∨` at the odd node and zero
/// elsewhere. Everything else: the vacuum alone.
pub fn expected_closed_form(rs: &RootSystem, u: u64) -> Result<Vec<CanonicalWeight>> {
    admissible::check_principal(rs, u)?;
    let level = admissible::principal_level(rs, u);
    let rank = rs.rank();
    let h = rs.h_dual;
    let uq = q(u as i64);
    if rs.family.kind() != FamilyKind::TypeI {
        return Ok(vec![CanonicalWeight::vacuum(level, rank)]);
    }
    let node = rs.family.odd_node().expect("type I has an odd node");
    let mut out = Vec::with_capacity(u as usize);
    for p in 0..u as i64 {
        let lambda0 = (q(p + 1) / uq - q(1)) * h;
        let odd = -(q(p) / uq) * h;
        // the odd fundamental weight has level 1
        if lambda0 + odd != level {
            return Err(Error::Internal(format!(
                "{}: closed form at p = {p} has level {} ≠ {level}",
                rs.family,
                lambda0 + odd
            )));
        }
        let mut pairings = vec![Q::zero(); rank];
        pairings[node] = odd;
        out.push(CanonicalWeight { pairings, level });
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    CountMismatch,
    WeightMismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::CountMismatch => "COUNT_MISMATCH",
            Verdict::WeightMismatch => "WEIGHT_MISMATCH",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub family: FamilySpec,
    pub u: u64,
    pub level: Q,
    pub found: Vec<CanonicalWeight>,
    pub expected: Vec<CanonicalWeight>,
    /// Expected but not found.
    pub missing: Vec<CanonicalWeight>,
    /// Found but not expected.
    pub unexpected: Vec<CanonicalWeight>,
    pub verdict: Verdict,
    pub stats: CandidateStats,
}

fn verdict_for(kind: FamilyKind, found: &[CanonicalWeight], expected: &[CanonicalWeight]) -> Verdict {
    if found == expected {
        Verdict::Pass
    } else if kind != FamilyKind::TypeI && found.iter().any(|w| !w.is_vacuum()) {
        Verdict::WeightMismatch
    } else if found.len() != expected.len() {
        Verdict::CountMismatch
    } else {
        Verdict::WeightMismatch
    }
}

pub fn verify_in(rs: &RootSystem, w: &WeylGroup, u: u64) -> Result<Report> {
    let expected = expected_closed_form(rs, u)?;
    let run = classify_in(rs, w, u)?;
    let found = run.weights;
    let missing = expected.iter().filter(|e| !found.contains(e)).cloned().collect();
    let unexpected = found.iter().filter(|f| !expected.contains(f)).cloned().collect();
    Ok(Report {
        family: rs.family,
        u,
        level: admissible::principal_level(rs, u),
        verdict: verdict_for(rs.family.kind(), &found, &expected),
        found,
        expected,
        missing,
        unexpected,
        stats: run.stats,
    })
}

pub fn verify(rs: &RootSystem, u: u64) -> Result<Report> {
    admissible::check_principal(rs, u)?;
    let w = weyl::generate_weyl(rs)?;
    verify_in(rs, &w, u)
}
