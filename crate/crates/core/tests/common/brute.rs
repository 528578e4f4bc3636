//! Brute-force search over a rational β-grid, checking the raw positivity
//! conditions directly.

use std::collections::BTreeSet;

use num_traits::Signed;
use superaffine_core::linalg::{frac, q};
use superaffine_core::{enumerate_candidates, generate_weyl, RootSystem, Vector, WeylElement, Q};

/// Raw positivity conditions on `(y, β)`, evaluated straight from the pairings.
pub fn raw_conditions(r: &RootSystem, y: &WeylElement, beta: &[Q], u: u64) -> bool {
    let y_theta = y.apply(&r.theta);
    let c0 = q(u as i64) + r.pair(beta, &y_theta);
    let theta_ok = c0.is_integer() && if r.is_negative_root(&y_theta) { !c0.is_negative() } else { c0.is_positive() };
    theta_ok
        && r.simple_roots.iter().all(|a| {
            let ya = y.apply(a);
            let c = -r.pair(beta, &ya);
            c.is_integer() && if r.is_positive_root(&ya) { !c.is_negative() } else { c.is_positive() }
        })
}

/// Every grid point of `(β, α_i) ∈ (1/den)Z` with `|(β, α_i)| ≤ bound`.
fn grid(rank: usize, den: i64, bound: i64) -> Vec<Vec<Q>> {
    let axis: Vec<Q> = (-bound * den..=bound * den).map(|k| frac(k, den)).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|p| axis.iter().map(move |x| [p.clone(), vec![*x]].concat())).collect();
    }
    out
}

/// `(y index, β)` pairs found by the grid search and by the enumerator.
pub fn brute_force_sweep(r: &RootSystem, u: u64) -> (BTreeSet<(usize, Vector)>, BTreeSet<(usize, Vector)>) {
    let w = generate_weyl(r).unwrap();
    let bound = (u as i64) * r.rank() as i64 + 1;
    let mut brute = BTreeSet::new();
    for (k, y) in w.iter().enumerate() {
        for p in grid(r.rank(), 12, bound) {
            let beta = r.vector_from_pairings(&p);
            if raw_conditions(r, y, &beta, u) {
                brute.insert((k, beta));
            }
        }
    }
    let listed = enumerate_candidates(r, u).unwrap().into_iter().map(|c| (c.y_index, c.beta)).collect();
    (brute, listed)
}
